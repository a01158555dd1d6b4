#pragma once

#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace rsg {

enum class RougeVariant { R1, R2, RL };

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  RougeVariant variant = RougeVariant::R1;
};

RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n);

// Candidate given as separate token units; n-grams never span unit
// boundaries. Used for forged statements built from concatenated sections.
RougeScore rouge_n_units(const std::vector<std::vector<std::string>>& candidate_units,
                         const std::vector<std::string>& reference, int n);

RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference);

// forged sentence count / reference sentence count.
double sentence_ratio(int forged_sentences, int reference_sentences);

// |candidate ∩ reference| / |reference|, after lowercasing and whitespace
// normalization of each term.
double entity_recall(const std::set<std::string>& candidate_terms,
                     const std::set<std::string>& reference_terms);

struct CoverageRow {
  SectionSelector selector = SectionSelector::Abs;
  RougeScore r1, r2, rl;  // recall-oriented
  double sentence_ratio = 0.0;
};

// Forge a statement by concatenating the selected sections of every paper
// and score it against the corpus reference statement.
CoverageRow coverage_analysis(const ResearcherCorpus& corpus, SectionSelector selector);

}  // namespace rsg
