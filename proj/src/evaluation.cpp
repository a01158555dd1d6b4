#include "evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "error.hpp"

namespace rsg {

namespace {

double f1_of(double p, double r) {
  return (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

using NgramCounts = std::map<std::vector<std::string>, int>;

void count_ngrams(const std::vector<std::string>& tokens, int n, NgramCounts& counts) {
  if (static_cast<int>(tokens.size()) < n) return;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)]++;
  }
}

long total(const NgramCounts& counts) {
  long t = 0;
  for (const auto& [g, c] : counts) t += c;
  return t;
}

RougeScore rouge_from_counts(const NgramCounts& cand, const NgramCounts& ref, int n) {
  long overlap = 0;
  for (const auto& [g, c] : cand) {
    auto it = ref.find(g);
    if (it != ref.end()) overlap += std::min(c, it->second);
  }
  long cand_total = total(cand);
  long ref_total = total(ref);
  RougeScore score;
  score.variant = n == 1 ? RougeVariant::R1 : RougeVariant::R2;
  score.precision = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
  score.recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  score.f1 = f1_of(score.precision, score.recall);
  return score;
}

}  // namespace

RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n) {
  if (n != 1 && n != 2) throw Error(ErrorCode::InvalidArgument, "rouge_n supports n in {1, 2}");
  if (reference.empty()) throw Error(ErrorCode::InvalidArgument, "undefined recall: empty reference");
  NgramCounts cand, ref;
  count_ngrams(candidate, n, cand);
  count_ngrams(reference, n, ref);
  return rouge_from_counts(cand, ref, n);
}

RougeScore rouge_n_units(const std::vector<std::vector<std::string>>& candidate_units,
                         const std::vector<std::string>& reference, int n) {
  if (n != 1 && n != 2) throw Error(ErrorCode::InvalidArgument, "rouge_n supports n in {1, 2}");
  if (reference.empty()) throw Error(ErrorCode::InvalidArgument, "undefined recall: empty reference");
  NgramCounts cand, ref;
  for (const auto& unit : candidate_units) count_ngrams(unit, n, cand);
  count_ngrams(reference, n, ref);
  return rouge_from_counts(cand, ref, n);
}

RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference) {
  if (reference.empty()) throw Error(ErrorCode::InvalidArgument, "undefined recall: empty reference");
  const std::size_t m = candidate.size(), r = reference.size();
  // Two-row LCS dynamic program.
  std::vector<long> prev(r + 1, 0), cur(r + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  long lcs = prev[r];
  RougeScore score;
  score.variant = RougeVariant::RL;
  score.precision = m > 0 ? static_cast<double>(lcs) / m : 0.0;
  score.recall = static_cast<double>(lcs) / r;
  score.f1 = f1_of(score.precision, score.recall);
  return score;
}

double sentence_ratio(int forged_sentences, int reference_sentences) {
  if (reference_sentences < 1) {
    throw Error(ErrorCode::InvalidArgument, "sentence ratio undefined: zero reference sentences");
  }
  return static_cast<double>(forged_sentences) / reference_sentences;
}

namespace {

std::string normalize_term(const std::string& term) {
  std::string out;
  bool in_space = false;
  for (char c : term) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = !out.empty();
    } else {
      if (in_space) out.push_back(' ');
      in_space = false;
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

double entity_recall(const std::set<std::string>& candidate_terms,
                     const std::set<std::string>& reference_terms) {
  std::set<std::string> ref;
  for (const auto& t : reference_terms) {
    auto n = normalize_term(t);
    if (!n.empty()) ref.insert(n);
  }
  if (ref.empty()) throw Error(ErrorCode::InvalidArgument, "entity recall undefined: empty reference term set");
  std::set<std::string> cand;
  for (const auto& t : candidate_terms) {
    auto n = normalize_term(t);
    if (!n.empty()) cand.insert(n);
  }
  int hits = 0;
  for (const auto& t : ref) hits += cand.count(t);
  return static_cast<double>(hits) / static_cast<double>(ref.size());
}

CoverageRow coverage_analysis(const ResearcherCorpus& corpus, SectionSelector selector) {
  if (!corpus.reference_statement || tokenize(*corpus.reference_statement).empty()) {
    throw Error(ErrorCode::InvalidArgument, "coverage analysis requires a reference statement");
  }
  std::vector<Section> wanted;
  switch (selector) {
    case SectionSelector::Abs: wanted = {Section::Abstract}; break;
    case SectionSelector::AbsIntro: wanted = {Section::Abstract, Section::Introduction}; break;
    case SectionSelector::FullPaper:
      wanted = {Section::Abstract, Section::Introduction, Section::Other};
      break;
  }

  std::vector<std::vector<std::string>> units;  // one token unit per section
  std::vector<std::string> flat;                // tokens in reading order, for LCS
  int forged_sentences = 0;
  for (const auto& doc : corpus.papers) {
    for (Section sec : wanted) {
      auto it = doc.sections.find(sec);
      if (it == doc.sections.end()) continue;
      auto toks = tokenize(it->second);
      if (toks.empty()) continue;
      flat.insert(flat.end(), toks.begin(), toks.end());
      units.push_back(std::move(toks));
      forged_sentences += static_cast<int>(split_sentences(it->second).size());
    }
  }

  auto ref_tokens = tokenize(*corpus.reference_statement);
  int ref_sentences = static_cast<int>(split_sentences(*corpus.reference_statement).size());

  CoverageRow row;
  row.selector = selector;
  row.r1 = rouge_n_units(units, ref_tokens, 1);
  row.r2 = rouge_n_units(units, ref_tokens, 2);
  row.rl = rouge_l(flat, ref_tokens);
  row.sentence_ratio = sentence_ratio(forged_sentences, std::max(1, ref_sentences));
  return row;
}

}  // namespace rsg
