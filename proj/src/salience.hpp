#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace rsg {

struct SalienceScores {
  std::vector<double> scores;  // one finite score per input sentence
  std::string scorer_name;
};

enum class RedundancyMetric { TfidfCosine, TopicSimilarity };

struct SelectionConfig {
  double lambda = 0.7;  // MMR trade-off
  int word_limit = 500;
  RedundancyMetric redundancy = RedundancyMetric::TfidfCosine;
};

SalienceScores score_random(const std::vector<SentenceRecord>& sentences, std::uint64_t seed);

// Abstract sentences get 1/(1+position); everything else 0.
SalienceScores score_multilead(const std::vector<SentenceRecord>& sentences);

// Weighted PageRank over content-word overlap edges.
SalienceScores score_textrank(const std::vector<SentenceRecord>& sentences,
                              const std::set<std::string>& stopwords, double damping = 0.85,
                              double tol = 1e-6);

// Stationary distribution of the thresholded tf-idf cosine graph.
SalienceScores score_lexrank(const std::vector<SentenceRecord>& sentences,
                             double threshold = 0.1, double damping = 0.85, double tol = 1e-6);

// Greedy maximization of ROUGE-1 recall gain against the reference.
SalienceScores score_oracle(const std::vector<SentenceRecord>& sentences,
                            const std::string& reference);

// JSON list of {paper_id, position, score}; one entry per sentence required.
SalienceScores load_external_scores(const std::string& path,
                                    const std::vector<SentenceRecord>& sentences);

// Returns selected sentence indices in pick order. thetas is required when
// config.redundancy == TopicSimilarity.
std::vector<int> mmr_select(const std::vector<SentenceRecord>& sentences,
                            const std::vector<double>& scores, const SelectionConfig& config,
                            const std::vector<Eigen::VectorXd>* thetas = nullptr);

// tf-idf vectors over the given sentence set; shared by LexRank and MMR.
std::vector<std::unordered_map<std::string, double>> tfidf_vectors(
    const std::vector<SentenceRecord>& sentences);

double cosine(const std::unordered_map<std::string, double>& a,
              const std::unordered_map<std::string, double>& b);

}  // namespace rsg
