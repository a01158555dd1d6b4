#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "clustering.hpp"
#include "corpus.hpp"
#include "rng.hpp"
#include "topic_model.hpp"

namespace rsg {

struct PaperSentenceSet {
  int paper_index = 0;  // index of the paper within the corpus
  std::string paper_id;
  std::vector<SentenceRecord> sentences;  // sorted by original position
  Eigen::VectorXd first_theta;            // theta of the first sentence
  Eigen::VectorXd last_theta;             // theta of the last sentence
};

struct ProvenanceEntry {
  std::string paper_id;
  int position = 0;
  int cluster_id = 0;
  int order_index = 0;
};

struct StatementDraft {
  // (cluster id, sentences in final order), in emission order.
  std::vector<std::pair<int, std::vector<SentenceRecord>>> directions;
  std::string full_text;
  std::vector<ProvenanceEntry> provenance;
  std::uint64_t seed = 0;
};

// Selected sentences grouped by paper and then by the paper's cluster.
// paper_indices[i] is the corpus index of the paper owning sentences[i].
// Boundary thetas come from infer_theta on each sentence's bag of words.
std::map<int, std::vector<PaperSentenceSet>> group_by_cluster(
    const std::vector<SentenceRecord>& sentences, const std::vector<int>& paper_indices,
    const ClusterAssignment& assignment, const TopicModelParams& params,
    const Vocabulary& vocab);

// T_sim between a's last sentence theta and b's first sentence theta.
double coherency(const PaperSentenceSet& a, const PaperSentenceSet& b);

// Greedy chain: random start, then always the remaining set with the
// highest coherency to the last appended one, ties by lowest paper index.
std::vector<SentenceRecord> reorder_cluster(const std::vector<PaperSentenceSet>& sets, Rng& rng);

// Emit clusters in descending sentence count (ties by exemplar index),
// appending whole sentences until the next one would exceed word_limit.
StatementDraft compose_statement(
    const std::vector<std::pair<int, std::vector<SentenceRecord>>>& clusters,
    const std::vector<int>& exemplars, int word_limit, std::uint64_t seed);

}  // namespace rsg
