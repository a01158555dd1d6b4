#include "assembler.hpp"

#include <algorithm>

#include "error.hpp"

namespace rsg {

std::map<int, std::vector<PaperSentenceSet>> group_by_cluster(
    const std::vector<SentenceRecord>& sentences, const std::vector<int>& paper_indices,
    const ClusterAssignment& assignment, const TopicModelParams& params,
    const Vocabulary& vocab) {
  if (sentences.size() != paper_indices.size()) {
    throw Error(ErrorCode::InvalidArgument, "sentences and paper indices differ in length");
  }
  std::map<int, PaperSentenceSet> by_paper;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    int pidx = paper_indices[i];
    if (pidx < 0 || pidx >= static_cast<int>(assignment.labels.size())) {
      throw Error(ErrorCode::InvalidArgument,
                  "sentence belongs to paper '" + sentences[i].paper_id + "' with no cluster label");
    }
    auto& set = by_paper[pidx];
    set.paper_index = pidx;
    set.paper_id = sentences[i].paper_id;
    set.sentences.push_back(sentences[i]);
  }

  std::map<int, std::vector<PaperSentenceSet>> out;
  for (auto& [pidx, set] : by_paper) {
    std::sort(set.sentences.begin(), set.sentences.end(),
              [](const SentenceRecord& a, const SentenceRecord& b) {
                return a.position < b.position;
              });
    set.first_theta = infer_theta(to_bow(set.sentences.front().text, vocab), params);
    set.last_theta = infer_theta(to_bow(set.sentences.back().text, vocab), params);
    out[assignment.labels[pidx]].push_back(std::move(set));
  }
  return out;
}

double coherency(const PaperSentenceSet& a, const PaperSentenceSet& b) {
  return topic_similarity(a.last_theta, b.first_theta);
}

std::vector<SentenceRecord> reorder_cluster(const std::vector<PaperSentenceSet>& sets, Rng& rng) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "reorder_cluster needs at least one set");
  std::vector<int> remaining(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) remaining[i] = static_cast<int>(i);

  std::vector<int> chain;
  std::size_t start = rng.uniform_index(sets.size());
  chain.push_back(remaining[start]);
  remaining.erase(remaining.begin() + start);

  while (!remaining.empty()) {
    const PaperSentenceSet& last = sets[chain.back()];
    int best_pos = 0;
    double best_v = -1.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      double v = coherency(last, sets[remaining[i]]);
      bool better = v > best_v ||
                    (v == best_v &&
                     sets[remaining[i]].paper_index < sets[remaining[best_pos]].paper_index);
      if (better) {
        best_v = v;
        best_pos = static_cast<int>(i);
      }
    }
    chain.push_back(remaining[best_pos]);
    remaining.erase(remaining.begin() + best_pos);
  }

  std::vector<SentenceRecord> out;
  for (int idx : chain) {
    for (const auto& s : sets[idx].sentences) out.push_back(s);
  }
  return out;
}

StatementDraft compose_statement(
    const std::vector<std::pair<int, std::vector<SentenceRecord>>>& clusters,
    const std::vector<int>& exemplars, int word_limit, std::uint64_t seed) {
  StatementDraft draft;
  draft.seed = seed;

  std::vector<std::size_t> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (clusters[a].second.size() != clusters[b].second.size()) {
      return clusters[a].second.size() > clusters[b].second.size();
    }
    int ea = clusters[a].first < static_cast<int>(exemplars.size()) ? exemplars[clusters[a].first]
                                                                    : clusters[a].first;
    int eb = clusters[b].first < static_cast<int>(exemplars.size()) ? exemplars[clusters[b].first]
                                                                    : clusters[b].first;
    return ea < eb;
  });

  int words = 0;
  int order_index = 0;
  bool full = false;
  for (std::size_t oi : order) {
    if (full) break;
    int cluster_id = clusters[oi].first;
    std::vector<SentenceRecord> emitted;
    for (const auto& s : clusters[oi].second) {
      if (words + s.token_count > word_limit) {
        full = true;
        break;
      }
      words += s.token_count;
      emitted.push_back(s);
      draft.provenance.push_back(ProvenanceEntry{s.paper_id, s.position, cluster_id, order_index++});
    }
    if (!emitted.empty()) {
      if (!draft.full_text.empty()) draft.full_text += "\n\n";
      for (std::size_t i = 0; i < emitted.size(); ++i) {
        if (i > 0) draft.full_text += " ";
        draft.full_text += emitted[i].text;
      }
      draft.directions.emplace_back(cluster_id, std::move(emitted));
    }
  }
  return draft;
}

}  // namespace rsg
