#include "salience.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "error.hpp"
#include "json.hpp"
#include "rng.hpp"
#include "topic_model.hpp"

namespace rsg {

SalienceScores score_random(const std::vector<SentenceRecord>& sentences, std::uint64_t seed) {
  Rng rng(seed);
  SalienceScores out;
  out.scorer_name = "random";
  out.scores.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) out.scores.push_back(rng.uniform());
  return out;
}

SalienceScores score_multilead(const std::vector<SentenceRecord>& sentences) {
  SalienceScores out;
  out.scorer_name = "multilead";
  out.scores.reserve(sentences.size());
  for (const auto& s : sentences) {
    out.scores.push_back(s.section == Section::Abstract ? 1.0 / (1.0 + s.position) : 0.0);
  }
  return out;
}

namespace {

std::vector<double> pagerank(const Eigen::MatrixXd& W, double damping, double tol) {
  const int n = static_cast<int>(W.rows());
  Eigen::VectorXd deg = W.rowwise().sum();
  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXd next = Eigen::VectorXd::Constant(n, (1.0 - damping) / n);
    for (int j = 0; j < n; ++j) {
      if (deg[j] <= 0.0) continue;  // isolated vertex keeps the teleport baseline
      double share = damping * p[j] / deg[j];
      for (int i = 0; i < n; ++i) {
        if (W(j, i) > 0.0) next[i] += share * W(j, i);
      }
    }
    double diff = (next - p).cwiseAbs().sum();
    p = next;
    if (diff < tol) break;
  }
  // Normalize into a distribution (isolated vertices lose probability mass).
  double sum = p.sum();
  std::vector<double> scores(n);
  for (int i = 0; i < n; ++i) scores[i] = sum > 0.0 ? p[i] / sum : 1.0 / n;
  return scores;
}

}  // namespace

SalienceScores score_textrank(const std::vector<SentenceRecord>& sentences,
                              const std::set<std::string>& stopwords, double damping,
                              double tol) {
  const int n = static_cast<int>(sentences.size());
  SalienceScores out;
  out.scorer_name = "textrank";
  if (n == 0) return out;
  if (n == 1) {
    out.scores = {1.0};
    return out;
  }
  std::vector<std::set<std::string>> content(n);
  std::vector<int> lengths(n);
  for (int i = 0; i < n; ++i) {
    auto toks = tokenize(sentences[i].text);
    lengths[i] = static_cast<int>(toks.size());
    for (auto& t : toks) {
      if (!stopwords.count(t)) content[i].insert(std::move(t));
    }
  }
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double denom = std::log(static_cast<double>(lengths[i])) +
                     std::log(static_cast<double>(lengths[j]));
      if (denom <= 0.0) continue;  // undefined for one-token sentences
      int overlap = 0;
      for (const auto& t : content[i]) overlap += content[j].count(t);
      if (overlap == 0) continue;
      double w = overlap / denom;
      W(i, j) = w;
      W(j, i) = w;
    }
  }
  out.scores = pagerank(W, damping, tol);
  return out;
}

std::vector<std::unordered_map<std::string, double>> tfidf_vectors(
    const std::vector<SentenceRecord>& sentences) {
  const std::size_t n = sentences.size();
  std::vector<std::unordered_map<std::string, int>> tf(n);
  std::unordered_map<std::string, int> df;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& t : tokenize(sentences[i].text)) ++tf[i][t];
    for (const auto& [t, c] : tf[i]) ++df[t];
  }
  std::vector<std::unordered_map<std::string, double>> vecs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [t, c] : tf[i]) {
      double idf = std::log((1.0 + n) / (1.0 + df[t])) + 1.0;
      vecs[i][t] = c * idf;
    }
  }
  return vecs;
}

double cosine(const std::unordered_map<std::string, double>& a,
              const std::unordered_map<std::string, double>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  double dot = 0.0;
  for (const auto& [t, v] : small) {
    auto it = large.find(t);
    if (it != large.end()) dot += v * it->second;
  }
  auto norm = [](const std::unordered_map<std::string, double>& m) {
    double s = 0.0;
    for (const auto& [t, v] : m) s += v * v;
    return std::sqrt(s);
  };
  double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (na * nb);
}

SalienceScores score_lexrank(const std::vector<SentenceRecord>& sentences, double threshold,
                             double damping, double tol) {
  const int n = static_cast<int>(sentences.size());
  SalienceScores out;
  out.scorer_name = "lexrank";
  if (n == 0) return out;
  if (n == 1) {
    out.scores = {1.0};
    return out;
  }
  auto vecs = tfidf_vectors(sentences);
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double c = cosine(vecs[i], vecs[j]);
      if (c >= threshold) {
        W(i, j) = c;
        W(j, i) = c;
      }
    }
  }
  out.scores = pagerank(W, damping, tol);
  return out;
}

namespace {

// Clipped unigram overlap machinery for the oracle scorer.
struct OracleState {
  std::unordered_map<std::string, int> ref_counts;
  std::unordered_map<std::string, int> selected_counts;
  long ref_total = 0;

  // Recall gain from adding this sentence's tokens to the selection.
  long gain(const std::unordered_map<std::string, int>& sent_counts) const {
    long g = 0;
    for (const auto& [t, c] : sent_counts) {
      auto rit = ref_counts.find(t);
      if (rit == ref_counts.end()) continue;
      auto sit = selected_counts.find(t);
      int have = sit == selected_counts.end() ? 0 : sit->second;
      int before = std::min(have, rit->second);
      int after = std::min(have + c, rit->second);
      g += after - before;
    }
    return g;
  }
};

}  // namespace

SalienceScores score_oracle(const std::vector<SentenceRecord>& sentences,
                            const std::string& reference) {
  if (tokenize(reference).empty()) {
    throw Error(ErrorCode::InvalidArgument, "oracle scorer requires a non-empty reference");
  }
  const int n = static_cast<int>(sentences.size());
  SalienceScores out;
  out.scorer_name = "oracle";
  out.scores.assign(n, 0.0);

  OracleState state;
  for (auto& t : tokenize(reference)) {
    ++state.ref_counts[t];
    ++state.ref_total;
  }
  std::vector<std::unordered_map<std::string, int>> sent_counts(n);
  for (int i = 0; i < n; ++i) {
    for (auto& t : tokenize(sentences[i].text)) ++sent_counts[i][t];
  }

  std::vector<bool> picked(n, false);
  for (int order = 0; order < n; ++order) {
    long best_gain = 0;
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (picked[i]) continue;
      long g = state.gain(sent_counts[i]);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (best < 0) break;  // no sentence adds recall
    picked[best] = true;
    out.scores[best] = static_cast<double>(n - order);
    for (const auto& [t, c] : sent_counts[best]) state.selected_counts[t] += c;
  }
  return out;
}

SalienceScores load_external_scores(const std::string& path,
                                    const std::vector<SentenceRecord>& sentences) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open score file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, "malformed score file: " + std::string(e.what()));
  }
  if (!j.is_array()) throw Error(ErrorCode::Format, "score file must be a JSON array");

  std::map<std::pair<std::string, int>, double> by_key;
  for (const auto& e : j) {
    std::string pid = e.at("paper_id").get<std::string>();
    int pos = e.at("position").get<int>();
    double score = e.at("score").get<double>();
    if (!std::isfinite(score)) {
      throw Error(ErrorCode::Format, "non-finite score for (" + pid + ", " +
                                         std::to_string(pos) + ")");
    }
    by_key[{pid, pos}] = score;
  }

  SalienceScores out;
  out.scorer_name = "external";
  out.scores.reserve(sentences.size());
  for (const auto& s : sentences) {
    auto it = by_key.find({s.paper_id, s.position});
    if (it == by_key.end()) {
      throw Error(ErrorCode::Format, "score file missing entry for (" + s.paper_id + ", " +
                                         std::to_string(s.position) + ")");
    }
    out.scores.push_back(it->second);
  }
  return out;
}

std::vector<int> mmr_select(const std::vector<SentenceRecord>& sentences,
                            const std::vector<double>& scores, const SelectionConfig& config,
                            const std::vector<Eigen::VectorXd>* thetas) {
  if (scores.size() != sentences.size()) {
    throw Error(ErrorCode::InvalidArgument, "scores do not cover all sentences");
  }
  if (config.word_limit < 1) {
    throw Error(ErrorCode::InvalidArgument, "word limit must be >= 1");
  }
  if (config.redundancy == RedundancyMetric::TopicSimilarity &&
      (thetas == nullptr || thetas->size() != sentences.size())) {
    throw Error(ErrorCode::InvalidArgument, "topic-similarity redundancy requires per-sentence thetas");
  }
  const int n = static_cast<int>(sentences.size());
  if (n == 0) return {};

  // Min-max normalization; constant scores map to 0.
  double lo = *std::min_element(scores.begin(), scores.end());
  double hi = *std::max_element(scores.begin(), scores.end());
  std::vector<double> norm(n, 0.0);
  if (hi > lo) {
    for (int i = 0; i < n; ++i) norm[i] = (scores[i] - lo) / (hi - lo);
  }

  std::vector<std::unordered_map<std::string, double>> vecs;
  if (config.redundancy == RedundancyMetric::TfidfCosine) vecs = tfidf_vectors(sentences);
  auto sim = [&](int a, int b) {
    if (config.redundancy == RedundancyMetric::TopicSimilarity) {
      return topic_similarity((*thetas)[a], (*thetas)[b]);
    }
    return cosine(vecs[a], vecs[b]);
  };

  std::vector<int> selected;
  std::vector<bool> used(n, false);
  std::vector<double> max_sim(n, 0.0);  // max similarity to the selection so far
  int words = 0;
  while (static_cast<int>(selected.size()) < n) {
    int best = -1;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      double red = selected.empty() ? 0.0 : max_sim[i];
      double v = config.lambda * norm[i] - (1.0 - config.lambda) * red;
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best < 0) break;
    if (words + sentences[best].token_count > config.word_limit) break;
    used[best] = true;
    selected.push_back(best);
    words += sentences[best].token_count;
    for (int i = 0; i < n; ++i) {
      if (!used[i]) max_sim[i] = std::max(max_sim[i], sim(i, best));
    }
  }
  return selected;
}

}  // namespace rsg
