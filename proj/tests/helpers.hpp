#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "rng.hpp"

namespace rsg::test {

inline Eigen::VectorXd random_theta(int K, Rng& rng) {
  Eigen::VectorXd t(K);
  for (int i = 0; i < K; ++i) t[i] = -std::log(1.0 - rng.uniform());
  return t / t.sum();
}

inline SentenceRecord make_sentence(std::string text, std::string paper_id, Section section,
                                    int position) {
  int tc = static_cast<int>(tokenize(text).size());
  return SentenceRecord{std::move(text), std::move(paper_id), section, position, tc};
}

// Planted-topic corpus: `docs` documents over vocabulary size V, each drawn
// from one of `topics` disjoint word blocks. Returns bows and true labels.
struct PlantedCorpus {
  std::vector<BowVector> bows;
  std::vector<int> labels;
};

inline PlantedCorpus planted_corpus(int docs, int V, int topics, int tokens_per_doc,
                                    std::uint64_t seed) {
  Rng rng(seed);
  PlantedCorpus out;
  int block = V / topics;
  for (int d = 0; d < docs; ++d) {
    int topic = d % topics;
    BowVector bow;
    bow.counts.assign(V, 0);
    for (int t = 0; t < tokens_per_doc; ++t) {
      int w = topic * block + static_cast<int>(rng.uniform_index(block));
      ++bow.counts[w];
    }
    out.bows.push_back(std::move(bow));
    out.labels.push_back(topic);
  }
  return out;
}

// Adjusted Rand Index from the contingency table.
inline double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  auto comb2 = [](long n) { return n * (n - 1) / 2.0; };
  std::map<std::pair<int, int>, long> contingency;
  std::map<int, long> row_sums, col_sums;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++contingency[{a[i], b[i]}];
    ++row_sums[a[i]];
    ++col_sums[b[i]];
  }
  double sum_cells = 0.0, sum_rows = 0.0, sum_cols = 0.0;
  for (const auto& [k, v] : contingency) sum_cells += comb2(v);
  for (const auto& [k, v] : row_sums) sum_rows += comb2(v);
  for (const auto& [k, v] : col_sums) sum_cols += comb2(v);
  double total = comb2(static_cast<long>(a.size()));
  double expected = sum_rows * sum_cols / total;
  double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;
  return (sum_cells - expected) / (max_index - expected);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      double avg = (i + j) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  auto rx = ranks(x), ry = ranks(y);
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double num = 0.0, dx = 0.0, dy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    dx += (rx[i] - mx) * (rx[i] - mx);
    dy += (ry[i] - my) * (ry[i] - my);
  }
  if (dx == 0.0 || dy == 0.0) return 0.0;
  return num / std::sqrt(dx * dy);
}

// Exponential-time LCS oracle: longest subsequence of `a` that is also a
// subsequence of `b`. Only for short inputs.
inline int brute_force_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  auto is_subsequence = [](const std::vector<std::string>& s, const std::vector<std::string>& t) {
    std::size_t i = 0;
    for (const auto& tok : t) {
      if (i < s.size() && s[i] == tok) ++i;
    }
    return i == s.size();
  };
  int best = 0;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (static_cast<int>(sub.size()) > best && is_subsequence(sub, b)) {
      best = static_cast<int>(sub.size());
    }
  }
  return best;
}

inline std::vector<std::string> random_tokens(int max_len, int alphabet, Rng& rng) {
  int len = static_cast<int>(rng.uniform_index(max_len + 1));
  std::vector<std::string> out;
  for (int i = 0; i < len; ++i) {
    out.push_back(std::string(1, static_cast<char>('a' + rng.uniform_index(alphabet))));
  }
  return out;
}

}  // namespace rsg::test
