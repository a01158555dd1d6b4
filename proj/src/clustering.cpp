#include "clustering.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"
#include "topic_model.hpp"

namespace rsg {

Eigen::MatrixXd similarity_matrix(const std::vector<Eigen::VectorXd>& thetas,
                                  std::optional<double> preference) {
  const int n = static_cast<int>(thetas.size());
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "similarity matrix needs at least one theta");
  for (const auto& t : thetas) {
    if (t.size() != thetas[0].size()) {
      throw Error(ErrorCode::InvalidArgument, "topic distributions have different dimensions");
    }
  }
  Eigen::MatrixXd S(n, n);
  for (int i = 0; i < n; ++i) {
    S(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double sim = topic_similarity(thetas[i], thetas[j]);
      S(i, j) = sim;
      S(j, i) = sim;
    }
  }
  double pref;
  if (preference) {
    pref = *preference;
  } else if (n == 1) {
    pref = 0.0;
  } else {
    std::vector<double> off;
    off.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off.push_back(S(i, j));
    std::sort(off.begin(), off.end());
    std::size_t m = off.size();
    pref = (m % 2 == 1) ? off[m / 2] : 0.5 * (off[m / 2 - 1] + off[m / 2]);
  }
  S.diagonal().setConstant(pref);
  return S;
}

ClusterAssignment affinity_propagation(const Eigen::MatrixXd& S, const ApOptions& opts) {
  const int n = static_cast<int>(S.rows());
  if (n < 1 || S.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "similarity matrix must be square and non-empty");
  }
  ClusterAssignment out;
  if (n == 1) {
    out.labels = {0};
    out.exemplars = {0};
    out.converged = true;
    out.iterations = 0;
    return out;
  }

  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  std::set<int> last_exemplars;
  int stable = 0;
  int iter = 0;
  bool converged = false;

  auto current_exemplars = [&]() {
    std::set<int> ex;
    for (int k = 0; k < n; ++k)
      if (R(k, k) + A(k, k) > 0.0) ex.insert(k);
    return ex;
  };

  for (iter = 1; iter <= opts.max_iter; ++iter) {
    // Responsibilities.
    Eigen::MatrixXd Rn(n, n);
    for (int i = 0; i < n; ++i) {
      double max1 = -std::numeric_limits<double>::infinity();
      double max2 = -std::numeric_limits<double>::infinity();
      int arg1 = -1;
      for (int k = 0; k < n; ++k) {
        double v = A(i, k) + S(i, k);
        if (v > max1) {
          max2 = max1;
          max1 = v;
          arg1 = k;
        } else if (v > max2) {
          max2 = v;
        }
      }
      for (int k = 0; k < n; ++k) {
        Rn(i, k) = S(i, k) - (k == arg1 ? max2 : max1);
      }
    }
    R = opts.damping * R + (1.0 - opts.damping) * Rn;

    // Availabilities.
    Eigen::MatrixXd An(n, n);
    for (int k = 0; k < n; ++k) {
      double pos_sum = 0.0;
      for (int i = 0; i < n; ++i) {
        if (i != k) pos_sum += std::max(0.0, R(i, k));
      }
      for (int i = 0; i < n; ++i) {
        if (i == k) {
          An(k, k) = pos_sum;
        } else {
          double v = R(k, k) + pos_sum - std::max(0.0, R(i, k));
          An(i, k) = std::min(0.0, v);
        }
      }
    }
    A = opts.damping * A + (1.0 - opts.damping) * An;

    std::set<int> ex = current_exemplars();
    if (!ex.empty() && ex == last_exemplars) {
      if (++stable >= opts.stable_iters) {
        converged = true;
        break;
      }
    } else {
      stable = 0;
    }
    last_exemplars = std::move(ex);
  }

  std::set<int> exemplar_set = current_exemplars();
  if (exemplar_set.empty()) {
    // Degenerate run (e.g. fully tied messages): fall back to the best
    // self-evidence, lowest index on ties.
    int best = 0;
    double best_v = R(0, 0) + A(0, 0);
    for (int k = 1; k < n; ++k) {
      double v = R(k, k) + A(k, k);
      if (v > best_v) {
        best_v = v;
        best = k;
      }
    }
    exemplar_set.insert(best);
  }

  std::vector<int> exemplars(exemplar_set.begin(), exemplar_set.end());
  std::map<int, int> cluster_of_exemplar;
  for (std::size_t c = 0; c < exemplars.size(); ++c) cluster_of_exemplar[exemplars[c]] = static_cast<int>(c);

  out.labels.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (cluster_of_exemplar.count(i)) {
      out.labels[i] = cluster_of_exemplar[i];
      continue;
    }
    int best_k = exemplars[0];
    double best_v = R(i, exemplars[0]) + A(i, exemplars[0]);
    for (std::size_t c = 1; c < exemplars.size(); ++c) {
      int k = exemplars[c];
      double v = R(i, k) + A(i, k);
      if (v > best_v) {
        best_v = v;
        best_k = k;
      }
    }
    out.labels[i] = cluster_of_exemplar[best_k];
  }
  out.exemplars = std::move(exemplars);
  out.converged = converged;
  out.iterations = std::min(iter, opts.max_iter);
  return out;
}

double davies_bouldin(const std::vector<Eigen::VectorXd>& thetas, const std::vector<int>& labels) {
  if (thetas.size() != labels.size()) {
    throw Error(ErrorCode::InvalidArgument, "thetas and labels differ in length");
  }
  int C = 0;
  for (int l : labels) C = std::max(C, l + 1);
  if (C < 2) throw Error(ErrorCode::InvalidArgument, "DBI undefined for fewer than 2 clusters");

  std::vector<int> sizes(C, 0);
  for (int l : labels) {
    if (l < 0) throw Error(ErrorCode::InvalidArgument, "negative cluster label");
    ++sizes[l];
  }
  for (int c = 0; c < C; ++c) {
    if (sizes[c] == 0) throw Error(ErrorCode::InvalidArgument, "empty cluster in DBI input");
  }

  const Eigen::Index dim = thetas[0].size();
  std::vector<Eigen::VectorXd> centroids(C, Eigen::VectorXd::Zero(dim));
  for (std::size_t i = 0; i < thetas.size(); ++i) centroids[labels[i]] += thetas[i];
  for (int c = 0; c < C; ++c) centroids[c] /= sizes[c];

  std::vector<double> scatter(C, 0.0);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    scatter[labels[i]] += (thetas[i] - centroids[labels[i]]).norm();
  }
  for (int c = 0; c < C; ++c) scatter[c] /= sizes[c];

  double total = 0.0;
  for (int i = 0; i < C; ++i) {
    double worst = 0.0;
    for (int j = 0; j < C; ++j) {
      if (i == j) continue;
      double d = (centroids[i] - centroids[j]).norm();
      worst = std::max(worst, (scatter[i] + scatter[j]) / d);
    }
    total += worst;
  }
  return total / C;
}

DirectionStats direction_stats(const std::vector<ClusterAssignment>& assignments) {
  if (assignments.empty()) {
    throw Error(ErrorCode::InvalidArgument, "direction_stats needs at least one assignment");
  }
  DirectionStats stats;
  for (const auto& a : assignments) {
    int papers = static_cast<int>(a.labels.size());
    int directions = a.cluster_count();
    stats.per_researcher.emplace_back(papers, directions);
    ++stats.histogram[directions];
  }
  return stats;
}

}  // namespace rsg
