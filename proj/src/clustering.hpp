#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rsg {

struct ClusterAssignment {
  std::vector<int> labels;     // point index -> cluster id, contiguous from 0
  std::vector<int> exemplars;  // cluster id -> point index, ascending
  bool converged = false;
  int iterations = 0;

  int cluster_count() const { return static_cast<int>(exemplars.size()); }
};

struct ApOptions {
  double damping = 0.9;
  int max_iter = 1000;
  int stable_iters = 50;
};

// S[i][j] = theta_i . theta_j for i != j; S[i][i] = preference
// (default: median of the off-diagonal values).
Eigen::MatrixXd similarity_matrix(const std::vector<Eigen::VectorXd>& thetas,
                                  std::optional<double> preference = std::nullopt);

ClusterAssignment affinity_propagation(const Eigen::MatrixXd& S, const ApOptions& opts = {});

// Davies-Bouldin index with Euclidean distances in theta space.
// Requires at least two non-empty clusters.
double davies_bouldin(const std::vector<Eigen::VectorXd>& thetas, const std::vector<int>& labels);

struct DirectionStats {
  // (paper count, direction count) per researcher corpus.
  std::vector<std::pair<int, int>> per_researcher;
  // direction count -> number of researchers with that count.
  std::map<int, int> histogram;
};

DirectionStats direction_stats(const std::vector<ClusterAssignment>& assignments);

}  // namespace rsg
