#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace rsg {

struct TopicModelConfig {
  int K = 100;  // topic count
  int H = 256;  // hidden / prior dimension
  int V = 0;    // vocabulary size, set from the vocabulary
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double init_scale = 0.05;
  std::uint64_t seed = 0;
};

struct TopicModelParams {
  TopicModelConfig config;
  Eigen::MatrixXd W1;   // V x H, mean head
  Eigen::MatrixXd W2;   // V x H, log-variance head
  Eigen::MatrixXd Wt;   // H x K, topic projection
  Eigen::MatrixXd phi;  // K x V, topic-word logits
};

struct EncoderOutput {
  Eigen::VectorXd mu;       // H
  Eigen::VectorXd log_var;  // H
};

struct Gradients {
  Eigen::MatrixXd W1, W2, Wt, phi;
};

struct TrainResult {
  TopicModelParams params;
  std::vector<double> loss_trace;  // mean per-document loss per epoch
};

Eigen::VectorXd softmax(const Eigen::VectorXd& x);

Eigen::VectorXd bow_to_vector(const BowVector& bow);

TopicModelParams init_params(const TopicModelConfig& config);

// mu = ReLU(W1^T bow); log_var = W2^T bow. No bias terms.
EncoderOutput encode(const Eigen::VectorXd& bow, const TopicModelParams& params);

// theta = softmax(Wt^T z) with z = mu + exp(log_var / 2) .* eps.
Eigen::VectorXd theta_from_z(const Eigen::VectorXd& z, const TopicModelParams& params);
Eigen::VectorXd sample_theta(const EncoderOutput& enc, const TopicModelParams& params,
                             const Eigen::VectorXd& eps);

// Deterministic inference: z := mu.
Eigen::VectorXd infer_theta(const Eigen::VectorXd& bow, const TopicModelParams& params);
Eigen::VectorXd infer_theta(const BowVector& bow, const TopicModelParams& params);

// p(w|theta) = sum_k theta_k * softmax(phi_k)_w; lives on the V-simplex.
Eigen::VectorXd reconstruct(const Eigen::VectorXd& theta, const TopicModelParams& params);

// Negative ELBO for one document with a fixed reparameterization noise eps:
// -sum_w bow_w log p(w|theta(z)) + KL(N(mu, diag sigma^2) || N(0, I)).
double elbo_loss(const Eigen::VectorXd& bow, const TopicModelParams& params,
                 const Eigen::VectorXd& eps);

// Analytic pathwise gradients of elbo_loss at fixed eps.
Gradients loss_gradients(const Eigen::VectorXd& bow, const TopicModelParams& params,
                         const Eigen::VectorXd& eps);

TrainResult train(const std::vector<BowVector>& bows, const TopicModelConfig& config);

// T_sim: dot product of two topic distributions (both on the K-simplex).
double topic_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

void save_checkpoint(const TopicModelParams& params, const std::string& path);
TopicModelParams load_checkpoint(const std::string& path);

}  // namespace rsg
