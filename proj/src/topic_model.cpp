#include "topic_model.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

#include "error.hpp"
#include "json.hpp"
#include "rng.hpp"

namespace rsg {

Eigen::VectorXd softmax(const Eigen::VectorXd& x) {
  double m = x.maxCoeff();
  Eigen::VectorXd e = (x.array() - m).exp();
  return e / e.sum();
}

Eigen::VectorXd bow_to_vector(const BowVector& bow) {
  Eigen::VectorXd v(bow.counts.size());
  for (std::size_t i = 0; i < bow.counts.size(); ++i) v[i] = bow.counts[i];
  return v;
}

TopicModelParams init_params(const TopicModelConfig& config) {
  if (config.K < 2 || config.H < 1 || config.V < 2) {
    throw Error(ErrorCode::InvalidArgument, "topic model requires K >= 2, H >= 1, V >= 2");
  }
  Rng rng(config.seed);
  auto fill = [&](Eigen::MatrixXd& m, int rows, int cols) {
    m.resize(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = rng.uniform(-config.init_scale, config.init_scale);
  };
  TopicModelParams p;
  p.config = config;
  fill(p.W1, config.V, config.H);
  fill(p.W2, config.V, config.H);
  fill(p.Wt, config.H, config.K);
  fill(p.phi, config.K, config.V);
  return p;
}

EncoderOutput encode(const Eigen::VectorXd& bow, const TopicModelParams& params) {
  if (bow.size() != params.W1.rows()) {
    throw Error(ErrorCode::InvalidArgument, "bow length does not match vocabulary size");
  }
  EncoderOutput out;
  out.mu = (params.W1.transpose() * bow).cwiseMax(0.0);
  out.log_var = params.W2.transpose() * bow;
  return out;
}

Eigen::VectorXd theta_from_z(const Eigen::VectorXd& z, const TopicModelParams& params) {
  return softmax(params.Wt.transpose() * z);
}

Eigen::VectorXd sample_theta(const EncoderOutput& enc, const TopicModelParams& params,
                             const Eigen::VectorXd& eps) {
  Eigen::VectorXd sigma = (enc.log_var.array() * 0.5).exp();
  Eigen::VectorXd z = enc.mu + sigma.cwiseProduct(eps);
  return theta_from_z(z, params);
}

Eigen::VectorXd infer_theta(const Eigen::VectorXd& bow, const TopicModelParams& params) {
  return theta_from_z(encode(bow, params).mu, params);
}

Eigen::VectorXd infer_theta(const BowVector& bow, const TopicModelParams& params) {
  return infer_theta(bow_to_vector(bow), params);
}

Eigen::VectorXd reconstruct(const Eigen::VectorXd& theta, const TopicModelParams& params) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(params.phi.cols());
  for (int k = 0; k < params.phi.rows(); ++k) {
    p += theta[k] * softmax(params.phi.row(k).transpose());
  }
  return p;
}

double elbo_loss(const Eigen::VectorXd& bow, const TopicModelParams& params,
                 const Eigen::VectorXd& eps) {
  EncoderOutput enc = encode(bow, params);
  Eigen::VectorXd theta = sample_theta(enc, params, eps);
  Eigen::VectorXd p = reconstruct(theta, params);
  double recon = 0.0;
  for (int w = 0; w < bow.size(); ++w) {
    if (bow[w] > 0.0) recon -= bow[w] * std::log(p[w]);
  }
  double kl = 0.0;
  for (int j = 0; j < enc.mu.size(); ++j) {
    kl += 0.5 * (enc.mu[j] * enc.mu[j] + std::exp(enc.log_var[j]) - enc.log_var[j] - 1.0);
  }
  return recon + kl;
}

Gradients loss_gradients(const Eigen::VectorXd& bow, const TopicModelParams& params,
                         const Eigen::VectorXd& eps) {
  const int K = params.config.K;
  const int V = params.config.V;

  Eigen::VectorXd a1 = params.W1.transpose() * bow;  // pre-ReLU
  Eigen::VectorXd mu = a1.cwiseMax(0.0);
  Eigen::VectorXd lv = params.W2.transpose() * bow;
  Eigen::VectorXd sigma = (lv.array() * 0.5).exp();
  Eigen::VectorXd z = mu + sigma.cwiseProduct(eps);
  Eigen::VectorXd theta = theta_from_z(z, params);

  // Topic-word distributions, row k = softmax(phi_k).
  Eigen::MatrixXd beta(K, V);
  for (int k = 0; k < K; ++k) beta.row(k) = softmax(params.phi.row(k).transpose()).transpose();
  Eigen::VectorXd p = beta.transpose() * theta;

  // d recon / d p
  Eigen::VectorXd gp = Eigen::VectorXd::Zero(V);
  for (int w = 0; w < V; ++w) {
    if (bow[w] > 0.0) gp[w] = -bow[w] / p[w];
  }

  Eigen::VectorXd gtheta = beta * gp;
  // softmax backward
  Eigen::VectorXd gt =
      theta.cwiseProduct(gtheta - Eigen::VectorXd::Constant(K, theta.dot(gtheta)));

  Gradients g;
  g.Wt = z * gt.transpose();
  Eigen::VectorXd gz = params.Wt * gt;

  // KL contributions.
  Eigen::VectorXd gmu = gz + mu;
  Eigen::VectorXd glv = 0.5 * sigma.cwiseProduct(eps).cwiseProduct(gz) +
                        0.5 * (lv.array().exp() - 1.0).matrix();

  // ReLU mask; subgradient at 0 is 0.
  Eigen::VectorXd ga1 = (a1.array() > 0.0).select(gmu.array(), 0.0).matrix();
  g.W1 = bow * ga1.transpose();
  g.W2 = bow * glv.transpose();

  // phi: row k gets theta_k * softmax-backward of gp through beta_k.
  g.phi.resize(K, V);
  for (int k = 0; k < K; ++k) {
    double dot = beta.row(k).dot(gp.transpose());
    g.phi.row(k) = theta[k] * beta.row(k).cwiseProduct(gp.transpose() -
                                                       Eigen::RowVectorXd::Constant(V, dot));
  }
  return g;
}

namespace {

struct AdamState {
  Eigen::MatrixXd m, v;
  void init(const Eigen::MatrixXd& shape) {
    m = Eigen::MatrixXd::Zero(shape.rows(), shape.cols());
    v = Eigen::MatrixXd::Zero(shape.rows(), shape.cols());
  }
  void step(Eigen::MatrixXd& param, const Eigen::MatrixXd& grad, double lr, long t) {
    const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    m = b1 * m + (1.0 - b1) * grad;
    v = b2 * v.array().matrix() + (1.0 - b2) * grad.cwiseProduct(grad);
    double c1 = 1.0 - std::pow(b1, static_cast<double>(t));
    double c2 = 1.0 - std::pow(b2, static_cast<double>(t));
    param -= (lr / c1) * m.cwiseQuotient(((v / c2).cwiseSqrt().array() + eps).matrix());
  }
};

}  // namespace

TrainResult train(const std::vector<BowVector>& bows, const TopicModelConfig& config) {
  if (bows.empty()) throw Error(ErrorCode::InvalidArgument, "training requires at least one document");
  for (const auto& b : bows) {
    if (static_cast<int>(b.counts.size()) != config.V) {
      throw Error(ErrorCode::InvalidArgument, "bow length does not match configured V");
    }
  }
  TrainResult result;
  result.params = init_params(config);
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ull);  // training stream, distinct from init

  std::vector<Eigen::VectorXd> docs;
  docs.reserve(bows.size());
  for (const auto& b : bows) docs.push_back(bow_to_vector(b));

  AdamState sW1, sW2, sWt, sphi;
  sW1.init(result.params.W1);
  sW2.init(result.params.W2);
  sWt.init(result.params.Wt);
  sphi.init(result.params.phi);

  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  long step = 0;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t batch_start = 0; batch_start < order.size();
         batch_start += config.batch_size) {
      std::size_t batch_end = std::min(order.size(), batch_start + config.batch_size);
      Gradients acc;
      acc.W1 = Eigen::MatrixXd::Zero(config.V, config.H);
      acc.W2 = Eigen::MatrixXd::Zero(config.V, config.H);
      acc.Wt = Eigen::MatrixXd::Zero(config.H, config.K);
      acc.phi = Eigen::MatrixXd::Zero(config.K, config.V);
      for (std::size_t i = batch_start; i < batch_end; ++i) {
        Eigen::VectorXd eps(config.H);
        for (int j = 0; j < config.H; ++j) eps[j] = rng.gaussian();
        const Eigen::VectorXd& x = docs[order[i]];
        epoch_loss += elbo_loss(x, result.params, eps);
        Gradients g = loss_gradients(x, result.params, eps);
        acc.W1 += g.W1;
        acc.W2 += g.W2;
        acc.Wt += g.Wt;
        acc.phi += g.phi;
      }
      double inv = 1.0 / static_cast<double>(batch_end - batch_start);
      ++step;
      sW1.step(result.params.W1, acc.W1 * inv, config.learning_rate, step);
      sW2.step(result.params.W2, acc.W2 * inv, config.learning_rate, step);
      sWt.step(result.params.Wt, acc.Wt * inv, config.learning_rate, step);
      sphi.step(result.params.phi, acc.phi * inv, config.learning_rate, step);
    }
    epoch_loss /= static_cast<double>(docs.size());
    if (!std::isfinite(epoch_loss)) {
      throw Error(ErrorCode::Numeric,
                  "training diverged (non-finite loss) at epoch " + std::to_string(epoch));
    }
    result.loss_trace.push_back(epoch_loss);
  }
  return result;
}

double topic_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "topic distributions have different dimensions");
  }
  return a.dot(b);
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> data;
  data.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  j["data"] = std::move(data);
  return j;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, const char* name) {
  Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw Error(ErrorCode::Format,
                std::string("checkpoint matrix '") + name + "' has wrong element count");
  }
  Eigen::MatrixXd m(rows, cols);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[i++].get<double>();
  return m;
}

}  // namespace

void save_checkpoint(const TopicModelParams& params, const std::string& path) {
  nlohmann::json j;
  j["config"] = {{"K", params.config.K},
                 {"H", params.config.H},
                 {"V", params.config.V},
                 {"epochs", params.config.epochs},
                 {"batch_size", params.config.batch_size},
                 {"learning_rate", params.config.learning_rate},
                 {"init_scale", params.config.init_scale},
                 {"seed", params.config.seed}};
  j["W1"] = matrix_to_json(params.W1);
  j["W2"] = matrix_to_json(params.W2);
  j["Wt"] = matrix_to_json(params.Wt);
  j["phi"] = matrix_to_json(params.phi);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write checkpoint: " + path);
  out << j.dump();
}

TopicModelParams load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open checkpoint: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, "malformed checkpoint JSON: " + std::string(e.what()));
  }
  TopicModelParams p;
  const auto& c = j.at("config");
  p.config.K = c.at("K").get<int>();
  p.config.H = c.at("H").get<int>();
  p.config.V = c.at("V").get<int>();
  p.config.epochs = c.at("epochs").get<int>();
  p.config.batch_size = c.at("batch_size").get<int>();
  p.config.learning_rate = c.at("learning_rate").get<double>();
  p.config.init_scale = c.at("init_scale").get<double>();
  p.config.seed = c.at("seed").get<std::uint64_t>();
  p.W1 = matrix_from_json(j.at("W1"), "W1");
  p.W2 = matrix_from_json(j.at("W2"), "W2");
  p.Wt = matrix_from_json(j.at("Wt"), "Wt");
  p.phi = matrix_from_json(j.at("phi"), "phi");
  if (p.W1.rows() != p.config.V || p.W1.cols() != p.config.H || p.W2.rows() != p.config.V ||
      p.W2.cols() != p.config.H || p.Wt.rows() != p.config.H || p.Wt.cols() != p.config.K ||
      p.phi.rows() != p.config.K || p.phi.cols() != p.config.V) {
    throw Error(ErrorCode::Format, "checkpoint matrix shapes disagree with its config");
  }
  return p;
}

}  // namespace rsg
