#pragma once

#include <optional>
#include <string>

#include "corpus.hpp"
#include "salience.hpp"
#include "topic_model.hpp"

namespace rsg {

struct ApConfig {
  std::optional<double> preference;  // default: median of off-diagonal similarities
  double damping = 0.9;
  int max_iter = 1000;
  int stable_iters = 50;
};

struct ScorerConfig {
  std::string name = "textrank";  // random | multilead | textrank | lexrank | oracle | external
  std::string scores_file;        // required for "external"
};

struct PipelineConfig {
  std::string corpus_path;
  std::string output_dir;
  int vocab_size = 2000;
  std::string sections = "abs+intro";  // or "full"
  TopicModelConfig topic;              // K = 100 by default
  ApConfig ap;
  ScorerConfig scorer;
  SelectionConfig mmr;
  std::optional<std::uint64_t> seed;
  std::string terms_file;                  // optional, enables entity recall
  std::string coverage_selector = "all";   // abs | abs+intro | full | all
  std::string stopwords_file;              // optional custom stopword list
};

PipelineConfig load_config(const std::string& path);

// Apply a dotted-key override, e.g. ("topic.K", "50") or ("seed", "7").
void apply_override(PipelineConfig& config, const std::string& key, const std::string& value);

// Pipeline stages. Each reads its inputs from and writes its outputs to
// config.output_dir so stages can be rerun independently.
void stage_ingest(const PipelineConfig& config);
void stage_train(const PipelineConfig& config);
void stage_cluster(const PipelineConfig& config);
void stage_generate(const PipelineConfig& config);
void stage_evaluate(const PipelineConfig& config);
void stage_coverage(const PipelineConfig& config);

// ingest -> train -> cluster -> generate, then evaluate when the corpus
// carries a reference statement.
void run_pipeline(const PipelineConfig& config);

void run_stage(const PipelineConfig& config, const std::string& stage);

}  // namespace rsg
