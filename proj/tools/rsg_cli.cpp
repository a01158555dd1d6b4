// Command-line driver for the research statement generation pipeline.
// Talks to the library exclusively through the C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsg/rsg.h"

namespace {

struct ConfigDeleter {
  void operator()(rsg_config* c) const { rsg_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<rsg_config, ConfigDeleter>;

struct StageArgs {
  std::string config_file;
  std::vector<std::pair<std::string, std::string>> overrides;

  void add_override(const std::string& key, const std::string& value) {
    overrides.emplace_back(key, value);
  }
};

int fail(rsg_status status) {
  std::fprintf(stderr, "error: %s\n", rsg_last_error());
  return static_cast<int>(status);
}

int run_stage(const StageArgs& args, const std::string& stage) {
  rsg_config* raw = nullptr;
  if (rsg_status s = rsg_config_create(&raw); s != RSG_OK) return fail(s);
  ConfigPtr config(raw);
  if (!args.config_file.empty()) {
    if (rsg_status s = rsg_config_load_file(config.get(), args.config_file.c_str()); s != RSG_OK) {
      return fail(s);
    }
  }
  for (const auto& [key, value] : args.overrides) {
    if (rsg_status s = rsg_config_set(config.get(), key.c_str(), value.c_str()); s != RSG_OK) {
      return fail(s);
    }
  }
  rsg_status s = stage == "run" ? rsg_run(config.get()) : rsg_run_stage(config.get(), stage.c_str());
  if (s != RSG_OK) return fail(s);
  return 0;
}

// Flags shared by all subcommands; each maps onto a dotted config key.
void add_common_flags(CLI::App* cmd, StageArgs& args) {
  cmd->add_option("-c,--config", args.config_file, "JSON config file");
  auto opt = [cmd, &args](const char* flag, const char* key, const char* help) {
    cmd->add_option_function<std::string>(
        flag, [&args, key](const std::string& v) { args.add_override(key, v); }, help);
  };
  opt("--corpus", "corpus", "corpus JSON file");
  opt("--out", "output_dir", "output directory for pipeline artifacts");
  opt("--vocab-size", "vocab_size", "vocabulary size (default 2000)");
  opt("--sections", "sections", "source sections: abs | abs+intro | full");
  opt("--seed", "seed", "random seed (required for generate)");
  opt("--stopwords", "stopwords_file", "custom stopword list (one word per line)");
  opt("--topics,-K", "topic.K", "latent topic count (default 100)");
  opt("--hidden", "topic.H", "encoder hidden dimension (default 256)");
  opt("--epochs", "topic.epochs", "training epochs (default 200)");
  opt("--batch-size", "topic.batch_size", "training batch size (default 32)");
  opt("--learning-rate", "topic.learning_rate", "Adam learning rate (default 1e-3)");
  opt("--preference", "ap.preference", "AP preference (default: median similarity)");
  opt("--damping", "ap.damping", "AP damping factor (default 0.9)");
  opt("--max-iter", "ap.max_iter", "AP iteration cap (default 1000)");
  opt("--stable-iters", "ap.stable_iters", "AP convergence window (default 50)");
  opt("--scorer", "scorer.name",
      "salience scorer: random | multilead | textrank | lexrank | oracle | external");
  opt("--scores", "scorer.scores_file", "external score file (scorer=external)");
  opt("--lambda", "mmr.lambda", "MMR trade-off in [0,1] (default 0.7)");
  opt("--word-limit", "mmr.word_limit", "statement word limit (default 500)");
  opt("--redundancy", "mmr.redundancy", "MMR redundancy: tfidf-cosine | topic-similarity");
  opt("--terms", "terms_file", "term annotation JSON for entity recall");
  opt("--selector", "coverage_selector", "coverage selector: abs | abs+intro | full | all");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Research statement generation pipeline"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> stages = {
      {"run", "run the full pipeline end to end"},
      {"ingest", "load and segment the corpus, build the vocabulary"},
      {"train-topics", "train the neural topic model"},
      {"cluster", "infer paper topic distributions and cluster them"},
      {"generate", "score, select, reorder, and compose the statement"},
      {"evaluate", "score the generated statement against the reference"},
      {"coverage", "section coverage analysis against the reference"},
  };

  std::vector<std::unique_ptr<StageArgs>> stage_args;
  for (const auto& [name, help] : stages) {
    auto args = std::make_unique<StageArgs>();
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_flags(cmd, *args);
    StageArgs* args_ptr = args.get();
    std::string stage_name = name;
    cmd->callback([args_ptr, stage_name] {
      int rc = run_stage(*args_ptr, stage_name);
      if (rc != 0) std::exit(rc);
    });
    stage_args.push_back(std::move(args));
  }

  CLI11_PARSE(app, argc, argv);
  return 0;
}
