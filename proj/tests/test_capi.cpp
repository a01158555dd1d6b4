#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rsg/rsg.h"

namespace fs = std::filesystem;

namespace {

// RAII workspace under the system temp dir.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rsg_capi_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Config {
  rsg_config* c = nullptr;
  Config() { REQUIRE(rsg_config_create(&c) == RSG_OK); }
  ~Config() { rsg_config_destroy(c); }
  void set(const char* key, const std::string& value) {
    REQUIRE(rsg_config_set(c, key, value.c_str()) == RSG_OK);
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void set_small_run(Config& cfg, const fs::path& out) {
  cfg.set("corpus", RSG_MINI_CORPUS);
  cfg.set("output_dir", out.string());
  cfg.set("vocab_size", "150");
  cfg.set("seed", "42");
  cfg.set("topic.K", "6");
  cfg.set("topic.H", "12");
  cfg.set("topic.epochs", "15");
  cfg.set("mmr.word_limit", "120");
}

}  // namespace

TEST_CASE("version string is set") {
  std::string v = rsg_version();
  CHECK(!v.empty());
}

TEST_CASE("config rejects unknown keys and bad values") {
  Config cfg;
  CHECK(rsg_config_set(cfg.c, "no.such.key", "1") == RSG_ERR_INVALID_ARGUMENT);
  std::string msg = rsg_last_error();
  CHECK(msg.find("no.such.key") != std::string::npos);
  CHECK(rsg_config_set(cfg.c, "topic.K", "not-a-number") == RSG_ERR_INVALID_ARGUMENT);
  CHECK(rsg_config_set(cfg.c, nullptr, "1") == RSG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config file loading") {
  TempDir tmp;
  fs::path cfg_path = tmp.path / "config.json";
  {
    std::ofstream out(cfg_path);
    out << R"({"corpus": "c.json", "vocab_size": 321, "topic_model": {"K": 7}})";
  }
  Config cfg;
  CHECK(rsg_config_load_file(cfg.c, cfg_path.string().c_str()) == RSG_OK);
  CHECK(rsg_config_load_file(cfg.c, (tmp.path / "missing.json").string().c_str()) == RSG_ERR_IO);
  {
    std::ofstream out(cfg_path);
    out << "{not json";
  }
  CHECK(rsg_config_load_file(cfg.c, cfg_path.string().c_str()) == RSG_ERR_FORMAT);
}

TEST_CASE("rsg_rouge computes scores and validates the variant") {
  double p = -1, r = -1, f = -1;
  REQUIRE(rsg_rouge("a x c", "a b c", "1", &p, &r, &f) == RSG_OK);
  CHECK(p == doctest::Approx(2.0 / 3.0));
  CHECK(r == doctest::Approx(2.0 / 3.0));
  CHECK(f == doctest::Approx(2.0 / 3.0));
  REQUIRE(rsg_rouge("a c d b", "a b c d", "l", nullptr, &r, nullptr) == RSG_OK);
  CHECK(r == doctest::Approx(0.75));
  CHECK(rsg_rouge("a", "a b", "7", &p, &r, &f) == RSG_ERR_INVALID_ARGUMENT);
  CHECK(rsg_rouge("a", "", "1", &p, &r, &f) == RSG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("staged run via the C API produces the pipeline artifacts") {
  TempDir tmp;
  Config cfg;
  set_small_run(cfg, tmp.path);
  REQUIRE(rsg_run_stage(cfg.c, "ingest") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "train-topics") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "cluster") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "generate") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "evaluate") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "coverage") == RSG_OK);
  for (const char* name : {"ingested.json", "vocab.json", "model.json", "loss_trace.json",
                           "thetas.json", "assignment.json", "scores.json", "statement.txt",
                           "provenance.json", "report.json", "coverage.json"}) {
    CHECK_MESSAGE(fs::exists(tmp.path / name), name);
  }
  CHECK(!read_file(tmp.path / "statement.txt").empty());
}

TEST_CASE("full run matches the staged run byte for byte") {
  TempDir staged, full;
  {
    Config cfg;
    set_small_run(cfg, staged.path);
    for (const char* s : {"ingest", "train-topics", "cluster", "generate", "evaluate"}) {
      REQUIRE(rsg_run_stage(cfg.c, s) == RSG_OK);
    }
  }
  {
    Config cfg;
    set_small_run(cfg, full.path);
    REQUIRE(rsg_run(cfg.c) == RSG_OK);
  }
  for (const char* name : {"statement.txt", "provenance.json", "assignment.json", "report.json"}) {
    CHECK_MESSAGE(read_file(staged.path / name) == read_file(full.path / name), name);
  }
}

TEST_CASE("missing upstream artifacts name the producing stage") {
  TempDir tmp;
  Config cfg;
  set_small_run(cfg, tmp.path);
  CHECK(rsg_run_stage(cfg.c, "train-topics") == RSG_ERR_MISSING_ARTIFACT);
  std::string msg = rsg_last_error();
  CHECK(msg.find("ingest") != std::string::npos);
  REQUIRE(rsg_run_stage(cfg.c, "ingest") == RSG_OK);
  CHECK(rsg_run_stage(cfg.c, "generate") == RSG_ERR_MISSING_ARTIFACT);
  msg = rsg_last_error();
  CHECK((msg.find("train-topics") != std::string::npos ||
         msg.find("cluster") != std::string::npos));
}

TEST_CASE("unknown stage and missing corpus are reported") {
  TempDir tmp;
  Config cfg;
  set_small_run(cfg, tmp.path);
  CHECK(rsg_run_stage(cfg.c, "polish") == RSG_ERR_INVALID_ARGUMENT);
  Config bad;
  bad.set("corpus", (tmp.path / "absent.json").string());
  bad.set("output_dir", tmp.path.string());
  CHECK(rsg_run_stage(bad.c, "ingest") == RSG_ERR_IO);
  std::string msg = rsg_last_error();
  CHECK(!msg.empty());
}

TEST_CASE("external scorer reads a score file and fails on gaps") {
  TempDir tmp;
  Config cfg;
  set_small_run(cfg, tmp.path);
  REQUIRE(rsg_run_stage(cfg.c, "ingest") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "train-topics") == RSG_OK);
  REQUIRE(rsg_run_stage(cfg.c, "cluster") == RSG_OK);

  cfg.set("scorer.name", "external");
  fs::path scores = tmp.path / "ext_scores.json";
  {
    std::ofstream out(scores);
    out << R"([{"paper_id": "p-missing", "position": 0, "score": 1.0}])";
  }
  cfg.set("scorer.scores_file", scores.string());
  CHECK(rsg_run_stage(cfg.c, "generate") == RSG_ERR_FORMAT);
  std::string msg = rsg_last_error();
  CHECK(msg.find("missing entry") != std::string::npos);
}
