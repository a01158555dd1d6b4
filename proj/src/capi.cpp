#include "rsg/rsg.h"

#include <string>

#include "corpus.hpp"
#include "error.hpp"
#include "evaluation.hpp"
#include "pipeline.hpp"

namespace {

thread_local std::string g_last_error;

rsg_status status_of(rsg::ErrorCode code) {
  switch (code) {
    case rsg::ErrorCode::Io: return RSG_ERR_IO;
    case rsg::ErrorCode::Format: return RSG_ERR_FORMAT;
    case rsg::ErrorCode::InvalidArgument: return RSG_ERR_INVALID_ARGUMENT;
    case rsg::ErrorCode::MissingArtifact: return RSG_ERR_MISSING_ARTIFACT;
    case rsg::ErrorCode::Numeric: return RSG_ERR_NUMERIC;
    case rsg::ErrorCode::Internal: return RSG_ERR_INTERNAL;
  }
  return RSG_ERR_INTERNAL;
}

template <typename Fn>
rsg_status guarded(Fn&& fn) {
  try {
    fn();
    return RSG_OK;
  } catch (const rsg::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RSG_ERR_INTERNAL;
  }
}

}  // namespace

struct rsg_config {
  rsg::PipelineConfig impl;
};

extern "C" {

rsg_status rsg_config_create(rsg_config** out) {
  return guarded([&] {
    if (out == nullptr) throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null output pointer");
    *out = new rsg_config();
  });
}

void rsg_config_destroy(rsg_config* config) { delete config; }

rsg_status rsg_config_load_file(rsg_config* config, const char* path) {
  return guarded([&] {
    if (config == nullptr || path == nullptr) {
      throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null argument");
    }
    config->impl = rsg::load_config(path);
  });
}

rsg_status rsg_config_set(rsg_config* config, const char* key, const char* value) {
  return guarded([&] {
    if (config == nullptr || key == nullptr || value == nullptr) {
      throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null argument");
    }
    rsg::apply_override(config->impl, key, value);
  });
}

rsg_status rsg_run(const rsg_config* config) {
  return guarded([&] {
    if (config == nullptr) throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null config");
    rsg::run_pipeline(config->impl);
  });
}

rsg_status rsg_run_stage(const rsg_config* config, const char* stage) {
  return guarded([&] {
    if (config == nullptr || stage == nullptr) {
      throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null argument");
    }
    rsg::run_stage(config->impl, stage);
  });
}

rsg_status rsg_rouge(const char* candidate, const char* reference, const char* variant,
                     double* precision, double* recall, double* f1) {
  return guarded([&] {
    if (candidate == nullptr || reference == nullptr || variant == nullptr) {
      throw rsg::Error(rsg::ErrorCode::InvalidArgument, "null argument");
    }
    auto cand = rsg::tokenize(candidate);
    auto ref = rsg::tokenize(reference);
    std::string v = variant;
    rsg::RougeScore score;
    if (v == "1") score = rsg::rouge_n(cand, ref, 1);
    else if (v == "2") score = rsg::rouge_n(cand, ref, 2);
    else if (v == "l" || v == "L") score = rsg::rouge_l(cand, ref);
    else throw rsg::Error(rsg::ErrorCode::InvalidArgument, "unknown ROUGE variant: " + v);
    if (precision != nullptr) *precision = score.precision;
    if (recall != nullptr) *recall = score.recall;
    if (f1 != nullptr) *f1 = score.f1;
  });
}

const char* rsg_last_error(void) { return g_last_error.c_str(); }

const char* rsg_version(void) { return "0.1.0"; }

}  // extern "C"
