#include "topicflow/topicflow_c.h"

#include <cstring>
#include <sstream>
#include <string>

#include "topicflow/error.hpp"
#include "topicflow/pipeline.hpp"

using topicflow::Error;
using topicflow::ErrorCode;

struct tf_corpus {
  topicflow::Corpus corpus;
};

namespace {

thread_local std::string g_last_error;

tf_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ValidationFailed:
      return TF_VALIDATION_FAILED;
    case ErrorCode::ParseError:
    case ErrorCode::VersionMismatch:
      return TF_PARSE_ERROR;
    case ErrorCode::MissingFile:
      return TF_MISSING_FILE;
    case ErrorCode::IoError:
      return TF_IO_ERROR;
    case ErrorCode::InvalidConfig:
    case ErrorCode::DuplicateId:
    case ErrorCode::MissingRole:
      return TF_INVALID_ARGUMENT;
    default:
      return TF_INTERNAL_ERROR;
  }
}

template <typename Fn>
tf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TF_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return TF_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

topicflow::RunOptions to_run_options(const tf_options* o) {
  topicflow::RunOptions r;
  if (!o) return r;
  r.topics = o->topics;
  r.alpha = o->alpha;
  r.eta = o->eta;
  r.iterations = o->iterations;
  r.seed = o->seed;
  r.min_paragraph_tokens = o->min_paragraph_tokens;
  r.min_count = o->min_count;
  if (o->stopwords_path) r.stopwords_path = o->stopwords_path;
  r.epsilon = o->epsilon;
  r.deterministic = o->deterministic != 0;
  r.minibatch = o->minibatch;
  r.input_as_background = o->input_as_background != 0;
  r.n_top_words = o->top_words;
  r.threshold = o->threshold;
  return r;
}

tf_status require_arg(bool ok, const char* what) {
  if (ok) return TF_OK;
  g_last_error = std::string("null argument: ") + what;
  return TF_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

void tf_options_defaults(tf_options* opts) {
  if (!opts) return;
  const topicflow::RunOptions d;
  opts->topics = d.topics;
  opts->alpha = d.alpha;
  opts->eta = d.eta;
  opts->iterations = d.iterations;
  opts->seed = d.seed;
  opts->min_paragraph_tokens = d.min_paragraph_tokens;
  opts->min_count = d.min_count;
  opts->stopwords_path = nullptr;
  opts->epsilon = d.epsilon;
  opts->deterministic = 0;
  opts->minibatch = d.minibatch;
  opts->input_as_background = 0;
  opts->top_words = d.n_top_words;
  opts->threshold = d.threshold;
}

const char* tf_version(void) { return "1.0.0"; }

const char* tf_status_name(tf_status s) {
  switch (s) {
    case TF_OK: return "ok";
    case TF_VALIDATION_FAILED: return "validation failed";
    case TF_PARSE_ERROR: return "parse error";
    case TF_MISSING_FILE: return "missing file";
    case TF_IO_ERROR: return "io error";
    case TF_INVALID_ARGUMENT: return "invalid argument";
    case TF_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

const char* tf_last_error(void) { return g_last_error.c_str(); }

void tf_string_free(char* s) { delete[] s; }

tf_status tf_corpus_load(const char* manifest_path, tf_corpus** out) {
  if (tf_status s = require_arg(manifest_path && out, "manifest_path/out"))
    return s;
  *out = nullptr;
  return guarded([&] {
    auto* handle = new tf_corpus{topicflow::load_manifest(manifest_path)};
    *out = handle;
  });
}

void tf_corpus_free(tf_corpus* corpus) { delete corpus; }

tf_status tf_corpus_validate(const tf_corpus* corpus, double threshold,
                             int32_t* passed, char** report_text) {
  if (tf_status s = require_arg(corpus && passed, "corpus/passed")) return s;
  return guarded([&] {
    const double t = threshold >= 0 ? threshold : corpus->corpus.threshold;
    topicflow::ValidationReport report =
        topicflow::validate_corpus(corpus->corpus, t);
    *passed = report.passed() ? 1 : 0;
    if (report_text) *report_text = dup_string(report.to_text());
  });
}

tf_status tf_corpus_stats_text(const char* manifest_path,
                               const tf_options* opts, char** text) {
  if (tf_status s = require_arg(manifest_path && text, "manifest_path/text"))
    return s;
  return guarded([&] {
    topicflow::RunOptions r = to_run_options(opts);
    topicflow::ScenarioData data =
        topicflow::prepare_scenario(manifest_path, r);
    std::ostringstream os;
    os << "scenario\tarticles\tparagraphs\ttopics\ttokens\n";
    os << data.corpus.scenario_name << "\t" << data.stats.articles << "\t"
       << data.stats.paragraphs << "\t" << data.stats.topics << "\t"
       << data.stats.tokens << "\n";
    *text = dup_string(os.str());
  });
}

tf_status tf_train_model(const char* manifest_path, const tf_options* opts,
                         const char* model_out_path) {
  if (tf_status s = require_arg(manifest_path && model_out_path,
                                "manifest_path/model_out_path"))
    return s;
  return guarded([&] {
    topicflow::run_train(manifest_path, to_run_options(opts), model_out_path);
  });
}

tf_status tf_analyze(const char* manifest_path, const tf_options* opts,
                     const char* output_dir) {
  if (tf_status s =
          require_arg(manifest_path && output_dir, "manifest_path/output_dir"))
    return s;
  return guarded([&] {
    topicflow::run_analyze(manifest_path, to_run_options(opts), output_dir);
  });
}

tf_status tf_report_from_model(const char* manifest_path,
                               const char* model_path, const tf_options* opts,
                               const char* output_dir) {
  if (tf_status s = require_arg(manifest_path && model_path && output_dir,
                                "manifest_path/model_path/output_dir"))
    return s;
  return guarded([&] {
    topicflow::run_report(manifest_path, model_path, to_run_options(opts),
                          output_dir);
  });
}

}  // extern "C"
