/* C API for the topicflow shared library. All handles are opaque; every
 * function returns a tf_status. String outputs are heap-allocated and
 * must be released with tf_string_free. tf_last_error() returns a
 * thread-local detail message for the most recent failure. */
#ifndef TOPICFLOW_C_H
#define TOPICFLOW_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_VALIDATION_FAILED = 1, /* analysis failure: corpus rejected */
  TF_PARSE_ERROR = 2,
  TF_MISSING_FILE = 3,
  TF_IO_ERROR = 4,
  TF_INVALID_ARGUMENT = 5,
  TF_INTERNAL_ERROR = 6
} tf_status;

typedef struct tf_corpus tf_corpus;

typedef struct tf_options {
  int32_t topics;
  double alpha;
  double eta;
  int32_t iterations;
  uint64_t seed;
  int32_t min_paragraph_tokens;
  int32_t min_count;
  const char* stopwords_path; /* NULL = built-in list */
  double epsilon;
  int32_t deterministic;
  int32_t minibatch; /* 0 = full batch */
  int32_t input_as_background;
  int32_t top_words;
  double threshold; /* < 0 = use the manifest value */
} tf_options;

void tf_options_defaults(tf_options* opts);

const char* tf_version(void);
const char* tf_status_name(tf_status s);
const char* tf_last_error(void);
void tf_string_free(char* s);

tf_status tf_corpus_load(const char* manifest_path, tf_corpus** out);
void tf_corpus_free(tf_corpus* corpus);

/* threshold < 0 uses the manifest's value. *passed is 1/0; report_text
 * (optional, may be NULL) receives the human-readable rule list. */
tf_status tf_corpus_validate(const tf_corpus* corpus, double threshold,
                             int32_t* passed, char** report_text);

/* Table-style scenario demographics (articles, paragraphs, topics,
 * tokens) after segmentation. */
tf_status tf_corpus_stats_text(const char* manifest_path,
                               const tf_options* opts, char** text);

tf_status tf_train_model(const char* manifest_path, const tf_options* opts,
                         const char* model_out_path);

/* Full pipeline: validate, segment, train, analyze, write the report
 * directory. */
tf_status tf_analyze(const char* manifest_path, const tf_options* opts,
                     const char* output_dir);

/* Re-emit the report directory from a previously saved model. */
tf_status tf_report_from_model(const char* manifest_path,
                               const char* model_path, const tf_options* opts,
                               const char* output_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TOPICFLOW_C_H */
