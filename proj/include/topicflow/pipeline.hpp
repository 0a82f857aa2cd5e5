#pragma once

#include <cstdint>
#include <string>

#include "topicflow/corpus.hpp"
#include "topicflow/lda.hpp"
#include "topicflow/report.hpp"
#include "topicflow/tpm.hpp"

namespace topicflow {

struct RunOptions {
  int topics = 5;
  double alpha = 1.0;
  double eta = 0.01;
  int iterations = 200;
  std::uint64_t seed = 42;
  int min_paragraph_tokens = 20;
  int min_count = 1;
  std::string stopwords_path;  // empty = built-in list
  double epsilon = 1e-9;
  bool deterministic = false;
  int minibatch = 0;
  bool input_as_background = false;  // pool the input's paragraphs into B
  int n_top_words = 10;
  double threshold = -1;  // < 0 = use the manifest value

  LdaConfig lda_config() const;
};

struct ScenarioData {
  Corpus corpus;
  EncodedCorpus encoded;
  ParagraphRanges ranges;
  CorpusStats stats;  // topics filled from options
};

struct AnalysisOutputs {
  ScenarioData data;
  TopicModel model;
  TopicProcessResult tpm;
  AnalysisReport report;
};

// Throws ValidationFailed when the corpus fails its availability or
// structural checks; the report text is embedded in the message.
void require_valid(const Corpus& corpus, const RunOptions& opts);

// Segment + tokenize + encode every document, in the pooled block order
// Input -> Background -> Output.
ScenarioData prepare_scenario(const std::string& manifest_path,
                              const RunOptions& opts);

AnalysisOutputs analyze_scenario(const std::string& manifest_path,
                                 const RunOptions& opts);

// Builds the downstream analysis for an already-trained model.
AnalysisOutputs analyze_with_model(ScenarioData data, TopicModel model,
                                   const RunOptions& opts);

// Full pipeline; writes the report directory.
void run_analyze(const std::string& manifest_path, const RunOptions& opts,
                 const std::string& output_dir);

void run_train(const std::string& manifest_path, const RunOptions& opts,
               const std::string& model_out_path);

void run_report(const std::string& manifest_path, const std::string& model_path,
                const RunOptions& opts, const std::string& output_dir);

}  // namespace topicflow
