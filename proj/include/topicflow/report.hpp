#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topicflow/biblio.hpp"
#include "topicflow/corpus.hpp"
#include "topicflow/tpm.hpp"

namespace topicflow {

struct ChartSeries {
  std::string label;           // Input | Background | Output
  std::vector<double> values;  // normalized, max = 1
};

struct CorrelationRow {
  std::string pair;         // e.g. "I_O"
  std::optional<double> r;  // empty when undefined (zero variance, K < 2)
  std::string note;
};

struct AnalysisReport {
  std::string scenario;
  int topic_count = 0;
  CorpusStats stats;
  std::vector<CorrelationRow> correlations;
  std::vector<std::vector<std::pair<std::string, double>>> top_words;
  TopicProcessResult tpm;
  std::vector<Phase> phases_input_output;
  std::vector<ChartSeries> chart;  // up to 3 series, flagged if missing
  std::vector<std::string> chart_notes;
  GlobalIndex global_index;
  std::vector<CitationVector> citation_vectors;
  std::vector<int> overlap_input_output;  // shared 1-based indices
};

// Aggregates one scenario's results. Throws InconsistentInputs when the
// topic counts of model and tpm_result disagree.
AnalysisReport build_report(const Corpus& corpus, const CorpusStats& stats,
                            const TopicModel& model,
                            const TopicProcessResult& tpm_result,
                            const GlobalIndex& index,
                            const std::vector<CitationVector>& vectors,
                            const std::vector<int>& overlap_io,
                            int n_top_words);

// Grouped-bar SVG plus a companion TSV carrying the identical values.
void emit_chart(const std::vector<ChartSeries>& series,
                const std::string& svg_path, const std::string& tsv_path);

// Writes report.txt, correlations.tsv, gamma.tsv, topics_top_words.tsv,
// citation_vectors.tsv, fig_topic_process.svgdata.tsv,
// fig_topic_process.svg into outdir (created if needed).
void write_report_dir(const AnalysisReport& report, const std::string& outdir);

std::string render_report_text(const AnalysisReport& report);

}  // namespace topicflow
