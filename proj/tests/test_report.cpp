#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixture.hpp"
#include "topicflow/error.hpp"
#include "topicflow/pipeline.hpp"
#include "topicflow/report.hpp"

using namespace topicflow;
using tftest::TempDir;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AnalysisOutputs run_fixture(const fs::path& dir, unsigned seed = 42) {
  auto manifest = tftest::make_scenario(dir);
  RunOptions opts;
  opts.topics = 4;
  opts.iterations = 30;
  opts.seed = seed;
  opts.min_paragraph_tokens = 10;
  return analyze_scenario(manifest.string(), opts);
}

}  // namespace

TEST_CASE("end-to-end report carries three series and K word lists") {
  TempDir tmp("report");
  AnalysisOutputs out = run_fixture(tmp.path());
  const AnalysisReport& rep = out.report;
  CHECK(rep.topic_count == 4);
  CHECK(rep.chart.size() == 3);
  CHECK(rep.top_words.size() == 4);
  for (const auto& s : rep.chart) {
    double max = 0;
    for (double v : s.values) {
      CHECK(v >= 0);
      CHECK(v <= 1.0 + 1e-12);
      max = std::max(max, v);
    }
    CHECK(max == doctest::Approx(1.0).epsilon(1e-12));
  }
  // fixture input and output share exactly one reference
  CHECK(rep.overlap_input_output.size() == 1);
}

TEST_CASE("undefined gamma renders as undef") {
  TempDir tmp("report");
  AnalysisOutputs out = run_fixture(tmp.path());

  TopicProcessResult patched = out.tpm;
  patched.gamma.defined[1] = false;
  AnalysisReport rep = build_report(
      out.data.corpus, out.data.stats, out.model, patched,
      out.report.global_index, out.report.citation_vectors,
      out.report.overlap_input_output, 5);
  std::string text = render_report_text(rep);
  CHECK(text.find("undef") != std::string::npos);

  TempDir outdir("reportdir");
  write_report_dir(rep, outdir.path().string());
  std::string gamma_tsv = slurp(outdir.path() / "gamma.tsv");
  CHECK(gamma_tsv.find("undef") != std::string::npos);
}

TEST_CASE("topic-count mismatch raises InconsistentInputs") {
  TempDir tmp("report");
  AnalysisOutputs out = run_fixture(tmp.path());
  TopicProcessResult truncated = out.tpm;
  truncated.input_weights.pop_back();
  truncated.background_weights.pop_back();
  truncated.output_weights.pop_back();
  truncated.gamma.values.pop_back();
  truncated.gamma.defined.pop_back();
  try {
    build_report(out.data.corpus, out.data.stats, out.model, truncated,
                 out.report.global_index, out.report.citation_vectors,
                 out.report.overlap_input_output, 5);
    FAIL("expected InconsistentInputs");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentInputs);
  }
}

TEST_CASE("report directory contains the fixed file set") {
  TempDir tmp("report");
  TempDir outdir("reportdir");
  AnalysisOutputs out = run_fixture(tmp.path());
  write_report_dir(out.report, outdir.path().string());
  for (const char* name :
       {"report.txt", "correlations.tsv", "gamma.tsv", "topics_top_words.tsv",
        "citation_vectors.tsv", "fig_topic_process.svgdata.tsv",
        "fig_topic_process.svg"})
    CHECK(fs::exists(outdir.path() / name));

  // provenance tags on numeric sections
  std::string text = slurp(outdir.path() / "report.txt");
  CHECK(text.find("[pearson]") != std::string::npos);
  CHECK(text.find("[corpus_stats]") != std::string::npos);
  CHECK(text.find("[overlap]") != std::string::npos);
}

TEST_CASE("chart renders one bar per series per topic") {
  TempDir tmp("chart");
  std::vector<ChartSeries> series = {
      {"Input", {1.0, 0.5, 0.25, 0.125, 0.0625}},
      {"Background", {0.5, 1.0, 0.75, 0.25, 0.125}},
      {"Output", {0.25, 0.5, 1.0, 0.75, 0.5}}};
  const std::string svg = (tmp.path() / "fig.svg").string();
  const std::string tsv = (tmp.path() / "fig.tsv").string();
  emit_chart(series, svg, tsv);

  std::string content = slurp(svg);
  std::size_t bars = 0;
  for (std::size_t pos = content.find("<rect"); pos != std::string::npos;
       pos = content.find("<rect", pos + 1))
    ++bars;
  // 15 data bars + 3 legend swatches + 1 background rect
  CHECK(bars == 19);
}

TEST_CASE("chart data file round-trips its values exactly") {
  TempDir tmp("chart");
  std::vector<ChartSeries> series = {{"Input", {0.5, 1.0, 0.25}},
                                     {"Output", {1.0, 0.125, 0.75}}};
  const std::string tsv = (tmp.path() / "fig.tsv").string();
  emit_chart(series, (tmp.path() / "fig.svg").string(), tsv);

  std::ifstream in(tsv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "topic\tInput\tOutput");
  for (int k = 0; k < 3; ++k) {
    int topic;
    double a, b;
    in >> topic >> a >> b;
    CHECK(topic == k + 1);
    CHECK(a == series[0].values[k]);
    CHECK(b == series[1].values[k]);
  }
}

TEST_CASE("single-series chart matches the golden rendering") {
  TempDir tmp("chart");
  std::vector<ChartSeries> series = {{"Input", {0.25, 1.0, 0.5}}};
  const std::string svg = (tmp.path() / "fig.svg").string();
  emit_chart(series, svg, (tmp.path() / "fig.tsv").string());

  const fs::path golden = fs::path(TF_TEST_DIR) / "golden" /
                          "fig_single_series.svg";
  if (!fs::exists(golden)) {
    // first run in a fresh checkout: write the golden file
    fs::create_directories(golden.parent_path());
    fs::copy_file(svg, golden);
  }
  CHECK(slurp(svg) == slurp(golden));
}

TEST_CASE("emit_chart argument validation") {
  TempDir tmp("chart");
  CHECK_THROWS_AS(emit_chart({}, (tmp.path() / "a.svg").string(),
                             (tmp.path() / "a.tsv").string()),
                  Error);
  std::vector<ChartSeries> ragged = {{"A", {1.0, 0.5}}, {"B", {1.0}}};
  CHECK_THROWS_AS(emit_chart(ragged, (tmp.path() / "b.svg").string(),
                             (tmp.path() / "b.tsv").string()),
                  Error);
}

TEST_CASE("report generation is deterministic") {
  TempDir tmp1("det");
  TempDir tmp2("det");
  AnalysisOutputs a = run_fixture(tmp1.path(), 7);
  AnalysisOutputs b = run_fixture(tmp2.path(), 7);
  CHECK(render_report_text(a.report) == render_report_text(b.report));
}
