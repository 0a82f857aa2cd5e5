#include "topicflow/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "topicflow/error.hpp"

namespace fs = std::filesystem;

namespace topicflow {

namespace {

std::string fmt(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) raise(ErrorCode::IoError, "write failure: " + path);
}

std::string gamma_cell(const GammaVector& g, int k) {
  return g.defined[k] ? fmt(g.values[k]) : "undef";
}

}  // namespace

AnalysisReport build_report(const Corpus& corpus, const CorpusStats& stats,
                            const TopicModel& model,
                            const TopicProcessResult& tpm_result,
                            const GlobalIndex& index,
                            const std::vector<CitationVector>& vectors,
                            const std::vector<int>& overlap_io,
                            int n_top_words) {
  if (model.topics() != tpm_result.topics())
    raise(ErrorCode::InconsistentInputs,
          "model has " + std::to_string(model.topics()) +
              " topics, process result has " +
              std::to_string(tpm_result.topics()));
  if (stats.topics != model.topics())
    raise(ErrorCode::InconsistentInputs,
          "corpus stats topic count disagrees with model");

  AnalysisReport rep;
  rep.scenario = corpus.scenario_name;
  rep.topic_count = model.topics();
  rep.stats = stats;
  rep.tpm = tpm_result;
  rep.global_index = index;
  rep.citation_vectors = vectors;
  rep.overlap_input_output = overlap_io;

  for (int k = 0; k < model.topics(); ++k)
    rep.top_words.push_back(top_words(model, k, n_top_words));

  auto correlation = [&](const char* pair, const std::vector<double>& x,
                         const std::vector<double>& y) {
    CorrelationRow row;
    row.pair = pair;
    try {
      row.r = pearson(x, y);
    } catch (const Error& e) {
      row.note = e.what();
    }
    rep.correlations.push_back(std::move(row));
  };
  correlation("I_O", tpm_result.input_weights, tpm_result.output_weights);
  correlation("B_O", tpm_result.background_weights, tpm_result.output_weights);

  auto series = [&](const char* label, const std::vector<double>& w) {
    try {
      rep.chart.push_back({label, normalize_series(w)});
    } catch (const Error& e) {
      rep.chart_notes.push_back(std::string(label) + " series omitted: " +
                                e.what());
    }
  };
  series("Input", tpm_result.input_weights);
  series("Background", tpm_result.background_weights);
  series("Output", tpm_result.output_weights);

  if (model.topics() >= 2)
    rep.phases_input_output =
        phase_classify(tpm_result.input_weights, tpm_result.output_weights);
  return rep;
}

std::string render_report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "scenario: " << rep.scenario << "\n";
  os << "[corpus_stats] articles=" << rep.stats.articles
     << " paragraphs=" << rep.stats.paragraphs << " topics=" << rep.stats.topics
     << " tokens=" << rep.stats.tokens << "\n\n";

  os << "correlations\n";
  for (const auto& row : rep.correlations) {
    os << "[pearson] r(" << row.pair[0] << "," << row.pair[2] << ") = ";
    if (row.r)
      os << fmt(*row.r, 4);
    else
      os << "undef (" << row.note << ")";
    os << "\n";
  }
  os << "\n";

  os << "topic process model  (O_k = B_k + gamma_k * B_k * I_k)\n";
  os << "topic\tI\tB\tO\tgamma\n";
  for (int k = 0; k < rep.topic_count; ++k) {
    os << "[component_weights/solve_gamma] " << (k + 1) << "\t"
       << fmt(rep.tpm.input_weights[k], 4) << "\t"
       << fmt(rep.tpm.background_weights[k], 4) << "\t"
       << fmt(rep.tpm.output_weights[k], 4) << "\t" << gamma_cell(rep.tpm.gamma, k)
       << "\n";
  }
  os << "\n";

  if (!rep.phases_input_output.empty()) {
    os << "[phase_classify] input vs output:";
    for (Phase p : rep.phases_input_output) os << " " << to_string(p);
    os << "\n\n";
  }

  os << "citation overlap\n";
  os << "[overlap] input/output shared references: "
     << rep.overlap_input_output.size();
  if (!rep.overlap_input_output.empty()) {
    os << " (indices";
    for (int i : rep.overlap_input_output) os << " " << i;
    os << ")";
  }
  os << "\n";
  os << "[build_global_index] distinct references: " << rep.global_index.size()
     << "\n\n";

  os << "top words per topic\n";
  for (int k = 0; k < rep.topic_count; ++k) {
    os << "[top_words] topic " << (k + 1) << ":";
    for (const auto& [word, weight] : rep.top_words[k]) os << " " << word;
    os << "\n";
  }
  for (const auto& note : rep.chart_notes) os << "note: " << note << "\n";
  return os.str();
}

void emit_chart(const std::vector<ChartSeries>& series,
                const std::string& svg_path, const std::string& tsv_path) {
  if (series.empty() || series.size() > 3)
    raise(ErrorCode::InvalidConfig, "emit_chart expects 1-3 series");
  const int K = static_cast<int>(series.front().values.size());
  if (K == 0) raise(ErrorCode::InvalidConfig, "series are empty");
  for (const auto& s : series)
    if (static_cast<int>(s.values.size()) != K)
      raise(ErrorCode::LengthMismatch, "series lengths differ");

  {
    std::ostringstream os;
    os << "topic";
    for (const auto& s : series) os << "\t" << s.label;
    os << "\n";
    for (int k = 0; k < K; ++k) {
      os << (k + 1);
      for (const auto& s : series) os << "\t" << fmt(s.values[k]);
      os << "\n";
    }
    write_file(tsv_path, os.str());
  }

  const char* colors[] = {"#4c72b0", "#dd8452", "#55a868"};
  const double width = 640, height = 360;
  const double ml = 48, mr = 16, mt = 40, mb = 36;
  const double plot_w = width - ml - mr, plot_h = height - mt - mb;
  const double group_w = plot_w / K;
  const double bar_w = group_w * 0.8 / static_cast<double>(series.size());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  // axes and y ticks at 0 and 1
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
     << "\" y2=\"" << (mt + plot_h) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << (mt + plot_h) << "\" x2=\""
     << (ml + plot_w) << "\" y2=\"" << (mt + plot_h)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (ml - 8) << "\" y=\"" << (mt + plot_h + 4)
     << "\" font-size=\"12\" text-anchor=\"end\">0</text>\n";
  os << "<text x=\"" << (ml - 8) << "\" y=\"" << (mt + 4)
     << "\" font-size=\"12\" text-anchor=\"end\">1</text>\n";

  for (int k = 0; k < K; ++k) {
    const double gx = ml + k * group_w + group_w * 0.1;
    for (std::size_t s = 0; s < series.size(); ++s) {
      const double v = series[s].values[k];
      const double h = v * plot_h;
      os << "<rect x=\"" << fmt(gx + s * bar_w, 2) << "\" y=\""
         << fmt(mt + plot_h - h, 2) << "\" width=\"" << fmt(bar_w, 2)
         << "\" height=\"" << fmt(h, 2) << "\" fill=\"" << colors[s]
         << "\"/>\n";
    }
    os << "<text x=\"" << fmt(ml + (k + 0.5) * group_w, 2) << "\" y=\""
       << (mt + plot_h + 18)
       << "\" font-size=\"12\" text-anchor=\"middle\">T" << (k + 1)
       << "</text>\n";
  }
  // legend, one entry per series, laid out left to right above the plot
  double lx = ml;
  for (std::size_t s = 0; s < series.size(); ++s) {
    os << "<rect x=\"" << fmt(lx, 2) << "\" y=\"" << (mt - 26)
       << "\" width=\"12\" height=\"12\" fill=\"" << colors[s] << "\"/>\n";
    os << "<text x=\"" << fmt(lx + 16, 2) << "\" y=\"" << (mt - 16)
       << "\" font-size=\"12\">" << series[s].label << "</text>\n";
    lx += 16 + 8.0 * series[s].label.size() + 24;
  }
  os << "</svg>\n";
  write_file(svg_path, os.str());
}

void write_report_dir(const AnalysisReport& rep, const std::string& outdir) {
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) raise(ErrorCode::IoError, "cannot create " + outdir);
  const fs::path dir(outdir);

  write_file((dir / "report.txt").string(), render_report_text(rep));

  {
    std::ostringstream os;
    os << "pair\tr\n";
    for (const auto& row : rep.correlations)
      os << row.pair << "\t" << (row.r ? fmt(*row.r) : "undef") << "\n";
    write_file((dir / "correlations.tsv").string(), os.str());
  }
  {
    std::ostringstream os;
    os << "topic\tI\tB\tO\tgamma\n";
    for (int k = 0; k < rep.topic_count; ++k)
      os << (k + 1) << "\t" << fmt(rep.tpm.input_weights[k]) << "\t"
         << fmt(rep.tpm.background_weights[k]) << "\t"
         << fmt(rep.tpm.output_weights[k]) << "\t" << gamma_cell(rep.tpm.gamma, k)
         << "\n";
    write_file((dir / "gamma.tsv").string(), os.str());
  }
  {
    std::ostringstream os;
    os << "topic\trank\tword\tweight\n";
    for (int k = 0; k < rep.topic_count; ++k)
      for (std::size_t i = 0; i < rep.top_words[k].size(); ++i)
        os << (k + 1) << "\t" << (i + 1) << "\t" << rep.top_words[k][i].first
           << "\t" << fmt(rep.top_words[k][i].second) << "\n";
    write_file((dir / "topics_top_words.tsv").string(), os.str());
  }
  {
    std::ostringstream os;
    os << "doc_id";
    for (int i = 1; i <= rep.global_index.size(); ++i) os << "\t" << i;
    os << "\n";
    for (const auto& v : rep.citation_vectors) {
      os << v.doc_id;
      for (long c : v.counts) os << "\t" << c;
      os << "\n";
    }
    write_file((dir / "citation_vectors.tsv").string(), os.str());
  }
  emit_chart(rep.chart, (dir / "fig_topic_process.svg").string(),
             (dir / "fig_topic_process.svgdata.tsv").string());
}

}  // namespace topicflow
