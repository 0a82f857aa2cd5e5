// Command-line front end for the topicflow shared library. Talks to the
// core exclusively through the C API.
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "topicflow/topicflow_c.h"

namespace {

struct Cli {
  std::string manifest;
  std::string output_dir = "out";
  std::string model_path;
  std::string stopwords;
  tf_options opts{};
  double threshold = -1;
  bool deterministic = false;
  bool input_as_background = false;
};

void add_common_options(CLI::App* cmd, Cli& cli) {
  cmd->add_option("-m,--manifest", cli.manifest, "Scenario manifest path")
      ->required();
  cmd->add_option("-k,--topics", cli.opts.topics, "Number of topics");
  cmd->add_option("--alpha", cli.opts.alpha, "Dirichlet prior on paragraph-topic");
  cmd->add_option("--eta", cli.opts.eta, "Dirichlet prior on topic-word");
  cmd->add_option("--iterations", cli.opts.iterations, "Training iterations");
  cmd->add_option("--seed", cli.opts.seed, "RNG seed");
  cmd->add_option("--min-paragraph-tokens", cli.opts.min_paragraph_tokens,
                  "Short-paragraph merge threshold");
  cmd->add_option("--min-count", cli.opts.min_count,
                  "Minimum corpus frequency for vocabulary words");
  cmd->add_option("--stopwords", cli.stopwords, "Stopword list path");
  cmd->add_option("--epsilon", cli.opts.epsilon,
                  "Definedness threshold for gamma");
  cmd->add_option("--minibatch", cli.opts.minibatch,
                  "Minibatch size (0 = full batch)");
  cmd->add_option("--threshold", cli.threshold,
                  "Citation availability threshold override");
  cmd->add_option("--top-words", cli.opts.top_words, "Top words per topic");
  cmd->add_flag("--deterministic", cli.deterministic,
                "Force the sequential reproducible training path");
  cmd->add_flag("--input-as-background", cli.input_as_background,
                "Also pool the input paper's paragraphs as background");
}

void finalize_options(Cli& cli) {
  cli.opts.deterministic = cli.deterministic ? 1 : 0;
  cli.opts.input_as_background = cli.input_as_background ? 1 : 0;
  cli.opts.threshold = cli.threshold;
  if (cli.stopwords.empty()) {
    if (const char* env = std::getenv("TOPICFLOW_STOPWORDS"))
      cli.stopwords = env;
  }
  cli.opts.stopwords_path = cli.stopwords.empty() ? nullptr : cli.stopwords.c_str();
}

int from_status(tf_status s) {
  if (s == TF_OK) return 0;
  std::fprintf(stderr, "topicflow: %s: %s\n", tf_status_name(s),
               tf_last_error());
  return s == TF_VALIDATION_FAILED ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic process analysis of academic commentary scenarios"};
  app.require_subcommand(1);

  Cli cli;
  tf_options_defaults(&cli.opts);

  CLI::App* validate =
      app.add_subcommand("validate", "Check the manifest's structural and "
                                     "citation-availability rules");
  CLI::App* stats =
      app.add_subcommand("stats", "Print scenario demographics after "
                                  "segmentation");
  CLI::App* train = app.add_subcommand("train", "Train and save a topic model");
  CLI::App* analyze =
      app.add_subcommand("analyze", "Run the full pipeline and write the "
                                    "report directory");
  CLI::App* report = app.add_subcommand(
      "report", "Re-emit the report directory from a saved model");

  for (CLI::App* cmd : {validate, stats, train, analyze, report})
    add_common_options(cmd, cli);
  train->add_option("--model", cli.model_path, "Model output path")->required();
  report->add_option("--model", cli.model_path, "Saved model path")->required();
  analyze->add_option("-o,--out", cli.output_dir, "Report output directory");
  report->add_option("-o,--out", cli.output_dir, "Report output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  finalize_options(cli);

  if (validate->parsed()) {
    tf_corpus* corpus = nullptr;
    tf_status s = tf_corpus_load(cli.manifest.c_str(), &corpus);
    if (s != TF_OK) return from_status(s);
    int32_t passed = 0;
    char* text = nullptr;
    s = tf_corpus_validate(corpus, cli.opts.threshold, &passed, &text);
    tf_corpus_free(corpus);
    if (s != TF_OK) return from_status(s);
    std::fputs(text, stdout);
    tf_string_free(text);
    return passed ? 0 : 1;
  }
  if (stats->parsed()) {
    char* text = nullptr;
    tf_status s = tf_corpus_stats_text(cli.manifest.c_str(), &cli.opts, &text);
    if (s != TF_OK) return from_status(s);
    std::fputs(text, stdout);
    tf_string_free(text);
    return 0;
  }
  if (train->parsed())
    return from_status(tf_train_model(cli.manifest.c_str(), &cli.opts,
                                      cli.model_path.c_str()));
  if (analyze->parsed())
    return from_status(
        tf_analyze(cli.manifest.c_str(), &cli.opts, cli.output_dir.c_str()));
  if (report->parsed())
    return from_status(tf_report_from_model(cli.manifest.c_str(),
                                            cli.model_path.c_str(), &cli.opts,
                                            cli.output_dir.c_str()));
  return 2;
}
