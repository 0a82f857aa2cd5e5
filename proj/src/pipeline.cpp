#include "topicflow/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "topicflow/error.hpp"

namespace topicflow {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::MissingFile, path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TokenizerConfig tokenizer_for(const RunOptions& opts) {
  return opts.stopwords_path.empty()
             ? default_tokenizer_config()
             : tokenizer_config_from_file(opts.stopwords_path);
}

}  // namespace

LdaConfig RunOptions::lda_config() const {
  LdaConfig cfg;
  cfg.topics = topics;
  cfg.alpha = alpha;
  cfg.eta = eta;
  cfg.iterations = iterations;
  cfg.seed = seed;
  cfg.minibatch = minibatch;
  cfg.deterministic = deterministic;
  return cfg;
}

void require_valid(const Corpus& corpus, const RunOptions& opts) {
  const double threshold =
      opts.threshold >= 0 ? opts.threshold : corpus.threshold;
  ValidationReport report = validate_corpus(corpus, threshold);
  if (!report.passed())
    raise(ErrorCode::ValidationFailed,
          "scenario '" + corpus.scenario_name + "'\n" + report.to_text());
}

ScenarioData prepare_scenario(const std::string& manifest_path,
                              const RunOptions& opts) {
  ScenarioData data;
  data.corpus = load_manifest(manifest_path);
  require_valid(data.corpus, opts);

  const TokenizerConfig tok = tokenizer_for(opts);
  auto segment_doc = [&](const DocumentRecord& d) {
    return DocParagraphs{
        d.id, segment_paragraphs(read_text(d.text_path), tok,
                                 opts.min_paragraph_tokens)};
  };

  // Pooled block order: Input, Background (manifest order), Output.
  const DocumentRecord& input = data.corpus.input();
  std::vector<DocParagraphs> docs;
  docs.push_back(segment_doc(input));
  const std::size_t input_docs = 1;
  for (const DocumentRecord* d : data.corpus.background())
    docs.push_back(segment_doc(*d));
  if (opts.input_as_background) docs.push_back(segment_doc(input));
  const std::size_t background_docs = docs.size() - input_docs;
  docs.push_back(segment_doc(data.corpus.output()));

  data.encoded = build_vocabulary(docs, opts.min_count,
                                  opts.min_paragraph_tokens);

  const auto& counts = data.encoded.doc_paragraph_counts;
  std::size_t pos = 0;
  auto count_block = [&](std::size_t n_docs) {
    int total = 0;
    for (std::size_t end = pos + n_docs; pos < end; ++pos) total += counts[pos];
    return total;
  };
  data.ranges.input_count = count_block(input_docs);
  data.ranges.background_count = count_block(background_docs);
  data.ranges.output_count = count_block(1);

  data.stats = corpus_stats(data.corpus, data.encoded.paragraphs, opts.topics);
  return data;
}

AnalysisOutputs analyze_with_model(ScenarioData data, TopicModel model,
                                   const RunOptions& opts) {
  AnalysisOutputs out;
  out.tpm = topic_process(model, data.ranges, opts.epsilon);

  const Corpus& corpus = data.corpus;
  std::vector<std::vector<ReferenceKey>> all_refs;
  for (const auto& d : corpus.docs) all_refs.push_back(d.cited_refs);
  GlobalIndex index = GlobalIndex::build(all_refs, corpus.aliases);

  std::vector<CitationVector> vectors;
  for (const auto& d : corpus.docs)
    if (d.role != Role::Background || !d.cited_refs.empty())
      vectors.push_back(citation_vector(d.id, d.cited_refs, index));

  CitationVector in_vec =
      citation_vector(corpus.input().id, corpus.input().cited_refs, index);
  CitationVector out_vec =
      citation_vector(corpus.output().id, corpus.output().cited_refs, index);
  std::vector<int> overlap_io = overlap(in_vec, out_vec);

  out.report = build_report(corpus, data.stats, model, out.tpm, index, vectors,
                            overlap_io, opts.n_top_words);
  out.data = std::move(data);
  out.model = std::move(model);
  return out;
}

AnalysisOutputs analyze_scenario(const std::string& manifest_path,
                                 const RunOptions& opts) {
  ScenarioData data = prepare_scenario(manifest_path, opts);
  TopicModel model =
      train(data.encoded.paragraphs, data.encoded.vocab, opts.lda_config());
  return analyze_with_model(std::move(data), std::move(model), opts);
}

void run_analyze(const std::string& manifest_path, const RunOptions& opts,
                 const std::string& output_dir) {
  AnalysisOutputs out = analyze_scenario(manifest_path, opts);
  write_report_dir(out.report, output_dir);
}

void run_train(const std::string& manifest_path, const RunOptions& opts,
               const std::string& model_out_path) {
  ScenarioData data = prepare_scenario(manifest_path, opts);
  TopicModel model =
      train(data.encoded.paragraphs, data.encoded.vocab, opts.lda_config());
  BlockCounts blocks{data.ranges.input_count, data.ranges.background_count,
                     data.ranges.output_count};
  save_model(model, blocks, model_out_path);
}

void run_report(const std::string& manifest_path, const std::string& model_path,
                const RunOptions& opts, const std::string& output_dir) {
  Corpus corpus = load_manifest(manifest_path);
  require_valid(corpus, opts);
  auto [model, blocks] = load_model(model_path);

  ParagraphRanges ranges{blocks.input, blocks.background, blocks.output};
  if (ranges.total() != model.paragraph_count)
    raise(ErrorCode::InconsistentInputs,
          "model block layout does not cover its paragraphs");

  ScenarioData data;
  data.corpus = std::move(corpus);
  data.ranges = ranges;
  // Paragraph bookkeeping for stats comes from the saved model.
  data.stats.articles = static_cast<long>(data.corpus.docs.size());
  data.stats.paragraphs = model.paragraph_count;
  data.stats.topics = model.config.topics;
  data.stats.tokens = model.total_tokens();

  AnalysisOutputs out =
      analyze_with_model(std::move(data), std::move(model), opts);
  write_report_dir(out.report, output_dir);
}

}  // namespace topicflow
