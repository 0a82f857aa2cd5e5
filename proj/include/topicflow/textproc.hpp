#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace topicflow {

struct TokenizerConfig {
  std::unordered_set<std::string> stopwords;
};

// Built-in English stopword list (mirrored by data/stopwords_en.txt).
TokenizerConfig default_tokenizer_config();
// One stopword per line, '#' comments allowed.
TokenizerConfig tokenizer_config_from_file(const std::string& path);

// Lowercases, splits on whitespace and punctuation (intra-word hyphens
// are kept), drops stopwords and pure-digit tokens.
std::vector<std::string> tokenize(const std::string& text,
                                  const TokenizerConfig& cfg);

// Splits on blank lines and tokenizes each block, then merges any block
// shorter than min_tokens into the following one (a short trailing block
// merges backward). Throws EmptyDocument only for empty/whitespace text;
// a text whose tokens all filter out yields an empty list.
std::vector<std::vector<std::string>> segment_paragraphs(
    const std::string& text, const TokenizerConfig& cfg, int min_tokens);

struct Vocabulary {
  std::vector<std::string> tokens;              // id -> token, lexicographic
  std::unordered_map<std::string, int> ids;     // token -> id
  std::vector<long> frequency;                  // id -> corpus frequency

  int size() const { return static_cast<int>(tokens.size()); }
};

/// The LDA "document" unit: a token-id sequence with provenance.
struct Paragraph {
  std::string doc_id;
  int index = 0;  // global 1-based position in the pooled collection
  std::vector<int> tokens;

  int length() const { return static_cast<int>(tokens.size()); }
};

struct EncodedCorpus {
  Vocabulary vocab;
  std::vector<Paragraph> paragraphs;
  std::vector<int> doc_paragraph_counts;  // parallel to the input doc list

  long total_tokens() const;
};

using DocParagraphs =
    std::pair<std::string, std::vector<std::vector<std::string>>>;

// Builds the vocabulary over all documents (tokens occurring fewer than
// min_count times are dropped), re-merges paragraphs thinned by the
// filter, and encodes them with global 1-based indices in input order.
EncodedCorpus build_vocabulary(const std::vector<DocParagraphs>& docs,
                               int min_count, int min_tokens);

}  // namespace topicflow
