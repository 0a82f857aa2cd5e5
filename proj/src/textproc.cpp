#include "topicflow/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "topicflow/error.hpp"

namespace topicflow {

namespace {

// Mirrored by data/stopwords_en.txt; keep the two in sync.
const char* kDefaultStopwords[] = {
    "a",       "about",   "above",  "after",   "again",  "against", "all",
    "am",      "an",      "and",    "any",     "are",    "aren't",  "as",
    "at",      "be",      "because", "been",   "before", "being",   "below",
    "between", "both",    "but",    "by",      "can",    "cannot",  "could",
    "did",     "do",      "does",   "doing",   "down",   "during",  "each",
    "few",     "for",     "from",   "further", "had",    "has",     "have",
    "having",  "he",      "her",    "here",    "hers",   "herself", "him",
    "himself", "his",     "how",    "i",       "if",     "in",      "into",
    "is",      "it",      "its",    "itself",  "just",   "me",      "more",
    "most",    "my",      "myself", "no",      "nor",    "not",     "now",
    "of",      "off",     "on",     "once",    "only",   "or",      "other",
    "our",     "ours",    "ourselves", "out",  "over",   "own",     "s",
    "same",    "she",     "should", "so",      "some",   "such",    "t",
    "than",    "that",    "the",    "their",   "theirs", "them",    "themselves",
    "then",    "there",   "these",  "they",    "this",   "those",   "through",
    "to",      "too",     "under",  "until",   "up",     "very",    "was",
    "we",      "were",    "what",   "when",    "where",  "which",   "while",
    "who",     "whom",    "why",    "will",    "with",   "would",   "you",
    "your",    "yours",   "yourself", "yourselves",
};

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;  // keep UTF-8 continuation bytes
}

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

TokenizerConfig default_tokenizer_config() {
  TokenizerConfig cfg;
  for (const char* w : kDefaultStopwords) cfg.stopwords.insert(w);
  return cfg;
}

TokenizerConfig tokenizer_config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::MissingFile, "stopword list: " + path);
  TokenizerConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t");
    std::string w = line.substr(b, e - b + 1);
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    cfg.stopwords.insert(w);
  }
  return cfg;
}

std::vector<std::string> tokenize(const std::string& text,
                                  const TokenizerConfig& cfg) {
  std::vector<std::string> out;
  std::string cur;
  const std::size_t n = text.size();
  auto flush = [&] {
    if (cur.empty()) return;
    if (!all_digits(cur) && !cfg.stopwords.count(cur)) out.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_word_byte(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '-' && !cur.empty() && i + 1 < n &&
               is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
      cur.push_back('-');  // intra-word hyphen
    } else {
      flush();
    }
  }
  flush();
  return out;
}

namespace {

// Forward-merge paragraphs shorter than min_tokens; a short tail merges
// into the preceding paragraph.
template <typename T>
std::vector<std::vector<T>> merge_short(std::vector<std::vector<T>> paras,
                                        int min_tokens) {
  std::vector<std::vector<T>> out;
  std::vector<T> carry;
  for (auto& p : paras) {
    carry.insert(carry.end(), p.begin(), p.end());
    if (static_cast<int>(carry.size()) >= min_tokens) {
      out.push_back(std::move(carry));
      carry.clear();
    }
  }
  if (!carry.empty()) {
    if (out.empty()) {
      out.push_back(std::move(carry));
    } else {
      out.back().insert(out.back().end(), carry.begin(), carry.end());
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> segment_paragraphs(
    const std::string& text, const TokenizerConfig& cfg, int min_tokens) {
  if (min_tokens < 1) raise(ErrorCode::InvalidConfig, "min_tokens must be >= 1");
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    raise(ErrorCode::EmptyDocument, "document text is empty");

  std::vector<std::vector<std::string>> blocks;
  std::istringstream in(text);
  std::string line, block;
  auto flush_block = [&] {
    if (block.empty()) return;
    auto toks = tokenize(block, cfg);
    if (!toks.empty()) blocks.push_back(std::move(toks));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush_block();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush_block();
  return merge_short(std::move(blocks), min_tokens);
}

long EncodedCorpus::total_tokens() const {
  long n = 0;
  for (const auto& p : paragraphs) n += p.length();
  return n;
}

EncodedCorpus build_vocabulary(const std::vector<DocParagraphs>& docs,
                               int min_count, int min_tokens) {
  if (min_count < 1) raise(ErrorCode::InvalidConfig, "min_count must be >= 1");

  std::map<std::string, long> freq;
  for (const auto& [doc_id, paras] : docs)
    for (const auto& p : paras)
      for (const auto& t : p) freq[t]++;

  EncodedCorpus enc;
  for (const auto& [tok, n] : freq) {
    if (n >= min_count) {
      enc.vocab.ids.emplace(tok, enc.vocab.size());
      enc.vocab.tokens.push_back(tok);
      enc.vocab.frequency.push_back(n);
    }
  }
  if (enc.vocab.size() == 0)
    raise(ErrorCode::EmptyVocabulary,
          "no token reaches min_count=" + std::to_string(min_count));

  int next_index = 1;
  for (const auto& [doc_id, paras] : docs) {
    std::vector<std::vector<int>> filtered;
    for (const auto& p : paras) {
      std::vector<int> ids;
      for (const auto& t : p) {
        auto it = enc.vocab.ids.find(t);
        if (it != enc.vocab.ids.end()) ids.push_back(it->second);
      }
      if (!ids.empty()) filtered.push_back(std::move(ids));
    }
    auto merged = merge_short(std::move(filtered), min_tokens);
    enc.doc_paragraph_counts.push_back(static_cast<int>(merged.size()));
    for (auto& ids : merged) {
      Paragraph para;
      para.doc_id = doc_id;
      para.index = next_index++;
      para.tokens = std::move(ids);
      enc.paragraphs.push_back(std::move(para));
    }
  }
  return enc;
}

}  // namespace topicflow
