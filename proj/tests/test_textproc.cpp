#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "topicflow/error.hpp"
#include "topicflow/textproc.hpp"

using namespace topicflow;

namespace {

std::string block_of(const std::string& word, int n) {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) os << (i ? " " : "") << word;
  return os.str();
}

}  // namespace

TEST_CASE("tokenize strips punctuation, case, stopwords, digits") {
  TokenizerConfig cfg = default_tokenizer_config();
  CHECK(tokenize("Video game addiction?", cfg) ==
        std::vector<std::string>{"video", "game", "addiction"});
  CHECK(tokenize("problem-gambling", cfg) ==
        std::vector<std::string>{"problem-gambling"});
  CHECK(tokenize("", cfg).empty());
  CHECK(tokenize("the of and", cfg).empty());
  CHECK(tokenize("in 2008, 61 references", cfg) ==
        std::vector<std::string>{"references"});
  // hyphen is a separator unless it sits between word characters
  CHECK(tokenize("- leading trailing- mid-dle", cfg) ==
        std::vector<std::string>{"leading", "trailing", "mid-dle"});
}

TEST_CASE("stopword file overrides the built-in list") {
  TokenizerConfig cfg;
  cfg.stopwords = {"video"};
  CHECK(tokenize("video game", cfg) == std::vector<std::string>{"game"});
}

TEST_CASE("segmentation keeps long paragraphs as-is") {
  TokenizerConfig cfg;
  std::string text =
      block_of("alpha", 25) + "\n\n" + block_of("beta", 25) + "\n\n" +
      block_of("gama", 25);
  auto paras = segment_paragraphs(text, cfg, 20);
  REQUIRE(paras.size() == 3);
  CHECK(paras[0][0] == "alpha");
  CHECK(paras[1][0] == "beta");
  CHECK(paras[2][0] == "gama");
}

TEST_CASE("short paragraph merges into the following one") {
  TokenizerConfig cfg;
  std::string text =
      block_of("alpha", 30) + "\n\n" + block_of("beta", 5) + "\n\n" +
      block_of("gama", 30);
  auto paras = segment_paragraphs(text, cfg, 20);
  REQUIRE(paras.size() == 2);
  CHECK(paras[0].size() == 30);
  CHECK(paras[1].size() == 35);
  CHECK(paras[1][0] == "beta");  // merged block leads
}

TEST_CASE("short trailing paragraph merges backward") {
  TokenizerConfig cfg;
  std::string text = block_of("alpha", 30) + "\n\n" + block_of("beta", 5);
  auto paras = segment_paragraphs(text, cfg, 20);
  REQUIRE(paras.size() == 1);
  CHECK(paras[0].size() == 35);
}

TEST_CASE("empty or whitespace text raises EmptyDocument") {
  TokenizerConfig cfg;
  CHECK_THROWS_AS(segment_paragraphs("", cfg, 1), Error);
  CHECK_THROWS_AS(segment_paragraphs(" \n \n", cfg, 1), Error);
}

TEST_CASE("segmentation conserves and preserves the token stream") {
  TokenizerConfig cfg;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::ostringstream text;
    std::vector<std::string> stream;
    const int blocks = 1 + static_cast<int>(rng() % 8);
    for (int b = 0; b < blocks; ++b) {
      const int len = 1 + static_cast<int>(rng() % 40);
      for (int i = 0; i < len; ++i) {
        std::string w = "w" + std::to_string(rng() % 50) + "x";
        stream.push_back(w);
        text << w << " ";
      }
      text << "\n\n";
    }
    auto paras = segment_paragraphs(text.str(), cfg, 15);
    std::vector<std::string> flattened;
    for (const auto& p : paras)
      flattened.insert(flattened.end(), p.begin(), p.end());
    CHECK(flattened == stream);
    for (std::size_t i = 0; i + 1 < paras.size(); ++i)
      CHECK(paras[i].size() >= 15);
  }
}

TEST_CASE("vocabulary counts and min_count filtering") {
  std::vector<DocParagraphs> docs = {{"d", {{"a", "b", "a"}}}};
  EncodedCorpus enc = build_vocabulary(docs, 1, 1);
  CHECK(enc.vocab.size() == 2);
  CHECK(enc.total_tokens() == 3);

  EncodedCorpus filtered = build_vocabulary(docs, 2, 1);
  CHECK(filtered.vocab.size() == 1);
  REQUIRE(filtered.paragraphs.size() == 1);
  CHECK(filtered.paragraphs[0].tokens ==
        std::vector<int>{filtered.vocab.ids.at("a"), filtered.vocab.ids.at("a")});
}

TEST_CASE("vocabulary ids are dense and bijective") {
  std::vector<DocParagraphs> docs = {
      {"d1", {{"zeta", "beta"}, {"beta", "kappa"}}},
      {"d2", {{"beta", "zeta", "iota"}}}};
  EncodedCorpus enc = build_vocabulary(docs, 1, 1);
  REQUIRE(enc.vocab.size() == 4);
  for (int i = 0; i < enc.vocab.size(); ++i)
    CHECK(enc.vocab.ids.at(enc.vocab.tokens[i]) == i);
}

TEST_CASE("fully filtered corpus raises EmptyVocabulary") {
  std::vector<DocParagraphs> docs = {{"d", {{"a", "b"}}}};
  CHECK_THROWS_AS(build_vocabulary(docs, 3, 1), Error);
  CHECK_THROWS_AS(build_vocabulary({}, 1, 1), Error);
}

TEST_CASE("paragraphs thinned by filtering re-merge before encoding") {
  // "rare" occurs once and is dropped; its paragraph falls under the
  // merge threshold and joins the next one.
  std::vector<DocParagraphs> docs = {
      {"d", {{"common", "common", "rare"}, {"common", "common", "common"}}}};
  EncodedCorpus enc = build_vocabulary(docs, 2, 3);
  REQUIRE(enc.paragraphs.size() == 1);
  CHECK(enc.paragraphs[0].length() == 5);
  CHECK(enc.paragraphs[0].index == 1);
}

TEST_CASE("global paragraph indices are contiguous across documents") {
  std::vector<DocParagraphs> docs = {
      {"in", {{"x", "x"}, {"y", "y"}}},
      {"bg", {{"x", "y"}}},
      {"out", {{"y", "x"}}}};
  EncodedCorpus enc = build_vocabulary(docs, 1, 2);
  REQUIRE(enc.paragraphs.size() == 4);
  for (std::size_t i = 0; i < enc.paragraphs.size(); ++i)
    CHECK(enc.paragraphs[i].index == static_cast<int>(i + 1));
  CHECK(enc.doc_paragraph_counts == std::vector<int>{2, 1, 1});
  CHECK(enc.paragraphs[0].doc_id == "in");
  CHECK(enc.paragraphs[2].doc_id == "bg");
  CHECK(enc.paragraphs[3].doc_id == "out");
}
