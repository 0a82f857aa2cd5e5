#include <doctest.h>

#include <algorithm>
#include <random>

#include "topicflow/biblio.hpp"
#include "topicflow/error.hpp"

using namespace topicflow;

namespace {

ReferenceKey ref(const std::string& surname, int year,
                 const std::string& title = "t") {
  return {surname, year, title};
}

}  // namespace

TEST_CASE("global index orders by surname then year then title") {
  GlobalIndex idx = GlobalIndex::build(
      {{ref("G", 2005), ref("B", 2008), ref("W", 2008)}});
  REQUIRE(idx.size() == 3);
  CHECK(idx.index_of(ref("B", 2008)) == 1);
  CHECK(idx.index_of(ref("G", 2005)) == 2);
  CHECK(idx.index_of(ref("W", 2008)) == 3);
}

TEST_CASE("same key cited by two docs yields one index") {
  GlobalIndex idx = GlobalIndex::build(
      {{ref("Smith", 2001, "A study")}, {ref("smith", 2001, "a study")}});
  CHECK(idx.size() == 1);
}

TEST_CASE("same surname and year breaks ties on title") {
  GlobalIndex idx = GlobalIndex::build(
      {{ref("Smith", 2001, "Zeta"), ref("Smith", 2001, "Alpha")}});
  CHECK(idx.index_of(ref("Smith", 2001, "Alpha")) == 1);
  CHECK(idx.index_of(ref("Smith", 2001, "Zeta")) == 2);
}

TEST_CASE("index build is invariant under document permutation") {
  std::vector<ReferenceKey> pool;
  for (int i = 0; i < 12; ++i)
    pool.push_back(ref("A" + std::to_string(i % 5), 1990 + i));
  std::vector<std::vector<ReferenceKey>> docs = {
      {pool[0], pool[3], pool[7]}, {pool[1], pool[3]}, {pool[9], pool[11]}};
  GlobalIndex a = GlobalIndex::build(docs);
  std::reverse(docs.begin(), docs.end());
  GlobalIndex b = GlobalIndex::build(docs);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i)
    CHECK(a.keys()[i].normalized() == b.keys()[i].normalized());
}

TEST_CASE("alias maps two versions of a manuscript to one key") {
  RefAlias alias{ref("Turner", 2007, "Draft version"),
                 ref("Turner", 2008, "Final version")};
  GlobalIndex idx = GlobalIndex::build(
      {{ref("Turner", 2007, "Draft version")},
       {ref("Turner", 2008, "Final version")}},
      {alias});
  CHECK(idx.size() == 1);
  CHECK(idx.index_of(ref("Turner", 2007, "Draft version")) ==
        idx.index_of(ref("Turner", 2008, "Final version")));
}

TEST_CASE("citation vector counts multiplicity") {
  GlobalIndex idx = GlobalIndex::build(
      {{ref("A", 2000), ref("B", 2001), ref("C", 2002)}});
  CitationVector v = citation_vector(
      "doc", {ref("C", 2002), ref("C", 2002)}, idx);
  CHECK(v.counts == std::vector<long>{0, 0, 2});

  CitationVector empty = citation_vector("none", {}, idx);
  CHECK(empty.counts == std::vector<long>{0, 0, 0});

  CHECK_THROWS_AS(citation_vector("bad", {ref("Z", 1900)}, idx), Error);
}

TEST_CASE("citation vector matches an independent tally") {
  std::vector<ReferenceKey> refs;
  std::mt19937 rng(7);
  std::vector<ReferenceKey> universe;
  for (int i = 0; i < 8; ++i) universe.push_back(ref("U", 1980 + i));
  std::vector<long> tally(8, 0);
  for (int n = 0; n < 40; ++n) {
    int i = static_cast<int>(rng() % 8);
    refs.push_back(universe[i]);
    tally[i]++;
  }
  GlobalIndex idx = GlobalIndex::build({universe});
  CitationVector v = citation_vector("doc", refs, idx);
  // universe is already in index order (same surname, ascending years)
  CHECK(v.counts == tally);
}

TEST_CASE("overlap is symmetric, idempotent, and bounded") {
  GlobalIndex idx = GlobalIndex::build(
      {{ref("A", 1), ref("B", 2), ref("C", 3), ref("D", 4)}});
  CitationVector a = citation_vector("a", {ref("A", 1), ref("C", 3)}, idx);
  CitationVector b = citation_vector("b", {ref("C", 3), ref("D", 4)}, idx);

  CHECK(overlap(a, b) == std::vector<int>{3});
  CHECK(overlap(a, b) == overlap(b, a));
  CHECK(overlap(a, a) == a.support());
  CHECK(overlap(a, b).size() <=
        std::min(a.support().size(), b.support().size()));

  CitationVector disjoint = citation_vector("c", {ref("B", 2)}, idx);
  CHECK(overlap(a, disjoint).empty());

  CitationVector other;
  other.counts.assign(2, 0);
  CHECK_THROWS_AS(overlap(a, other), Error);
}

TEST_CASE("reference key parsing") {
  ReferenceKey k = parse_reference_key("Wood|2008|Problems with a concept");
  CHECK(k.first_author_surname == "Wood");
  CHECK(k.year == 2008);
  CHECK(k.title == "Problems with a concept");
  CHECK_THROWS_AS(parse_reference_key("no pipes here"), Error);
  CHECK_THROWS_AS(parse_reference_key("Wood|year|title"), Error);
  CHECK_THROWS_AS(parse_reference_key("|2008|title"), Error);
}
