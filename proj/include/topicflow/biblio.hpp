#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace topicflow {

/// Identity of a cited reference. Equality is case-insensitive on the
/// surname and normalized title; see normalized().
struct ReferenceKey {
  std::string first_author_surname;
  int year = 0;
  std::string title;

  std::tuple<std::string, int, std::string> normalized() const;
  bool operator==(const ReferenceKey& o) const {
    return normalized() == o.normalized();
  }
  bool operator<(const ReferenceKey& o) const {
    return normalized() < o.normalized();
  }
};

// Lowercase, collapse whitespace runs, trim, drop a trailing period.
std::string normalize_ref_text(const std::string& s);

// Parses "Surname|Year|Title". Throws ParseError on malformed input.
ReferenceKey parse_reference_key(const std::string& s);

struct RefAlias {
  ReferenceKey from;
  ReferenceKey to;
};

/// Ordered union of distinct references. Indices are 1-based and dense,
/// sorted by surname, then year, then title (all ascending).
class GlobalIndex {
 public:
  GlobalIndex() = default;

  static GlobalIndex build(const std::vector<std::vector<ReferenceKey>>& doc_refs,
                           const std::vector<RefAlias>& aliases = {});

  int size() const { return static_cast<int>(keys_.size()); }
  const std::vector<ReferenceKey>& keys() const { return keys_; }

  // Resolves aliases, then looks up the 1-based index; 0 if absent.
  int index_of(const ReferenceKey& k) const;
  ReferenceKey canonicalize(const ReferenceKey& k) const;

 private:
  std::vector<ReferenceKey> keys_;
  std::map<std::tuple<std::string, int, std::string>, int> lookup_;
  std::map<std::tuple<std::string, int, std::string>, ReferenceKey> aliases_;
};

struct CitationVector {
  std::string doc_id;
  std::vector<long> counts;  // length R, index i-1 holds frequency of ref i

  std::vector<int> support() const;  // 1-based indices with count > 0
};

CitationVector citation_vector(const std::string& doc_id,
                               const std::vector<ReferenceKey>& refs,
                               const GlobalIndex& idx);

// Shared 1-based reference indices cited by both vectors.
std::vector<int> overlap(const CitationVector& a, const CitationVector& b);

}  // namespace topicflow
