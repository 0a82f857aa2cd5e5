#include "topicflow/biblio.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "topicflow/error.hpp"

namespace topicflow {

std::string normalize_ref_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::tuple<std::string, int, std::string> ReferenceKey::normalized() const {
  return {normalize_ref_text(first_author_surname), year,
          normalize_ref_text(title)};
}

ReferenceKey parse_reference_key(const std::string& s) {
  auto p1 = s.find('|');
  auto p2 = (p1 == std::string::npos) ? std::string::npos : s.find('|', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    raise(ErrorCode::ParseError,
          "reference must be 'Surname|Year|Title': " + s);
  ReferenceKey k;
  k.first_author_surname = s.substr(0, p1);
  std::string year_str = s.substr(p1 + 1, p2 - p1 - 1);
  try {
    k.year = std::stoi(year_str);
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "bad reference year: " + year_str);
  }
  k.title = s.substr(p2 + 1);
  if (normalize_ref_text(k.first_author_surname).empty())
    raise(ErrorCode::ParseError, "empty surname in reference: " + s);
  return k;
}

GlobalIndex GlobalIndex::build(
    const std::vector<std::vector<ReferenceKey>>& doc_refs,
    const std::vector<RefAlias>& aliases) {
  GlobalIndex idx;
  for (const auto& a : aliases) idx.aliases_[a.from.normalized()] = a.to;

  std::set<std::tuple<std::string, int, std::string>> seen;
  std::vector<ReferenceKey> keys;
  for (const auto& refs : doc_refs) {
    for (const auto& r : refs) {
      ReferenceKey c = idx.canonicalize(r);
      if (seen.insert(c.normalized()).second) keys.push_back(c);
    }
  }
  std::sort(keys.begin(), keys.end());
  idx.keys_ = std::move(keys);
  for (int i = 0; i < idx.size(); ++i)
    idx.lookup_[idx.keys_[i].normalized()] = i + 1;
  return idx;
}

ReferenceKey GlobalIndex::canonicalize(const ReferenceKey& k) const {
  auto it = aliases_.find(k.normalized());
  return it == aliases_.end() ? k : it->second;
}

int GlobalIndex::index_of(const ReferenceKey& k) const {
  auto it = lookup_.find(canonicalize(k).normalized());
  return it == lookup_.end() ? 0 : it->second;
}

std::vector<int> CitationVector::support() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i)
    if (counts[i] > 0) out.push_back(i + 1);
  return out;
}

CitationVector citation_vector(const std::string& doc_id,
                               const std::vector<ReferenceKey>& refs,
                               const GlobalIndex& idx) {
  CitationVector v;
  v.doc_id = doc_id;
  v.counts.assign(idx.size(), 0);
  for (const auto& r : refs) {
    int i = idx.index_of(r);
    if (i == 0)
      raise(ErrorCode::UnknownReference,
            "reference not in global index: " + r.first_author_surname + "|" +
                std::to_string(r.year) + "|" + r.title);
    v.counts[i - 1]++;
  }
  return v;
}

std::vector<int> overlap(const CitationVector& a, const CitationVector& b) {
  if (a.counts.size() != b.counts.size())
    raise(ErrorCode::IndexMismatch,
          "citation vectors built over different global indices");
  std::vector<int> shared;
  for (int i = 0; i < static_cast<int>(a.counts.size()); ++i)
    if (a.counts[i] > 0 && b.counts[i] > 0) shared.push_back(i + 1);
  return shared;
}

}  // namespace topicflow
