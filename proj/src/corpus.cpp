#include "topicflow/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "topicflow/error.hpp"

namespace fs = std::filesystem;

namespace topicflow {

const char* to_string(Role r) {
  switch (r) {
    case Role::Input: return "Input";
    case Role::Output: return "Output";
    case Role::Background: return "Background";
  }
  return "?";
}

const DocumentRecord* Corpus::find_role(Role r) const {
  for (const auto& d : docs)
    if (d.role == r) return &d;
  return nullptr;
}

const DocumentRecord& Corpus::input() const {
  const auto* d = find_role(Role::Input);
  if (!d) raise(ErrorCode::MissingRole, "corpus has no Input document");
  return *d;
}

const DocumentRecord& Corpus::output() const {
  const auto* d = find_role(Role::Output);
  if (!d) raise(ErrorCode::MissingRole, "corpus has no Output document");
  return *d;
}

std::vector<const DocumentRecord*> Corpus::background() const {
  std::vector<const DocumentRecord*> out;
  for (const auto& d : docs)
    if (d.role == Role::Background) out.push_back(&d);
  return out;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  if (passed()) {
    os << "validation: pass\n";
  } else {
    os << "validation: fail (" << issues.size() << " rule"
       << (issues.size() == 1 ? "" : "s") << " violated)\n";
    for (const auto& i : issues) os << "  " << i.rule << ": " << i.message << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Role parse_role(const std::string& s, int line_no) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (l == "input") return Role::Input;
  if (l == "output") return Role::Output;
  if (l == "background") return Role::Background;
  raise(ErrorCode::ParseError,
        "line " + std::to_string(line_no) + ": unknown role '" + s + "'");
}

int parse_int(const std::string& s, const std::string& key, int line_no) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                     ": bad integer for " + key + ": " + s);
  }
}

double parse_double(const std::string& s, const std::string& key, int line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                     ": bad number for " + key + ": " + s);
  }
}

}  // namespace

Corpus load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::MissingFile, "manifest: " + path);
  const fs::path base = fs::path(path).parent_path();

  Corpus corpus;
  bool has_total = false;
  enum class Section { Top, Document, Alias } section = Section::Top;
  DocumentRecord doc;
  RefAlias alias;
  bool alias_has_from = false, alias_has_to = false;
  int line_no = 0;

  auto close_document = [&] {
    if (section != Section::Document) return;
    if (doc.id.empty())
      raise(ErrorCode::ParseError, "document block without id");
    if (doc.text_path.empty())
      raise(ErrorCode::ParseError, "document '" + doc.id + "' has no text_path");
    corpus.docs.push_back(std::move(doc));
    doc = DocumentRecord{};
  };
  auto close_alias = [&] {
    if (section != Section::Alias) return;
    if (!alias_has_from || !alias_has_to)
      raise(ErrorCode::ParseError, "alias block needs both from and to");
    corpus.aliases.push_back(std::move(alias));
    alias = RefAlias{};
    alias_has_from = alias_has_to = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[document]") {
      close_document();
      close_alias();
      section = Section::Document;
      continue;
    }
    if (t == "[alias]") {
      close_document();
      close_alias();
      section = Section::Alias;
      continue;
    }
    if (t.front() == '[')
      raise(ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": unknown section " + t);
    auto eq = t.find('=');
    if (eq == std::string::npos)
      raise(ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));

    switch (section) {
      case Section::Top:
        if (key == "scenario") corpus.scenario_name = value;
        else if (key == "threshold")
          corpus.threshold = parse_double(value, key, line_no);
        else if (key == "total_citations") {
          corpus.total_citations = parse_int(value, key, line_no);
          has_total = true;
        } else
          raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": unknown key '" + key + "'");
        break;
      case Section::Document:
        if (key == "id") doc.id = value;
        else if (key == "role") doc.role = parse_role(value, line_no);
        else if (key == "author_key") doc.author_key = value;
        else if (key == "year") doc.year = parse_int(value, key, line_no);
        else if (key == "title") doc.title = value;
        else if (key == "text_path") doc.text_path = value;
        else if (key == "ref") {
          try {
            doc.cited_refs.push_back(parse_reference_key(value));
          } catch (const Error& e) {
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
          }
        } else
          raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": unknown document key '" + key + "'");
        break;
      case Section::Alias:
        if (key == "from") {
          alias.from = parse_reference_key(value);
          alias_has_from = true;
        } else if (key == "to") {
          alias.to = parse_reference_key(value);
          alias_has_to = true;
        } else
          raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": unknown alias key '" + key + "'");
        break;
    }
  }
  close_document();
  close_alias();

  if (corpus.docs.empty())
    raise(ErrorCode::ParseError, "manifest defines no documents: " + path);

  std::set<std::string> ids;
  int inputs = 0, outputs = 0, backgrounds = 0;
  for (auto& d : corpus.docs) {
    if (!ids.insert(d.id).second)
      raise(ErrorCode::DuplicateId, "document id '" + d.id + "'");
    fs::path p = fs::path(d.text_path);
    if (p.is_relative()) p = base / p;
    d.text_path = p.string();
    if (!fs::exists(p))
      raise(ErrorCode::MissingFile,
            "text_path for '" + d.id + "': " + d.text_path);
    switch (d.role) {
      case Role::Input: ++inputs; break;
      case Role::Output: ++outputs; break;
      case Role::Background: ++backgrounds; break;
    }
  }
  if (inputs != 1)
    raise(ErrorCode::MissingRole,
          "expected exactly one Input document, found " + std::to_string(inputs));
  if (outputs != 1)
    raise(ErrorCode::MissingRole, "expected exactly one Output document, found " +
                                      std::to_string(outputs));

  corpus.available_citations = backgrounds;
  if (!has_total)
    corpus.total_citations =
        static_cast<int>(corpus.output().cited_refs.size());
  return corpus;
}

ValidationReport validate_corpus(const Corpus& c, double threshold) {
  ValidationReport report;
  auto add = [&](const std::string& rule, const std::string& msg) {
    report.issues.push_back({rule, msg});
  };

  int inputs = 0, outputs = 0, backgrounds = 0;
  std::set<std::string> ids;
  for (const auto& d : c.docs) {
    switch (d.role) {
      case Role::Input: ++inputs; break;
      case Role::Output: ++outputs; break;
      case Role::Background: ++backgrounds; break;
    }
    if (!ids.insert(d.id).second)
      add("DuplicateId", "document id '" + d.id + "' appears more than once");
    std::error_code ec;
    auto size = fs::file_size(d.text_path, ec);
    if (ec)
      add("MissingText", "'" + d.id + "' text unreadable: " + d.text_path);
    else if (size == 0)
      add("EmptyText", "'" + d.id + "' text file is empty: " + d.text_path);
  }
  if (inputs != 1)
    add("MissingInput", "expected exactly one Input document, found " +
                            std::to_string(inputs));
  if (outputs != 1)
    add("MissingOutput", "expected exactly one Output document, found " +
                             std::to_string(outputs));
  if (backgrounds == 0)
    add("MissingBackground", "no Background documents available");
  if (c.available_citations > c.total_citations)
    add("AvailabilityExceedsTotal",
        std::to_string(c.available_citations) + " available > " +
            std::to_string(c.total_citations) + " total");
  if (c.total_citations <= 0) {
    add("NoTrackedCitations", "total citation count is zero");
  } else {
    double ratio = static_cast<double>(c.available_citations) /
                   static_cast<double>(c.total_citations);
    if (!(ratio > threshold)) {
      std::ostringstream os;
      os << c.available_citations << "/" << c.total_citations << " = " << ratio
         << " not > " << threshold;
      add("AvailabilityBelowThreshold", os.str());
    }
  }
  return report;
}

CorpusStats corpus_stats(const Corpus& c,
                         const std::vector<Paragraph>& segmented, int topics) {
  std::set<std::string> known;
  for (const auto& d : c.docs) known.insert(d.id);
  CorpusStats stats;
  stats.articles = static_cast<long>(c.docs.size());
  stats.paragraphs = static_cast<long>(segmented.size());
  stats.topics = topics;
  for (const auto& p : segmented) {
    if (!known.count(p.doc_id))
      raise(ErrorCode::MismatchedCorpus,
            "paragraph references unknown doc id '" + p.doc_id + "'");
    stats.tokens += p.length();
  }
  return stats;
}

}  // namespace topicflow
