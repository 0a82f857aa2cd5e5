#pragma once

#include <string>
#include <vector>

#include "topicflow/biblio.hpp"
#include "topicflow/textproc.hpp"

namespace topicflow {

enum class Role { Input, Output, Background };

const char* to_string(Role r);

struct DocumentRecord {
  std::string id;
  Role role = Role::Background;
  std::string author_key;  // surname initial, e.g. "W"
  int year = 0;
  std::string title;
  std::string text_path;
  std::vector<ReferenceKey> cited_refs;
};

/// A scenario: one input (target) paper, one output (commentary) paper,
/// and the commentary's available citation full texts.
struct Corpus {
  std::string scenario_name;
  double threshold = 0.6;  // availability gate, strict-greater comparison
  std::vector<DocumentRecord> docs;
  int total_citations = 0;
  int available_citations = 0;
  std::vector<RefAlias> aliases;

  const DocumentRecord* find_role(Role r) const;
  const DocumentRecord& input() const;
  const DocumentRecord& output() const;
  std::vector<const DocumentRecord*> background() const;
};

struct ValidationIssue {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool passed() const { return issues.empty(); }
  std::string to_text() const;
};

struct CorpusStats {
  long articles = 0;
  long paragraphs = 0;
  int topics = 0;
  long tokens = 0;
};

// Parses the manifest and resolves document records. Reads no document
// bodies beyond existence checks. Throws ParseError, MissingFile,
// DuplicateId, MissingRole.
Corpus load_manifest(const std::string& path);

// Pure structural + availability check; violations are report entries.
ValidationReport validate_corpus(const Corpus& c, double threshold = 0.6);

// Throws MismatchedCorpus if a paragraph references an unknown doc id.
CorpusStats corpus_stats(const Corpus& c,
                         const std::vector<Paragraph>& segmented, int topics);

}  // namespace topicflow
