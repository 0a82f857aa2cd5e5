#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tftest {

namespace fs = std::filesystem;

inline fs::path unique_temp_dir(const std::string& tag) {
  static std::atomic<unsigned> counter{0};
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path p = fs::temp_directory_path() /
               ("topicflow_" + tag + "_" + std::to_string(stamp) + "_" +
                std::to_string(counter++));
  fs::create_directories(p);
  return p;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag = "test")
      : path_(unique_temp_dir(tag)) {}
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

// A paragraph of `len` tokens cycling through the given theme words.
inline std::string themed_paragraph(const std::vector<std::string>& words,
                                    int len, int phase = 0) {
  std::ostringstream os;
  for (int i = 0; i < len; ++i) {
    if (i) os << (i % 12 == 0 ? "\n" : " ");
    os << words[(i + phase) % words.size()];
  }
  return os.str();
}

inline std::string themed_document(const std::vector<std::string>& words,
                                   int paragraphs, int len_per_paragraph) {
  std::ostringstream os;
  for (int p = 0; p < paragraphs; ++p) {
    if (p) os << "\n\n";
    os << themed_paragraph(words, len_per_paragraph, p * 3);
  }
  os << "\n";
  return os.str();
}

// A 4-document scenario (1 input, 1 output, 2 background) whose
// availability ratio is 2/3. The input and output share exactly one
// reference. Returns the manifest path.
inline fs::path make_scenario(const fs::path& dir,
                              const std::string& name = "fixture") {
  const std::vector<std::string> game = {
      "video",  "game",      "addiction", "playing", "excessive",
      "gaming", "behaviour", "player",    "console", "session"};
  const std::vector<std::string> gamble = {
      "gambling", "machine",  "slot",   "casino", "wager",
      "lottery",  "winnings", "stake",  "payout", "bet"};
  const std::vector<std::string> clinic = {
      "treatment", "therapy",  "clinical", "diagnosis", "symptom",
      "disorder",  "patient",  "relapse",  "coping",    "intervention"};
  const std::vector<std::string> survey = {
      "survey",   "sample",     "respondent", "questionnaire", "measure",
      "variable", "regression", "gender",     "cohort",        "baseline"};

  write_file(dir / "texts" / "input.txt", themed_document(game, 4, 26));
  write_file(dir / "texts" / "output.txt", themed_document(gamble, 3, 26));
  write_file(dir / "texts" / "bg1.txt", themed_document(clinic, 3, 26));
  write_file(dir / "texts" / "bg2.txt", themed_document(survey, 3, 26));

  std::ostringstream m;
  m << "scenario = " << name << "\n"
    << "threshold = 0.6\n"
    << "total_citations = 3\n"
    << "\n"
    << "[document]\n"
    << "id = input\n"
    << "role = input\n"
    << "author_key = W\n"
    << "year = 2008\n"
    << "title = Target paper on gaming habits\n"
    << "text_path = texts/input.txt\n"
    << "ref = Shared|2001|Common foundational study\n"
    << "ref = Older|1995|Input only source\n"
    << "ref = Older|1997|Another input only source\n"
    << "\n"
    << "[document]\n"
    << "id = output\n"
    << "role = output\n"
    << "author_key = B\n"
    << "year = 2008\n"
    << "title = Commentary on the target paper\n"
    << "text_path = texts/output.txt\n"
    << "ref = Shared|2001|Common foundational study\n"
    << "ref = Clinic|2003|Background treatment study\n"
    << "ref = Survey|2005|Background survey study\n"
    << "\n"
    << "[document]\n"
    << "id = bg1\n"
    << "role = background\n"
    << "author_key = C\n"
    << "year = 2003\n"
    << "title = Background treatment study\n"
    << "text_path = texts/bg1.txt\n"
    << "\n"
    << "[document]\n"
    << "id = bg2\n"
    << "role = background\n"
    << "author_key = S\n"
    << "year = 2005\n"
    << "title = Background survey study\n"
    << "text_path = texts/bg2.txt\n";
  fs::path manifest = dir / "scenario.manifest";
  write_file(manifest, m.str());
  return manifest;
}

}  // namespace tftest
