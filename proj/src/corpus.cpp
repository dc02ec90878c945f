#include "mds/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mds/error.hpp"
#include "mds/io.hpp"
#include "mds/utf8.hpp"

namespace fs = std::filesystem;

namespace mds {

AbbreviationList::AbbreviationList(const std::vector<std::string>& entries) {
  for (const auto& e : entries) entries_.insert(utf8::to_lower(e));
}

AbbreviationList AbbreviationList::load(const fs::path& path) {
  return AbbreviationList(content_lines(read_utf8_file(path)));
}

bool AbbreviationList::contains(std::string_view lowered_token) const {
  return entries_.find(lowered_token) != entries_.end();
}

std::size_t count_words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  for (std::string word; in >> word;) ++n;
  return n;
}

namespace {

bool is_ascii_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<fs::path> text_files(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// The abbreviation candidate is the whitespace-delimited token ending at the
// terminator, with opening brackets and quotes removed.
std::string token_ending_at(std::string_view text, std::size_t terminator) {
  std::size_t start = terminator;
  while (start > 0 && !is_ascii_space(text[start - 1])) --start;
  std::string_view token = text.substr(start, terminator - start + 1);
  while (!token.empty() && (token.front() == '(' || token.front() == '"' || token.front() == '\'' ||
                            token.front() == '[')) {
    token.remove_prefix(1);
  }
  return utf8::to_lower(token);
}

}  // namespace

Corpus load_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) throw Error(ErrorKind::Input, "corpus root not found: " + root.string());

  std::vector<fs::path> cluster_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) cluster_dirs.push_back(entry.path());
  }
  std::sort(cluster_dirs.begin(), cluster_dirs.end());

  Corpus corpus;
  if (cluster_dirs.empty()) corpus.warnings.push_back({root, "corpus root contains no cluster directories"});

  for (const auto& dir : cluster_dirs) {
    Cluster cluster;
    cluster.id = dir.filename().string();
    for (const auto& file : text_files(dir / "docs")) {
      cluster.documents.push_back({file.stem().string(), read_utf8_file(file), {}});
    }
    if (cluster.documents.empty()) {
      corpus.warnings.push_back({dir, "cluster has no documents in docs/; skipped"});
      continue;
    }
    if (!fs::is_directory(dir / "refs")) corpus.warnings.push_back({dir, "cluster has no refs/ directory"});
    for (const auto& file : text_files(dir / "refs")) {
      std::string text(trim(read_utf8_file(file)));
      const std::size_t words = count_words(text);
      if (words == 0) {
        corpus.warnings.push_back({file, "empty reference summary; ignored"});
        continue;
      }
      cluster.references.push_back({cluster.id, std::move(text), words});
    }
    corpus.clusters.push_back(std::move(cluster));
  }
  return corpus;
}

Document segment_document(Document doc, const AbbreviationList& abbreviations) {
  const std::string_view text = doc.raw_text;
  doc.sentences.clear();

  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view piece = trim(text.substr(begin, end - begin));
    if (piece.empty()) return;
    Sentence s;
    s.doc_id = doc.id;
    s.index_in_doc = doc.sentences.size();
    s.text = std::string(piece);
    s.word_count = count_words(piece);
    doc.sentences.push_back(std::move(s));
  };

  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 < text.size() && !is_ascii_space(text[i + 1])) continue;
    if (c == '.' && abbreviations.contains(token_ending_at(text, i))) continue;
    emit(begin, i + 1);
    begin = i + 1;
  }
  emit(begin, text.size());

  if (doc.sentences.empty()) throw Error(ErrorKind::Data, "document '" + doc.id + "' yields no sentences");
  return doc;
}

void segment_corpus(Corpus& corpus, const AbbreviationList& abbreviations) {
  const auto n = static_cast<std::ptrdiff_t>(corpus.clusters.size());
  std::vector<std::string> errors(corpus.clusters.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    try {
      for (auto& doc : corpus.clusters[c].documents) doc = segment_document(std::move(doc), abbreviations);
    } catch (const Error& e) {
      errors[c] = e.what();
    }
  }
  for (std::size_t c = 0; c < errors.size(); ++c) {
    if (!errors[c].empty()) throw Error(ErrorKind::Data, "cluster '" + corpus.clusters[c].id + "': " + errors[c]);
  }
}

std::vector<Sentence> cluster_sentences(const Cluster& cluster) {
  std::vector<Sentence> out;
  for (const auto& doc : cluster.documents) out.insert(out.end(), doc.sentences.begin(), doc.sentences.end());
  return out;
}

}  // namespace mds
