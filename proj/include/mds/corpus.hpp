#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mds {

struct Sentence {
  std::string doc_id;
  std::size_t index_in_doc = 0;
  std::string text;
  std::size_t word_count = 0;
};

struct Document {
  std::string id;
  std::string raw_text;
  std::vector<Sentence> sentences;  // empty until segment_document runs
};

struct ReferenceSummary {
  std::string cluster_id;
  std::string text;
  std::size_t word_count = 0;
};

struct Cluster {
  std::string id;
  std::vector<Document> documents;
  std::vector<ReferenceSummary> references;
};

struct CorpusWarning {
  std::filesystem::path path;
  std::string message;
};

struct Corpus {
  std::vector<Cluster> clusters;  // sorted by id
  std::vector<CorpusWarning> warnings;
};

/// Tokens (lowercase, trailing period included) after which a terminator
/// does not end a sentence, e.g. "dr." or "e.g.".
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(const std::vector<std::string>& entries);

  static AbbreviationList load(const std::filesystem::path& path);

  bool contains(std::string_view lowered_token) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::set<std::string, std::less<>> entries_;
};

/// Number of whitespace-separated tokens.
std::size_t count_words(std::string_view text);

/// Reads `<root>/<cluster>/docs/*.txt` and `<root>/<cluster>/refs/*.txt` in
/// lexicographic order. Throws Error(Input) when root is missing and
/// Error(Data) naming the file when a file is not valid UTF-8. Clusters
/// without documents are skipped and reported in `warnings`.
Corpus load_corpus(const std::filesystem::path& root);

/// Splits on '.', '!' or '?' followed by whitespace or end of text, unless
/// the token carrying the terminator is a listed abbreviation.
Document segment_document(Document doc, const AbbreviationList& abbreviations);

/// Segments every document of every cluster (clusters in parallel).
void segment_corpus(Corpus& corpus, const AbbreviationList& abbreviations);

/// All sentences of a cluster in global order: documents in order, then
/// sentence index. Node i of every network built for the cluster is
/// element i of this list.
std::vector<Sentence> cluster_sentences(const Cluster& cluster);

}  // namespace mds
