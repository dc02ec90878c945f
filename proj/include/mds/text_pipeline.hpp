#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mds/corpus.hpp"

namespace mds {

enum class Pos { Noun, Verb, Adj, Adv, Other };

std::string_view to_string(Pos pos);
std::optional<Pos> parse_pos(std::string_view name);

struct SentenceRef {
  std::string doc_id;
  std::size_t index_in_doc = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

struct Token {
  std::string surface;  // lowercased, punctuation stripped
  std::string lemma;
  Pos pos = Pos::Other;
  bool is_stopword = false;
};

struct ProcessedSentence {
  SentenceRef sentence_ref;
  std::vector<std::string> content_lemmas;  // repetitions preserved
  std::set<std::string> noun_lemmas;

  /// Occurrences of `lemma` in content_lemmas.
  std::size_t count(std::string_view lemma) const;
};

/// Surface -> part of speech dictionary plus suffix rules for unknown words.
class Lexicon {
 public:
  /// `entries` and `suffixes` are `word<TAB>POS` files. The suffix file may
  /// be empty.
  static Lexicon load(const std::filesystem::path& entries, const std::filesystem::path& suffixes);

  void add_entry(std::string surface, Pos pos);
  void add_suffix_rule(std::string suffix, Pos pos);

  std::optional<Pos> lookup(std::string_view surface) const;
  /// Longest matching suffix, requiring at least three characters of stem.
  std::optional<Pos> match_suffix(std::string_view surface) const;

 private:
  std::map<std::string, Pos, std::less<>> entries_;
  std::vector<std::pair<std::string, Pos>> suffixes_;  // longest first
};

/// Lexicon lookup, then suffix rules, then NOUN. Empty or letterless
/// tokens are OTHER.
Pos default_tagger(std::string_view surface, const Lexicon& lexicon);

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual Pos tag(std::string_view surface) const = 0;
  /// True when the word is in the tagger's dictionary (not guessed).
  virtual bool knows(std::string_view surface) const = 0;
};

class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}
  Pos tag(std::string_view surface) const override { return default_tagger(surface, lexicon_); }
  bool knows(std::string_view surface) const override { return lexicon_.lookup(surface).has_value(); }

 private:
  Lexicon lexicon_;
};

class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  virtual std::string lemmatize(std::string_view surface) const = 0;
  virtual bool knows(std::string_view surface) const = 0;
};

/// Dictionary lookup with identity fallback.
class DictionaryLemmatizer final : public Lemmatizer {
 public:
  DictionaryLemmatizer() = default;
  explicit DictionaryLemmatizer(std::map<std::string, std::string, std::less<>> table) : table_(std::move(table)) {}
  static DictionaryLemmatizer load(const std::filesystem::path& path);

  std::string lemmatize(std::string_view surface) const override;
  bool knows(std::string_view surface) const override { return table_.find(surface) != table_.end(); }

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(const std::vector<std::string>& words);
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const { return words_.size(); }
  StopwordList without(std::string_view word) const;

 private:
  std::set<std::string, std::less<>> words_;
};

struct TokenizerOptions {
  bool keep_numbers = false;     // tokens without any letter
  bool strip_possessive = true;  // "world's" -> "world"
};

/// Whitespace split, lowercase, strip leading/trailing punctuation. Internal
/// hyphens and apostrophes are kept. Tokens that end up empty are dropped.
std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options);

struct ResourcePaths {
  std::filesystem::path stopwords;
  std::filesystem::path lexicon;
  std::filesystem::path suffixes;
  std::filesystem::path lemmas;
  std::filesystem::path abbreviations;

  /// Shipped resources for "en" or "pt" under `data_dir`.
  static ResourcePaths defaults(std::string_view language, const std::filesystem::path& data_dir);
};

struct PipelineResources {
  StopwordList stopwords;
  std::shared_ptr<const Tagger> tagger;
  std::shared_ptr<const Lemmatizer> lemmatizer;
  TokenizerOptions tokenizer;

  static PipelineResources load(const ResourcePaths& paths);
};

/// Full token analysis including stopwords. Hyphenated tokens unknown to
/// both the tagger and the lemmatizer are split into their parts.
std::vector<Token> analyze(std::string_view text, const PipelineResources& resources);

ProcessedSentence preprocess(const Sentence& sentence, const PipelineResources& resources);

}  // namespace mds
