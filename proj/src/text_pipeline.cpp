#include "mds/text_pipeline.hpp"

#include <algorithm>

#include "mds/error.hpp"
#include "mds/io.hpp"
#include "mds/utf8.hpp"

namespace fs = std::filesystem;

namespace mds {

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<Pos> parse_pos(std::string_view name) {
  for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv, Pos::Other}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::size_t ProcessedSentence::count(std::string_view lemma) const {
  return static_cast<std::size_t>(std::count(content_lemmas.begin(), content_lemmas.end(), lemma));
}

namespace {

// Parses `key<TAB>value` lines; blank lines and '#' comments are skipped.
std::vector<std::pair<std::string, std::string>> read_tab_pairs(const fs::path& path) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t line_no = 0;
  for (const auto& line : content_lines(read_utf8_file(path))) {
    ++line_no;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorKind::Data, path.string() + ": expected 'surface<TAB>value' in entry " + std::to_string(line_no));
    }
    pairs.emplace_back(utf8::to_lower(line.substr(0, tab)), line.substr(tab + 1));
  }
  return pairs;
}

std::size_t code_point_count(std::string_view s) { return utf8::decode(s).size(); }

bool has_letter(std::string_view s) {
  for (char32_t cp : utf8::decode(s)) {
    if (utf8::is_letter(cp)) return true;
  }
  return false;
}

std::u32string strip_punctuation(std::u32string s) {
  std::size_t b = 0, e = s.size();
  while (b < e && utf8::is_punctuation(s[b])) ++b;
  while (e > b && utf8::is_punctuation(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

Lexicon Lexicon::load(const fs::path& entries, const fs::path& suffixes) {
  Lexicon lex;
  for (auto& [word, tag] : read_tab_pairs(entries)) {
    auto pos = parse_pos(tag);
    if (!pos) throw Error(ErrorKind::Data, entries.string() + ": unknown part of speech '" + tag + "'");
    lex.add_entry(std::move(word), *pos);
  }
  if (!suffixes.empty()) {
    for (auto& [suffix, tag] : read_tab_pairs(suffixes)) {
      auto pos = parse_pos(tag);
      if (!pos) throw Error(ErrorKind::Data, suffixes.string() + ": unknown part of speech '" + tag + "'");
      lex.add_suffix_rule(std::move(suffix), *pos);
    }
  }
  return lex;
}

void Lexicon::add_entry(std::string surface, Pos pos) { entries_[std::move(surface)] = pos; }

void Lexicon::add_suffix_rule(std::string suffix, Pos pos) {
  suffixes_.emplace_back(std::move(suffix), pos);
  std::stable_sort(suffixes_.begin(), suffixes_.end(), [](const auto& a, const auto& b) {
    return code_point_count(a.first) > code_point_count(b.first);
  });
}

std::optional<Pos> Lexicon::lookup(std::string_view surface) const {
  auto it = entries_.find(surface);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<Pos> Lexicon::match_suffix(std::string_view surface) const {
  const std::size_t len = code_point_count(surface);
  for (const auto& [suffix, pos] : suffixes_) {
    if (surface.ends_with(suffix) && len >= code_point_count(suffix) + 3) return pos;
  }
  return std::nullopt;
}

Pos default_tagger(std::string_view surface, const Lexicon& lexicon) {
  if (surface.empty() || !has_letter(surface)) return Pos::Other;
  if (auto pos = lexicon.lookup(surface)) return *pos;
  if (auto pos = lexicon.match_suffix(surface)) return *pos;
  return Pos::Noun;
}

DictionaryLemmatizer DictionaryLemmatizer::load(const fs::path& path) {
  std::map<std::string, std::string, std::less<>> table;
  for (auto& [surface, lemma] : read_tab_pairs(path)) table[std::move(surface)] = utf8::to_lower(lemma);
  return DictionaryLemmatizer(std::move(table));
}

std::string DictionaryLemmatizer::lemmatize(std::string_view surface) const {
  auto it = table_.find(surface);
  return it == table_.end() ? utf8::to_lower(surface) : it->second;
}

StopwordList::StopwordList(const std::vector<std::string>& words) {
  for (const auto& w : words) words_.insert(utf8::to_lower(w));
}

StopwordList StopwordList::load(const fs::path& path) { return StopwordList(content_lines(read_utf8_file(path))); }

StopwordList StopwordList::without(std::string_view word) const {
  StopwordList copy = *this;
  if (auto it = copy.words_.find(word); it != copy.words_.end()) copy.words_.erase(it);
  return copy;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options) {
  std::vector<std::string> tokens;
  const std::u32string cps = utf8::decode(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !utf8::is_space(cps[j])) ++j;
    if (j == i) break;

    std::u32string word = cps.substr(i, j - i);
    for (auto& cp : word) cp = utf8::to_lower(cp);
    word = strip_punctuation(std::move(word));
    if (options.strip_possessive && word.size() > 2 && word.back() == U's') {
      const char32_t apostrophe = word[word.size() - 2];
      if (apostrophe == U'\'' || apostrophe == U'’') word.resize(word.size() - 2);
    }
    word = strip_punctuation(std::move(word));

    std::string token = utf8::encode(word);
    if (!token.empty() && (options.keep_numbers || has_letter(token))) tokens.push_back(std::move(token));
    i = j;
  }
  return tokens;
}

ResourcePaths ResourcePaths::defaults(std::string_view language, const fs::path& data_dir) {
  if (language != "en" && language != "pt") {
    throw Error(ErrorKind::Config, "unsupported language '" + std::string(language) + "' (expected en or pt)");
  }
  const fs::path dir = data_dir / std::string(language);
  return {dir / "stopwords.txt", dir / "lexicon.tsv", dir / "suffixes.tsv", dir / "lemmas.tsv",
          data_dir / "abbreviations.txt"};
}

PipelineResources PipelineResources::load(const ResourcePaths& paths) {
  PipelineResources r;
  r.stopwords = StopwordList::load(paths.stopwords);
  r.tagger = std::make_shared<LexiconTagger>(Lexicon::load(paths.lexicon, paths.suffixes));
  r.lemmatizer = std::make_shared<DictionaryLemmatizer>(DictionaryLemmatizer::load(paths.lemmas));
  return r;
}

std::vector<Token> analyze(std::string_view text, const PipelineResources& resources) {
  std::vector<std::string> words;
  for (auto& raw : tokenize(text, resources.tokenizer)) {
    const bool compound = raw.find('-') != std::string::npos;
    if (!compound || resources.tagger->knows(raw) || resources.lemmatizer->knows(raw)) {
      words.push_back(std::move(raw));
      continue;
    }
    std::size_t pos = 0;
    while (pos <= raw.size()) {
      std::size_t end = raw.find('-', pos);
      if (end == std::string::npos) end = raw.size();
      if (end > pos) {
        std::string part = raw.substr(pos, end - pos);
        if (resources.tokenizer.keep_numbers || has_letter(part)) words.push_back(std::move(part));
      }
      pos = end + 1;
    }
  }

  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (auto& w : words) {
    Token t;
    t.lemma = resources.lemmatizer->lemmatize(w);
    t.pos = resources.tagger->tag(w);
    t.is_stopword = resources.stopwords.contains(w) || resources.stopwords.contains(t.lemma);
    t.surface = std::move(w);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

ProcessedSentence preprocess(const Sentence& sentence, const PipelineResources& resources) {
  ProcessedSentence out;
  out.sentence_ref = {sentence.doc_id, sentence.index_in_doc};
  for (auto& token : analyze(sentence.text, resources)) {
    if (token.is_stopword || token.lemma.empty()) continue;
    if (token.pos == Pos::Noun) out.noun_lemmas.insert(token.lemma);
    out.content_lemmas.push_back(std::move(token.lemma));
  }
  return out;
}

}  // namespace mds
