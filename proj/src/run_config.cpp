#include "mds/run_config.hpp"

#include <algorithm>
#include <sstream>

#include "mds/error.hpp"
#include "mds/io.hpp"
#include "mds/measure_registry.hpp"

namespace mds {

namespace {

void require_file(const std::filesystem::path& path, const char* what) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorKind::Config, std::string(what) + " not found: " + path.string());
  }
}

void require_one_of(const std::string& value, std::initializer_list<const char*> allowed, const char* what) {
  for (const char* a : allowed) {
    if (value == a) return;
  }
  throw Error(ErrorKind::Config, std::string("invalid ") + what + " '" + value + "'");
}

}  // namespace

void RunConfig::resolve() {
  if (corpus_root.empty()) throw Error(ErrorKind::Config, "corpus_root is required");
  if (!std::filesystem::is_directory(corpus_root)) {
    throw Error(ErrorKind::Config, "corpus_root is not a directory: " + corpus_root.string());
  }
  if (data_dir.empty()) data_dir = MDS_DATA_DIR;
  if (language == "en" || language == "pt") {
    const ResourcePaths defaults = ResourcePaths::defaults(language, data_dir);
    if (stopwords.empty()) stopwords = defaults.stopwords;
    if (lexicon.empty()) lexicon = defaults.lexicon;
    if (suffixes.empty()) suffixes = defaults.suffixes;
    if (lemmas.empty()) lemmas = defaults.lemmas;
  } else if (stopwords.empty() || lexicon.empty() || suffixes.empty() || lemmas.empty()) {
    throw Error(ErrorKind::Config, "no shipped resources for language '" + language + "'");
  }
  if (abbreviations.empty()) abbreviations = data_dir / "abbreviations.txt";
  require_file(stopwords, "stopword list");
  require_file(lexicon, "tagger lexicon");
  require_file(suffixes, "tagger suffix rules");
  require_file(lemmas, "lemma dictionary");
  require_file(abbreviations, "abbreviation list");

  require_one_of(network_model, {"noun", "tfidf", "both"}, "network_model");
  require_one_of(ard, {"off", "on", "both"}, "ard");
  if (h_levels.empty()) throw Error(ErrorKind::Config, "h_levels must not be empty");
  for (int h : h_levels) {
    if (h != 2 && h != 3) throw Error(ErrorKind::Config, "h_levels accepts 2 and 3, got " + std::to_string(h));
  }
  std::sort(h_levels.begin(), h_levels.end());
  h_levels.erase(std::unique(h_levels.begin(), h_levels.end()), h_levels.end());

  for (const auto& name : measures) {
    const MeasureSystem* m = find_measure(name);
    if (!m) throw Error(ErrorKind::Config, "unknown measure '" + name + "'");
    if (m->level != 0 && std::find(h_levels.begin(), h_levels.end(), m->level) == h_levels.end()) {
      throw Error(ErrorKind::Config, "measure '" + name + "' needs h=" + std::to_string(m->level) +
                                         ", which is not in h_levels");
    }
  }

  if (!(compression_rate > 0.0 && compression_rate < 1.0)) {
    throw Error(ErrorKind::Config, "compression_rate must be in (0, 1)");
  }
  if (redundancy_limit && !(*redundancy_limit >= 0.0)) {
    throw Error(ErrorKind::Config, "redundancy_limit must be >= 0");
  }
  if (random_runs < 1) throw Error(ErrorKind::Config, "random_runs must be >= 1");
  if (!(pagerank.damping > 0.0 && pagerank.damping < 1.0)) throw Error(ErrorKind::Config, "damping must be in (0, 1)");
  if (!(pagerank.tol > 0.0)) throw Error(ErrorKind::Config, "pagerank tolerance must be > 0");
  if (pagerank.max_iter < 1) throw Error(ErrorKind::Config, "pagerank max_iter must be >= 1");
  if (!(tfidf_threshold >= 0.0 && tfidf_threshold < 1.0)) {
    throw Error(ErrorKind::Config, "tfidf_threshold must be in [0, 1)");
  }
  if (workers < 0) throw Error(ErrorKind::Config, "workers must be >= 0");
}

ResourcePaths RunConfig::resource_paths() const { return {stopwords, lexicon, suffixes, lemmas, abbreviations}; }

std::vector<NetworkModel> RunConfig::models() const {
  if (network_model == "noun") return {NetworkModel::Noun};
  if (network_model == "tfidf") return {NetworkModel::TfIdf};
  return {NetworkModel::Noun, NetworkModel::TfIdf};
}

std::vector<bool> RunConfig::ard_modes() const {
  if (ard == "off") return {false};
  if (ard == "on") return {true};
  return {false, true};
}

std::vector<std::string> RunConfig::selected_measures() const {
  std::vector<std::string> out;
  for (const auto& m : all_measures()) {
    const bool named = measures.empty() || std::find(measures.begin(), measures.end(), m.name) != measures.end();
    const bool level_ok = m.level == 0 || std::find(h_levels.begin(), h_levels.end(), m.level) != h_levels.end();
    if (named && level_ok) out.push_back(m.name);
  }
  return out;
}

std::vector<SystemSpec> RunConfig::systems() const {
  std::vector<SystemSpec> out;
  for (bool a : ard_modes()) {
    for (NetworkModel model : models()) {
      for (const auto& name : selected_measures()) out.push_back({model, name, a});
    }
  }
  return out;
}

PipelineOptions RunConfig::pipeline_options() const {
  PipelineOptions o;
  o.tfidf.unit = idf_unit;
  o.tfidf.smoothing = idf_smoothing;
  o.tfidf_threshold = tfidf_threshold;
  return o;
}

MeasureParams RunConfig::measure_params() const {
  MeasureParams p;
  p.pagerank = pagerank;
  return p;
}

std::string RunConfig::canonical_text() const {
  std::ostringstream s;
  auto resource = [&](const char* key, const std::filesystem::path& p) {
    s << key << " = sha256:" << sha256_hex(read_utf8_file(p)) << '\n';
  };
  s << "corpus_root = " << std::filesystem::weakly_canonical(corpus_root).string() << '\n';
  s << "language = " << language << '\n';
  resource("stopwords", stopwords);
  resource("lexicon", lexicon);
  resource("suffixes", suffixes);
  resource("lemmas", lemmas);
  resource("abbreviations", abbreviations);
  s << "network_model = " << network_model << '\n';
  s << "measures =";
  for (const auto& m : selected_measures()) s << ' ' << m;
  s << '\n';
  s << "ard = " << ard << '\n';
  s << "budget = " << (budget == BudgetMode::Compression ? "compression" : "reference") << '\n';
  s << "compression_rate = " << format_double(compression_rate) << '\n';
  s << "redundancy_limit = " << (redundancy_limit ? format_double(*redundancy_limit) : "auto") << '\n';
  s << "seed = " << seed << '\n';
  s << "random_runs = " << random_runs << '\n';
  s << "pagerank_damping = " << format_double(pagerank.damping) << '\n';
  s << "pagerank_tol = " << format_double(pagerank.tol) << '\n';
  s << "pagerank_max_iter = " << pagerank.max_iter << '\n';
  s << "tfidf_threshold = " << format_double(tfidf_threshold) << '\n';
  s << "idf_unit = " << (idf_unit == IdfUnit::Sentence ? "sentence" : "document") << '\n';
  s << "idf_smoothing = " << (idf_smoothing == IdfSmoothing::None ? "none" : "smooth") << '\n';
  s << "keep_numbers = " << (keep_numbers ? "true" : "false") << '\n';
  return s.str();
}

std::string RunConfig::fingerprint() const { return sha256_hex(canonical_text()).substr(0, 16); }

}  // namespace mds
