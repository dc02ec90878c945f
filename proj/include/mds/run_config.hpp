#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mds/classic_measures.hpp"
#include "mds/evaluator.hpp"
#include "mds/network.hpp"
#include "mds/pipeline.hpp"
#include "mds/text_pipeline.hpp"

namespace mds {

enum class BudgetMode { Compression, Reference };

/// Everything a run depends on. Fields left empty fall back to the shipped
/// defaults during resolve().
struct RunConfig {
  std::filesystem::path corpus_root;
  std::string language = "en";
  std::filesystem::path data_dir;  // empty: compiled-in data directory
  std::filesystem::path stopwords, lexicon, suffixes, lemmas, abbreviations;  // empty: <data_dir>/<language>/...

  std::string network_model = "both";  // noun | tfidf | both
  std::vector<std::string> measures;   // empty: every registered measure
  std::vector<int> h_levels{2, 3};
  std::string ard = "off";  // off | on | both

  BudgetMode budget = BudgetMode::Compression;  // summarize only; evaluate always uses the reference size
  double compression_rate = 0.7;
  std::optional<double> redundancy_limit;  // nullopt: per-cluster automatic limit

  std::uint64_t seed = 1;
  std::size_t random_runs = 1;
  std::filesystem::path output_dir = "out";
  std::string cluster;  // restricts summarize/inspect to one cluster; not part of the fingerprint

  PageRankOptions pagerank;
  double tfidf_threshold = 0.0;
  IdfUnit idf_unit = IdfUnit::Sentence;
  IdfSmoothing idf_smoothing = IdfSmoothing::None;
  bool keep_numbers = false;

  int workers = 0;  // 0: OpenMP default

  /// Fills defaults, checks paths, enum strings and measure names.
  /// Throws Error(Config) on the first problem.
  void resolve();

  ResourcePaths resource_paths() const;
  std::vector<NetworkModel> models() const;
  std::vector<bool> ard_modes() const;
  /// Selected measure names in table order, restricted to h_levels.
  std::vector<std::string> selected_measures() const;
  std::vector<SystemSpec> systems() const;

  PipelineOptions pipeline_options() const;
  MeasureParams measure_params() const;

  /// One "key = value" line per option, resources by content hash.
  std::string canonical_text() const;
  /// First 16 hex digits of the SHA-256 of canonical_text().
  std::string fingerprint() const;
};

}  // namespace mds
