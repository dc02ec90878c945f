#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mds/measure_registry.hpp"
#include "mds/pipeline.hpp"
#include "mds/summarizer.hpp"

namespace mds {

/// ROUGE tokenization: lowercase, punctuation stripped, digit tokens kept,
/// no stemming and no stopword removal.
std::vector<std::string> rouge_tokens(std::string_view text);

/// Clipped unigram matches / reference unigrams, averaged over references.
/// Throws Error(Data) when there is no reference or a reference is empty.
double rouge1_recall(std::string_view candidate, std::span<const std::string> references);

/// First sentences of the first document, then the following documents.
Summary top_baseline(const PreparedCluster& cluster, std::size_t budget_words);

/// Sentences drawn uniformly without replacement from a generator seeded
/// with `seed`.
Summary random_baseline(const PreparedCluster& cluster, std::size_t budget_words, std::uint64_t seed);

struct SystemSpec {
  NetworkModel model = NetworkModel::Noun;
  std::string measure;
  bool ard = false;

  /// "<measure>/<noun|tfidf>/<plain|ard>"
  std::string name() const;
};

inline constexpr std::string_view kTopBaseline = "Top Baseline";
inline constexpr std::string_view kRandomBaseline = "Random Baseline";

struct EvaluationOptions {
  MeasureParams measure_params;
  std::optional<double> redundancy_limit;  // nullopt: per-cluster automatic limit
  bool include_baselines = true;
  std::uint64_t seed = 1;
  std::size_t random_runs = 1;  // Random Baseline averages seeds seed .. seed + runs - 1
  std::string config_fingerprint;
};

struct EvaluationCell {
  std::string cluster_id;
  std::string system;
  std::optional<double> recall;
  std::string error;  // set when recall is empty
};

struct EvaluationReport {
  std::vector<std::string> clusters;
  std::vector<std::string> systems;  // column order
  std::vector<EvaluationCell> cells;  // cluster-major, systems order
  std::map<std::string, double> per_system_mean;  // over clusters with a defined score
  std::string config_fingerprint;

  bool has_failures() const;
  std::size_t evaluable_clusters() const;
  const EvaluationCell& cell(std::size_t cluster, std::size_t system) const;
};

/// Builds, scores, selects (budget = reference size) and evaluates every
/// cluster x system cell. Per-cell failures are recorded, not thrown.
/// Cells run in parallel; measure kernels inside a cell run serially.
EvaluationReport run_matrix(std::span<const PreparedCluster> clusters, std::span<const SystemSpec> systems,
                            const EvaluationOptions& options);

/// Aligned table: one row per measure, columns model x ARD, baselines last.
void write_report_text(std::ostream& out, const EvaluationReport& report);
/// Same table, tab-separated, "NA" for missing values.
void write_report_tsv(std::ostream& out, const EvaluationReport& report);
/// cluster, system, recall-or-error per line.
void write_cells_tsv(std::ostream& out, const EvaluationReport& report);

}  // namespace mds
