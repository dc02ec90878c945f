#pragma once

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mds/error.hpp"
#include "mds/pipeline.hpp"
#include "mds/run_config.hpp"

namespace mds {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitData = 2, kExitPartial = 3 };

int exit_code_for(ErrorKind kind);

/// "error: <kind>: <message>" on one line.
std::string error_line(const std::exception& e);

struct PreparedCorpus {
  std::vector<PreparedCluster> clusters;
  std::vector<std::string> failures;  // one line per cluster that could not be prepared
};

/// Loads, segments and prepares every cluster (or only cfg.cluster).
/// Per-cluster failures are collected; a missing requested cluster is a
/// config error.
PreparedCorpus prepare_corpus(const RunConfig& cfg, std::ostream& log);

/// <output_dir>/<fingerprint>, created with a config.txt manifest.
std::filesystem::path run_directory(const RunConfig& cfg);

/// Extracts for every selected (model, measure, ard) under
/// <run>/summaries/<cluster>/<model>/<plain|ard>/<measure>.{txt,json}.
int cmd_summarize(RunConfig cfg, std::ostream& log);

/// report.txt, report.tsv and cells.tsv under <run>/evaluation/.
int cmd_evaluate(RunConfig cfg, std::ostream& log);

/// Debug dump for one cluster under <run>/inspect/<cluster>/.
int cmd_inspect(RunConfig cfg, const std::string& cluster_id, std::ostream& log);

}  // namespace mds
