#include "mds/commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "mds/corpus.hpp"
#include "mds/dynamical_measures.hpp"
#include "mds/evaluator.hpp"
#include "mds/io.hpp"
#include "mds/measure_registry.hpp"
#include "mds/summarizer.hpp"

namespace fs = std::filesystem;

namespace mds {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::Input: return kExitConfig;
    case ErrorKind::Data:
    case ErrorKind::Numeric: return kExitData;
  }
  return kExitData;
}

std::string error_line(const std::exception& e) {
  std::string kind = "internal";
  if (const auto* err = dynamic_cast<const Error*>(&e)) kind = to_string(err->kind());
  std::string msg = e.what();
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  return "error: " + kind + ": " + msg;
}

namespace {

void write_file(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Input, "cannot write " + path.string());
  out << bytes;
  if (!out) throw Error(ErrorKind::Input, "write failed: " + path.string());
}

void apply_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
}

std::string score_cell(const ScoreVector& s, std::size_t i) {
  return s.defined[i] ? format_double(s.scores[i]) : "NA";
}

}  // namespace

PreparedCorpus prepare_corpus(const RunConfig& cfg, std::ostream& log) {
  Corpus corpus = load_corpus(cfg.corpus_root);
  for (const auto& w : corpus.warnings) log << "warning: " << w.path.string() << ": " << w.message << '\n';
  if (!cfg.cluster.empty()) {
    std::erase_if(corpus.clusters, [&](const Cluster& c) { return c.id != cfg.cluster; });
    if (corpus.clusters.empty()) throw Error(ErrorKind::Config, "no cluster named '" + cfg.cluster + "'");
  }
  if (corpus.clusters.empty()) throw Error(ErrorKind::Data, "corpus has no clusters: " + cfg.corpus_root.string());

  PipelineResources resources = PipelineResources::load(cfg.resource_paths());
  resources.tokenizer.keep_numbers = cfg.keep_numbers;
  const AbbreviationList abbreviations = AbbreviationList::load(cfg.abbreviations);
  const PipelineOptions options = cfg.pipeline_options();

  const std::size_t n = corpus.clusters.size();
  std::vector<std::optional<PreparedCluster>> prepared(n);
  std::vector<std::string> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    try {
      Cluster cluster = corpus.clusters[c];
      for (auto& doc : cluster.documents) doc = segment_document(std::move(doc), abbreviations);
      prepared[c] = prepare_cluster(cluster, resources, options);
    } catch (const std::exception& e) {
      errors[c] = e.what();
    }
  }

  PreparedCorpus out;
  for (std::size_t c = 0; c < n; ++c) {
    if (prepared[c]) {
      out.clusters.push_back(std::move(*prepared[c]));
    } else {
      out.failures.push_back(corpus.clusters[c].id + ": " + errors[c]);
      log << "cluster " << corpus.clusters[c].id << " failed: " << errors[c] << '\n';
    }
  }
  return out;
}

fs::path run_directory(const RunConfig& cfg) {
  const std::string manifest = cfg.canonical_text();
  const fs::path dir = cfg.output_dir / sha256_hex(manifest).substr(0, 16);
  write_file(dir / "config.txt", manifest);
  return dir;
}

int cmd_summarize(RunConfig cfg, std::ostream& log) {
  cfg.resolve();
  apply_workers(cfg);
  const PreparedCorpus corpus = prepare_corpus(cfg, log);
  if (corpus.clusters.empty()) throw Error(ErrorKind::Data, "no cluster could be prepared");
  const fs::path run = run_directory(cfg);

  struct Unit {
    std::size_t cluster;
    NetworkModel model;
    std::string measure;
  };
  std::vector<Unit> units;
  for (std::size_t c = 0; c < corpus.clusters.size(); ++c) {
    for (NetworkModel model : cfg.models()) {
      for (const auto& m : cfg.selected_measures()) units.push_back({c, model, m});
    }
  }

  struct Output {
    std::vector<std::pair<fs::path, std::string>> files;
    std::string error;
  };
  std::vector<Output> outputs(units.size());
  MeasureParams params = cfg.measure_params();
  params.exec = Execution::Serial;
  const auto ard_modes = cfg.ard_modes();

  const auto count = static_cast<std::ptrdiff_t>(units.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t u = 0; u < count; ++u) {
    const Unit& unit = units[u];
    const PreparedCluster& cluster = corpus.clusters[unit.cluster];
    try {
      const std::size_t budget = cfg.budget == BudgetMode::Reference
                                     ? cluster.reference_budget()
                                     : budget_from_compression(cluster.total_words, cfg.compression_rate);
      const ScoreVector scores = find_measure(unit.measure)->compute(cluster.network(unit.model), params);
      for (bool ard : ard_modes) {
        Summary summary = select(scores, cluster.sentences, cluster.vectors, {budget, ard, cfg.redundancy_limit});
        summary.cluster_id = cluster.id;
        summary.system = SystemSpec{unit.model, unit.measure, ard}.name();
        const fs::path base =
            run / "summaries" / cluster.id / std::string(to_string(unit.model)) / (ard ? "ard" : "plain");
        std::ostringstream meta;
        write_summary_metadata(meta, summary, cluster.sentences, &scores);
        outputs[u].files.emplace_back(base / (unit.measure + ".txt"), extract_text(summary, cluster.sentences));
        outputs[u].files.emplace_back(base / (unit.measure + ".json"), meta.str());
      }
    } catch (const std::exception& e) {
      outputs[u].error = e.what();
    }
  }

  std::size_t failures = corpus.failures.size();
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (const auto& [path, bytes] : outputs[u].files) write_file(path, bytes);
    if (!outputs[u].error.empty()) {
      ++failures;
      log << "cell " << corpus.clusters[units[u].cluster].id << ' ' << to_string(units[u].model) << ' '
          << units[u].measure << " failed: " << outputs[u].error << '\n';
    }
  }
  log << "summaries written to " << (run / "summaries").string() << '\n';
  return failures ? kExitPartial : kExitOk;
}

int cmd_evaluate(RunConfig cfg, std::ostream& log) {
  cfg.resolve();
  apply_workers(cfg);
  const PreparedCorpus corpus = prepare_corpus(cfg, log);
  const auto systems = cfg.systems();

  EvaluationOptions options;
  options.measure_params = cfg.measure_params();
  options.redundancy_limit = cfg.redundancy_limit;
  options.seed = cfg.seed;
  options.random_runs = cfg.random_runs;
  options.config_fingerprint = cfg.fingerprint();
  const EvaluationReport report = run_matrix(corpus.clusters, systems, options);

  if (report.evaluable_clusters() == 0) {
    throw Error(ErrorKind::Data, "unevaluable: no cluster has a usable reference summary");
  }

  const fs::path dir = run_directory(cfg) / "evaluation";
  std::ostringstream text, tsv, cells;
  write_report_text(text, report);
  write_report_tsv(tsv, report);
  write_cells_tsv(cells, report);
  write_file(dir / "report.txt", text.str());
  write_file(dir / "report.tsv", tsv.str());
  write_file(dir / "cells.tsv", cells.str());

  std::size_t failed = 0;
  for (const auto& c : report.cells) {
    if (!c.recall) {
      ++failed;
      log << "cell " << c.cluster_id << ' ' << c.system << " failed: " << c.error << '\n';
    }
  }
  log << "report written to " << (dir / "report.txt").string() << '\n';
  return (failed || !corpus.failures.empty()) ? kExitPartial : kExitOk;
}

int cmd_inspect(RunConfig cfg, const std::string& cluster_id, std::ostream& log) {
  if (cluster_id.empty()) throw Error(ErrorKind::Config, "inspect needs a cluster id");
  cfg.cluster = cluster_id;
  cfg.resolve();
  apply_workers(cfg);
  const PreparedCorpus corpus = prepare_corpus(cfg, log);
  if (corpus.clusters.empty()) throw Error(ErrorKind::Data, corpus.failures.front());
  const PreparedCluster& cluster = corpus.clusters.front();
  const fs::path dir = run_directory(cfg) / "inspect" / cluster.id;
  const std::size_t n = cluster.sentences.size();

  std::ostringstream sentences;
  sentences << "node\tdoc\tindex\twords\tcontent_lemmas\tnouns\ttext\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = cluster.sentences[i];
    const auto& p = cluster.processed[i];
    std::string lemmas, nouns;
    for (const auto& l : p.content_lemmas) lemmas += (lemmas.empty() ? "" : " ") + l;
    for (const auto& l : p.noun_lemmas) nouns += (nouns.empty() ? "" : " ") + l;
    sentences << i << '\t' << s.doc_id << '\t' << s.index_in_doc << '\t' << s.word_count << '\t' << lemmas << '\t'
              << nouns << '\t' << s.text << '\n';
  }
  write_file(dir / "sentences.tsv", sentences.str());

  std::vector<std::string> terms(cluster.tfidf_model.size());
  for (const auto& [term, dim] : cluster.tfidf_model.vocabulary) terms[dim] = term;
  std::ostringstream vectors;
  vectors << "node\tterm\tweight\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [dim, w] : cluster.vectors[i].entries) vectors << i << '\t' << terms[dim] << '\t' << format_double(w) << '\n';
  }
  write_file(dir / "vectors.tsv", vectors.str());

  const MeasureParams params = cfg.measure_params();
  const auto measures = cfg.selected_measures();
  bool partial = false;
  for (NetworkModel model : cfg.models()) {
    const std::string tag(to_string(model));
    const SentenceNetwork& net = cluster.network(model);

    std::ostringstream edges;
    write_edge_list(edges, net);
    write_file(dir / ("edges-" + tag + ".tsv"), edges.str());

    std::vector<ScoreVector> scores;
    std::ostringstream table;
    table << "node";
    for (const auto& m : measures) {
      table << '\t' << m;
      try {
        scores.push_back(find_measure(m)->compute(net, params));
      } catch (const std::exception& e) {
        log << "measure " << m << " on " << tag << " failed: " << e.what() << '\n';
        partial = true;
        scores.emplace_back(m, Direction::HighestFirst, n);
        scores.back().defined.assign(n, false);
      }
    }
    table << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      table << i;
      for (const auto& s : scores) table << '\t' << score_cell(s, i);
      table << '\n';
    }
    write_file(dir / ("scores-" + tag + ".tsv"), table.str());

    for (int h : cfg.h_levels) {
      std::ostringstream walks;
      walks << "origin\ttarget\tprobability\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [target, p] : saw_distribution(net, i, h).probs) {
          walks << i << '\t' << target << '\t' << format_double(p) << '\n';
        }
      }
      write_file(dir / ("walks-" + tag + "-h" + std::to_string(h) + ".tsv"), walks.str());
    }
  }
  log << "inspection written to " << dir.string() << '\n';
  return partial ? kExitPartial : kExitOk;
}

}  // namespace mds
