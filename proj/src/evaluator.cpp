#include "mds/evaluator.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "mds/error.hpp"
#include "mds/io.hpp"
#include "mds/text_pipeline.hpp"

namespace mds {

std::vector<std::string> rouge_tokens(std::string_view text) {
  return tokenize(text, TokenizerOptions{.keep_numbers = true, .strip_possessive = true});
}

double rouge1_recall(std::string_view candidate, std::span<const std::string> references) {
  if (references.empty()) throw Error(ErrorKind::Data, "ROUGE needs at least one reference");
  std::unordered_map<std::string, std::size_t> cand_counts;
  for (auto& t : rouge_tokens(candidate)) ++cand_counts[std::move(t)];

  double total = 0.0;
  for (const auto& ref : references) {
    std::unordered_map<std::string, std::size_t> ref_counts;
    std::size_t ref_len = 0;
    for (auto& t : rouge_tokens(ref)) {
      ++ref_counts[std::move(t)];
      ++ref_len;
    }
    if (ref_len == 0) throw Error(ErrorKind::Data, "ROUGE reference has no tokens");
    std::size_t matched = 0;
    for (const auto& [token, count] : ref_counts) {
      auto it = cand_counts.find(token);
      if (it != cand_counts.end()) matched += std::min(count, it->second);
    }
    total += static_cast<double>(matched) / static_cast<double>(ref_len);
  }
  return total / static_cast<double>(references.size());
}

Summary top_baseline(const PreparedCluster& cluster, std::size_t budget_words) {
  std::vector<std::size_t> order(cluster.sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Summary s = take_in_order(order, cluster.sentences, budget_words);
  s.cluster_id = cluster.id;
  s.system = std::string(kTopBaseline);
  return s;
}

Summary random_baseline(const PreparedCluster& cluster, std::size_t budget_words, std::uint64_t seed) {
  std::vector<std::size_t> order(cluster.sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  Summary s = take_in_order(order, cluster.sentences, budget_words);
  s.cluster_id = cluster.id;
  s.system = std::string(kRandomBaseline);
  return s;
}

std::string SystemSpec::name() const {
  return measure + "/" + std::string(to_string(model)) + "/" + (ard ? "ard" : "plain");
}

bool EvaluationReport::has_failures() const {
  return std::any_of(cells.begin(), cells.end(), [](const auto& c) { return !c.recall; });
}

std::size_t EvaluationReport::evaluable_clusters() const {
  std::size_t count = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t s = 0; s < systems.size(); ++s) {
      if (cell(c, s).recall) {
        ++count;
        break;
      }
    }
  }
  return count;
}

const EvaluationCell& EvaluationReport::cell(std::size_t cluster, std::size_t system) const {
  return cells.at(cluster * systems.size() + system);
}

namespace {

std::string candidate_text(const Summary& summary, const PreparedCluster& cluster) {
  return extract_text(summary, cluster.sentences);
}

// One unit of parallel work: a measure on one network of one cluster, which
// feeds the plain and the ARD cell that share its score vector.
struct WorkUnit {
  std::size_t cluster;
  NetworkModel model;
  std::string measure;
  std::vector<std::size_t> system_slots;  // indices into report.systems
};

}  // namespace

EvaluationReport run_matrix(std::span<const PreparedCluster> clusters, std::span<const SystemSpec> systems,
                            const EvaluationOptions& options) {
  if (systems.empty() && !options.include_baselines) throw Error(ErrorKind::Config, "no systems to evaluate");
  for (const auto& spec : systems) {
    if (!find_measure(spec.measure)) throw Error(ErrorKind::Config, "unknown measure '" + spec.measure + "'");
  }
  if (options.random_runs < 1) throw Error(ErrorKind::Config, "random_runs must be >= 1");

  EvaluationReport report;
  report.config_fingerprint = options.config_fingerprint;
  for (const auto& c : clusters) report.clusters.push_back(c.id);
  for (const auto& spec : systems) report.systems.push_back(spec.name());
  if (options.include_baselines) {
    report.systems.emplace_back(kTopBaseline);
    report.systems.emplace_back(kRandomBaseline);
  }
  const std::size_t n_sys = report.systems.size();
  report.cells.resize(clusters.size() * n_sys);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t s = 0; s < n_sys; ++s) report.cells[c * n_sys + s] = {clusters[c].id, report.systems[s], {}, {}};
  }

  std::vector<WorkUnit> units;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t s = 0; s < systems.size(); ++s) {
      auto it = std::find_if(units.begin(), units.end(), [&](const WorkUnit& u) {
        return u.cluster == c && u.model == systems[s].model && u.measure == systems[s].measure;
      });
      if (it == units.end()) {
        units.push_back({c, systems[s].model, systems[s].measure, {}});
        it = std::prev(units.end());
      }
      it->system_slots.push_back(s);
    }
  }

  MeasureParams params = options.measure_params;
  params.exec = Execution::Serial;

  const auto n_units = static_cast<std::ptrdiff_t>(units.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t u = 0; u < n_units; ++u) {
    const WorkUnit& unit = units[u];
    const PreparedCluster& cluster = clusters[unit.cluster];
    auto cell_at = [&](std::size_t slot) -> EvaluationCell& { return report.cells[unit.cluster * n_sys + slot]; };
    try {
      const std::size_t budget = cluster.reference_budget();
      const ScoreVector scores = find_measure(unit.measure)->compute(cluster.network(unit.model), params);
      for (std::size_t slot : unit.system_slots) {
        try {
          SelectionConfig cfg{budget, systems[slot].ard, options.redundancy_limit};
          Summary summary = select(scores, cluster.sentences, cluster.vectors, cfg);
          cell_at(slot).recall = rouge1_recall(candidate_text(summary, cluster), cluster.references);
        } catch (const std::exception& e) {
          cell_at(slot).error = e.what();
        }
      }
    } catch (const std::exception& e) {
      for (std::size_t slot : unit.system_slots) cell_at(slot).error = e.what();
    }
  }

  if (options.include_baselines) {
    const std::size_t top_slot = systems.size(), random_slot = systems.size() + 1;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      auto& top = report.cells[c * n_sys + top_slot];
      auto& random = report.cells[c * n_sys + random_slot];
      try {
        const std::size_t budget = clusters[c].reference_budget();
        top.recall = rouge1_recall(candidate_text(top_baseline(clusters[c], budget), clusters[c]), clusters[c].references);
        double sum = 0.0;
        for (std::size_t r = 0; r < options.random_runs; ++r) {
          const Summary s = random_baseline(clusters[c], budget, options.seed + r);
          sum += rouge1_recall(candidate_text(s, clusters[c]), clusters[c].references);
        }
        random.recall = sum / static_cast<double>(options.random_runs);
      } catch (const std::exception& e) {
        top.error = random.error = e.what();
      }
    }
  }

  for (std::size_t s = 0; s < n_sys; ++s) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (const auto& r = report.cells[c * n_sys + s].recall) {
        sum += *r;
        ++count;
      }
    }
    if (count > 0) report.per_system_mean[report.systems[s]] = sum / static_cast<double>(count);
  }
  return report;
}

namespace {

struct TableColumn {
  std::string title;
  std::string model;
  std::string ard;
};

const TableColumn kColumns[] = {
    {"Noun", "noun", "plain"}, {"Tf-Idf", "tfidf", "plain"}, {"Noun+ARD", "noun", "ard"}, {"Tf-Idf+ARD", "tfidf", "ard"}};

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

Table build_table(const EvaluationReport& report, int precision) {
  auto fmt = [&](const std::string& system) -> std::string {
    auto it = report.per_system_mean.find(system);
    if (it == report.per_system_mean.end()) return "NA";
    if (precision < 0) return format_double(it->second);
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << it->second;
    return s.str();
  };
  auto present = [&](const std::string& system) {
    return std::find(report.systems.begin(), report.systems.end(), system) != report.systems.end();
  };

  std::vector<const TableColumn*> columns;
  for (const auto& col : kColumns) {
    const bool used = std::any_of(report.systems.begin(), report.systems.end(), [&](const std::string& s) {
      return s.ends_with("/" + col.model + "/" + col.ard);
    });
    if (used) columns.push_back(&col);
  }

  Table t;
  t.headers.push_back("Measure");
  for (const auto* col : columns) t.headers.push_back(col->title);
  for (const auto& m : all_measures()) {
    std::vector<std::string> row{m.name};
    bool any = false;
    for (const auto* col : columns) {
      const std::string system = m.name + "/" + col->model + "/" + col->ard;
      any = any || present(system);
      row.push_back(present(system) ? fmt(system) : "-");
    }
    if (any) t.rows.push_back(std::move(row));
  }
  for (std::string_view baseline : {kTopBaseline, kRandomBaseline}) {
    const std::string name(baseline);
    if (!present(name)) continue;
    std::vector<std::string> row{name};
    for (std::size_t i = 0; i < columns.size(); ++i) row.push_back(i == 0 ? fmt(name) : "-");
    if (columns.empty()) row.push_back(fmt(name));
    t.rows.push_back(std::move(row));
  }
  if (columns.empty()) t.headers.push_back("RG1");
  return t;
}

}  // namespace

void write_report_text(std::ostream& out, const EvaluationReport& report) {
  out << "# ROUGE-1 recall (mean over evaluable clusters)\n";
  out << "# tokenizer: lowercase, punctuation stripped, digits kept; stemming off; stopwords kept\n";
  out << "# multiple references: mean of per-reference recall\n";
  out << "# clusters: " << report.clusters.size() << " (evaluable: " << report.evaluable_clusters() << ")\n";
  out << "# config: " << report.config_fingerprint << "\n";

  const Table t = build_table(report, 4);
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 0) {
        out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[i])) << cells[i];
      }
    }
    out << '\n';
  };
  line(t.headers);
  for (const auto& row : t.rows) line(row);
}

void write_report_tsv(std::ostream& out, const EvaluationReport& report) {
  const Table t = build_table(report, -1);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << (cells[i] == "-" ? "NA" : cells[i]);
    out << '\n';
  };
  line(t.headers);
  for (const auto& row : t.rows) line(row);
}

void write_cells_tsv(std::ostream& out, const EvaluationReport& report) {
  out << "cluster\tsystem\trouge1_recall\terror\n";
  for (const auto& c : report.cells) {
    out << c.cluster_id << '\t' << c.system << '\t' << (c.recall ? format_double(*c.recall) : "NA") << '\t'
        << c.error << '\n';
  }
}

}  // namespace mds
