#include "mds/dynamical_measures.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mds/error.hpp"
#include "mds/matrix_exp.hpp"

namespace mds {

namespace {

void require_nodes(const SentenceNetwork& net, const char* measure) {
  if (net.size() < 2) throw Error(ErrorKind::Data, std::string(measure) + " needs a network with at least two nodes");
}

void require_level(int h) {
  if (h < 1) throw Error(ErrorKind::Config, "hierarchical level must be >= 1");
}

double exp_entropy(const std::map<std::size_t, double>& probs, double scale = 1.0) {
  double entropy = 0.0;
  for (const auto& [node, p] : probs) {
    const double q = p / scale;
    if (q > 0.0) entropy -= q * std::log(q);
  }
  return std::exp(entropy);
}

template <typename Kernel>
void for_each_node(std::size_t n, Execution exec, Kernel&& kernel) {
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) kernel(static_cast<std::size_t>(i));
}

void saw_step(const SentenceNetwork& net, std::size_t node, int remaining, double prob, std::vector<bool>& visited,
              std::map<std::size_t, double>& out) {
  if (remaining == 0) {
    out[node] += prob;
    return;
  }
  std::size_t open = 0;
  for (std::size_t v : net.neighbors(node)) open += visited[v] ? 0 : 1;
  if (open == 0) return;
  const double step = prob / static_cast<double>(open);
  for (std::size_t v : net.neighbors(node)) {
    if (visited[v]) continue;
    visited[v] = true;
    saw_step(net, v, remaining - 1, step, visited, out);
    visited[v] = false;
  }
}

// Smallest-member representative of each intra-ring component of level d.
std::vector<std::size_t> merge_units(const SentenceNetwork& net, const ConcentricDecomposition& rings) {
  std::vector<std::size_t> parent(net.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < net.size(); ++u) {
    if (rings.level[u] < 0) continue;
    for (std::size_t v : net.neighbors(u)) {
      if (rings.level[v] != rings.level[u]) continue;
      std::size_t a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> unit(net.size());
  for (std::size_t u = 0; u < net.size(); ++u) unit[u] = find(u);
  return unit;
}

}  // namespace

const std::vector<std::size_t>& ConcentricDecomposition::ring(int d) const {
  static const std::vector<std::size_t> kEmpty;
  return (d >= 0 && static_cast<std::size_t>(d) < rings.size()) ? rings[d] : kEmpty;
}

ConcentricDecomposition concentric_rings(const SentenceNetwork& net, std::size_t center, int hmax) {
  if (center >= net.size()) throw Error(ErrorKind::Data, "ring center is not a node of the network");
  ConcentricDecomposition out;
  out.center = center;
  out.level.assign(net.size(), -1);
  out.level[center] = 0;
  out.rings.push_back({center});
  for (int d = 0; d < hmax; ++d) {
    std::vector<std::size_t> next;
    for (std::size_t u : out.rings[d]) {
      for (std::size_t v : net.neighbors(u)) {
        if (out.level[v] >= 0) continue;
        out.level[v] = d + 1;
        next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end());
    out.rings.push_back(std::move(next));
  }
  return out;
}

double concentric_index(const SentenceNetwork& net, const ConcentricDecomposition& rings, int d,
                        ConcentricIndex which) {
  if (d < 1) throw Error(ErrorKind::Config, "concentric index needs d >= 1");
  const auto& ring = rings.ring(d);
  const auto& outer = rings.ring(d + 1);
  const auto n_ring = static_cast<double>(ring.size());
  const auto n_outer = static_cast<double>(outer.size());

  auto level_of = [&](std::size_t v) { return rings.level[v]; };
  double inner_edges = 0.0, outward_edges = 0.0, degree_sum = 0.0;
  for (std::size_t u : ring) {
    degree_sum += static_cast<double>(net.degree(u));
    for (std::size_t v : net.neighbors(u)) {
      if (level_of(v) == d && v > u) inner_edges += 1.0;
      if (level_of(v) == d + 1) outward_edges += 1.0;
    }
  }

  switch (which) {
    case ConcentricIndex::NodeCount: return n_ring;
    case ConcentricIndex::EdgeCount: return inner_edges;
    case ConcentricIndex::NodeDegree: return outward_edges;
    case ConcentricIndex::Clustering:
      return n_ring < 2 ? 0.0 : inner_edges / (n_ring * (n_ring - 1.0) / 2.0);
    case ConcentricIndex::ConvergenceRatio: return n_outer == 0 ? 0.0 : outward_edges / n_outer;
    case ConcentricIndex::IntraRingDegree: return n_ring == 0 ? 0.0 : 2.0 * inner_edges / n_ring;
    case ConcentricIndex::InterRingDegree: return n_ring == 0 ? 0.0 : outward_edges / n_ring;
    case ConcentricIndex::CommonDegree: return n_ring == 0 ? 0.0 : degree_sum / n_ring;
  }
  return 0.0;
}

double concentric_index(const SentenceNetwork& net, std::size_t center, int d, ConcentricIndex which) {
  return concentric_index(net, concentric_rings(net, center, d + 1), d, which);
}

ScoreVector concentric_scores(const SentenceNetwork& net, int h, ConcentricIndex which, Execution exec) {
  require_nodes(net, "concentric index");
  require_level(h);
  ScoreVector out("Conc-" + std::to_string(static_cast<int>(which)) + "-h" + std::to_string(h),
                  Direction::HighestFirst, net.size());
  for_each_node(net.size(), exec, [&](std::size_t i) { out.scores[i] = concentric_index(net, i, h, which); });
  return out;
}

double WalkDistribution::mass() const {
  double m = 0.0;
  for (const auto& [node, p] : probs) m += p;
  return m;
}

WalkDistribution saw_distribution(const SentenceNetwork& net, std::size_t origin, int h) {
  if (origin >= net.size()) throw Error(ErrorKind::Data, "walk origin is not a node of the network");
  require_level(h);
  WalkDistribution out{origin, h, {}};
  std::vector<bool> visited(net.size(), false);
  visited[origin] = true;
  saw_step(net, origin, h, 1.0, visited, out.probs);
  return out;
}

double accessibility(const WalkDistribution& dist) { return dist.probs.empty() ? 0.0 : exp_entropy(dist.probs); }

double accessibility(const SentenceNetwork& net, std::size_t node, int h) {
  return accessibility(saw_distribution(net, node, h));
}

ScoreVector accessibility_scores(const SentenceNetwork& net, int h, Execution exec) {
  require_nodes(net, "accessibility");
  ScoreVector out("Access-h" + std::to_string(h), Direction::HighestFirst, net.size());
  for_each_node(net.size(), exec, [&](std::size_t i) { out.scores[i] = accessibility(net, i, h); });
  return out;
}

Eigen::MatrixXd transition_matrix(const SentenceNetwork& net) {
  const std::size_t n = net.size();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = net.degree(i) == 0 ? 0.0 : 1.0 / static_cast<double>(net.degree(i));
    for (std::size_t j : net.neighbors(i)) t(i, j) = p;
  }
  return t;
}

ScoreVector generalized_accessibility(const SentenceNetwork& net) {
  require_nodes(net, "generalized accessibility");
  const std::size_t n = net.size();
  const Eigen::MatrixXd e = expm_pade(transition_matrix(net)) / std::numbers::e;
  ScoreVector out("GAccess", Direction::HighestFirst, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (net.degree(i) == 0) {
      out.defined[i] = false;
      continue;
    }
    const double row_sum = e.row(i).sum();
    double entropy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double p = e(i, j) / row_sum;
      if (p > 0.0) entropy -= p * std::log(p);
    }
    out.scores[i] = std::exp(entropy);
  }
  return out;
}

WalkDistribution concentric_walk(const SentenceNetwork& net, std::size_t origin, int h, SymmetryVariant variant) {
  require_level(h);
  const ConcentricDecomposition rings = concentric_rings(net, origin, h);
  std::vector<std::size_t> unit(net.size());
  if (variant == SymmetryVariant::Merged) {
    unit = merge_units(net, rings);
  } else {
    std::iota(unit.begin(), unit.end(), std::size_t{0});
  }

  // Probability of standing on each unit of the current level.
  std::map<std::size_t, double> current{{unit[origin], 1.0}};
  for (int d = 0; d < h; ++d) {
    // Outward edge multiplicities per (unit, next unit).
    std::map<std::size_t, std::map<std::size_t, double>> outward;
    for (std::size_t u : rings.ring(d)) {
      for (std::size_t v : net.neighbors(u)) {
        if (rings.level[v] == d + 1) outward[unit[u]][unit[v]] += 1.0;
      }
    }
    std::map<std::size_t, double> next;
    for (const auto& [from, p] : current) {
      auto it = outward.find(from);
      if (it == outward.end()) continue;  // dead end: mass is lost
      double total = 0.0;
      for (const auto& [to, m] : it->second) total += m;
      for (const auto& [to, m] : it->second) next[to] += p * m / total;
    }
    current = std::move(next);
  }

  WalkDistribution out{origin, h, std::move(current)};
  return out;
}

double symmetry(const SentenceNetwork& net, std::size_t node, int h, SymmetryVariant variant) {
  const WalkDistribution dist = concentric_walk(net, node, h, variant);
  const double mass = dist.mass();
  if (dist.probs.empty() || mass <= 0.0) return 0.0;
  // Every level-h unit is reached through some outward path, so the
  // support of the walk is exactly xi.
  return exp_entropy(dist.probs, mass) / static_cast<double>(dist.probs.size());
}

ScoreVector symmetry_scores(const SentenceNetwork& net, int h, SymmetryVariant variant, Direction direction,
                            Execution exec) {
  require_nodes(net, "symmetry");
  std::string name = direction == Direction::HighestFirst ? "HSym" : "LSym";
  name += variant == SymmetryVariant::Backbone ? "Bb" : "Mg";
  name += "-h" + std::to_string(h);
  ScoreVector out(std::move(name), direction, net.size());
  for_each_node(net.size(), exec, [&](std::size_t i) { out.scores[i] = symmetry(net, i, h, variant); });
  return out;
}

std::vector<double> absorption_times_to(const SentenceNetwork& net, std::size_t target) {
  if (target >= net.size()) throw Error(ErrorKind::Data, "absorbing node is not a node of the network");
  const auto comp = connected_components(net);
  std::vector<std::size_t> transient;
  std::vector<std::ptrdiff_t> slot(net.size(), -1);
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (v != target && comp[v] == comp[target]) {
      slot[v] = static_cast<std::ptrdiff_t>(transient.size());
      transient.push_back(v);
    }
  }
  std::vector<double> tau(net.size(), 0.0);
  if (transient.empty()) return tau;

  const auto m = static_cast<Eigen::Index>(transient.size());
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const std::size_t u = transient[a];
    const double p = 1.0 / static_cast<double>(net.degree(u));
    for (std::size_t v : net.neighbors(u)) {
      if (slot[v] >= 0) system(a, slot[v]) -= p;
    }
  }
  const Eigen::VectorXd steps = system.partialPivLu().solve(Eigen::VectorXd::Ones(m));
  if (!steps.allFinite() || (system * steps - Eigen::VectorXd::Ones(m)).cwiseAbs().maxCoeff() > 1e-6 * steps.maxCoeff()) {
    throw Error(ErrorKind::Numeric, "absorbing-chain system is singular");
  }
  for (Eigen::Index a = 0; a < m; ++a) tau[transient[a]] = steps[a];
  return tau;
}

ScoreVector absorption_time(const SentenceNetwork& net, Execution exec) {
  require_nodes(net, "absorption time");
  ScoreVector out("AbsT", Direction::LowestFirst, net.size());
  const auto comp = connected_components(net);
  std::vector<std::size_t> comp_size(net.size(), 0);
  for (std::size_t c : comp) ++comp_size[c];

  for (std::size_t i = 0; i < net.size(); ++i) out.defined[i] = comp_size[comp[i]] > 1;

  for_each_node(net.size(), exec, [&](std::size_t i) {
    const std::size_t others = comp_size[comp[i]] - 1;
    if (others == 0) return;
    const auto tau = absorption_times_to(net, i);
    double total = 0.0;
    for (std::size_t v = 0; v < net.size(); ++v) {
      if (v != i && comp[v] == comp[i]) total += tau[v];
    }
    out.scores[i] = total / static_cast<double>(others);
  });
  return out;
}

}  // namespace mds
