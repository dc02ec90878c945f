#include "mds/classic_measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mds/error.hpp"

namespace mds {

std::string_view to_string(Direction direction) {
  return direction == Direction::HighestFirst ? "highest" : "lowest";
}

namespace {

void require_nodes(const SentenceNetwork& net, const char* measure) {
  if (net.size() < 2) throw Error(ErrorKind::Data, std::string(measure) + " needs a network with at least two nodes");
}

// Path lengths closer than this (relative) are treated as equal, so that
// floating-point sums of the same lengths in different order still tie.
bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

struct SingleSource {
  std::vector<double> dist;
  std::vector<double> sigma;                      // number of shortest paths
  std::vector<std::vector<std::size_t>> preds;    // shortest-path predecessors
  std::vector<std::size_t> order;                 // settled nodes, non-decreasing distance
};

// O(n^2) Dijkstra over the dense distance matrix. Ties are broken by node
// index when picking the next node.
SingleSource dijkstra(const Eigen::MatrixXd& d, std::size_t source) {
  const auto n = static_cast<std::size_t>(d.rows());
  SingleSource r{std::vector<double>(n, kUnreachable), std::vector<double>(n, 0.0),
                 std::vector<std::vector<std::size_t>>(n), {}};
  std::vector<bool> settled(n, false);
  r.dist[source] = 0.0;
  r.sigma[source] = 1.0;
  r.order.reserve(n);
  for (;;) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!settled[v] && r.dist[v] != kUnreachable && (u == n || r.dist[v] < r.dist[u])) u = v;
    }
    if (u == n) break;
    settled[u] = true;
    r.order.push_back(u);
    for (std::size_t v = 0; v < n; ++v) {
      const double w = d(u, v);
      if (v == u || settled[v] || w == kUnreachable) continue;
      const double alt = r.dist[u] + w;
      if (r.dist[v] == kUnreachable || (alt < r.dist[v] && !nearly_equal(alt, r.dist[v]))) {
        r.dist[v] = alt;
        r.sigma[v] = r.sigma[u];
        r.preds[v].assign(1, u);
      } else if (nearly_equal(alt, r.dist[v])) {
        r.sigma[v] += r.sigma[u];
        r.preds[v].push_back(u);
      }
    }
  }
  return r;
}

// Brandes dependency of `source` on every node.
std::vector<double> source_dependency(const Eigen::MatrixXd& d, std::size_t source) {
  const SingleSource sp = dijkstra(d, source);
  std::vector<double> delta(sp.dist.size(), 0.0);
  for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
    const std::size_t w = *it;
    for (std::size_t v : sp.preds[w]) delta[v] += sp.sigma[v] / sp.sigma[w] * (1.0 + delta[w]);
  }
  delta[source] = 0.0;
  return delta;
}

}  // namespace

ScoreVector degree(const SentenceNetwork& net) {
  require_nodes(net, "degree");
  ScoreVector out("Dg", Direction::HighestFirst, net.size());
  for (std::size_t i = 0; i < net.size(); ++i) out.scores[i] = static_cast<double>(net.degree(i));
  return out;
}

ScoreVector strength(const SentenceNetwork& net) {
  require_nodes(net, "strength");
  ScoreVector out("Stg", Direction::HighestFirst, net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    double s = 0.0;
    for (std::size_t j : net.neighbors(i)) s += net.weight(i, j);
    out.scores[i] = s;
  }
  return out;
}

ScoreVector clustering(const SentenceNetwork& net, bool weighted) {
  require_nodes(net, "clustering");
  ScoreVector out(weighted ? "CC-w" : "CC", Direction::HighestFirst, net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto nb = net.neighbors(i);
    const std::size_t k = nb.size();
    if (k == 0) {
      out.defined[i] = false;
      continue;
    }
    if (k == 1) continue;
    double closed = 0.0;  // unordered neighbour pairs (j, h) that are linked
    double s = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      s += net.weight(i, nb[a]);
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!net.has_edge(nb[a], nb[b])) continue;
        closed += weighted ? net.weight(i, nb[a]) + net.weight(i, nb[b]) : 1.0;
      }
    }
    const auto kd = static_cast<double>(k);
    out.scores[i] = weighted ? closed / (s * (kd - 1.0)) : 2.0 * closed / (kd * (kd - 1.0));
  }
  return out;
}

Eigen::MatrixXd shortest_path_lengths(const DistanceMatrix& dist, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(dist.d.rows());
  Eigen::MatrixXd out(n, n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto sp = dijkstra(dist.d, static_cast<std::size_t>(s));
    for (std::ptrdiff_t t = 0; t < n; ++t) out(s, t) = sp.dist[t];
  }
  return out;
}

ScoreVector shortest_path_score(const SentenceNetwork& net, DistanceRule rule, Execution exec) {
  require_nodes(net, "shortest paths");
  static constexpr const char* kNames[] = {"SP", "SP-w1", "SP-w2"};
  ScoreVector out(kNames[static_cast<int>(rule)], Direction::LowestFirst, net.size());
  const Eigen::MatrixXd lengths = shortest_path_lengths(to_distances(net, rule), exec);
  const std::size_t n = net.size();
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    std::size_t reached = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || lengths(i, j) == kUnreachable) continue;
      sum += lengths(i, j);
      ++reached;
    }
    if (reached == 0) {
      out.defined[i] = false;
      continue;
    }
    out.scores[i] = sum / static_cast<double>(reached);
    out.demoted[i] = 2 * (reached + 1) < n;
  }
  return out;
}

ScoreVector betweenness(const SentenceNetwork& net, bool weighted, Execution exec) {
  require_nodes(net, "betweenness");
  const DistanceMatrix dist = to_distances(net, weighted ? DistanceRule::W2 : DistanceRule::Unit);
  const auto n = static_cast<std::ptrdiff_t>(net.size());

  // Per-source dependencies are summed in source order afterwards so that
  // serial and parallel runs agree bit for bit.
  std::vector<std::vector<double>> dependency(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t s = 0; s < n; ++s) dependency[s] = source_dependency(dist.d, static_cast<std::size_t>(s));

  ScoreVector out(weighted ? "Btw-w" : "Btw", Direction::HighestFirst, net.size());
  for (const auto& delta : dependency) {
    for (std::ptrdiff_t v = 0; v < n; ++v) out.scores[v] += delta[v];
  }
  // Each unordered pair was counted from both endpoints.
  for (auto& s : out.scores) s /= 2.0;
  return out;
}

ScoreVector pagerank(const SentenceNetwork& net, bool weighted, const PageRankOptions& options) {
  require_nodes(net, "pagerank");
  if (!(options.damping >= 0.0 && options.damping < 1.0)) throw Error(ErrorKind::Config, "pagerank damping must be in [0, 1)");
  if (!(options.tol > 0.0) || options.max_iter < 1) throw Error(ErrorKind::Config, "pagerank tol and max_iter must be positive");

  const std::size_t n = net.size();
  const auto nd = static_cast<double>(n);
  std::vector<double> out_weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : net.neighbors(i)) out_weight[i] += weighted ? net.weight(i, j) : 1.0;
  }

  std::vector<double> x(n, 1.0 / nd), next(n);
  double residual = 0.0;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (out_weight[i] == 0.0) dangling += x[i];
    }
    const double base = (1.0 - options.damping) / nd + options.damping * dangling / nd;
    for (std::size_t j = 0; j < n; ++j) {
      double in = 0.0;
      for (std::size_t i : net.neighbors(j)) in += x[i] * (weighted ? net.weight(i, j) : 1.0) / out_weight[i];
      next[j] = base + options.damping * in;
    }
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += std::abs(next[i] - x[i]);
    x.swap(next);
    if (residual < options.tol) {
      ScoreVector result(weighted ? "PR-w" : "PR", Direction::HighestFirst, n);
      double total = 0.0;
      for (double v : x) total += v;
      for (std::size_t i = 0; i < n; ++i) result.scores[i] = x[i] / total;
      return result;
    }
  }
  throw ConvergenceError("pagerank did not converge in " + std::to_string(options.max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual);
}

}  // namespace mds
