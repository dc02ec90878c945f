#pragma once

// Brute-force references for the classic measures. Shortest paths and
// betweenness come from exhaustive simple-path enumeration; PageRank from a
// dense linear solve.

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "mds/network.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double edge_length(const mds::SentenceNetwork& net, std::size_t i, std::size_t j, mds::DistanceRule rule) {
  const double w = net.weight(i, j);
  switch (rule) {
    case mds::DistanceRule::Unit: return 1.0;
    case mds::DistanceRule::W1: return net.weights().maxCoeff() - w + 1.0;
    case mds::DistanceRule::W2: return 1.0 / w;
  }
  return kInf;
}

namespace detail {

inline bool same_length(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

struct PathWalker {
  const mds::SentenceNetwork& net;
  mds::DistanceRule rule;
  std::vector<double>& best;
  std::vector<char> on_path;
  std::vector<std::size_t> path;

  // Every simple path from the start; keeps the minimum length per end node.
  void explore(std::size_t u, double len) {
    if (len < best[u]) best[u] = len;
    for (std::size_t v = 0; v < net.size(); ++v) {
      if (v == u || on_path[v] || !net.has_edge(u, v)) continue;
      on_path[v] = 1;
      explore(v, len + edge_length(net, u, v, rule));
      on_path[v] = 0;
    }
  }
};

}  // namespace detail

// all_pairs[s][t] = minimum simple-path length, kInf if unreachable.
inline std::vector<std::vector<double>> brute_distances(const mds::SentenceNetwork& net, mds::DistanceRule rule) {
  const std::size_t n = net.size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, kInf));
  for (std::size_t s = 0; s < n; ++s) {
    detail::PathWalker walker{net, rule, out[s], std::vector<char>(n, 0), {}};
    walker.on_path[s] = 1;
    walker.explore(s, 0.0);
  }
  return out;
}

// Mean distance to reachable nodes; NaN when nothing is reachable.
inline std::vector<double> brute_sp_score(const mds::SentenceNetwork& net, mds::DistanceRule rule) {
  const auto d = brute_distances(net, rule);
  std::vector<double> out(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (j != i && d[i][j] != kInf) {
        sum += d[i][j];
        ++count;
      }
    }
    out[i] = count ? sum / count : std::nan("");
  }
  return out;
}

// Unordered-pair betweenness: for every pair {s, t}, each intermediate node
// gets (shortest paths through it) / (shortest paths).
inline std::vector<double> brute_betweenness(const mds::SentenceNetwork& net, bool weighted) {
  const auto rule = weighted ? mds::DistanceRule::W2 : mds::DistanceRule::Unit;
  const std::size_t n = net.size();
  const auto d = brute_distances(net, rule);
  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> count(n, 0.0);
    std::vector<std::vector<double>> through(n, std::vector<double>(n, 0.0));
    std::vector<char> on_path(n, 0);
    std::vector<std::size_t> path{s};
    on_path[s] = 1;
    // Depth-first over simple paths. A prefix of a shortest path is a
    // shortest path, so longer prefixes are cut.
    auto rec = [&](auto&& self, std::size_t u, double len) -> void {
      if (u != s && !detail::same_length(len, d[s][u])) return;
      if (u != s) {
        count[u] += 1.0;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) through[u][path[k]] += 1.0;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (on_path[v] || !net.has_edge(u, v)) continue;
        on_path[v] = 1;
        path.push_back(v);
        self(self, v, len + edge_length(net, u, v, rule));
        path.pop_back();
        on_path[v] = 0;
      }
    };
    rec(rec, s, 0.0);
    for (std::size_t t = s + 1; t < n; ++t) {
      if (count[t] == 0.0) continue;
      for (std::size_t v = 0; v < n; ++v) out[v] += through[t][v] / count[t];
    }
  }
  return out;
}

// Barrat clustering from its ordered-pair definition; NaN for isolated
// nodes, 0 for degree one.
inline std::vector<double> brute_clustering(const mds::SentenceNetwork& net, bool weighted) {
  const std::size_t n = net.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double k = 0.0, s = 0.0, acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!net.has_edge(i, j)) continue;
      k += 1.0;
      s += net.weight(i, j);
    }
    if (k == 0.0) {
      out[i] = std::nan("");
      continue;
    }
    if (k < 2.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t h = 0; h < n; ++h) {
        if (j == h || !net.has_edge(i, j) || !net.has_edge(i, h) || !net.has_edge(j, h)) continue;
        acc += weighted ? (net.weight(i, j) + net.weight(i, h)) / 2.0 : 1.0;
      }
    }
    out[i] = weighted ? acc / (s * (k - 1.0)) : acc / (k * (k - 1.0));
  }
  return out;
}

// Stationary vector of the damped chain: (I - d M) x = (1 - d)/n, where M
// is column-stochastic and dangling columns are uniform.
inline std::vector<double> dense_pagerank(const mds::SentenceNetwork& net, bool weighted, double damping) {
  const auto n = static_cast<Eigen::Index>(net.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (net.weights()(i, j) > 0.0) total += weighted ? net.weights()(i, j) : 1.0;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (total == 0.0) {
        m(j, i) = 1.0 / static_cast<double>(n);
      } else if (net.weights()(i, j) > 0.0) {
        m(j, i) = (weighted ? net.weights()(i, j) : 1.0) / total;
      }
    }
  }
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - damping * m;
  const Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  const double total = x.sum();
  std::vector<double> out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = x[i] / total;
  return out;
}

}  // namespace oracle
