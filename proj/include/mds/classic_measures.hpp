#pragma once

#include <Eigen/Dense>

#include "mds/network.hpp"
#include "mds/score_vector.hpp"

// Traditional centrality measurements. Every function requires a network of
// at least two nodes and throws Error(Data) otherwise.
namespace mds {

/// Number of incident edges ("Dg").
ScoreVector degree(const SentenceNetwork& net);

/// Sum of incident edge weights ("Stg").
ScoreVector strength(const SentenceNetwork& net);

/// Local clustering coefficient ("CC"), or Barrat's weighted form ("CC-w"):
///   C_i = 1 / (s_i (k_i - 1)) * sum_{j,h} (w_ij + w_ih) / 2 * a_ij a_ih a_jh
/// Isolated nodes are undefined; degree-one nodes score 0.
ScoreVector clustering(const SentenceNetwork& net, bool weighted);

/// All-pairs shortest path lengths over `dist` (Dijkstra from every source).
Eigen::MatrixXd shortest_path_lengths(const DistanceMatrix& dist, Execution exec = Execution::Parallel);

/// Mean distance to the reachable nodes ("SP", "SP-w1", "SP-w2"), ranked
/// lowest first. Isolated nodes are undefined; nodes whose component holds
/// fewer than half of the network are flagged as demoted.
ScoreVector shortest_path_score(const SentenceNetwork& net, DistanceRule rule,
                                Execution exec = Execution::Parallel);

/// Brandes betweenness over unordered pairs ("Btw"); the weighted form
/// ("Btw-w") uses reciprocal (W2) distances.
ScoreVector betweenness(const SentenceNetwork& net, bool weighted, Execution exec = Execution::Parallel);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;  // L1 change between iterations
  int max_iter = 200;
};

/// Power-iteration PageRank ("PR", "PR-w"). Weighted transitions are
/// proportional to the similarity weights; dangling nodes teleport
/// uniformly. Throws ConvergenceError when max_iter is exhausted.
ScoreVector pagerank(const SentenceNetwork& net, bool weighted, const PageRankOptions& options = {});

}  // namespace mds
