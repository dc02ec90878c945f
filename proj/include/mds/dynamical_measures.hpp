#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "mds/network.hpp"
#include "mds/score_vector.hpp"

// Random-walk based measurements: concentric indices, accessibility,
// generalized accessibility, backbone/merged symmetry and absorption time.
// All walks run on the unweighted topology.
namespace mds {

/// rings[d] holds the nodes at hop distance exactly d from center, for
/// d = 0..hmax. level[v] is the hop distance of v, or -1 when v is farther
/// than hmax or unreachable.
struct ConcentricDecomposition {
  std::size_t center = 0;
  std::vector<std::vector<std::size_t>> rings;
  std::vector<int> level;

  /// Ring d, empty when d is beyond the decomposition.
  const std::vector<std::size_t>& ring(int d) const;
};

ConcentricDecomposition concentric_rings(const SentenceNetwork& net, std::size_t center, int hmax);

enum class ConcentricIndex {
  NodeCount = 1,     // |R_d|
  EdgeCount,         // edges inside R_d
  NodeDegree,        // edges from R_d to R_{d+1}
  Clustering,        // EdgeCount / (|R_d| (|R_d| - 1) / 2)
  ConvergenceRatio,  // NodeDegree / |R_{d+1}|
  IntraRingDegree,   // 2 EdgeCount / |R_d|
  InterRingDegree,   // NodeDegree / |R_d|
  CommonDegree,      // mean full degree of the nodes in R_d
};

/// Value of one concentric index at ring d >= 1. `rings` must extend at
/// least to d + 1. Empty rings and zero denominators give 0.
double concentric_index(const SentenceNetwork& net, const ConcentricDecomposition& rings, int d,
                        ConcentricIndex which);
double concentric_index(const SentenceNetwork& net, std::size_t center, int d, ConcentricIndex which);

/// "Conc-k" scores at hierarchical level h.
ScoreVector concentric_scores(const SentenceNetwork& net, int h, ConcentricIndex which,
                              Execution exec = Execution::Parallel);

/// Endpoint probabilities of h-step self-avoiding random walks. At each step
/// the walker moves uniformly to an unvisited neighbour; walks with no
/// unvisited neighbour before step h are dropped, so the mass may be < 1.
struct WalkDistribution {
  std::size_t origin = 0;
  int h = 0;
  std::map<std::size_t, double> probs;

  double mass() const;
};

WalkDistribution saw_distribution(const SentenceNetwork& net, std::size_t origin, int h);

/// exp(-sum p ln p) over the distribution as given (no renormalization);
/// 0 for an empty distribution.
double accessibility(const WalkDistribution& dist);
double accessibility(const SentenceNetwork& net, std::size_t node, int h);

/// "Access(h)" scores.
ScoreVector accessibility_scores(const SentenceNetwork& net, int h, Execution exec = Execution::Parallel);

/// Row-stochastic uniform random-walk matrix over the unweighted edges.
/// Rows of isolated nodes are zero.
Eigen::MatrixXd transition_matrix(const SentenceNetwork& net);

/// "GAccess": exp(entropy) of the rows of exp(T) / e. Isolated nodes are
/// undefined and score 0.
ScoreVector generalized_accessibility(const SentenceNetwork& net);

enum class SymmetryVariant {
  Backbone,  // intra-ring edges removed
  Merged,    // intra-ring connected components contracted into one unit
};

/// Outward concentric walk distribution over the level-h units. For
/// Backbone the units are the nodes of R_h; for Merged they are the
/// contracted intra-ring components of level h, keyed by their smallest
/// member. Transitions are uniform over outward edges (parallel edges of a
/// merged unit count with multiplicity).
WalkDistribution concentric_walk(const SentenceNetwork& net, std::size_t origin, int h, SymmetryVariant variant);

/// exp(entropy) / |xi| where xi is the set of level-h units and the walk
/// distribution is renormalized over them. 0 when xi is empty.
double symmetry(const SentenceNetwork& net, std::size_t node, int h, SymmetryVariant variant);

/// "HSymBb", "HSymMg", "LSymBb", "LSymMg" at level h, per `direction`.
ScoreVector symmetry_scores(const SentenceNetwork& net, int h, SymmetryVariant variant, Direction direction,
                            Execution exec = Execution::Parallel);

/// Mean steps to absorption at `target` for walkers started at every other
/// node of target's component: solves (I - Q) tau = 1. Entries outside the
/// component (and the target itself) are 0.
std::vector<double> absorption_times_to(const SentenceNetwork& net, std::size_t target);

/// "AbsT": mean of absorption_times_to(i) over i's component, lowest first.
/// Nodes in singleton components are undefined.
ScoreVector absorption_time(const SentenceNetwork& net, Execution exec = Execution::Parallel);

}  // namespace mds
