#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mds/text_pipeline.hpp"
#include "mds/vectorizer.hpp"

namespace mds {

enum class NetworkModel { Noun, TfIdf };
enum class DistanceRule { Unit, W1, W2 };

std::string_view to_string(NetworkModel model);
std::string_view to_string(DistanceRule rule);

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Weighted undirected graph over sentence nodes. Edge (i, j) exists iff
/// weight(i, j) > 0. The weight matrix is validated on construction:
/// square, symmetric, non-negative, zero diagonal.
class SentenceNetwork {
 public:
  SentenceNetwork(NetworkModel model, Eigen::MatrixXd weights, std::vector<SentenceRef> nodes = {});

  NetworkModel model() const { return model_; }
  std::size_t size() const { return static_cast<std::size_t>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  const std::vector<SentenceRef>& nodes() const { return nodes_; }

  double weight(std::size_t i, std::size_t j) const { return weights_(i, j); }
  bool has_edge(std::size_t i, std::size_t j) const { return weights_(i, j) > 0.0; }
  /// Neighbours in increasing index order.
  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  std::size_t edge_count() const;
  double max_weight() const;

 private:
  NetworkModel model_;
  Eigen::MatrixXd weights_;
  std::vector<SentenceRef> nodes_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// d(i, j) per rule on edges, +inf for absent edges, 0 on the diagonal.
struct DistanceMatrix {
  DistanceRule rule = DistanceRule::Unit;
  Eigen::MatrixXd d;
};

/// weight(i, j) = sum over shared noun lemmas of min(count_i, count_j).
/// Throws Error(Data) for fewer than two sentences.
SentenceNetwork build_noun_network(std::span<const ProcessedSentence> sentences);

/// weight(i, j) = cosine(v_i, v_j) when it exceeds `threshold`, else 0.
SentenceNetwork build_tfidf_network(std::span<const SentenceVector> vectors, double threshold = 0.0);

/// Unit: 1 per edge. W1: w_max - w + 1. W2: 1 / w.
DistanceMatrix to_distances(const SentenceNetwork& net, DistanceRule rule);

/// Node i moves to position perm[i].
SentenceNetwork permuted(const SentenceNetwork& net, std::span<const std::size_t> perm);

/// Connected component id per node, numbered by smallest member.
std::vector<std::size_t> connected_components(const SentenceNetwork& net);

/// `i<TAB>j<TAB>weight` per edge with i < j, preceded by a `# nodes N model M` header.
void write_edge_list(std::ostream& out, const SentenceNetwork& net);
SentenceNetwork read_edge_list(std::istream& in);

}  // namespace mds
