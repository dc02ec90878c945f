#include "mds/network.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mds/error.hpp"
#include "mds/io.hpp"

namespace mds {

std::string_view to_string(NetworkModel model) { return model == NetworkModel::Noun ? "noun" : "tfidf"; }

std::string_view to_string(DistanceRule rule) {
  switch (rule) {
    case DistanceRule::Unit: return "unit";
    case DistanceRule::W1: return "w1";
    case DistanceRule::W2: return "w2";
  }
  return "unit";
}

SentenceNetwork::SentenceNetwork(NetworkModel model, Eigen::MatrixXd weights, std::vector<SentenceRef> nodes)
    : model_(model), weights_(std::move(weights)), nodes_(std::move(nodes)) {
  const auto n = weights_.rows();
  if (weights_.cols() != n) throw Error(ErrorKind::Data, "network weight matrix must be square");
  if (!nodes_.empty() && static_cast<Eigen::Index>(nodes_.size()) != n) {
    throw Error(ErrorKind::Data, "network node list does not match the weight matrix");
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) throw Error(ErrorKind::Data, "network weight matrix must have a zero diagonal");
    for (Eigen::Index j = 0; j < n; ++j) {
      const double w = weights_(i, j);
      if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::Data, "network weights must be finite and >= 0");
      if (w != weights_(j, i)) throw Error(ErrorKind::Data, "network weight matrix must be symmetric");
      if (w > 0.0) adjacency_[i].push_back(static_cast<std::size_t>(j));
    }
  }
}

std::size_t SentenceNetwork::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency_) twice += adj.size();
  return twice / 2;
}

double SentenceNetwork::max_weight() const { return size() == 0 ? 0.0 : weights_.maxCoeff(); }

SentenceNetwork build_noun_network(std::span<const ProcessedSentence> sentences) {
  const std::size_t n = sentences.size();
  if (n < 2) throw Error(ErrorKind::Data, "a sentence network needs at least two sentences");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  std::vector<SentenceRef> nodes;
  nodes.reserve(n);
  for (const auto& s : sentences) nodes.push_back(s.sentence_ref);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t shared = 0;
      for (const auto& noun : sentences[i].noun_lemmas) {
        if (sentences[j].noun_lemmas.contains(noun)) {
          shared += std::min(sentences[i].count(noun), sentences[j].count(noun));
        }
      }
      w(i, j) = w(j, i) = static_cast<double>(shared);
    }
  }
  return SentenceNetwork(NetworkModel::Noun, std::move(w), std::move(nodes));
}

SentenceNetwork build_tfidf_network(std::span<const SentenceVector> vectors, double threshold) {
  const std::size_t n = vectors.size();
  if (n < 2) throw Error(ErrorKind::Data, "a sentence network needs at least two sentences");
  if (!(threshold >= 0.0)) throw Error(ErrorKind::Config, "tf-idf edge threshold must be >= 0");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  std::vector<SentenceRef> nodes;
  nodes.reserve(n);
  for (const auto& v : vectors) nodes.push_back(v.sentence_ref);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sim = cosine(vectors[i], vectors[j]);
      if (sim > threshold) w(i, j) = w(j, i) = sim;
    }
  }
  return SentenceNetwork(NetworkModel::TfIdf, std::move(w), std::move(nodes));
}

DistanceMatrix to_distances(const SentenceNetwork& net, DistanceRule rule) {
  const std::size_t n = net.size();
  DistanceMatrix out{rule, Eigen::MatrixXd::Constant(n, n, kUnreachable)};
  const double w_max = net.max_weight();
  for (std::size_t i = 0; i < n; ++i) {
    out.d(i, i) = 0.0;
    for (std::size_t j : net.neighbors(i)) {
      const double w = net.weight(i, j);
      switch (rule) {
        case DistanceRule::Unit: out.d(i, j) = 1.0; break;
        case DistanceRule::W1: out.d(i, j) = w_max - w + 1.0; break;
        case DistanceRule::W2: out.d(i, j) = 1.0 / w; break;
      }
    }
  }
  return out;
}

SentenceNetwork permuted(const SentenceNetwork& net, std::span<const std::size_t> perm) {
  const std::size_t n = net.size();
  if (perm.size() != n) throw Error(ErrorKind::Data, "permutation size does not match the network");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(perm[i], perm[j]) = net.weight(i, j);
  }
  std::vector<SentenceRef> nodes;
  if (!net.nodes().empty()) {
    nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) nodes[perm[i]] = net.nodes()[i];
  }
  return SentenceNetwork(net.model(), std::move(w), std::move(nodes));
}

std::vector<std::size_t> connected_components(const SentenceNetwork& net) {
  const std::size_t n = net.size();
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kNone);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : net.neighbors(u)) {
        if (comp[v] == kNone) {
          comp[v] = s;
          stack.push_back(v);
        }
      }
    }
  }
  return comp;
}

void write_edge_list(std::ostream& out, const SentenceNetwork& net) {
  out << "# nodes " << net.size() << " model " << to_string(net.model()) << '\n';
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j : net.neighbors(i)) {
      if (j > i) out << i << '\t' << j << '\t' << format_double(net.weight(i, j)) << '\n';
    }
  }
}

SentenceNetwork read_edge_list(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  NetworkModel model = NetworkModel::Noun;
  bool have_header = false;
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line.front() == '#') {
      std::string hash, key_nodes, key_model, model_name;
      if (fields >> hash >> key_nodes >> n >> key_model >> model_name && key_nodes == "nodes") {
        have_header = true;
        model = model_name == "tfidf" ? NetworkModel::TfIdf : NetworkModel::Noun;
      }
      continue;
    }
    std::size_t i = 0, j = 0;
    double w = 0.0;
    if (!(fields >> i >> j >> w)) throw Error(ErrorKind::Data, "malformed edge list line: " + line);
    edges.emplace_back(i, j, w);
  }
  if (!have_header) throw Error(ErrorKind::Data, "edge list is missing the '# nodes N model M' header");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (auto [i, j, weight] : edges) {
    if (i >= n || j >= n) throw Error(ErrorKind::Data, "edge list node index out of range");
    w(i, j) = w(j, i) = weight;
  }
  return SentenceNetwork(model, std::move(w));
}

}  // namespace mds
