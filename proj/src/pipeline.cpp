#include "mds/pipeline.hpp"

#include <cmath>

#include "mds/error.hpp"

namespace mds {

const SentenceNetwork& PreparedCluster::network(NetworkModel model) const {
  const auto& net = model == NetworkModel::Noun ? noun_network : tfidf_network;
  if (!net) throw Error(ErrorKind::Data, "cluster '" + id + "' has no " + std::string(to_string(model)) + " network");
  return *net;
}

std::size_t PreparedCluster::reference_budget() const {
  if (references.empty()) throw Error(ErrorKind::Data, "cluster '" + id + "' is unevaluable: no reference summary");
  double total = 0.0;
  for (const auto& ref : references) total += static_cast<double>(count_words(ref));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(total / static_cast<double>(references.size()))));
}

PreparedCluster prepare_cluster(const Cluster& cluster, const PipelineResources& resources,
                                const PipelineOptions& options) {
  PreparedCluster out;
  out.id = cluster.id;
  out.sentences = cluster_sentences(cluster);
  if (out.sentences.size() < 2) {
    throw Error(ErrorKind::Data, "cluster '" + cluster.id + "' has fewer than two sentences");
  }
  out.processed.reserve(out.sentences.size());
  for (const auto& s : out.sentences) {
    out.processed.push_back(preprocess(s, resources));
    out.total_words += s.word_count;
  }
  out.tfidf_model = fit_tfidf(out.processed, options.tfidf);
  out.vectors.reserve(out.processed.size());
  for (const auto& p : out.processed) out.vectors.push_back(vectorize(p, out.tfidf_model));
  out.noun_network = build_noun_network(out.processed);
  out.tfidf_network = build_tfidf_network(out.vectors, options.tfidf_threshold);
  for (const auto& ref : cluster.references) out.references.push_back(ref.text);
  return out;
}

}  // namespace mds
