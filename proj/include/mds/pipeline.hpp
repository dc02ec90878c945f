#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mds/corpus.hpp"
#include "mds/network.hpp"
#include "mds/text_pipeline.hpp"
#include "mds/vectorizer.hpp"

namespace mds {

struct PipelineOptions {
  TfIdfOptions tfidf;
  double tfidf_threshold = 0.0;
};

/// A segmented cluster taken through preprocessing, vectorization and both
/// network models. Index i refers to the same sentence everywhere.
struct PreparedCluster {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<ProcessedSentence> processed;
  TfIdfModel tfidf_model;
  std::vector<SentenceVector> vectors;
  std::optional<SentenceNetwork> noun_network;
  std::optional<SentenceNetwork> tfidf_network;
  std::vector<std::string> references;
  std::size_t total_words = 0;

  const SentenceNetwork& network(NetworkModel model) const;

  /// Mean reference word count, rounded. Throws Error(Data) without references.
  std::size_t reference_budget() const;
};

/// Throws Error(Data) when the cluster has fewer than two sentences or no
/// content words at all.
PreparedCluster prepare_cluster(const Cluster& cluster, const PipelineResources& resources,
                                const PipelineOptions& options);

}  // namespace mds
