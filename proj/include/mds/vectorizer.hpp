#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mds/text_pipeline.hpp"

namespace mds {

/// Unit counted by document frequency. Each sentence of the cluster is one
/// "document" by default.
enum class IdfUnit { Sentence, Document };

enum class IdfSmoothing {
  None,    // ln(N / df)
  Smooth,  // ln((1 + N) / (1 + df)) + 1
};

struct TfIdfOptions {
  IdfUnit unit = IdfUnit::Sentence;
  IdfSmoothing smoothing = IdfSmoothing::None;
};

struct TfIdfModel {
  std::map<std::string, std::size_t, std::less<>> vocabulary;  // lemma -> dimension, lexicographic
  std::vector<double> idf;
  std::size_t n_units = 0;

  std::size_t size() const { return idf.size(); }
};

/// Sparse non-negative vector; entries sorted by dimension, no stored zeros.
struct SentenceVector {
  SentenceRef sentence_ref;
  std::vector<std::pair<std::size_t, double>> entries;

  double weight(std::size_t dim) const;
  double norm() const;
  bool empty() const { return entries.empty(); }
};

/// Throws Error(Data) when every sentence is empty.
TfIdfModel fit_tfidf(std::span<const ProcessedSentence> sentences, const TfIdfOptions& options = {});

/// weight(t) = raw count of t in the sentence * idf(t).
SentenceVector vectorize(const ProcessedSentence& sentence, const TfIdfModel& model);

/// Cosine similarity, 0 when either vector has zero norm.
double cosine(const SentenceVector& u, const SentenceVector& v);

}  // namespace mds
