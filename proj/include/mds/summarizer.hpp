#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mds/corpus.hpp"
#include "mds/score_vector.hpp"
#include "mds/vectorizer.hpp"

namespace mds {

struct SelectionConfig {
  std::size_t budget_words = 1;
  bool ard_enabled = false;
  /// Cosine limit for anti-redundancy detection; nullopt computes it from
  /// the cluster (redundancy_limit()).
  std::optional<double> redundancy_limit;
};

struct Summary {
  std::string cluster_id;
  std::string system;
  std::vector<std::size_t> selected;  // selection order
  std::vector<std::size_t> skipped_redundant;
  std::size_t emitted_word_count = 0;
  std::size_t budget_words = 0;
  bool truncated = false;  // candidates ran out before the budget was met
  std::optional<double> redundancy_limit;

  /// Selected sentences in document order, then sentence order.
  std::vector<std::size_t> in_text_order() const;
};

/// Highest plus lowest cosine similarity over all unordered sentence pairs.
/// Throws Error(Data) for fewer than two sentences.
double redundancy_limit(std::span<const SentenceVector> vectors);

/// Node order used for selection: defined nodes by score in the vector's
/// direction, then demoted nodes, then undefined ones; ties by node index
/// (document order, then sentence order).
std::vector<std::size_t> rank_order(const ScoreVector& scores);

/// Admits candidates in rank order until the emitted word count reaches the
/// budget; the sentence that reaches it is kept. With ARD on, a candidate
/// whose cosine with any selected sentence exceeds the limit is skipped.
Summary select(const ScoreVector& scores, std::span<const Sentence> sentences,
               std::span<const SentenceVector> vectors, const SelectionConfig& config);

/// Same admission rule over a given candidate order, without ARD.
Summary take_in_order(std::span<const std::size_t> order, std::span<const Sentence> sentences,
                      std::size_t budget_words);

/// round(total_words * (1 - rate)), at least 1. Requires 0 < rate < 1.
std::size_t budget_from_compression(std::size_t total_words, double rate);

/// One selected sentence per line in text order.
std::string extract_text(const Summary& summary, std::span<const Sentence> sentences);

/// Pretty-printed JSON with selection order, scores and skipped sentences.
void write_summary_metadata(std::ostream& out, const Summary& summary, std::span<const Sentence> sentences,
                            const ScoreVector* scores);

}  // namespace mds
