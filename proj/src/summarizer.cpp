#include "mds/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "mds/error.hpp"

namespace mds {

std::vector<std::size_t> Summary::in_text_order() const {
  std::vector<std::size_t> order = selected;
  std::sort(order.begin(), order.end());
  return order;
}

double redundancy_limit(std::span<const SentenceVector> vectors) {
  if (vectors.size() < 2) throw Error(ErrorKind::Data, "redundancy limit needs at least two sentences");
  double hi = 0.0, lo = 1.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const double c = cosine(vectors[i], vectors[j]);
      hi = std::max(hi, c);
      lo = std::min(lo, c);
    }
  }
  return hi + lo;
}

std::vector<std::size_t> rank_order(const ScoreVector& scores) {
  const std::size_t n = scores.size();
  auto tier = [&](std::size_t i) {
    if (!scores.defined[i] || std::isnan(scores.scores[i])) return 2;
    return scores.demoted[i] ? 1 : 0;
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const bool highest = scores.direction == Direction::HighestFirst;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ta = tier(a), tb = tier(b);
    if (ta != tb) return ta < tb;
    if (ta < 2 && scores.scores[a] != scores.scores[b]) {
      return highest ? scores.scores[a] > scores.scores[b] : scores.scores[a] < scores.scores[b];
    }
    return a < b;
  });
  return order;
}

Summary select(const ScoreVector& scores, std::span<const Sentence> sentences,
               std::span<const SentenceVector> vectors, const SelectionConfig& config) {
  if (scores.size() != sentences.size()) throw Error(ErrorKind::Data, "scores and sentences are not aligned");
  if (config.budget_words < 1) throw Error(ErrorKind::Config, "word budget must be >= 1");
  Summary out;
  out.system = scores.measure_name;
  out.budget_words = config.budget_words;

  if (config.ard_enabled) {
    if (vectors.size() != sentences.size()) throw Error(ErrorKind::Data, "anti-redundancy needs one vector per sentence");
    out.redundancy_limit = config.redundancy_limit ? *config.redundancy_limit : redundancy_limit(vectors);
  }

  for (std::size_t candidate : rank_order(scores)) {
    if (out.emitted_word_count >= config.budget_words) break;
    if (config.ard_enabled) {
      const bool redundant = std::any_of(out.selected.begin(), out.selected.end(), [&](std::size_t s) {
        return cosine(vectors[candidate], vectors[s]) > *out.redundancy_limit;
      });
      if (redundant) {
        out.skipped_redundant.push_back(candidate);
        continue;
      }
    }
    out.selected.push_back(candidate);
    out.emitted_word_count += sentences[candidate].word_count;
  }
  out.truncated = out.emitted_word_count < config.budget_words;
  return out;
}

Summary take_in_order(std::span<const std::size_t> order, std::span<const Sentence> sentences,
                      std::size_t budget_words) {
  Summary out;
  out.budget_words = budget_words;
  for (std::size_t candidate : order) {
    if (out.emitted_word_count >= budget_words) break;
    out.selected.push_back(candidate);
    out.emitted_word_count += sentences[candidate].word_count;
  }
  out.truncated = out.emitted_word_count < budget_words;
  return out;
}

std::size_t budget_from_compression(std::size_t total_words, double rate) {
  if (!(rate > 0.0 && rate < 1.0)) throw Error(ErrorKind::Config, "compression rate must be in (0, 1)");
  const auto budget = std::llround(static_cast<double>(total_words) * (1.0 - rate));
  return std::max<std::size_t>(1, static_cast<std::size_t>(budget));
}

std::string extract_text(const Summary& summary, std::span<const Sentence> sentences) {
  std::string text;
  for (std::size_t i : summary.in_text_order()) {
    text += sentences[i].text;
    text += '\n';
  }
  return text;
}

void write_summary_metadata(std::ostream& out, const Summary& summary, std::span<const Sentence> sentences,
                            const ScoreVector* scores) {
  auto ref = [&](std::size_t i) {
    return nlohmann::ordered_json{{"node", i}, {"doc", sentences[i].doc_id}, {"index", sentences[i].index_in_doc}};
  };
  nlohmann::ordered_json j;
  j["cluster"] = summary.cluster_id;
  j["system"] = summary.system;
  j["budget_words"] = summary.budget_words;
  j["emitted_words"] = summary.emitted_word_count;
  j["truncated"] = summary.truncated;
  if (summary.redundancy_limit) j["redundancy_limit"] = *summary.redundancy_limit;
  j["selection_order"] = nlohmann::ordered_json::array();
  for (std::size_t i : summary.selected) {
    auto entry = ref(i);
    if (scores) {
      entry["score"] = scores->defined[i] ? nlohmann::ordered_json(scores->scores[i]) : nlohmann::ordered_json(nullptr);
    }
    j["selection_order"].push_back(std::move(entry));
  }
  j["skipped_redundant"] = nlohmann::ordered_json::array();
  for (std::size_t i : summary.skipped_redundant) j["skipped_redundant"].push_back(ref(i));
  out << j.dump(2) << '\n';
}

}  // namespace mds
