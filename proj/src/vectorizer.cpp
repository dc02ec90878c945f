#include "mds/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mds/error.hpp"

namespace mds {

double SentenceVector::weight(std::size_t dim) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), dim,
                             [](const auto& e, std::size_t d) { return e.first < d; });
  return (it != entries.end() && it->first == dim) ? it->second : 0.0;
}

double SentenceVector::norm() const {
  double s = 0.0;
  for (const auto& [dim, w] : entries) s += w * w;
  return std::sqrt(s);
}

TfIdfModel fit_tfidf(std::span<const ProcessedSentence> sentences, const TfIdfOptions& options) {
  const bool any_content = std::any_of(sentences.begin(), sentences.end(),
                                       [](const auto& s) { return !s.content_lemmas.empty(); });
  if (!any_content) throw Error(ErrorKind::Data, "cannot fit tf-idf: every sentence is empty");

  // Collect the lemma set of each counting unit.
  std::map<std::string, std::set<std::string>, std::less<>> unit_lemmas;
  std::set<std::string> vocabulary;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string unit = options.unit == IdfUnit::Sentence ? std::to_string(i) : sentences[i].sentence_ref.doc_id;
    auto& lemmas = unit_lemmas[unit];
    for (const auto& lemma : sentences[i].content_lemmas) {
      lemmas.insert(lemma);
      vocabulary.insert(lemma);
    }
  }

  TfIdfModel model;
  model.n_units = unit_lemmas.size();
  std::vector<std::size_t> df(vocabulary.size(), 0);
  for (const auto& lemma : vocabulary) model.vocabulary.emplace(lemma, model.vocabulary.size());
  for (const auto& [unit, lemmas] : unit_lemmas) {
    for (const auto& lemma : lemmas) ++df[model.vocabulary.find(lemma)->second];
  }

  const auto n = static_cast<double>(model.n_units);
  model.idf.resize(df.size());
  for (std::size_t t = 0; t < df.size(); ++t) {
    const auto d = static_cast<double>(df[t]);
    model.idf[t] = options.smoothing == IdfSmoothing::None ? std::log(n / d) : std::log((1.0 + n) / (1.0 + d)) + 1.0;
  }
  return model;
}

SentenceVector vectorize(const ProcessedSentence& sentence, const TfIdfModel& model) {
  std::map<std::size_t, double> counts;
  for (const auto& lemma : sentence.content_lemmas) {
    auto it = model.vocabulary.find(lemma);
    if (it != model.vocabulary.end()) counts[it->second] += 1.0;
  }
  SentenceVector v;
  v.sentence_ref = sentence.sentence_ref;
  for (const auto& [dim, tf] : counts) {
    const double w = tf * model.idf[dim];
    if (w > 0.0) v.entries.emplace_back(dim, w);
  }
  return v;
}

double cosine(const SentenceVector& u, const SentenceVector& v) {
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (const auto& [d, w] : u.entries) uu += w * w;
  for (const auto& [d, w] : v.entries) vv += w * w;
  if (uu == 0.0 || vv == 0.0) return 0.0;
  auto a = u.entries.begin();
  auto b = v.entries.begin();
  while (a != u.entries.end() && b != v.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      dot += a->second * b->second;
      ++a;
      ++b;
    }
  }
  // sqrt(uu * vv) rather than sqrt(uu) * sqrt(vv) so that cosine(u, u) is exactly 1.
  return std::min(1.0, dot / std::sqrt(uu * vv));
}

}  // namespace mds
