#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mds/error.hpp"
#include "mds/network.hpp"
#include "mds/vectorizer.hpp"
#include "oracles/random_graphs.hpp"
#include "support.hpp"

using namespace mds;

namespace {

ProcessedSentence bag(std::vector<std::string> lemmas, std::set<std::string> nouns = {}, std::size_t index = 0) {
  ProcessedSentence p;
  p.sentence_ref = {"d", index};
  p.content_lemmas = std::move(lemmas);
  p.noun_lemmas = std::move(nouns);
  return p;
}

std::vector<ProcessedSentence> brazil() {
  std::vector<ProcessedSentence> out;
  for (std::size_t i = 0; i < 6; ++i) out.push_back(preprocess(testing::sentence(testing::kBrazil[i], i), testing::english()));
  return out;
}

SentenceVector sparse(std::vector<std::pair<std::size_t, double>> entries) {
  SentenceVector v;
  v.entries = std::move(entries);
  return v;
}

}  // namespace

TEST_CASE("idf") {
  const std::vector<ProcessedSentence> s = {bag({"x", "a"}), bag({"x"}, {}, 1), bag({"x"}, {}, 2), bag({"x", "b"}, {}, 3)};
  const TfIdfModel m = fit_tfidf(s);
  CHECK(m.n_units == 4);
  CHECK(m.idf[m.vocabulary.at("x")] == 0.0);
  CHECK(m.idf[m.vocabulary.at("a")] == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  const SentenceVector v = vectorize(s[0], m);
  CHECK(v.weight(m.vocabulary.at("x")) == 0.0);

  const auto table = brazil();
  const TfIdfModel tm = fit_tfidf(table);
  CHECK(tm.idf[tm.vocabulary.at("country")] == doctest::Approx(std::log(6.0 / 4.0)).epsilon(1e-15));
  const SentenceVector first = vectorize(table[0], tm);
  CHECK(first.weight(tm.vocabulary.at("brazil")) == doctest::Approx(std::log(6.0 / 3.0)).epsilon(1e-15));

  TfIdfOptions smooth;
  smooth.smoothing = IdfSmoothing::Smooth;
  const TfIdfModel sm = fit_tfidf(s, smooth);
  CHECK(sm.idf[sm.vocabulary.at("x")] == doctest::Approx(1.0));

  CHECK_THROWS_AS(fit_tfidf(std::vector<ProcessedSentence>{bag({}), bag({}, {}, 1)}), Error);
}

TEST_CASE("idf by document unit") {
  std::vector<ProcessedSentence> s = {bag({"x"}), bag({"y"}, {}, 1), bag({"x"})};
  s[2].sentence_ref = {"e", 0};
  TfIdfOptions opt;
  opt.unit = IdfUnit::Document;
  const TfIdfModel m = fit_tfidf(s, opt);
  CHECK(m.n_units == 2);
  CHECK(m.idf[m.vocabulary.at("x")] == 0.0);
  CHECK(m.idf[m.vocabulary.at("y")] == doctest::Approx(std::log(2.0)));
}

TEST_CASE("vectorize") {
  TfIdfModel m;
  m.vocabulary = {{"a", 0}, {"b", 1}};
  m.idf = {1.0, 0.5};
  m.n_units = 2;
  CHECK(vectorize(bag({}), m).empty());
  const SentenceVector v = vectorize(bag({"a", "a"}), m);
  REQUIRE(v.entries.size() == 1);
  CHECK(v.weight(0) == 2.0);
  CHECK(vectorize(bag({"unknown"}), m).empty());
}

TEST_CASE("cosine") {
  const auto u = sparse({{0, 1.0}, {1, 1.0}});
  const auto v = sparse({{0, 1.0}});
  CHECK(cosine(u, u) == 1.0);
  CHECK(cosine(u, sparse({{2, 3.0}})) == 0.0);
  CHECK(cosine(u, v) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(cosine(u, sparse({})) == 0.0);
}

TEST_CASE("noun network") {
  const auto table = brazil();
  const SentenceNetwork net = build_noun_network(table);
  CHECK(net.weight(0, 2) == 2.0);  // {country, america}
  CHECK_FALSE(net.has_edge(1, 3));
  CHECK(net.weight(0, 4) == 3.0);  // {south, america, country}

  const std::vector<ProcessedSentence> twins = {bag({"a", "a", "b"}, {"a", "b"}), bag({"a", "a", "b"}, {"a", "b"}, 1)};
  CHECK(build_noun_network(twins).weight(0, 1) == 3.0);
}

TEST_CASE("tfidf network") {
  const std::vector<SentenceVector> v = {sparse({{0, 1.0}, {1, 1.0}}), sparse({{0, 1.0}}), sparse({{2, 1.0}}),
                                         sparse({{0, 1.0}, {1, 1.0}})};
  const SentenceNetwork net = build_tfidf_network(v);
  CHECK(net.weight(0, 1) == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK_FALSE(net.has_edge(0, 2));
  CHECK(net.weight(0, 3) == 1.0);
  CHECK_FALSE(build_tfidf_network(v, 0.8).has_edge(0, 1));
  CHECK_THROWS_AS(build_tfidf_network(v, -1.0), Error);
}

TEST_CASE("distance transforms") {
  const auto net = oracle::from_edges(3, {{0, 1, 3.0}, {1, 2, 1.0}});
  const DistanceMatrix w1 = to_distances(net, DistanceRule::W1);
  CHECK(w1.d(0, 1) == 1.0);
  CHECK(w1.d(1, 2) == 3.0);
  CHECK(w1.d(0, 2) == kUnreachable);
  CHECK(w1.d(1, 1) == 0.0);
  const DistanceMatrix w2 = to_distances(net, DistanceRule::W2);
  CHECK(w2.d(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w2.d(1, 2) == 1.0);
  const DistanceMatrix unit = to_distances(net, DistanceRule::Unit);
  CHECK(unit.d(0, 1) == 1.0);
  CHECK(unit.d(2, 1) == 1.0);
}

TEST_CASE("network validation") {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(SentenceNetwork(NetworkModel::Noun, asym), Error);
  Eigen::MatrixXd neg = Eigen::MatrixXd::Zero(2, 2);
  neg(0, 1) = neg(1, 0) = -1.0;
  CHECK_THROWS_AS(SentenceNetwork(NetworkModel::Noun, neg), Error);
  Eigen::MatrixXd loop = Eigen::MatrixXd::Zero(2, 2);
  loop(0, 0) = 1.0;
  CHECK_THROWS_AS(SentenceNetwork(NetworkModel::Noun, loop), Error);
}

TEST_CASE("permutation and components") {
  const auto net = oracle::from_edges(5, {{0, 1, 2.0}, {1, 2, 1.0}, {3, 4, 0.5}});
  const std::vector<std::size_t> perm = {4, 2, 0, 1, 3};
  const auto p = permuted(net, perm);
  CHECK(p.weight(4, 2) == 2.0);
  CHECK(p.weight(1, 3) == 0.5);
  CHECK(p.edge_count() == 3);
  const auto comp = connected_components(net);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[3] == comp[4]);
  CHECK(comp[0] != comp[3]);
}

TEST_CASE("edge list round trip is exact") {
  std::mt19937_64 rng(7);
  const auto net = oracle::random_connected(9, 0.4, false, rng);
  std::stringstream s;
  write_edge_list(s, net);
  const auto back = read_edge_list(s);
  CHECK(back.size() == net.size());
  CHECK(back.weights() == net.weights());

  std::stringstream bad("0\t1\t1\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
}
