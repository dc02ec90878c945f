#include <doctest.h>

#include <cmath>

#include "mds/classic_measures.hpp"
#include "mds/error.hpp"
#include "oracles/classic_oracle.hpp"
#include "oracles/compare.hpp"
#include "oracles/random_graphs.hpp"

using namespace mds;

TEST_CASE("degree and strength") {
  const auto path = oracle::path_graph(3);
  CHECK(degree(path).scores == std::vector<double>{1, 2, 1});
  const auto star = oracle::star_graph(4, 0.5);
  CHECK(strength(star).scores[0] == 2.0);
  CHECK(strength(star).scores[1] == 0.5);
  CHECK_THROWS_AS(degree(oracle::path_graph(1)), Error);
}

TEST_CASE("clustering") {
  const auto tri = oracle::complete_graph(3);
  CHECK(clustering(tri, false).scores == std::vector<double>{1, 1, 1});
  CHECK(clustering(tri, true).scores[0] == doctest::Approx(1.0));
  const auto path = oracle::path_graph(3);
  const auto cc = clustering(path, false);
  CHECK(cc.scores[0] == 0.0);
  CHECK(cc.defined[0]);
  const auto lonely = oracle::from_edges(3, {{0, 1, 1.0}});
  CHECK_FALSE(clustering(lonely, false).defined[2]);
}

TEST_CASE("shortest paths") {
  const auto sp = shortest_path_score(oracle::path_graph(3), DistanceRule::Unit);
  CHECK(sp.direction == Direction::LowestFirst);
  CHECK(sp.scores == std::vector<double>{1.5, 1.0, 1.5});

  // a pair cut off from a larger component is demoted
  const auto split = oracle::from_edges(7, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {5, 6, 1.0}});
  const auto s = shortest_path_score(split, DistanceRule::Unit);
  CHECK_FALSE(s.demoted[0]);
  CHECK(s.demoted[5]);
  CHECK(s.scores[5] == 1.0);
}

TEST_CASE("betweenness") {
  CHECK(betweenness(oracle::path_graph(3), false).scores == std::vector<double>{0, 1, 0});
  // two equal routes share the credit
  const auto square = oracle::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
  CHECK(betweenness(square, false).scores == std::vector<double>{0.5, 0.5, 0.5, 0.5});
}

TEST_CASE("pagerank") {
  const auto pr = pagerank(oracle::complete_graph(3), false);
  for (double x : pr.scores) CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  const auto dangling = oracle::from_edges(3, {{0, 1, 1.0}});
  const auto d = pagerank(dangling, true);
  CHECK(oracle::mismatch(d, oracle::dense_pagerank(dangling, true, 0.85), 1e-8) == "");

  PageRankOptions tight;
  tight.max_iter = 1;
  CHECK_THROWS_AS(pagerank(oracle::star_graph(5), false, tight), ConvergenceError);
  PageRankOptions bad;
  bad.damping = 1.0;
  CHECK_THROWS_AS(pagerank(oracle::star_graph(5), false, bad), Error);
}

TEST_CASE("classic measures agree with brute force on random graphs") {
  const auto population = oracle::graph_population(60, 2024);
  PageRankOptions precise;
  precise.tol = 1e-13;
  for (const auto& g : population) {
    CAPTURE(g.id);
    for (DistanceRule rule : {DistanceRule::Unit, DistanceRule::W1, DistanceRule::W2}) {
      CHECK(oracle::mismatch(shortest_path_score(g.net, rule), oracle::brute_sp_score(g.net, rule), 1e-9) == "");
    }
    for (bool w : {false, true}) {
      CHECK(oracle::mismatch(betweenness(g.net, w), oracle::brute_betweenness(g.net, w), 1e-9) == "");
      CHECK(oracle::mismatch(clustering(g.net, w), oracle::brute_clustering(g.net, w), 1e-9) == "");
      CHECK(oracle::mismatch(pagerank(g.net, w, precise), oracle::dense_pagerank(g.net, w, 0.85), 1e-9) == "");
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(5);
  const auto net = oracle::random_connected(30, 0.2, false, rng);
  CHECK(betweenness(net, true, Execution::Serial).scores == betweenness(net, true, Execution::Parallel).scores);
  CHECK(shortest_path_score(net, DistanceRule::W1, Execution::Serial).scores ==
        shortest_path_score(net, DistanceRule::W1, Execution::Parallel).scores);
}
