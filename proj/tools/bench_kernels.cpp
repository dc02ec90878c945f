// Serial vs OpenMP timing of the per-node kernels on random sentence-like graphs.
//   bench_kernels [nodes] [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "mds/classic_measures.hpp"
#include "mds/dynamical_measures.hpp"
#include "mds/network.hpp"

namespace {

mds::SentenceNetwork random_network(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    // a random spanning tree keeps the graph connected
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    w(i, j) = w(j, i) = 0.05 + unit(rng);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w(i, j) == 0.0 && unit(rng) < p) w(i, j) = w(j, i) = 0.05 + unit(rng);
    }
  }
  return mds::SentenceNetwork(mds::NetworkModel::TfIdf, std::move(w));
}

double seconds(const std::function<mds::ScoreVector()>& f, int repeats, mds::ScoreVector& last) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) last = f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 80;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const auto net = random_network(n, 0.08, 42);
  using E = mds::Execution;

  struct Kernel {
    std::string name;
    std::function<mds::ScoreVector(E)> run;
  };
  const std::vector<Kernel> kernels = {
      {"SP-w1", [&](E e) { return mds::shortest_path_score(net, mds::DistanceRule::W1, e); }},
      {"Btw-w", [&](E e) { return mds::betweenness(net, true, e); }},
      {"Conc-3-h3", [&](E e) { return mds::concentric_scores(net, 3, mds::ConcentricIndex::NodeDegree, e); }},
      {"Access-h3", [&](E e) { return mds::accessibility_scores(net, 3, e); }},
      {"HSymMg-h3",
       [&](E e) {
         return mds::symmetry_scores(net, 3, mds::SymmetryVariant::Merged, mds::Direction::HighestFirst, e);
       }},
      {"AbsT", [&](E e) { return mds::absorption_time(net, e); }},
  };

  std::cout << "nodes " << n << ", edges " << net.edge_count() << ", threads " << omp_get_max_threads() << '\n';
  std::cout << std::left << std::setw(12) << "kernel" << std::right << std::setw(12) << "serial_s" << std::setw(12)
            << "parallel_s" << std::setw(10) << "speedup" << std::setw(10) << "equal" << '\n';
  bool all_equal = true;
  for (const auto& k : kernels) {
    mds::ScoreVector serial, parallel;
    const double ts = seconds([&] { return k.run(E::Serial); }, repeats, serial);
    const double tp = seconds([&] { return k.run(E::Parallel); }, repeats, parallel);
    const bool equal = serial.scores == parallel.scores && serial.defined == parallel.defined;
    all_equal = all_equal && equal;
    std::cout << std::left << std::setw(12) << k.name << std::right << std::fixed << std::setprecision(5)
              << std::setw(12) << ts << std::setw(12) << tp << std::setprecision(2) << std::setw(10) << ts / tp
              << std::setw(10) << (equal ? "yes" : "NO") << '\n';
  }
  return all_equal ? 0 : 1;
}
