#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mds/score_vector.hpp"

namespace oracle {

// Relative agreement with an absolute floor for values at or near zero.
inline bool close(double actual, double expected, double rel, double abs_floor = 1e-12) {
  if (std::isnan(expected)) return std::isnan(actual);
  return std::abs(actual - expected) <= std::max(rel * std::abs(expected), abs_floor);
}

// Compares a ScoreVector with reference values; NaN in the reference means
// "undefined". Returns an empty string on agreement, else the first mismatch.
inline std::string mismatch(const mds::ScoreVector& got, const std::vector<double>& want, double rel) {
  if (got.size() != want.size()) return "size " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const bool want_defined = !std::isnan(want[i]);
    if (got.defined[i] != want_defined) return "definedness differs at node " + std::to_string(i);
    if (want_defined && !close(got.scores[i], want[i], rel)) {
      return got.measure_name + " node " + std::to_string(i) + ": " + std::to_string(got.scores[i]) + " vs " +
             std::to_string(want[i]);
    }
  }
  return {};
}

}  // namespace oracle
