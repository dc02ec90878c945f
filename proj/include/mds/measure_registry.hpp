#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mds/classic_measures.hpp"
#include "mds/dynamical_measures.hpp"

namespace mds {

struct MeasureParams {
  PageRankOptions pagerank;
  Execution exec = Execution::Parallel;
};

/// One ranking system: a named measurement with its selection direction.
/// Concentric, accessibility and symmetry measurements are registered once
/// per hierarchical level ("Conc-3-h2", "Access-h3", ...).
struct MeasureSystem {
  std::string name;
  Direction direction;
  int level;  // hierarchical level, 0 when the measure has none
  std::function<ScoreVector(const SentenceNetwork&, const MeasureParams&)> compute;
};

/// Every registered system in table order.
const std::vector<MeasureSystem>& all_measures();

/// nullptr for an unknown name.
const MeasureSystem* find_measure(std::string_view name);

}  // namespace mds
