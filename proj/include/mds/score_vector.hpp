#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mds {

enum class Direction { HighestFirst, LowestFirst };

std::string_view to_string(Direction direction);

/// Per-node scores of one measurement. Ties are preserved; ranking and
/// tie-breaking happen in the summarizer.
struct ScoreVector {
  std::string measure_name;
  Direction direction = Direction::HighestFirst;
  std::vector<double> scores;
  std::vector<bool> defined;  // false where the measure is undefined
  std::vector<bool> demoted;  // ranked after every non-demoted defined node

  ScoreVector() = default;
  ScoreVector(std::string name, Direction dir, std::size_t n)
      : measure_name(std::move(name)), direction(dir), scores(n, 0.0), defined(n, true), demoted(n, false) {}

  std::size_t size() const { return scores.size(); }
};

/// How per-node kernels run. Serial is the reference path; Parallel
/// distributes nodes over OpenMP threads and must produce identical values.
enum class Execution { Serial, Parallel };

}  // namespace mds
