#pragma once

// Backtracking search for graded isomorphisms between a target diagram and
// telescopings of a source diagram. Shared by the unordered and ordered
// front ends.

#include "bratteli/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace bratteli::detail {

// (previous-level vertex, multiplicity). Ordered signatures keep the edge
// order as a run-length list; unordered ones are sorted by vertex.
using Run = std::pair<std::size_t, BigInt>;
using Signature = std::vector<Run>;
using LevelSignatures = std::vector<Signature>;

struct GradedShape {
  bool ordered = false;
  std::vector<std::size_t> sizes;     // |V_n| for n = 0..depth
  std::vector<LevelSignatures> raw;   // raw[n-1][v] relative to level n-1

  std::size_t depth() const { return raw.size(); }
};

bool match(const GradedShape& target, const GradedShape& source, bool fixed_schedule);

}  // namespace bratteli::detail
