#pragma once

#include "bratteli/vershik.hpp"

#include <vector>

namespace bratteli {

/// Towers of one partition P_n. words[k] lists, bottom to top, the towers of
/// P_{n-1} that tower k crosses.
struct KRLevel {
  Vector heights;
  std::vector<std::vector<std::size_t>> words;
  friend bool operator==(const KRLevel&, const KRLevel&) = default;
};

/// levels[0] is P_0 = {X}: one tower of height 1 with an empty word.
struct NestedKRSequence {
  std::vector<KRLevel> levels;
  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  friend bool operator==(const NestedKRSequence&, const NestedKRSequence&) = default;
};

/// Throws InvalidDiagram naming the first broken nesting condition.
void require_valid(const NestedKRSequence& seq);

/// Vertex k at level n is tower k of P_n; the j-th letter of its word becomes
/// the j-th edge into it.
OrderedDiagram diagram_from_nested(const NestedKRSequence& seq);

/// Towers are the prefix towers of od; words are the ordered sources.
NestedKRSequence nested_from_diagram(const OrderedDiagram& od, std::size_t depth);

bool roundtrip_check(const OrderedDiagram& od, std::size_t depth);

struct TowerLocation {
  std::size_t tower = 0;
  BigInt floor = 0;
  friend bool operator==(const TowerLocation&, const TowerLocation&) = default;
};

/// Tower of the last vertex and rank of the prefix among the prefixes into it.
TowerLocation locate(const OrderedDiagram& od, const PathPrefix& p);
TowerLocation locate(const StationaryTailDiagram& d, const AdicPath& x, std::size_t n);

}  // namespace bratteli
