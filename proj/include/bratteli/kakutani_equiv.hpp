#pragma once

#include "bratteli/dimension_group.hpp"

#include <set>

namespace bratteli {

/// Replaces levels 0..L of a diagram by `replacement` (depth L). Its level-L
/// labels must equal the labels of level L of the diagram being changed, so
/// that everything below level L is reused untouched.
struct FiniteChange {
  OrderedDiagram replacement;
  std::size_t depth() const { return replacement.depth(); }
};

/// Throws InvalidDiagram when the result breaks the diagram axioms and
/// NotProperlyOrdered when a properly ordered input loses proper ordering.
StationaryTailDiagram apply_finite_change(const StationaryTailDiagram& d, const FiniteChange& ch);
OrderedDiagram apply_finite_change(const OrderedDiagram& od, const FiniteChange& ch);

/// The change that restores levels 0..L of d.
FiniteChange head_change(const StationaryTailDiagram& d, std::size_t depth);
FiniteChange head_change(const OrderedDiagram& od, std::size_t depth);

/// Keeps the level-1 edges in `keep` and prunes every vertex left without
/// incoming edges. The stationary version materialises the head down to the
/// first level where nothing is pruned any more. Orders are re-indexed
/// without gaps; surviving edges keep their relative order.
StationaryTailDiagram induce_on_top(const StationaryTailDiagram& d, const std::set<std::size_t>& keep);
OrderedDiagram induce_on_top(const OrderedDiagram& od, const std::set<std::size_t>& keep);

/// Compares the first n level-1 edges of the induced orbit with the visits of
/// the original orbit to the kept cylinders (induced top edge i is the i-th
/// smallest kept edge).
bool first_return_check(const StationaryTailDiagram& d, const std::set<std::size_t>& keep, std::size_t n);

struct UnitChangeReport {
  bool tail_identical = false;
  std::size_t stage = 0;  // common stage of the shared tail
  GroupElement old_unit;
  GroupElement new_unit;
};

UnitChangeReport unit_change_report(const StationaryTailDiagram& before, const StationaryTailDiagram& after);
UnitChangeReport unit_change_report(const StationaryTailDiagram& d, const FiniteChange& ch);
UnitChangeReport unit_change_report(const OrderedDiagram& od, const FiniteChange& ch);

}  // namespace bratteli
