#pragma once

#include "bratteli/diagram.hpp"

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bratteli {

/// A Bratteli diagram with a linear order on each r^{-1}(v).
///
/// `order[n-1][e]` is the order index of edge e of E_n among the edges
/// sharing its range; within each r^{-1}(v) the indices are 0..deg-1.
class OrderedDiagram {
 public:
  OrderedDiagram() = default;
  OrderedDiagram(BratteliDiagram base, std::vector<std::vector<std::size_t>> order);

  const BratteliDiagram& base() const { return base_; }
  std::size_t depth() const { return base_.depth(); }
  std::size_t level_size(std::size_t n) const { return base_.level_size(n); }
  const std::string& label(std::size_t n, std::size_t v) const { return base_.labels(n).at(v); }

  std::size_t edge_count(std::size_t n) const { return base_.edges(n).size(); }
  std::size_t source(std::size_t n, std::size_t e) const { return base_.source(n, e); }
  std::size_t range(std::size_t n, std::size_t e) const { return base_.range(n, e); }
  std::size_t order(std::size_t n, std::size_t e) const { return order_.at(n - 1).at(e); }
  const std::vector<std::vector<std::size_t>>& orders() const { return order_; }

  /// Edge ids into v at level n, in increasing order.
  const std::vector<std::size_t>& incoming(std::size_t n, std::size_t v) const {
    return sorted_in_.at(n - 1).at(v);
  }
  std::size_t in_degree(std::size_t n, std::size_t v) const { return incoming(n, v).size(); }

  std::optional<std::size_t> next_edge(std::size_t n, std::size_t e) const;
  std::optional<std::size_t> prev_edge(std::size_t n, std::size_t e) const;
  std::size_t min_edge(std::size_t n, std::size_t v) const { return incoming(n, v).front(); }
  std::size_t max_edge(std::size_t n, std::size_t v) const { return incoming(n, v).back(); }

  friend bool operator==(const OrderedDiagram& a, const OrderedDiagram& b) {
    return a.base_ == b.base_ && a.order_ == b.order_;
  }

 private:
  BratteliDiagram base_;
  std::vector<std::vector<std::size_t>> order_;
  std::vector<std::vector<std::vector<std::size_t>>> sorted_in_;
};

/// Anything exposing graded edges with per-range linear orders.
template <class D>
concept GradedOrder = requires(const D& d, std::size_t n, std::size_t x) {
  { d.source(n, x) } -> std::convertible_to<std::size_t>;
  { d.range(n, x) } -> std::convertible_to<std::size_t>;
  { d.next_edge(n, x) } -> std::same_as<std::optional<std::size_t>>;
  { d.prev_edge(n, x) } -> std::same_as<std::optional<std::size_t>>;
  { d.min_edge(n, x) } -> std::convertible_to<std::size_t>;
  { d.max_edge(n, x) } -> std::convertible_to<std::size_t>;
};

/// Orders every r^{-1}(v) by edge id.
OrderedDiagram order_by_id(const BratteliDiagram& d);

/// Telescoping with the induced lexicographic order: composite edges compare
/// by their last differing constituent edge.
OrderedDiagram induced_order_telescope(const OrderedDiagram& od, const TelescopeSchedule& s);
OrderedDiagram truncate(const OrderedDiagram& od, std::size_t depth);

struct ExtremeEdges {
  std::size_t max_edge;
  std::size_t min_edge;
};
ExtremeEdges max_min_edges(const OrderedDiagram& od, VertexId v);

/// Isomorphism preserving grading and the edge orders.
bool isomorphic(const OrderedDiagram& a, const OrderedDiagram& b);
bool matches_telescoping(const OrderedDiagram& target, const OrderedDiagram& source);
bool verify_interleaving_witness(const OrderedDiagram& d1, const OrderedDiagram& d2,
                                 const OrderedDiagram& w);

/// A map from an alphabet to nonempty words over it (symbols by index).
struct Substitution {
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::size_t>> rules;

  std::vector<std::size_t> apply(const std::vector<std::size_t>& word) const;
  /// Entry (i, j) counts occurrences of a_j in rules[i].
  Matrix matrix() const;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

void require_valid(const Substitution& s);

class StationaryTailDiagram;

/// Stationary ordered diagram: level-1 edges given by `top` (range symbols in
/// edge order, repetitions for multiplicity) and every later level repeating
/// `incoming`, where incoming[a] lists the sources of the edges into a in
/// increasing order.
class StationaryOrderedDiagram {
 public:
  StationaryOrderedDiagram(std::vector<std::string> alphabet, std::vector<std::size_t> top,
                           std::vector<std::vector<std::size_t>> incoming);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::size_t>& top() const { return top_; }
  const std::vector<std::vector<std::size_t>>& incoming() const { return incoming_; }
  std::size_t size() const { return alphabet_.size(); }

  Matrix matrix() const;
  Vector top_multiplicities() const;
  StationaryDiagram unordered() const;
  StationaryTailDiagram as_tail() const;
  OrderedDiagram truncate(std::size_t depth) const;

  friend bool operator==(const StationaryOrderedDiagram&, const StationaryOrderedDiagram&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::size_t> top_;
  std::vector<std::vector<std::size_t>> incoming_;
};

/// An ordered diagram that is explicit down to level L (the head) and
/// stationary below it: level L carries the alphabet and every later level
/// repeats `incoming`. Finite changes of stationary diagrams live here.
///
/// Edges of E_n for n > L are numbered symbol by symbol: edge
/// offset(a) + j is the j-th edge into a.
class StationaryTailDiagram {
 public:
  StationaryTailDiagram(OrderedDiagram head, std::vector<std::vector<std::size_t>> incoming);

  const OrderedDiagram& head() const { return head_; }
  std::size_t head_depth() const { return head_.depth(); }
  const std::vector<std::vector<std::size_t>>& incoming() const { return incoming_; }
  std::size_t alphabet_size() const { return incoming_.size(); }
  const std::vector<std::string>& alphabet() const { return head_.base().labels(head_depth()); }

  std::size_t level_size(std::size_t n) const;
  const std::string& label(std::size_t n, std::size_t v) const;
  std::size_t edge_count(std::size_t n) const;
  std::size_t source(std::size_t n, std::size_t e) const;
  std::size_t range(std::size_t n, std::size_t e) const;
  std::size_t order(std::size_t n, std::size_t e) const;
  std::size_t in_degree(std::size_t n, std::size_t v) const;
  std::optional<std::size_t> next_edge(std::size_t n, std::size_t e) const;
  std::optional<std::size_t> prev_edge(std::size_t n, std::size_t e) const;
  std::size_t min_edge(std::size_t n, std::size_t v) const;
  std::size_t max_edge(std::size_t n, std::size_t v) const;

  std::size_t tail_offset(std::size_t a) const { return offsets_.at(a); }
  Matrix tail_matrix() const;
  Matrix incidence(std::size_t n) const;
  OrderedDiagram truncate(std::size_t depth) const;
  /// Same diagram with the head materialised down to `depth` >= head_depth().
  StationaryTailDiagram extend_head(std::size_t depth) const;

  friend bool operator==(const StationaryTailDiagram& a, const StationaryTailDiagram& b) {
    return a.head_ == b.head_ && a.incoming_ == b.incoming_;
  }

 private:
  OrderedDiagram head_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> edge_symbol_;
};

/// Number of infinite all-maximal and all-minimal paths.
struct ExtremeCounts {
  std::size_t max_paths = 0;
  std::size_t min_paths = 0;
  friend bool operator==(const ExtremeCounts&, const ExtremeCounts&) = default;
};

/// Each periodic point of the max-source map on the alphabet carries exactly
/// one infinite maximal path (and likewise for minimal paths); the head only
/// routes those paths up to the root.
ExtremeCounts count_extreme_paths(const StationaryTailDiagram& d);
ExtremeCounts count_extreme_paths(const StationaryOrderedDiagram& sd);

/// Periodic points of a self-map on {0..k-1}, increasing.
std::vector<std::size_t> periodic_points(const std::vector<std::size_t>& f);

struct ProperOrderVerdict {
  bool proper = false;
  std::string reason;
  explicit operator bool() const { return proper; }
};

ProperOrderVerdict properly_ordered(const StationaryTailDiagram& d);
ProperOrderVerdict properly_ordered(const StationaryOrderedDiagram& sd);

Substitution substitution_of(const StationaryOrderedDiagram& sd);
/// Top word defaults to one edge per symbol in alphabet order.
StationaryOrderedDiagram diagram_of_substitution(const Substitution& s);

/// Output of symbol splitting.
///
/// `split` has exactly one top edge per symbol; its symbol i stands for top
/// edge i of the (power-telescoped) input. `witness` interleaves the two:
/// its even-level telescoping is the input telescoped to 0 < 1 < 1+p < ...
/// and its odd-level telescoping is `split`.
struct SymbolSplit {
  StationaryOrderedDiagram split;
  OrderedDiagram witness;
  std::size_t power = 1;
  std::vector<std::size_t> origin;  // origin[i] = input symbol of top edge i
};

/// Requires a simple (primitive) input. Proper ordering is preserved in both
/// directions, so a properly ordered input yields a properly ordered split.
SymbolSplit symbol_split(const StationaryOrderedDiagram& sd, std::size_t witness_levels = 4);

/// Recomputes the witness telescopings and compares them with sd and split.
bool verify_symbol_split(const StationaryOrderedDiagram& sd, const SymbolSplit& result);

}  // namespace bratteli
