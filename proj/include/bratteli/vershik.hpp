#pragma once

#include "bratteli/ordered.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bratteli {

/// Finite path e_1, ..., e_n from the root; edges[i] is an edge id of E_{i+1}.
struct PathPrefix {
  std::vector<std::size_t> edges;
  friend bool operator==(const PathPrefix&, const PathPrefix&) = default;
  friend auto operator<=>(const PathPrefix&, const PathPrefix&) = default;
};

/// Eventually periodic infinite path of a StationaryTailDiagram: `prefix`
/// holds levels 1..P (P >= head depth) and `cycle` repeats forever after.
/// Values produced by this module are canonical (shortest prefix, primitive
/// cycle), so equality of canonical paths is equality of paths.
struct AdicPath {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;

  /// Edge at level n >= 1.
  std::size_t edge(std::size_t n) const;
  PathPrefix truncated(std::size_t n) const;
  friend bool operator==(const AdicPath&, const AdicPath&) = default;
};

AdicPath canonical(AdicPath x, std::size_t head_depth);
bool is_valid_path(const StationaryTailDiagram& d, const AdicPath& x);

template <GradedOrder D>
bool is_connected(const D& d, const PathPrefix& p) {
  for (std::size_t i = 1; i < p.edges.size(); ++i)
    if (d.range(i, p.edges[i - 1]) != d.source(i + 1, p.edges[i])) return false;
  return p.edges.empty() || d.source(1, p.edges.front()) == 0;
}

/// Lexicographic successor among prefixes ending at the same vertex, or
/// nullopt for the maximal prefix.
template <GradedOrder D>
std::optional<PathPrefix> successor_in_tower(const D& d, const PathPrefix& p) {
  for (std::size_t k = 1; k <= p.edges.size(); ++k) {
    auto next = d.next_edge(k, p.edges[k - 1]);
    if (!next) continue;
    PathPrefix out = p;
    out.edges[k - 1] = *next;
    for (std::size_t i = k - 1; i >= 1; --i) out.edges[i - 1] = d.min_edge(i, d.source(i + 1, out.edges[i]));
    return out;
  }
  return std::nullopt;
}

template <GradedOrder D>
std::optional<PathPrefix> predecessor_in_tower(const D& d, const PathPrefix& p) {
  for (std::size_t k = 1; k <= p.edges.size(); ++k) {
    auto prev = d.prev_edge(k, p.edges[k - 1]);
    if (!prev) continue;
    PathPrefix out = p;
    out.edges[k - 1] = *prev;
    for (std::size_t i = k - 1; i >= 1; --i) out.edges[i - 1] = d.max_edge(i, d.source(i + 1, out.edges[i]));
    return out;
  }
  return std::nullopt;
}

/// All prefixes into one vertex, in increasing lexicographic order.
struct Tower {
  VertexId vertex;
  std::vector<PathPrefix> floors;
  std::size_t height() const { return floors.size(); }
};

Tower tower(const OrderedDiagram& od, VertexId v);

/// Heights h_n = C_n ... C_1 (1), i.e. the number of prefixes into each vertex.
Vector tower_heights(const OrderedDiagram& od, std::size_t n);
Vector tower_heights(const StationaryTailDiagram& d, std::size_t n);

/// Bratteli-Vershik dynamics on a StationaryTailDiagram.
///
/// Construction needs a simple diagram with a unique minimal path; the forward
/// orbit of that path never meets a maximal path, so it is well defined even
/// when several maximal paths exist. Stepping a maximal path needs the full
/// proper ordering.
class VershikSystem {
 public:
  explicit VershikSystem(StationaryTailDiagram d);

  const StationaryTailDiagram& diagram() const { return d_; }
  bool properly_ordered() const { return maximal_.size() == 1; }
  const AdicPath& x_min() const { return x_min_; }
  /// Throws NotProperlyOrdered unless the maximal path is unique.
  const AdicPath& x_max() const;
  const std::vector<AdicPath>& maximal_paths() const { return maximal_; }

  AdicPath step(const AdicPath& x) const;
  AdicPath step_back(const AdicPath& x) const;
  /// Level-1 vertex visited by x.
  std::size_t symbol(const AdicPath& x) const { return d_.range(1, x.edge(1)); }

 private:
  StationaryTailDiagram d_;
  AdicPath x_min_;
  std::vector<AdicPath> maximal_;
};

/// All infinite all-maximal (max = true) or all-minimal paths.
std::vector<AdicPath> extreme_path_set(const StationaryTailDiagram& d, bool max);

struct ExtremePaths {
  AdicPath x_max;
  AdicPath x_min;
};
/// Throws NotProperlyOrdered when either extreme path is not unique.
ExtremePaths extreme_paths(const StationaryOrderedDiagram& sd);
ExtremePaths extreme_paths(const StationaryTailDiagram& d);

AdicPath vershik_step(const StationaryOrderedDiagram& sd, const AdicPath& x);

/// Resumable orbit: the state is the current point, so a stream can be seeded
/// at any V^k(x_min).
class OrbitStream {
 public:
  explicit OrbitStream(const VershikSystem& system);
  OrbitStream(const VershikSystem& system, AdicPath start);

  const AdicPath& state() const { return x_; }
  /// Level-1 vertex of the current point, then advances one step.
  std::size_t next_symbol();
  /// Level-1 edge of the current point, then advances one step.
  std::size_t next_top_edge();

 private:
  const VershikSystem* system_;
  AdicPath x_;
};

/// Level-1 vertices of x_min, V(x_min), ..., V^{n-1}(x_min).
std::vector<std::size_t> orbit_sequence(const StationaryTailDiagram& d, std::size_t n);
std::vector<std::size_t> orbit_sequence(const StationaryOrderedDiagram& sd, std::size_t n);

/// Level-1 edges along the same orbit.
std::vector<std::size_t> orbit_top_edges(const StationaryTailDiagram& d, std::size_t n);

/// Plain concatenation when every label is one character, otherwise a
/// length-prefixed token stream "<len>:<label>".
std::string render_symbols(const std::vector<std::string>& labels, const std::vector<std::size_t>& word);

bool is_cofinal(const AdicPath& x, const AdicPath& y);

}  // namespace bratteli
