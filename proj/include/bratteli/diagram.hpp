#pragma once

#include "bratteli/matrix.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bratteli {

struct VertexId {
  std::size_t level = 0;
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// An edge of E_n. `source` indexes V_{n-1}, `range` indexes V_n; `id` is the
/// position of the edge within E_n.
struct Edge {
  std::size_t source = 0;
  std::size_t range = 0;
  std::size_t id = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite truncation of a Bratteli diagram: levels V_0..V_D and edge sets
/// E_1..E_D. Construction does not validate; see validate().
class BratteliDiagram {
 public:
  BratteliDiagram() = default;
  /// Edge ids are reassigned to positions within each level.
  BratteliDiagram(std::vector<std::vector<std::string>> levels, std::vector<std::vector<Edge>> edges);

  std::size_t depth() const { return edges_.size(); }
  std::size_t level_count() const { return levels_.size(); }
  std::size_t level_size(std::size_t n) const;
  const std::vector<std::string>& labels(std::size_t n) const;
  const std::vector<std::vector<std::string>>& levels() const { return levels_; }

  /// E_n for 1 <= n <= depth().
  std::span<const Edge> edges(std::size_t n) const;
  const Edge& edge(std::size_t n, std::size_t id) const { return edges(n)[id]; }
  std::size_t source(std::size_t n, std::size_t id) const { return edge(n, id).source; }
  std::size_t range(std::size_t n, std::size_t id) const { return edge(n, id).range; }

  /// Ids of edges in E_n with range v, increasing id.
  std::span<const std::size_t> in_edges(std::size_t n, std::size_t v) const;
  /// Ids of edges in E_{n+1} with source v, increasing id.
  std::span<const std::size_t> out_edges(std::size_t n, std::size_t v) const;

  friend bool operator==(const BratteliDiagram& a, const BratteliDiagram& b) {
    return a.levels_ == b.levels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<std::string>> levels_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<std::vector<std::size_t>>> in_;   // [n-1][v]
  std::vector<std::vector<std::vector<std::size_t>>> out_;  // [n][v]
};

/// One-vertex-per-symbol diagram whose levels >= 1 repeat the same matrix.
/// `top[a]` is the number of edges from the root into symbol a.
struct StationaryDiagram {
  std::vector<std::string> alphabet;
  Vector top;
  Matrix matrix;

  BratteliDiagram truncate(std::size_t depth) const;
};

enum class Clause {
  RootSingleton,     // |V_0| = 1
  IncomingNonempty,  // r^{-1}(v) nonempty for v outside V_0
  OutgoingNonempty,  // s^{-1}(v) nonempty within the represented depth
  EndpointInRange,   // edge endpoints index existing vertices
  DistinctLabels,    // labels unique within a level (interchange format)
};

std::string to_string(Clause c);

struct Violation {
  Clause clause;
  VertexId vertex;
  std::optional<std::size_t> edge;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const BratteliDiagram& d);

/// Throws InvalidDiagram naming the first violation.
void require_valid(const BratteliDiagram& d);

/// t_n x t_{n-1} matrix; entry (i, j) counts edges from v_{n-1,j} to v_{n,i}.
Matrix incidence_matrix(const BratteliDiagram& d, std::size_t n);

/// Cut levels m_0 = 0 < m_1 < ... .
struct TelescopeSchedule {
  std::vector<std::size_t> cuts;
  friend bool operator==(const TelescopeSchedule&, const TelescopeSchedule&) = default;
};

TelescopeSchedule identity_schedule(std::size_t depth);
/// 0 < 1 < 3 < 5 < ... up to depth.
TelescopeSchedule odd_schedule(std::size_t depth);
/// 0 < 2 < 4 < ... up to depth.
TelescopeSchedule even_schedule(std::size_t depth);
/// s2 is a schedule on telescope(d, s1); the result is the equivalent schedule on d.
TelescopeSchedule compose(const TelescopeSchedule& s1, const TelescopeSchedule& s2);

void require_schedule(const TelescopeSchedule& s, std::size_t depth);

/// Composite edges are enumerated by range vertex, then by increasing id of
/// the last constituent edge, then recursively by the earlier ones.
BratteliDiagram telescope(const BratteliDiagram& d, const TelescopeSchedule& s);
BratteliDiagram truncate(const BratteliDiagram& d, std::size_t depth);

enum class Answer { Yes, No, Undetermined };

struct SimplicityResult {
  Answer answer = Answer::Undetermined;
  std::optional<TelescopeSchedule> witness;
};

/// Looks for a schedule with `horizon` cuts after 0 whose telescoped matrices
/// are all strictly positive. A finite truncation can only answer Yes or
/// Undetermined.
SimplicityResult is_simple(const BratteliDiagram& d, std::size_t horizon);
/// Exact: simple iff the repeating matrix is primitive.
SimplicityResult is_simple(const StationaryDiagram& d, std::size_t horizon);

struct PrimitivityResult {
  bool primitive = false;
  std::size_t power = 0;  // least k with C^k > 0 when primitive
  explicit operator bool() const { return primitive; }
};

/// Wielandt's bound n^2 - 2n + 2 on the primitivity exponent.
std::size_t wielandt_bound(std::size_t n);

PrimitivityResult is_primitive(const Matrix& c);

/// Graded isomorphism (bijections per level intertwining source and range).
bool isomorphic(const BratteliDiagram& a, const BratteliDiagram& b);

/// True iff `target` is isomorphic to some telescoping of `source`. When the
/// source runs out of levels first, the matched initial part decides.
bool matches_telescoping(const BratteliDiagram& target, const BratteliDiagram& source);

/// Checks that w telescoped to odd levels matches a telescoping of one of
/// d1, d2 and w telescoped to even levels matches a telescoping of the other.
bool verify_interleaving_witness(const BratteliDiagram& d1, const BratteliDiagram& d2,
                                 const BratteliDiagram& w);

}  // namespace bratteli
