#include "bratteli/diagram.hpp"

#include "bratteli/error.hpp"
#include "graded_match.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bratteli {

BratteliDiagram::BratteliDiagram(std::vector<std::vector<std::string>> levels,
                                 std::vector<std::vector<Edge>> edges)
    : levels_(std::move(levels)), edges_(std::move(edges)) {
  if (levels_.size() != edges_.size() + 1)
    throw InvalidDiagram("diagram needs exactly one edge level per level below the root");
  in_.resize(edges_.size());
  out_.resize(levels_.size());
  for (std::size_t n = 0; n < levels_.size(); ++n) out_[n].resize(levels_[n].size());
  for (std::size_t n = 1; n <= edges_.size(); ++n) {
    auto& level = edges_[n - 1];
    in_[n - 1].resize(levels_[n].size());
    for (std::size_t id = 0; id < level.size(); ++id) {
      Edge& e = level[id];
      e.id = id;
      // Out-of-range endpoints are reported by validate(), not indexed.
      if (e.range < levels_[n].size()) in_[n - 1][e.range].push_back(id);
      if (e.source < levels_[n - 1].size()) out_[n - 1][e.source].push_back(id);
    }
  }
}

std::size_t BratteliDiagram::level_size(std::size_t n) const {
  if (n >= levels_.size()) throw LevelOutOfRange("level " + std::to_string(n) + " beyond depth");
  return levels_[n].size();
}

const std::vector<std::string>& BratteliDiagram::labels(std::size_t n) const {
  if (n >= levels_.size()) throw LevelOutOfRange("level " + std::to_string(n) + " beyond depth");
  return levels_[n];
}

std::span<const Edge> BratteliDiagram::edges(std::size_t n) const {
  if (n == 0 || n > edges_.size())
    throw LevelOutOfRange("edge level " + std::to_string(n) + " out of range");
  return edges_[n - 1];
}

std::span<const std::size_t> BratteliDiagram::in_edges(std::size_t n, std::size_t v) const {
  if (n == 0 || n > edges_.size())
    throw LevelOutOfRange("edge level " + std::to_string(n) + " out of range");
  return in_[n - 1].at(v);
}

std::span<const std::size_t> BratteliDiagram::out_edges(std::size_t n, std::size_t v) const {
  if (n >= edges_.size()) return {};
  return out_[n].at(v);
}

BratteliDiagram StationaryDiagram::truncate(std::size_t depth) const {
  const std::size_t k = alphabet.size();
  std::vector<std::vector<std::string>> levels{{"root"}};
  std::vector<std::vector<Edge>> edges;
  for (std::size_t n = 1; n <= depth; ++n) {
    levels.push_back(alphabet);
    std::vector<Edge> level;
    for (std::size_t i = 0; i < k; ++i) {
      if (n == 1) {
        for (BigInt c = 0; c < top[i]; ++c) level.push_back({0, i, 0});
      } else {
        for (std::size_t j = 0; j < k; ++j)
          for (BigInt c = 0; c < matrix(i, j); ++c) level.push_back({j, i, 0});
      }
    }
    edges.push_back(std::move(level));
  }
  return BratteliDiagram(std::move(levels), std::move(edges));
}

std::string to_string(Clause c) {
  switch (c) {
    case Clause::RootSingleton: return "|V_0| = 1";
    case Clause::IncomingNonempty: return "r^-1(v) nonempty";
    case Clause::OutgoingNonempty: return "s^-1(v) nonempty";
    case Clause::EndpointInRange: return "edge endpoints in range";
    case Clause::DistinctLabels: return "distinct labels per level";
  }
  return "?";
}

ValidationReport validate(const BratteliDiagram& d) {
  ValidationReport report;
  auto add = [&](Clause c, VertexId v, std::optional<std::size_t> e, std::string msg) {
    report.violations.push_back({c, v, e, std::move(msg)});
  };

  if (d.level_count() == 0 || d.level_size(0) != 1)
    add(Clause::RootSingleton, {0, 0}, std::nullopt,
        "level 0 has " + std::to_string(d.level_count() ? d.level_size(0) : 0) + " vertices");

  for (std::size_t n = 0; n < d.level_count(); ++n) {
    std::set<std::string> seen;
    for (std::size_t v = 0; v < d.level_size(n); ++v)
      if (!seen.insert(d.labels(n)[v]).second)
        add(Clause::DistinctLabels, {n, v}, std::nullopt,
            "label '" + d.labels(n)[v] + "' repeated at level " + std::to_string(n));
  }

  for (std::size_t n = 1; n <= d.depth(); ++n) {
    for (const Edge& e : d.edges(n)) {
      if (e.source >= d.level_size(n - 1) || e.range >= d.level_size(n))
        add(Clause::EndpointInRange, {n, e.range}, e.id,
            "edge " + std::to_string(e.id) + " of level " + std::to_string(n) + " has an endpoint out of range");
    }
    for (std::size_t v = 0; v < d.level_size(n); ++v)
      if (d.in_edges(n, v).empty())
        add(Clause::IncomingNonempty, {n, v}, std::nullopt,
            "vertex '" + d.labels(n)[v] + "' at level " + std::to_string(n) + " has no incoming edge");
  }
  for (std::size_t n = 0; n < d.depth(); ++n)
    for (std::size_t v = 0; v < d.level_size(n); ++v)
      if (d.out_edges(n, v).empty())
        add(Clause::OutgoingNonempty, {n, v}, std::nullopt,
            "vertex '" + d.labels(n)[v] + "' at level " + std::to_string(n) + " has no outgoing edge");
  return report;
}

void require_valid(const BratteliDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidDiagram("invalid diagram (" + to_string(v.clause) + "): " + v.message);
  }
}

Matrix incidence_matrix(const BratteliDiagram& d, std::size_t n) {
  if (n == 0 || n > d.depth())
    throw LevelOutOfRange("incidence matrix level " + std::to_string(n) + " outside 1.." +
                          std::to_string(d.depth()));
  Matrix m = Matrix::zeros(d.level_size(n), d.level_size(n - 1));
  for (const Edge& e : d.edges(n)) m(e.range, e.source) += 1;
  return m;
}

TelescopeSchedule identity_schedule(std::size_t depth) {
  TelescopeSchedule s;
  for (std::size_t i = 0; i <= depth; ++i) s.cuts.push_back(i);
  return s;
}

TelescopeSchedule odd_schedule(std::size_t depth) {
  TelescopeSchedule s{{0}};
  for (std::size_t i = 1; i <= depth; i += 2) s.cuts.push_back(i);
  return s;
}

TelescopeSchedule even_schedule(std::size_t depth) {
  TelescopeSchedule s{{0}};
  for (std::size_t i = 2; i <= depth; i += 2) s.cuts.push_back(i);
  return s;
}

TelescopeSchedule compose(const TelescopeSchedule& s1, const TelescopeSchedule& s2) {
  TelescopeSchedule out;
  for (std::size_t c : s2.cuts) {
    if (c >= s1.cuts.size()) throw InvalidSchedule("composed schedule exceeds the first schedule");
    out.cuts.push_back(s1.cuts[c]);
  }
  return out;
}

void require_schedule(const TelescopeSchedule& s, std::size_t depth) {
  if (s.cuts.empty() || s.cuts.front() != 0) throw InvalidSchedule("schedule must start at 0");
  for (std::size_t i = 1; i < s.cuts.size(); ++i)
    if (s.cuts[i] <= s.cuts[i - 1]) throw InvalidSchedule("schedule must be strictly increasing");
  if (s.cuts.back() > depth)
    throw InvalidSchedule("schedule cut " + std::to_string(s.cuts.back()) + " exceeds depth " +
                          std::to_string(depth));
}

namespace {

// Composite paths from V_from to V_to into each vertex, enumerated with the
// last edge most significant, edges into a vertex taken in id order.
void composite_into(const BratteliDiagram& d, std::size_t from, std::size_t to, std::size_t v,
                    std::vector<std::size_t>& sources) {
  if (to == from) {
    sources.push_back(v);
    return;
  }
  for (std::size_t id : d.in_edges(to, v)) composite_into(d, from, to - 1, d.source(to, id), sources);
}

}  // namespace

BratteliDiagram telescope(const BratteliDiagram& d, const TelescopeSchedule& s) {
  require_valid(d);
  require_schedule(s, d.depth());
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<Edge>> edges;
  for (std::size_t c : s.cuts) levels.push_back(d.labels(c));
  for (std::size_t n = 1; n < s.cuts.size(); ++n) {
    std::vector<Edge> level;
    for (std::size_t v = 0; v < d.level_size(s.cuts[n]); ++v) {
      std::vector<std::size_t> sources;
      composite_into(d, s.cuts[n - 1], s.cuts[n], v, sources);
      for (std::size_t u : sources) level.push_back({u, v, 0});
    }
    edges.push_back(std::move(level));
  }
  return BratteliDiagram(std::move(levels), std::move(edges));
}

BratteliDiagram truncate(const BratteliDiagram& d, std::size_t depth) {
  if (depth > d.depth()) throw LevelOutOfRange("truncation deeper than the diagram");
  std::vector<std::vector<std::string>> levels(d.levels().begin(),
                                               d.levels().begin() + static_cast<std::ptrdiff_t>(depth + 1));
  std::vector<std::vector<Edge>> edges;
  for (std::size_t n = 1; n <= depth; ++n) edges.emplace_back(d.edges(n).begin(), d.edges(n).end());
  return BratteliDiagram(std::move(levels), std::move(edges));
}

SimplicityResult is_simple(const BratteliDiagram& d, std::size_t horizon) {
  require_valid(d);
  // Greedy cuts are optimal: every row and column of a valid incidence matrix
  // is nonzero, so multiplying a positive block keeps it positive.
  TelescopeSchedule s{{0}};
  std::size_t prev = 0;
  while (s.cuts.size() <= horizon) {
    std::optional<std::size_t> next;
    Matrix block = Matrix::identity(d.level_size(prev));
    for (std::size_t m = prev + 1; m <= d.depth(); ++m) {
      block = incidence_matrix(d, m) * block;
      if (block.strictly_positive()) {
        next = m;
        break;
      }
    }
    if (!next) return {Answer::Undetermined, std::nullopt};
    s.cuts.push_back(*next);
    prev = *next;
  }
  return {Answer::Yes, s};
}

SimplicityResult is_simple(const StationaryDiagram& d, std::size_t horizon) {
  auto p = is_primitive(d.matrix);
  if (!p) return {Answer::No, std::nullopt};
  TelescopeSchedule s{{0}};
  for (std::size_t i = 0; i < horizon; ++i) s.cuts.push_back(1 + i * p.power);
  return {Answer::Yes, s};
}

std::size_t wielandt_bound(std::size_t n) { return n == 0 ? 0 : n * n - 2 * n + 2; }

PrimitivityResult is_primitive(const Matrix& c) {
  if (!c.square()) throw PreconditionFailed("primitivity needs a square matrix");
  if (!c.nonnegative()) throw PreconditionFailed("primitivity needs a nonnegative matrix");
  const std::size_t n = c.rows();
  if (n == 0) return {};
  // Only the zero pattern matters.
  std::vector<char> pattern(n * n), cur(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pattern[i * n + j] = c(i, j) > 0;
  cur = pattern;
  const std::size_t bound = wielandt_bound(n);
  for (std::size_t k = 1; k <= bound; ++k) {
    if (std::all_of(cur.begin(), cur.end(), [](char x) { return x != 0; })) return {true, k};
    std::vector<char> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (cur[i * n + l])
          for (std::size_t j = 0; j < n; ++j)
            if (pattern[l * n + j]) next[i * n + j] = 1;
    cur = std::move(next);
  }
  return {};
}

namespace detail {

GradedShape shape_of(const BratteliDiagram& d) {
  GradedShape g;
  g.ordered = false;
  for (std::size_t n = 0; n < d.level_count(); ++n) g.sizes.push_back(d.level_size(n));
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    Matrix m = incidence_matrix(d, n);
    LevelSignatures level(d.level_size(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) level[i].emplace_back(j, m(i, j));
    g.raw.push_back(std::move(level));
  }
  return g;
}

}  // namespace detail

bool isomorphic(const BratteliDiagram& a, const BratteliDiagram& b) {
  require_valid(a);
  require_valid(b);
  return detail::match(detail::shape_of(a), detail::shape_of(b), true);
}

bool matches_telescoping(const BratteliDiagram& target, const BratteliDiagram& source) {
  require_valid(target);
  require_valid(source);
  return detail::match(detail::shape_of(target), detail::shape_of(source), false);
}

bool verify_interleaving_witness(const BratteliDiagram& d1, const BratteliDiagram& d2,
                                 const BratteliDiagram& w) {
  if (!validate(d1).ok() || !validate(d2).ok() || !validate(w).ok()) return false;
  if (w.depth() < 2) return false;
  const BratteliDiagram odd = telescope(w, odd_schedule(w.depth()));
  const BratteliDiagram even = telescope(w, even_schedule(w.depth()));
  return (matches_telescoping(odd, d1) && matches_telescoping(even, d2)) ||
         (matches_telescoping(odd, d2) && matches_telescoping(even, d1));
}

}  // namespace bratteli
