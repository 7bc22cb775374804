#include "bratteli/vershik.hpp"

#include "bratteli/error.hpp"

#include <algorithm>
#include <numeric>

namespace bratteli {

std::size_t AdicPath::edge(std::size_t n) const {
  if (n == 0) throw LevelOutOfRange("paths start at level 1");
  if (n <= prefix.size()) return prefix[n - 1];
  if (cycle.empty()) throw PreconditionFailed("path has no periodic tail");
  return cycle[(n - prefix.size() - 1) % cycle.size()];
}

PathPrefix AdicPath::truncated(std::size_t n) const {
  PathPrefix p;
  p.edges.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) p.edges.push_back(edge(i));
  return p;
}

AdicPath canonical(AdicPath x, std::size_t head_depth) {
  const std::size_t q = x.cycle.size();
  for (std::size_t period = 1; period < q; ++period) {
    if (q % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < q && ok; ++i) ok = x.cycle[i] == x.cycle[i - period];
    if (ok) {
      x.cycle.resize(period);
      break;
    }
  }
  while (!x.cycle.empty() && x.prefix.size() > head_depth && x.prefix.back() == x.cycle.back()) {
    std::rotate(x.cycle.rbegin(), x.cycle.rbegin() + 1, x.cycle.rend());
    x.prefix.pop_back();
  }
  return x;
}

bool is_valid_path(const StationaryTailDiagram& d, const AdicPath& x) {
  if (x.cycle.empty() || x.prefix.size() < d.head_depth()) return false;
  const std::size_t span = x.prefix.size() + x.cycle.size() + 1;
  for (std::size_t n = 1; n <= span; ++n)
    if (x.edge(n) >= d.edge_count(n)) return false;
  if (d.source(1, x.edge(1)) != 0) return false;
  for (std::size_t n = 1; n < span; ++n)
    if (d.range(n, x.edge(n)) != d.source(n + 1, x.edge(n + 1))) return false;
  return true;
}

namespace {

void enumerate_into(const OrderedDiagram& od, std::size_t n, std::size_t v, std::vector<std::size_t>& buffer,
                    std::vector<PathPrefix>& out) {
  if (n == 0) {
    out.push_back({buffer});
    return;
  }
  for (std::size_t e : od.incoming(n, v)) {
    buffer[n - 1] = e;
    enumerate_into(od, n - 1, od.source(n, e), buffer, out);
  }
}

}  // namespace

Tower tower(const OrderedDiagram& od, VertexId v) {
  if (v.level == 0) throw PreconditionFailed("towers live at levels >= 1");
  if (v.level > od.depth()) throw LevelOutOfRange("tower level beyond the represented depth");
  require_valid(od.base());
  Tower t{v, {}};
  std::vector<std::size_t> buffer(v.level);
  enumerate_into(od, v.level, v.index, buffer, t.floors);
  return t;
}

Vector tower_heights(const OrderedDiagram& od, std::size_t n) {
  if (n > od.depth()) throw LevelOutOfRange("heights level beyond the represented depth");
  Vector h{BigInt(1)};
  for (std::size_t m = 1; m <= n; ++m) h = incidence_matrix(od.base(), m).apply(h);
  return h;
}

Vector tower_heights(const StationaryTailDiagram& d, std::size_t n) {
  Vector h{BigInt(1)};
  const Matrix tail = d.tail_matrix();
  for (std::size_t m = 1; m <= n; ++m) h = (m <= d.head_depth() ? d.incidence(m) : tail).apply(h);
  return h;
}

std::vector<AdicPath> extreme_path_set(const StationaryTailDiagram& d, bool max) {
  const std::size_t k = d.alphabet_size();
  const std::size_t head = d.head_depth();
  std::vector<std::size_t> f(k);
  for (std::size_t a = 0; a < k; ++a) f[a] = max ? d.incoming()[a].back() : d.incoming()[a].front();

  std::vector<AdicPath> out;
  for (std::size_t p : periodic_points(f)) {
    std::size_t len = 1;
    for (std::size_t x = f[p]; x != p; x = f[x]) ++len;
    // Vertex at level head + t is f^{len - t}(p); its extreme edge points up
    // to the vertex one level above.
    std::vector<std::size_t> orbit(len + 1);
    orbit[0] = p;
    for (std::size_t i = 1; i <= len; ++i) orbit[i] = f[orbit[i - 1]];
    AdicPath x;
    for (std::size_t t = 1; t <= len; ++t) {
      const std::size_t v = orbit[len - t];
      x.cycle.push_back(max ? d.max_edge(head + t, v) : d.min_edge(head + t, v));
    }
    x.prefix.resize(head);
    std::size_t v = p;
    for (std::size_t n = head; n >= 1; --n) {
      x.prefix[n - 1] = max ? d.max_edge(n, v) : d.min_edge(n, v);
      v = d.source(n, x.prefix[n - 1]);
    }
    out.push_back(canonical(std::move(x), head));
  }
  return out;
}

VershikSystem::VershikSystem(StationaryTailDiagram d) : d_(std::move(d)) {
  if (!is_primitive(d_.tail_matrix()))
    throw NotProperlyOrdered("not simple: the repeating matrix is not primitive");
  auto minimal = extreme_path_set(d_, false);
  if (minimal.size() != 1)
    throw NotProperlyOrdered(std::to_string(minimal.size()) + " minimal paths; the orbit origin is ambiguous");
  x_min_ = std::move(minimal.front());
  maximal_ = extreme_path_set(d_, true);
}

const AdicPath& VershikSystem::x_max() const {
  if (maximal_.size() != 1)
    throw NotProperlyOrdered("not properly ordered: " + std::to_string(maximal_.size()) + " maximal paths");
  return maximal_.front();
}

namespace {

// Shared body of step/step_back: `advance` is next_edge or prev_edge and
// `reset` picks the min (forward) or max (backward) edge into a vertex.
template <class Advance, class Reset>
std::optional<AdicPath> move_path(const StationaryTailDiagram& d, AdicPath y, Advance advance, Reset reset) {
  std::optional<std::size_t> k;
  std::optional<std::size_t> replacement;
  for (std::size_t n = 1; n <= y.prefix.size() && !k; ++n)
    if (auto e = advance(n, y.prefix[n - 1])) {
      k = n;
      replacement = e;
    }
  if (!k) {
    const std::size_t p = y.prefix.size();
    for (std::size_t j = 0; j < y.cycle.size() && !k; ++j)
      if (auto e = advance(p + 1 + j, y.cycle[j])) {
        y.prefix.insert(y.prefix.end(), y.cycle.begin(), y.cycle.begin() + static_cast<std::ptrdiff_t>(j + 1));
        std::rotate(y.cycle.begin(), y.cycle.begin() + static_cast<std::ptrdiff_t>(j + 1), y.cycle.end());
        k = p + 1 + j;
        replacement = e;
      }
  }
  if (!k) return std::nullopt;
  y.prefix[*k - 1] = *replacement;
  for (std::size_t i = *k - 1; i >= 1; --i) y.prefix[i - 1] = reset(i, d.source(i + 1, y.prefix[i]));
  return canonical(std::move(y), d.head_depth());
}

}  // namespace

AdicPath VershikSystem::step(const AdicPath& x) const {
  auto y = move_path(
      d_, x, [&](std::size_t n, std::size_t e) { return d_.next_edge(n, e); },
      [&](std::size_t n, std::size_t v) { return d_.min_edge(n, v); });
  if (y) return *y;
  if (!properly_ordered())
    throw NotProperlyOrdered("cannot step a maximal path: " + std::to_string(maximal_.size()) + " maximal paths");
  return x_min_;
}

AdicPath VershikSystem::step_back(const AdicPath& x) const {
  auto y = move_path(
      d_, x, [&](std::size_t n, std::size_t e) { return d_.prev_edge(n, e); },
      [&](std::size_t n, std::size_t v) { return d_.max_edge(n, v); });
  if (y) return *y;
  return x_max();
}

ExtremePaths extreme_paths(const StationaryTailDiagram& d) {
  auto verdict = properly_ordered(d);
  if (!verdict) throw NotProperlyOrdered("extreme paths are not unique: " + verdict.reason);
  return {extreme_path_set(d, true).front(), extreme_path_set(d, false).front()};
}

ExtremePaths extreme_paths(const StationaryOrderedDiagram& sd) { return extreme_paths(sd.as_tail()); }

AdicPath vershik_step(const StationaryOrderedDiagram& sd, const AdicPath& x) {
  return VershikSystem(sd.as_tail()).step(x);
}

OrbitStream::OrbitStream(const VershikSystem& system) : system_(&system), x_(system.x_min()) {}

OrbitStream::OrbitStream(const VershikSystem& system, AdicPath start) : system_(&system), x_(std::move(start)) {}

std::size_t OrbitStream::next_symbol() {
  const std::size_t s = system_->symbol(x_);
  x_ = system_->step(x_);
  return s;
}

std::size_t OrbitStream::next_top_edge() {
  const std::size_t e = x_.edge(1);
  x_ = system_->step(x_);
  return e;
}

std::vector<std::size_t> orbit_sequence(const StationaryTailDiagram& d, std::size_t n) {
  if (n == 0) throw PreconditionFailed("orbit length must be at least 1");
  VershikSystem system(d);
  OrbitStream stream(system);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next_symbol());
  return out;
}

std::vector<std::size_t> orbit_sequence(const StationaryOrderedDiagram& sd, std::size_t n) {
  return orbit_sequence(sd.as_tail(), n);
}

std::vector<std::size_t> orbit_top_edges(const StationaryTailDiagram& d, std::size_t n) {
  VershikSystem system(d);
  OrbitStream stream(system);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next_top_edge());
  return out;
}

std::string render_symbols(const std::vector<std::string>& labels, const std::vector<std::size_t>& word) {
  const bool single = std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t a : word) {
    if (single)
      out += labels.at(a);
    else
      out += std::to_string(labels.at(a).size()) + ":" + labels.at(a);
  }
  return out;
}

bool is_cofinal(const AdicPath& x, const AdicPath& y) {
  if (x.cycle.empty() || y.cycle.empty()) return false;
  const std::size_t start = std::max(x.prefix.size(), y.prefix.size()) + 1;
  const std::size_t period = std::lcm(x.cycle.size(), y.cycle.size());
  for (std::size_t n = start; n < start + period; ++n)
    if (x.edge(n) != y.edge(n)) return false;
  return true;
}

}  // namespace bratteli
