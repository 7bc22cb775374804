#include "bratteli/kakutani_equiv.hpp"

#include "bratteli/error.hpp"

#include <algorithm>

namespace bratteli {
namespace {

OrderedDiagram splice(const OrderedDiagram& replacement, const OrderedDiagram& od) {
  const std::size_t l = replacement.depth();
  if (l > od.depth()) throw PreconditionFailed("change reaches below the represented depth");
  if (replacement.base().labels(l) != od.base().labels(l))
    throw InvalidDiagram("replacement level " + std::to_string(l) + " labels differ from the diagram's");
  std::vector<std::vector<std::string>> levels = replacement.base().levels();
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order = replacement.orders();
  for (std::size_t n = 1; n <= l; ++n)
    edges.emplace_back(replacement.base().edges(n).begin(), replacement.base().edges(n).end());
  for (std::size_t n = l + 1; n <= od.depth(); ++n) {
    levels.push_back(od.base().labels(n));
    edges.emplace_back(od.base().edges(n).begin(), od.base().edges(n).end());
    order.push_back(od.orders()[n - 1]);
  }
  OrderedDiagram out(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order));
  require_valid(out.base());
  return out;
}

struct Pruned {
  OrderedDiagram diagram;
  bool last_level_intact = false;
};

Pruned prune_top(const OrderedDiagram& od, const std::set<std::size_t>& keep) {
  if (keep.empty()) throw PreconditionFailed("keep must name at least one level-1 edge");
  if (od.depth() == 0) throw PreconditionFailed("no level-1 edges to keep");
  for (std::size_t e : keep)
    if (e >= od.edge_count(1)) throw PreconditionFailed("level-1 edge " + std::to_string(e) + " does not exist");

  std::vector<std::size_t> index{0};  // new index of each live vertex of the previous level
  std::vector<bool> alive_prev{true};
  std::vector<std::vector<std::string>> levels{od.base().labels(0)};
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order;
  bool intact = true;
  for (std::size_t n = 1; n <= od.depth(); ++n) {
    auto survives = [&](std::size_t e) { return alive_prev[od.source(n, e)] && (n > 1 || keep.count(e)); };
    std::vector<bool> alive(od.level_size(n), false);
    for (std::size_t e = 0; e < od.edge_count(n); ++e)
      if (survives(e)) alive[od.range(n, e)] = true;
    std::vector<std::size_t> next_index(od.level_size(n), 0);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) {
        next_index[v] = labels.size();
        labels.push_back(od.label(n, v));
      }
    if (labels.empty()) throw PreconditionFailed("pruning empties level " + std::to_string(n));
    intact = labels.size() == alive.size();

    std::vector<Edge> level;
    std::vector<std::size_t> ord(0);
    std::vector<std::size_t> rank(od.edge_count(n), 0);
    for (std::size_t v = 0; v < alive.size(); ++v) {
      std::size_t r = 0;
      for (std::size_t e : od.incoming(n, v))
        if (survives(e)) rank[e] = r++;
    }
    for (std::size_t e = 0; e < od.edge_count(n); ++e)
      if (survives(e)) {
        level.push_back({index[od.source(n, e)], next_index[od.range(n, e)], 0});
        ord.push_back(rank[e]);
      }
    levels.push_back(std::move(labels));
    edges.push_back(std::move(level));
    order.push_back(std::move(ord));
    index = std::move(next_index);
    alive_prev = std::move(alive);
  }
  return {OrderedDiagram(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order)), intact};
}

}  // namespace

StationaryTailDiagram apply_finite_change(const StationaryTailDiagram& d, const FiniteChange& ch) {
  const OrderedDiagram base = d.truncate(std::max(d.head_depth(), ch.depth()));
  StationaryTailDiagram out(splice(ch.replacement, base), d.incoming());
  if (properly_ordered(d) && !properly_ordered(out))
    throw NotProperlyOrdered("the change destroyed proper ordering");
  return out;
}

OrderedDiagram apply_finite_change(const OrderedDiagram& od, const FiniteChange& ch) {
  return splice(ch.replacement, od);
}

FiniteChange head_change(const StationaryTailDiagram& d, std::size_t depth) { return {d.truncate(depth)}; }

FiniteChange head_change(const OrderedDiagram& od, std::size_t depth) { return {truncate(od, depth)}; }

StationaryTailDiagram induce_on_top(const StationaryTailDiagram& d, const std::set<std::size_t>& keep) {
  const std::size_t limit = d.head_depth() + wielandt_bound(d.alphabet_size()) + d.alphabet_size() + 2;
  for (std::size_t depth = d.head_depth(); depth <= limit; ++depth) {
    Pruned p = prune_top(d.truncate(depth), keep);
    if (p.last_level_intact) return StationaryTailDiagram(std::move(p.diagram), d.incoming());
  }
  throw PreconditionFailed("pruning does not settle; the tail never becomes fully reachable");
}

OrderedDiagram induce_on_top(const OrderedDiagram& od, const std::set<std::size_t>& keep) {
  return prune_top(od, keep).diagram;
}

bool first_return_check(const StationaryTailDiagram& d, const std::set<std::size_t>& keep, std::size_t n) {
  const StationaryTailDiagram induced = induce_on_top(d, keep);
  const std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::vector<std::size_t> expected;
  for (std::size_t e : orbit_top_edges(induced, n)) expected.push_back(kept.at(e));

  VershikSystem system(d);
  OrbitStream stream(system);
  std::vector<std::size_t> visits;
  // Return times to a top cylinder are bounded by the largest tower height
  // reached; this budget only guards against a broken diagram.
  const std::size_t budget = 1'000'000 + 1'000 * n;
  for (std::size_t steps = 0; visits.size() < n && steps < budget; ++steps) {
    const std::size_t e = stream.next_top_edge();
    if (keep.count(e)) visits.push_back(e);
  }
  return visits == expected;
}

UnitChangeReport unit_change_report(const StationaryTailDiagram& before, const StationaryTailDiagram& after) {
  UnitChangeReport r;
  r.tail_identical = before.incoming() == after.incoming() && before.alphabet() == after.alphabet();
  r.stage = std::max(before.head_depth(), after.head_depth());
  const GroupPresentation p = k0_of(before), q = k0_of(after);
  r.old_unit = push(p, unit_of(p), r.stage);
  r.new_unit = push(q, unit_of(q), r.stage);
  return r;
}

UnitChangeReport unit_change_report(const StationaryTailDiagram& d, const FiniteChange& ch) {
  return unit_change_report(d, apply_finite_change(d, ch));
}

UnitChangeReport unit_change_report(const OrderedDiagram& od, const FiniteChange& ch) {
  const OrderedDiagram after = apply_finite_change(od, ch);
  UnitChangeReport r;
  r.stage = ch.depth();
  r.tail_identical = true;
  for (std::size_t n = r.stage + 1; n <= od.depth(); ++n)
    r.tail_identical = r.tail_identical && incidence_matrix(od.base(), n) == incidence_matrix(after.base(), n) &&
                       od.orders()[n - 1] == after.orders()[n - 1];
  const GroupPresentation p = k0_of(od.base()), q = k0_of(after.base());
  r.old_unit = push(p, unit_of(p), r.stage);
  r.new_unit = push(q, unit_of(q), r.stage);
  return r;
}

}  // namespace bratteli
