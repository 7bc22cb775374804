#include "bratteli/ordered.hpp"

#include "bratteli/error.hpp"
#include "graded_match.hpp"

#include <algorithm>

namespace bratteli {

OrderedDiagram::OrderedDiagram(BratteliDiagram base, std::vector<std::vector<std::size_t>> order)
    : base_(std::move(base)), order_(std::move(order)) {
  if (order_.size() != base_.depth()) throw InvalidDiagram("edge order needs one entry per edge level");
  sorted_in_.resize(base_.depth());
  for (std::size_t n = 1; n <= base_.depth(); ++n) {
    const auto& ord = order_[n - 1];
    if (ord.size() != base_.edges(n).size())
      throw InvalidDiagram("edge order at level " + std::to_string(n) + " does not cover every edge");
    auto& sorted = sorted_in_[n - 1];
    sorted.resize(base_.level_size(n));
    for (std::size_t v = 0; v < base_.level_size(n); ++v) {
      auto ids = base_.in_edges(n, v);
      std::vector<std::size_t> slot(ids.size(), ids.size());
      for (std::size_t id : ids) {
        if (ord[id] >= ids.size() || slot[ord[id]] != ids.size())
          throw InvalidDiagram("order indices into vertex '" + base_.labels(n)[v] + "' at level " +
                               std::to_string(n) + " are not 0.." + std::to_string(ids.size() - 1) +
                               " without gaps");
        slot[ord[id]] = id;
      }
      sorted[v] = std::move(slot);
    }
  }
}

std::optional<std::size_t> OrderedDiagram::next_edge(std::size_t n, std::size_t e) const {
  const auto& in = incoming(n, range(n, e));
  const std::size_t k = order(n, e);
  if (k + 1 >= in.size()) return std::nullopt;
  return in[k + 1];
}

std::optional<std::size_t> OrderedDiagram::prev_edge(std::size_t n, std::size_t e) const {
  const std::size_t k = order(n, e);
  if (k == 0) return std::nullopt;
  return incoming(n, range(n, e))[k - 1];
}

OrderedDiagram order_by_id(const BratteliDiagram& d) {
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    std::vector<std::size_t> ord(d.edges(n).size(), 0);
    for (std::size_t v = 0; v < d.level_size(n); ++v) {
      auto ids = d.in_edges(n, v);
      for (std::size_t k = 0; k < ids.size(); ++k) ord[ids[k]] = k;
    }
    order.push_back(std::move(ord));
  }
  return OrderedDiagram(d, std::move(order));
}

namespace {

void ordered_composite_into(const OrderedDiagram& od, std::size_t from, std::size_t to, std::size_t v,
                            std::vector<std::size_t>& sources) {
  if (to == from) {
    sources.push_back(v);
    return;
  }
  for (std::size_t id : od.incoming(to, v)) ordered_composite_into(od, from, to - 1, od.source(to, id), sources);
}

}  // namespace

OrderedDiagram induced_order_telescope(const OrderedDiagram& od, const TelescopeSchedule& s) {
  require_valid(od.base());
  require_schedule(s, od.depth());
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t c : s.cuts) levels.push_back(od.base().labels(c));
  for (std::size_t n = 1; n < s.cuts.size(); ++n) {
    std::vector<Edge> level;
    std::vector<std::size_t> ord;
    for (std::size_t v = 0; v < od.level_size(s.cuts[n]); ++v) {
      std::vector<std::size_t> sources;
      ordered_composite_into(od, s.cuts[n - 1], s.cuts[n], v, sources);
      for (std::size_t k = 0; k < sources.size(); ++k) {
        level.push_back({sources[k], v, 0});
        ord.push_back(k);
      }
    }
    edges.push_back(std::move(level));
    order.push_back(std::move(ord));
  }
  return OrderedDiagram(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order));
}

OrderedDiagram truncate(const OrderedDiagram& od, std::size_t depth) {
  BratteliDiagram base = truncate(od.base(), depth);
  std::vector<std::vector<std::size_t>> order(od.orders().begin(),
                                              od.orders().begin() + static_cast<std::ptrdiff_t>(depth));
  return OrderedDiagram(std::move(base), std::move(order));
}

ExtremeEdges max_min_edges(const OrderedDiagram& od, VertexId v) {
  if (v.level == 0) throw PreconditionFailed("the root has no incoming edges");
  return {od.max_edge(v.level, v.index), od.min_edge(v.level, v.index)};
}

namespace {

detail::GradedShape ordered_shape(const OrderedDiagram& od) {
  detail::GradedShape g;
  g.ordered = true;
  for (std::size_t n = 0; n <= od.depth(); ++n) g.sizes.push_back(od.level_size(n));
  for (std::size_t n = 1; n <= od.depth(); ++n) {
    detail::LevelSignatures level(od.level_size(n));
    for (std::size_t v = 0; v < od.level_size(n); ++v)
      for (std::size_t id : od.incoming(n, v)) {
        const std::size_t u = od.source(n, id);
        if (!level[v].empty() && level[v].back().first == u)
          level[v].back().second += 1;
        else
          level[v].emplace_back(u, BigInt(1));
      }
    g.raw.push_back(std::move(level));
  }
  return g;
}

}  // namespace

bool isomorphic(const OrderedDiagram& a, const OrderedDiagram& b) {
  require_valid(a.base());
  require_valid(b.base());
  return detail::match(ordered_shape(a), ordered_shape(b), true);
}

bool matches_telescoping(const OrderedDiagram& target, const OrderedDiagram& source) {
  require_valid(target.base());
  require_valid(source.base());
  return detail::match(ordered_shape(target), ordered_shape(source), false);
}

bool verify_interleaving_witness(const OrderedDiagram& d1, const OrderedDiagram& d2, const OrderedDiagram& w) {
  if (!validate(d1.base()).ok() || !validate(d2.base()).ok() || !validate(w.base()).ok()) return false;
  if (w.depth() < 2) return false;
  const OrderedDiagram odd = induced_order_telescope(w, odd_schedule(w.depth()));
  const OrderedDiagram even = induced_order_telescope(w, even_schedule(w.depth()));
  return (matches_telescoping(odd, d1) && matches_telescoping(even, d2)) ||
         (matches_telescoping(odd, d2) && matches_telescoping(even, d1));
}

std::vector<std::size_t> Substitution::apply(const std::vector<std::size_t>& word) const {
  std::vector<std::size_t> out;
  for (std::size_t a : word) out.insert(out.end(), rules.at(a).begin(), rules.at(a).end());
  return out;
}

Matrix Substitution::matrix() const {
  Matrix m = Matrix::zeros(alphabet.size(), alphabet.size());
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j : rules[i]) m(i, j) += 1;
  return m;
}

void require_valid(const Substitution& s) {
  if (s.alphabet.empty()) throw InvalidDiagram("substitution over an empty alphabet");
  if (s.rules.size() != s.alphabet.size()) throw InvalidDiagram("substitution needs one rule per symbol");
  for (std::size_t i = 0; i < s.alphabet.size(); ++i) {
    if (std::count(s.alphabet.begin(), s.alphabet.end(), s.alphabet[i]) != 1)
      throw InvalidDiagram("symbol '" + s.alphabet[i] + "' repeated in the alphabet");
    if (s.rules[i].empty()) throw InvalidDiagram("empty word for symbol '" + s.alphabet[i] + "'");
    for (std::size_t j : s.rules[i])
      if (j >= s.alphabet.size()) throw InvalidDiagram("rule for '" + s.alphabet[i] + "' uses an unknown symbol");
  }
}

}  // namespace bratteli
