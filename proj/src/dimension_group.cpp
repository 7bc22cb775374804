#include "bratteli/dimension_group.hpp"

#include "bratteli/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace bratteli {

std::size_t GroupPresentation::depth() const {
  return stationary() ? std::numeric_limits<std::size_t>::max() : head.size();
}

std::size_t GroupPresentation::dimension(std::size_t stage) const {
  if (stage == 0) return head.empty() ? (repeating ? repeating->cols() : 1) : head.front().cols();
  return map(stage).rows();
}

const Matrix& GroupPresentation::map(std::size_t n) const {
  if (n == 0) throw LevelOutOfRange("stage 0 has no incoming map");
  if (n <= head.size()) return head[n - 1];
  if (!repeating) throw LevelOutOfRange("stage " + std::to_string(n) + " beyond the represented depth");
  return *repeating;
}

GroupPresentation k0_of(const BratteliDiagram& d) {
  require_valid(d);
  GroupPresentation p;
  for (std::size_t n = 1; n <= d.depth(); ++n) p.head.push_back(incidence_matrix(d, n));
  return p;
}

GroupPresentation k0_of(const StationaryDiagram& d) {
  return {{Matrix::column(d.top)}, d.matrix};
}

GroupPresentation k0_of(const StationaryOrderedDiagram& sd) { return k0_of(sd.unordered()); }

GroupPresentation k0_of(const StationaryTailDiagram& d) {
  GroupPresentation p;
  for (std::size_t n = 1; n <= d.head_depth(); ++n) p.head.push_back(d.incidence(n));
  p.repeating = d.tail_matrix();
  return p;
}

void require_element(const GroupPresentation& p, const GroupElement& g) {
  if (g.stage > p.depth()) throw LevelOutOfRange("element stage beyond the represented depth");
  if (g.vector.size() != p.dimension(g.stage))
    throw PreconditionFailed("element at stage " + std::to_string(g.stage) + " needs " +
                             std::to_string(p.dimension(g.stage)) + " entries, got " +
                             std::to_string(g.vector.size()));
}

GroupElement push(const GroupPresentation& p, const GroupElement& g, std::size_t stage) {
  require_element(p, g);
  if (stage < g.stage) throw PreconditionFailed("cannot push an element to an earlier stage");
  if (stage > p.depth()) throw LevelOutOfRange("stage " + std::to_string(stage) + " beyond the represented depth");
  GroupElement out = g;
  for (std::size_t n = g.stage + 1; n <= stage; ++n) out.vector = p.map(n).apply(out.vector);
  out.stage = stage;
  return out;
}

GroupElement difference(const GroupPresentation& p, const GroupElement& a, const GroupElement& b) {
  const std::size_t s = std::max(a.stage, b.stage);
  return {s, push(p, a, s).vector - push(p, b, s).vector};
}

GroupElement sum(const GroupPresentation& p, const GroupElement& a, const GroupElement& b) {
  const std::size_t s = std::max(a.stage, b.stage);
  return {s, push(p, a, s).vector + push(p, b, s).vector};
}

GroupElement scaled(const BigInt& s, const GroupElement& g) { return {g.stage, s * g.vector}; }

namespace {

bool vanishes_eventually(const GroupPresentation& p, const GroupElement& d) {
  const std::size_t k = p.repeating->rows();
  return is_zero(power(*p.repeating, k).apply(d.vector));
}

GroupElement lifted_past_head(const GroupPresentation& p, const GroupElement& g) {
  return push(p, g, std::max(g.stage, p.head.size()));
}

}  // namespace

Truth equal(const GroupPresentation& p, const GroupElement& a, const GroupElement& b) {
  const GroupElement d = difference(p, a, b);
  if (p.stationary()) return vanishes_eventually(p, lifted_past_head(p, d)) ? Truth::True : Truth::False;
  return is_zero(push(p, d, p.depth()).vector) ? Truth::True : Truth::Undetermined;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "POS";
    case Sign::Negative: return "NEG";
    case Sign::Zero: return "ZERO";
    case Sign::Undetermined: return "UNDET";
  }
  return "UNDET";
}

namespace {

Sign strict_sign(const Vector& v) {
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x > 0; })) return Sign::Positive;
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x < 0; })) return Sign::Negative;
  return Sign::Undetermined;
}

Sign weak_sign(const Vector& v) {
  if (is_zero(v)) return Sign::Zero;
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x >= 0; })) return Sign::Positive;
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x <= 0; })) return Sign::Negative;
  return Sign::Undetermined;
}

}  // namespace

Sign perron_pairing_sign(const Matrix& c, const Vector& v, std::size_t squarings) {
  if (!c.square() || c.rows() != v.size()) throw PreconditionFailed("pairing needs a square matrix matching the vector");
  const PrimitivityResult prim = is_primitive(c);
  if (!prim) throw PreconditionFailed("the Perron pairing needs a primitive matrix");
  if (is_zero(v)) return Sign::Undetermined;
  Matrix m = power(c, prim.power);
  for (std::size_t t = 0;; ++t) {
    const Sign s = strict_sign(m.apply(v));
    if (s != Sign::Undetermined || t == squarings) return s;
    m = m * m;
  }
}

Sign push_sign(const GroupPresentation& p, const GroupElement& g, std::size_t horizon) {
  require_element(p, g);
  const std::size_t last = p.stationary() ? g.stage + horizon : std::min(p.depth(), g.stage + horizon);
  GroupElement x = g;
  for (;;) {
    const Sign s = weak_sign(x.vector);
    if (s != Sign::Undetermined || x.stage >= last) return s;
    x = push(p, x, x.stage + 1);
  }
}

Sign is_positive(const GroupPresentation& p, const GroupElement& g, std::size_t horizon) {
  require_element(p, g);
  const GroupElement zero{g.stage, Vector(g.vector.size(), BigInt(0))};
  const Truth z = equal(p, g, zero);
  if (z == Truth::True) return Sign::Zero;
  if (p.stationary() && is_primitive(*p.repeating)) {
    const GroupElement x = lifted_past_head(p, g);
    const Sign s = weak_sign(x.vector);
    if (s == Sign::Positive || s == Sign::Negative) return s;
    return perron_pairing_sign(*p.repeating, x.vector, std::min<std::size_t>(horizon, 12));
  }
  return push_sign(p, g, horizon);
}

GroupElement unit_of(const GroupPresentation& p) {
  if (p.dimension(0) != 1) throw PreconditionFailed("stage 0 must be a single vertex");
  return {0, {BigInt(1)}};
}

namespace {

bool certified_leq(const GroupPresentation& p, const GroupElement& a, const GroupElement& b, std::size_t horizon) {
  const Sign s = is_positive(p, difference(p, b, a), horizon);
  return s == Sign::Positive || s == Sign::Zero;
}

}  // namespace

std::optional<GroupElement> interpolate(const GroupPresentation& p, const GroupElement& a1, const GroupElement& a2,
                                        const GroupElement& b1, const GroupElement& b2, std::size_t horizon) {
  const GroupElement* as[] = {&a1, &a2};
  const GroupElement* bs[] = {&b1, &b2};
  for (auto a : as)
    for (auto b : bs)
      if (!certified_leq(p, *a, *b, 64)) throw PreconditionFailed("a_i <= b_j could not be certified");

  const std::size_t start = std::max({a1.stage, a2.stage, b1.stage, b2.stage});
  const std::size_t last = p.stationary() ? start + horizon : std::min(p.depth(), start + horizon);
  auto valid = [&](const GroupElement& c) {
    for (auto a : as)
      if (!certified_leq(p, *a, c, 64)) return false;
    for (auto b : bs)
      if (!certified_leq(p, c, *b, 64)) return false;
    return true;
  };
  for (std::size_t s = start; s <= last; ++s) {
    const Vector x1 = push(p, a1, s).vector, x2 = push(p, a2, s).vector;
    const Vector y1 = push(p, b1, s).vector, y2 = push(p, b2, s).vector;
    GroupElement lo{s, {}}, hi{s, {}};
    for (std::size_t i = 0; i < x1.size(); ++i) {
      lo.vector.push_back(std::max(x1[i], x2[i]));
      hi.vector.push_back(std::min(y1[i], y2[i]));
    }
    if (valid(lo)) return lo;
    if (valid(hi)) return hi;
  }
  return std::nullopt;
}

GroupElement normal_form(const GroupPresentation& p, const GroupElement& g) {
  require_element(p, g);
  const std::size_t target = p.stationary() ? std::max(g.stage, p.head.size()) : g.stage;
  const Vector image = push(p, g, target).vector;
  const Matrix kill = p.stationary() ? power(*p.repeating, p.repeating->rows()) : Matrix::identity(image.size());
  for (std::size_t s = 0; s <= g.stage; ++s) {
    Matrix phi = Matrix::identity(p.dimension(s));
    for (std::size_t n = s + 1; n <= target; ++n) phi = p.map(n) * phi;
    if (auto h = solve_integer(kill * phi, kill.apply(image))) return {s, *h};
  }
  return g;
}

void require_shape(const KRLevel& towers, const TowerFunction& f) {
  if (f.values.size() != towers.heights.size())
    throw PreconditionFailed("tower function has " + std::to_string(f.values.size()) + " towers, expected " +
                             std::to_string(towers.heights.size()));
  for (std::size_t k = 0; k < f.values.size(); ++k)
    if (BigInt(f.values[k].size()) != towers.heights[k])
      throw PreconditionFailed("tower " + std::to_string(k) + " has the wrong number of floors");
}

GroupElement gamma(const KRLevel& towers, const TowerFunction& f) {
  require_shape(towers, f);
  GroupElement out{f.level, {}};
  for (const auto& column : f.values) {
    BigInt s = 0;
    for (const BigInt& x : column) s += x;
    out.vector.push_back(s);
  }
  return out;
}

TowerFunction lift(const NestedKRSequence& seq, const TowerFunction& f) {
  if (f.level + 1 >= seq.levels.size()) throw LevelOutOfRange("no finer partition to lift to");
  require_shape(seq.levels[f.level], f);
  TowerFunction out{f.level + 1, {}};
  for (const auto& word : seq.levels[f.level + 1].words) {
    std::vector<BigInt> column;
    for (std::size_t i : word) column.insert(column.end(), f.values[i].begin(), f.values[i].end());
    out.values.push_back(std::move(column));
  }
  return out;
}

namespace {

TowerFunction indicator(const KRLevel& towers, std::size_t level, std::size_t k, std::size_t j) {
  TowerFunction f{level, {}};
  for (const BigInt& h : towers.heights) f.values.emplace_back(static_cast<std::size_t>(h), BigInt(0));
  f.values[k][j] = 1;
  return f;
}

}  // namespace

bool gamma_intertwine_check(const NestedKRSequence& seq, std::size_t n) {
  require_valid(seq);
  if (n + 1 >= seq.levels.size()) throw LevelOutOfRange("level " + std::to_string(n + 1) + " not in the sequence");
  const Matrix q = incidence_matrix(diagram_from_nested(seq).base(), n + 1);
  const KRLevel& towers = seq.levels[n];
  for (std::size_t k = 0; k < towers.heights.size(); ++k)
    for (std::size_t j = 0; BigInt(j) < towers.heights[k]; ++j) {
      const TowerFunction f = indicator(towers, n, k, j);
      if (gamma(seq.levels[n + 1], lift(seq, f)).vector != q.apply(gamma(towers, f).vector)) return false;
    }
  return true;
}

TowerFunction coboundary_witness(const KRLevel& towers, const TowerFunction& f) {
  const GroupElement sums = gamma(towers, f);
  if (!is_zero(sums.vector)) throw PreconditionFailed("coboundary witness needs null tower sums");
  TowerFunction g{f.level, {}};
  for (const auto& column : f.values) {
    std::vector<BigInt> out(column.size());
    BigInt partial = 0;
    for (std::size_t j = 0; j < column.size(); ++j) {
      out[j] = -partial;
      partial += column[j];
    }
    g.values.push_back(std::move(out));
  }
  return g;
}

TowerSumReport tower_sum_report(const NestedKRSequence& seq, std::size_t n) {
  require_valid(seq);
  if (n >= seq.levels.size()) throw LevelOutOfRange("level " + std::to_string(n) + " not in the sequence");
  const KRLevel& towers = seq.levels[n];
  const std::size_t t = towers.heights.size();
  std::size_t floors = 0;
  for (const BigInt& h : towers.heights) floors += static_cast<std::size_t>(h);

  TowerSumReport report;
  // Matrix of gamma_n on the floor indicators, column per floor.
  Matrix g = Matrix::zeros(t, floors);
  std::size_t col = 0;
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t j = 0; BigInt(j) < towers.heights[k]; ++j, ++col)
      g(k, col) = gamma(towers, indicator(towers, n, k, j)).vector[k];
  report.rank = rank(g);

  report.onto = true;
  for (std::size_t k = 0; k < t; ++k) {
    Vector e(t, BigInt(0));
    e[k] = 1;
    report.onto = report.onto && gamma(towers, indicator(towers, n, k, 0)).vector == e;
  }

  // Floor differences d_{k,j} = 1_{k,j} - 1_{k,j+1}: null-sum, in echelon
  // form (distinct leading floors), and as many as floors - rank.
  std::size_t family = 0;
  bool null_sums = true;
  std::set<std::pair<std::size_t, std::size_t>> leads;
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t j = 0; BigInt(j + 1) < towers.heights[k]; ++j) {
      TowerFunction d = indicator(towers, n, k, j);
      d.values[k][j + 1] = -1;
      null_sums = null_sums && is_zero(gamma(towers, d).vector);
      for (std::size_t i = 0; i < d.values[k].size(); ++i)
        if (d.values[k][i] != 0) {
          leads.insert({k, i});
          break;
        }
      ++family;
    }
  report.kernel_spanned = null_sums && leads.size() == family && family == floors - report.rank;
  return report;
}

}  // namespace bratteli
