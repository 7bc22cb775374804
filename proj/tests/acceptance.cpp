// Acceptance run: one PASS/FAIL line per criterion.
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace bratteli;
using support::fibonacci;
using support::odometer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Corpus shared by the orbit, round-trip and tower-sum criteria.
std::vector<std::pair<std::string, StationaryOrderedDiagram>> corpus() {
  std::vector<std::pair<std::string, StationaryOrderedDiagram>> out{{"odometer", odometer()},
                                                                    {"fibonacci", fibonacci()}};
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) out.emplace_back("random#" + std::to_string(i), support::random_proper(rng));
  return out;
}

GroupElement random_element(const GroupPresentation& p, std::mt19937& rng, std::size_t max_stage, long long max_abs) {
  std::uniform_int_distribution<std::size_t> stage(0, max_stage);
  std::uniform_int_distribution<long long> value(-max_abs, max_abs);
  GroupElement g{stage(rng), {}};
  for (std::size_t i = 0; i < p.dimension(g.stage); ++i) g.vector.push_back(value(rng));
  return g;
}

Outcome dyadic() {
  const GroupPresentation p = k0_of(StationaryDiagram{{"a"}, {BigInt(1)}, Matrix{{2}}});
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> stage(1, 20);
  std::uniform_int_distribution<long long> value(-1000000, 1000000);
  std::vector<GroupElement> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back({stage(rng), {BigInt(value(rng))}});
  // Half of the pairs are forced equal by scaling with the stage gap.
  std::size_t mismatches = 0, equal_pairs = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const GroupElement& a = xs[i];
    GroupElement b = xs[(i + 1) % xs.size()];
    if (i % 2 == 0 && a.stage < 20) b = {a.stage + 1, {2 * a.vector[0]}};
    const bool same = (a.vector[0] << (b.stage - 1)) == (b.vector[0] << (a.stage - 1));
    equal_pairs += same;
    if ((equal(p, a, b) == Truth::True) != same) ++mismatches;
    if (equal(p, a, b) == Truth::Undetermined) ++mismatches;
    const Sign expected = a.vector[0] > 0 ? Sign::Positive : a.vector[0] < 0 ? Sign::Negative : Sign::Zero;
    if (is_positive(p, a) != expected) ++mismatches;
  }
  const GroupElement u = push(p, unit_of(p), 1);
  if (u.vector != Vector{BigInt(1)}) ++mismatches;
  return {mismatches == 0, "1000 elements, " + std::to_string(equal_pairs) + " equal pairs, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome telescoping_law() {
  std::mt19937 rng(2);
  std::size_t schedules = 0, failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BratteliDiagram d = support::random_explicit(rng, 5, 4, 3);
    const std::size_t depth = d.depth();
    for (unsigned mask = 1; mask < (1u << depth); ++mask) {
      if (__builtin_popcount(mask) > 3) continue;
      std::vector<std::size_t> cuts{0};
      for (std::size_t c = 1; c <= depth; ++c)
        if (mask & (1u << (c - 1))) cuts.push_back(c);
      const BratteliDiagram t = telescope(d, {cuts});
      ++schedules;
      for (std::size_t i = 1; i < cuts.size(); ++i) {
        Matrix product = Matrix::identity(d.level_size(cuts[i - 1]));
        for (std::size_t n = cuts[i - 1] + 1; n <= cuts[i]; ++n) product = incidence_matrix(d, n) * product;
        if (!(incidence_matrix(t, i) == product)) ++failures;
      }
    }
  }
  return {failures == 0, "1000 diagrams, " + std::to_string(schedules) + " schedules, " + std::to_string(failures) +
                             " mismatched blocks"};
}

Outcome orbit_completeness() {
  std::size_t floors = 0;
  for (const auto& [name, sd] : corpus()) {
    const StationaryTailDiagram d = sd.as_tail();
    const OrderedDiagram od = sd.truncate(6);
    const VershikSystem v(d);
    const std::size_t top = d.range(6, v.x_min().edge(6));
    const Tower t = tower(od, {6, top});
    AdicPath x = v.x_min();
    for (std::size_t i = 0; i < t.height(); ++i) {
      if (x.truncated(6) != t.floors[i]) return {false, name + ": orbit leaves the tower order at floor " + std::to_string(i)};
      if (i + 1 < t.height()) x = v.step(x);
    }
    floors += t.height();
    for (std::size_t w = 0; w < od.level_size(6); ++w) {
      const Tower tw = tower(od, {6, w});
      PathPrefix p = tw.floors.front();
      std::size_t steps = 0;
      while (auto next = successor_in_tower(od, p)) {
        p = *next;
        ++steps;
      }
      if (steps + 1 != tw.height() || p != tw.floors.back())
        return {false, name + ": successor chain of tower " + std::to_string(w) + " has the wrong length"};
    }
  }
  return {true, "52 diagrams, " + std::to_string(floors) + " floors visited once each"};
}

Outcome substitution_oracle() {
  const std::string oracle = support::substitution_prefix({"ab", "a"}, 'a', 10000);
  const std::string orbit = render_symbols(fibonacci().alphabet(), orbit_sequence(fibonacci(), 10000));
  std::size_t first = 0;
  while (first < orbit.size() && orbit[first] == oracle[first]) ++first;
  return {orbit == oracle, orbit == oracle ? "10000 letters match" : "first mismatch at " + std::to_string(first)};
}

Outcome round_trip() {
  std::size_t ok = 0;
  std::string bad;
  for (const auto& [name, sd] : corpus()) {
    if (roundtrip_check(sd.truncate(6), 6))
      ++ok;
    else
      bad += " " + name;
  }
  return {bad.empty(), std::to_string(ok) + "/52 round trips at depth 6" + (bad.empty() ? "" : "; failed:" + bad)};
}

Outcome tower_sums() {
  std::size_t checks = 0;
  for (const auto& [name, sd] : corpus()) {
    const NestedKRSequence seq = nested_from_diagram(sd.truncate(5), 5);
    for (std::size_t n = 1; n <= 4; ++n) {
      const TowerSumReport r = tower_sum_report(seq, n);
      if (!r || r.rank != seq.levels[n].heights.size())
        return {false, name + " level " + std::to_string(n) + ": tower sums not onto or kernel not spanned"};
      if (!gamma_intertwine_check(seq, n)) return {false, name + " level " + std::to_string(n) + ": intertwining fails"};
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " (diagram, level) pairs"};
}

Outcome symbol_splitting() {
  Outcome o;
  std::ostringstream detail;
  for (std::size_t m = 2; m <= 3; ++m) {
    std::vector<std::size_t> fib_top(m, 0);
    fib_top.insert(fib_top.end(), m, 1);
    for (const auto& [name, sd] : {std::pair<std::string, StationaryOrderedDiagram>{"odometer", odometer(m)},
                                   std::pair<std::string, StationaryOrderedDiagram>{"fibonacci", fibonacci(fib_top)}}) {
      const SymbolSplit r = symbol_split(sd);
      bool single = true;
      for (const BigInt& x : r.split.top_multiplicities()) single = single && x == 1;
      const ProperOrderVerdict proper = properly_ordered(r.split);
      const bool witness = verify_symbol_split(sd, r);
      o.pass = o.pass && single && proper && witness;
      detail << " " << name << "/x" << m << ": (a) " << (single ? "ok" : "FAIL") << " (b) "
             << (proper ? "ok" : "FAIL [" + proper.reason + "]") << " (c) " << (witness ? "ok" : "FAIL") << ";";
    }
  }
  o.detail = detail.str().substr(1);
  o.detail.pop_back();
  return o;
}

Outcome inducing() {
  std::ostringstream detail;
  bool pass = true;
  auto run = [&](const std::string& name, const StationaryOrderedDiagram& sd, std::size_t e) {
    const bool ok = first_return_check(sd.as_tail(), {e}, 1000);
    pass = pass && ok;
    detail << name << " keep {" << e << "}: " << (ok ? "ok" : "FAIL") << "; ";
  };
  run("odometer", odometer(), 0);
  run("odometer", odometer(), 1);
  for (std::size_t e = 0; e < fibonacci().top().size(); ++e) run("fibonacci", fibonacci(), e);
  std::string s = detail.str();
  return {pass, s.substr(0, s.size() - 2)};
}

Outcome primitivity() {
  std::size_t disagreements = 0, primitive = 0;
  for (unsigned bits = 0; bits < 512; ++bits) {
    Matrix m = Matrix::zeros(3, 3);
    int b[3][3];
    for (std::size_t i = 0; i < 9; ++i) {
      b[i / 3][i % 3] = (bits >> i) & 1;
      m(i / 3, i % 3) = b[i / 3][i % 3];
    }
    // Plain integer powers up to the Wielandt bound.
    long long p[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p[i][j] = b[i][j];
    bool brute = false;
    for (std::size_t k = 1; k <= wielandt_bound(3) && !brute; ++k) {
      bool all = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) all = all && p[i][j] > 0;
      brute = all;
      long long q[3][3] = {};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) q[i][j] += p[i][l] * b[l][j];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i][j] = q[i][j];
    }
    primitive += brute;
    if (is_primitive(m).primitive != brute) ++disagreements;
  }
  return {disagreements == 0, "512 matrices, " + std::to_string(primitive) + " primitive, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome cone_axioms() {
  const GroupPresentation p = k0_of(fibonacci());
  std::mt19937 rng(10);
  std::vector<GroupElement> xs;
  for (int i = 0; i < 200; ++i) xs.push_back(random_element(p, rng, 6, 50));
  std::size_t contradictions = 0, undetermined = 0, sums = 0, interpolations = 0;
  std::vector<Sign> sign;
  for (const auto& x : xs) {
    sign.push_back(is_positive(p, x));
    undetermined += sign.back() == Sign::Undetermined;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Sign neg = is_positive(p, scaled(-1, xs[i]));
    if (sign[i] == Sign::Positive && neg == Sign::Positive) ++contradictions;
    if ((sign[i] == Sign::Zero) != (neg == Sign::Zero) && neg != Sign::Undetermined && sign[i] != Sign::Undetermined)
      ++contradictions;
    for (int n = 1; n <= 5; ++n) {
      const Sign sn = is_positive(p, scaled(n, xs[i]));
      if (sn == Sign::Positive && sign[i] != Sign::Positive && sign[i] != Sign::Undetermined) ++contradictions;
    }
    const std::size_t j = (i + 1) % xs.size();
    if (sign[i] == Sign::Positive && sign[j] == Sign::Positive) {
      ++sums;
      const Sign s = is_positive(p, sum(p, xs[i], xs[j]));
      if (s != Sign::Positive && s != Sign::Undetermined) ++contradictions;
    }
  }
  // Interpolation around a random centre: a_i = c - p_i, b_j = c + q_j with
  // p_i, q_j in the cone.
  std::uniform_int_distribution<long long> small(0, 20);
  auto cone_element = [&](std::size_t stage) {
    GroupElement g{stage, {}};
    for (std::size_t k = 0; k < p.dimension(stage); ++k) g.vector.push_back(small(rng));
    return g;
  };
  std::size_t successes = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const GroupElement& c = xs[i];
    const GroupElement a1 = difference(p, c, cone_element(c.stage)), a2 = difference(p, c, cone_element(c.stage + 1));
    const GroupElement b1 = sum(p, c, cone_element(c.stage)), b2 = sum(p, c, cone_element(c.stage + 2));
    ++interpolations;
    const auto r = interpolate(p, a1, a2, b1, b2);
    if (!r) continue;
    ++successes;
    for (const GroupElement* lo : {&a1, &a2})
      if (const Sign s = is_positive(p, difference(p, *r, *lo)); s != Sign::Positive && s != Sign::Zero) ++contradictions;
    for (const GroupElement* hi : {&b1, &b2})
      if (const Sign s = is_positive(p, difference(p, *hi, *r)); s != Sign::Positive && s != Sign::Zero) ++contradictions;
  }
  return {contradictions == 0, "200 elements, " + std::to_string(undetermined) + " undetermined, " +
                                   std::to_string(sums) + " positive sums, " + std::to_string(successes) + "/" +
                                   std::to_string(interpolations) + " interpolations validated, " +
                                   std::to_string(contradictions) + " contradictions"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dyadic identification", dyadic},
      {"telescoping product law", telescoping_law},
      {"Vershik orbit completeness", orbit_completeness},
      {"substitution oracle", substitution_oracle},
      {"tower round trip", round_trip},
      {"tower sums and intertwining", tower_sums},
      {"symbol splitting", symbol_splitting},
      {"inducing on top edges", inducing},
      {"primitivity", primitivity},
      {"cone axioms", cone_axioms},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu [%s]: %s (%s; %.2f s)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
