#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace bratteli;
using support::fibonacci;
using support::odometer;

namespace {

std::vector<std::string> rules_of(const StationaryOrderedDiagram& sd) {
  std::vector<std::string> rules;
  for (const auto& w : sd.incoming()) {
    std::string r;
    for (std::size_t b : w) r += sd.alphabet()[b];
    rules.push_back(r);
  }
  return rules;
}

// Fixed point of the substitution from the minimal letter, each letter
// repeated by its number of top edges.
std::string substitution_orbit(const StationaryOrderedDiagram& sd, std::size_t n) {
  std::size_t p = 0;
  for (std::size_t a = 0; a < sd.size(); ++a)
    if (sd.incoming()[a].front() == a) p = a;
  const std::string fixed = support::substitution_prefix(rules_of(sd), static_cast<char>('a' + p), n);
  const Vector m = sd.top_multiplicities();
  std::string out;
  for (char c : fixed) out += std::string(static_cast<std::size_t>(m[static_cast<std::size_t>(c - 'a')]), c);
  return out.substr(0, n);
}

}  // namespace

TEST_CASE("Fibonacci orbit reads the substitution fixed point") {
  const auto word = orbit_sequence(fibonacci(), 8);
  CHECK(render_symbols(fibonacci().alphabet(), word) == "abaababa");
  CHECK(render_symbols(fibonacci().alphabet(), orbit_sequence(fibonacci(), 200)) ==
        support::substitution_prefix({"ab", "a"}, 'a', 200));
  CHECK_THROWS_AS(orbit_sequence(fibonacci(), 0), PreconditionFailed);
}

TEST_CASE("odometer extreme paths and the wrap-around step") {
  const ExtremePaths x = extreme_paths(odometer());
  CHECK(x.x_min == AdicPath{{0}, {0}});
  CHECK(x.x_max == AdicPath{{1}, {1}});
  const VershikSystem v(odometer().as_tail());
  CHECK(v.properly_ordered());
  CHECK(v.step(x.x_max) == x.x_min);
  CHECK(v.step_back(x.x_min) == x.x_max);
  CHECK(vershik_step(odometer(), x.x_min) == AdicPath{{1}, {0}});
  // Adding one to ...1111 0 carries all the way: 1,1,0,0,... -> 0,0,1,0,...
  CHECK(v.step(AdicPath{{1, 1}, {0}}) == AdicPath{{0, 0, 1}, {0}});
  CHECK(is_valid_path(odometer().as_tail(), x.x_max));
  CHECK_FALSE(is_valid_path(odometer().as_tail(), AdicPath{{2}, {0}}));
}

TEST_CASE("Fibonacci has two maximal paths and one minimal path") {
  const StationaryTailDiagram d = fibonacci().as_tail();
  CHECK(extreme_path_set(d, true).size() == 2);
  CHECK(extreme_path_set(d, false) == std::vector<AdicPath>{AdicPath{{0}, {0}}});
  CHECK_THROWS_AS(extreme_paths(fibonacci()), NotProperlyOrdered);
  const VershikSystem v(d);
  CHECK_FALSE(v.properly_ordered());
  CHECK_THROWS_AS(v.x_max(), NotProperlyOrdered);
  CHECK_THROWS_AS(v.step(v.maximal_paths().front()), NotProperlyOrdered);
  CHECK_THROWS_AS(v.step_back(v.x_min()), NotProperlyOrdered);
}

TEST_CASE("orbits need a unique minimal path") {
  const auto two_max = std::get<StationaryOrderedDiagram>(parse_diagram(support::fixture("two_max.json")));
  CHECK_THROWS_AS(VershikSystem(two_max.as_tail()), NotProperlyOrdered);
  CHECK_THROWS_AS(VershikSystem(StationaryOrderedDiagram({"a", "b"}, {0, 1}, {{0, 0}, {1, 0}}).as_tail()),
                  NotProperlyOrdered);
}

TEST_CASE("canonical form") {
  CHECK(canonical(AdicPath{{0, 1, 1}, {1, 1}}, 1) == AdicPath{{0}, {1}});
  CHECK(canonical(AdicPath{{0, 2, 1}, {2, 1}}, 1) == AdicPath{{0}, {2, 1}});
  CHECK(canonical(AdicPath{{1, 1}, {1}}, 2) == AdicPath{{1, 1}, {1}});
  const AdicPath x{{0, 3}, {1, 2}};
  for (std::size_t n = 1; n < 12; ++n) CHECK(canonical(x, 1).edge(n) == x.edge(n));
}

TEST_CASE("cofinality") {
  const VershikSystem v(odometer().as_tail());
  AdicPath x = v.x_min();
  for (int i = 0; i < 10; ++i) {
    const AdicPath y = v.step(x);
    CHECK(is_cofinal(x, y));
    x = y;
  }
  CHECK(is_cofinal(x, x));
  CHECK_FALSE(is_cofinal(v.x_min(), v.x_max()));
}

TEST_CASE("towers match brute-force enumeration") {
  for (const auto& sd : {odometer(), fibonacci(), fibonacci({1, 0, 0})}) {
    const OrderedDiagram od = sd.truncate(5);
    for (std::size_t n = 1; n <= 5; ++n) {
      const Vector h = tower_heights(od, n);
      CHECK(h == tower_heights(sd.as_tail(), n));
      for (std::size_t v = 0; v < od.level_size(n); ++v) {
        const Tower t = tower(od, {n, v});
        CHECK(t.floors == support::brute_force_tower(od, n, v));
        CHECK(BigInt(t.height()) == h[v]);
      }
    }
    CHECK(tower_heights(od, 1) == sd.top_multiplicities());
  }
}

TEST_CASE("successor_in_tower walks each tower once") {
  const OrderedDiagram od = fibonacci().truncate(6);
  for (std::size_t v = 0; v < 2; ++v) {
    const Tower t = tower(od, {6, v});
    std::optional<PathPrefix> p = t.floors.front();
    for (std::size_t i = 1; i < t.height(); ++i) {
      p = successor_in_tower(od, *p);
      REQUIRE(p);
      CHECK(*p == t.floors[i]);
      CHECK(predecessor_in_tower(od, *p) == t.floors[i - 1]);
    }
    CHECK_FALSE(successor_in_tower(od, *p));
    CHECK_FALSE(predecessor_in_tower(od, t.floors.front()));
  }
}

TEST_CASE("orbit streams resume from any point") {
  const VershikSystem v(fibonacci().as_tail());
  OrbitStream full(v);
  std::vector<std::size_t> a;
  for (int i = 0; i < 50; ++i) a.push_back(full.next_symbol());
  OrbitStream first(v);
  for (int i = 0; i < 20; ++i) first.next_symbol();
  OrbitStream resumed(v, first.state());
  for (int i = 20; i < 50; ++i) CHECK(resumed.next_symbol() == a[static_cast<std::size_t>(i)]);
}

TEST_CASE("step_back undoes step on proper diagrams") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sd = support::random_proper(rng);
    const VershikSystem v(sd.as_tail());
    AdicPath x = v.x_max();
    for (int i = 0; i < 200; ++i) {
      const AdicPath y = v.step(x);
      CHECK(v.step_back(y) == x);
      x = y;
    }
  }
}

TEST_CASE("orbits of random proper diagrams read the substitution") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sd = support::random_proper(rng);
    const auto word = orbit_sequence(sd, 300);
    CHECK(render_symbols(sd.alphabet(), word) == substitution_orbit(sd, 300));
  }
}

TEST_CASE("multi-character symbols render as length-prefixed tokens") {
  CHECK(render_symbols({"a_0", "b"}, {0, 1, 0}) == "3:a_01:b3:a_0");
  CHECK(render_symbols({"a", "b"}, {1, 0}) == "ba");
}
