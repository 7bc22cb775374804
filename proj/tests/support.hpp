#pragma once

#include "bratteli/io.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace support {

using namespace bratteli;

inline std::string fixture(const std::string& name) { return read_file(std::string(FIXTURE_DIR) + "/" + name); }

inline StationaryOrderedDiagram odometer(std::size_t top = 2) {
  return StationaryOrderedDiagram({"a"}, std::vector<std::size_t>(top, 0), {{0, 0}});
}

inline StationaryOrderedDiagram fibonacci(std::vector<std::size_t> top = {0, 1}) {
  return StationaryOrderedDiagram({"a", "b"}, std::move(top), {{0, 1}, {0}});
}

// Symbols a, b, c, ...; words of length 1..max_len. Rejects until the
// diagram is primitive, non-degenerate and properly ordered.
inline StationaryOrderedDiagram random_proper(std::mt19937& rng, std::size_t max_k = 4, std::size_t max_len = 3) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k);
  for (;;) {
    const std::size_t k = kd(rng);
    std::uniform_int_distribution<std::size_t> len(1, max_len), sym(0, k - 1), mult(1, 2);
    std::vector<std::string> alphabet;
    for (std::size_t a = 0; a < k; ++a) alphabet.push_back(std::string(1, static_cast<char>('a' + a)));
    std::vector<std::vector<std::size_t>> words(k);
    for (auto& w : words) {
      w.resize(len(rng));
      for (auto& x : w) x = sym(rng);
    }
    std::vector<std::size_t> top;
    for (std::size_t a = 0; a < k; ++a) top.insert(top.end(), mult(rng), a);
    std::shuffle(top.begin(), top.end(), rng);
    try {
      StationaryOrderedDiagram sd(alphabet, top, words);
      if (properly_ordered(sd)) return sd;
    } catch (const Error&) {
    }
  }
}

// Valid explicit diagram: every vertex has incoming and (above the last
// level) outgoing edges.
inline BratteliDiagram random_explicit(std::mt19937& rng, std::size_t max_levels = 5, std::size_t max_width = 4,
                                       int max_entry = 3) {
  std::uniform_int_distribution<std::size_t> depth_d(1, max_levels), width(1, max_width);
  std::uniform_int_distribution<int> entry(0, max_entry);
  const std::size_t depth = depth_d(rng);
  std::vector<std::size_t> sizes{1};
  for (std::size_t n = 1; n <= depth; ++n) sizes.push_back(width(rng));
  for (;;) {
    std::vector<std::vector<std::string>> levels;
    std::vector<std::vector<Edge>> edges;
    for (std::size_t n = 0; n <= depth; ++n) {
      std::vector<std::string> l;
      for (std::size_t v = 0; v < sizes[n]; ++v) l.push_back(n == 0 ? "root" : "v" + std::to_string(n) + "_" + std::to_string(v));
      levels.push_back(std::move(l));
    }
    for (std::size_t n = 1; n <= depth; ++n) {
      std::vector<Edge> level;
      for (std::size_t i = 0; i < sizes[n]; ++i)
        for (std::size_t j = 0; j < sizes[n - 1]; ++j)
          for (int c = entry(rng); c > 0; --c) level.push_back({j, i, 0});
      std::shuffle(level.begin(), level.end(), rng);
      edges.push_back(std::move(level));
    }
    BratteliDiagram d(std::move(levels), std::move(edges));
    if (validate(d).ok()) return d;
  }
}

inline OrderedDiagram random_order(const BratteliDiagram& d, std::mt19937& rng) {
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    std::vector<std::size_t> ord(d.edges(n).size());
    for (std::size_t v = 0; v < d.level_size(n); ++v) {
      std::vector<std::size_t> ids(d.in_edges(n, v).begin(), d.in_edges(n, v).end());
      std::vector<std::size_t> perm(ids.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < ids.size(); ++i) ord[ids[i]] = perm[i];
    }
    order.push_back(std::move(ord));
  }
  return OrderedDiagram(d, std::move(order));
}

// Iterates a substitution from one letter as plain strings.
inline std::string substitution_prefix(const std::vector<std::string>& rules, char start, std::size_t n) {
  std::string w(1, start);
  while (w.size() < n) {
    std::string next;
    for (char c : w) next += rules.at(static_cast<std::size_t>(c - 'a'));
    if (next.size() <= w.size()) break;
    w = std::move(next);
  }
  return w.substr(0, n);
}

// All length-n prefixes into (n, v), found by unordered search and then
// sorted with the last edge most significant.
inline std::vector<PathPrefix> brute_force_tower(const OrderedDiagram& od, std::size_t n, std::size_t v) {
  std::vector<std::vector<std::size_t>> paths{{}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : paths)
      for (std::size_t e = 0; e < od.edge_count(m); ++e)
        if ((m == 1 || od.range(m - 1, p.back()) == od.source(m, e))) {
          auto q = p;
          q.push_back(e);
          next.push_back(std::move(q));
        }
    paths = std::move(next);
  }
  std::vector<std::vector<std::size_t>> into;
  for (auto& p : paths)
    if (od.range(n, p.back()) == v) into.push_back(p);
  std::sort(into.begin(), into.end(), [&](const auto& x, const auto& y) {
    for (std::size_t m = n; m >= 1; --m)
      if (x[m - 1] != y[m - 1]) return od.order(m, x[m - 1]) < od.order(m, y[m - 1]);
    return false;
  });
  std::vector<PathPrefix> out;
  for (auto& p : into) out.push_back({p});
  return out;
}

}  // namespace support
