#include "bratteli/kakutani_rohlin.hpp"

#include "bratteli/error.hpp"

namespace bratteli {

void require_valid(const NestedKRSequence& seq) {
  if (seq.levels.empty() || seq.levels[0].heights != Vector{BigInt(1)} || seq.levels[0].words.size() > 1 ||
      (seq.levels[0].words.size() == 1 && !seq.levels[0].words[0].empty()))
    throw InvalidDiagram("level 0 must be a single tower of height 1");
  for (std::size_t n = 1; n < seq.levels.size(); ++n) {
    const KRLevel& prev = seq.levels[n - 1];
    const KRLevel& cur = seq.levels[n];
    const std::string at = " at level " + std::to_string(n);
    if (cur.heights.empty()) throw InvalidDiagram("no towers" + at);
    if (cur.words.size() != cur.heights.size()) throw InvalidDiagram("one traversal word per tower needed" + at);
    std::vector<bool> seen(prev.heights.size(), false);
    for (std::size_t k = 0; k < cur.words.size(); ++k) {
      if (cur.words[k].empty()) throw InvalidDiagram("tower " + std::to_string(k) + at + " has an empty word");
      BigInt sum = 0;
      for (std::size_t i : cur.words[k]) {
        if (i >= prev.heights.size()) throw InvalidDiagram("word of tower " + std::to_string(k) + at + " names an unknown tower");
        seen[i] = true;
        sum += prev.heights[i];
      }
      if (sum != cur.heights[k])
        throw InvalidDiagram("height recursion fails for tower " + std::to_string(k) + at + ": expected " +
                             sum.str() + ", got " + cur.heights[k].str());
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw InvalidDiagram("tower " + std::to_string(i) + " of level " + std::to_string(n - 1) +
                             " is not crossed by any tower" + at);
  }
}

OrderedDiagram diagram_from_nested(const NestedKRSequence& seq) {
  require_valid(seq);
  std::vector<std::vector<std::string>> levels{{"root"}};
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t n = 1; n < seq.levels.size(); ++n) {
    std::vector<std::string> labels;
    std::vector<Edge> level;
    std::vector<std::size_t> ord;
    const auto& words = seq.levels[n].words;
    for (std::size_t k = 0; k < words.size(); ++k) {
      labels.push_back("T" + std::to_string(n) + "." + std::to_string(k));
      for (std::size_t j = 0; j < words[k].size(); ++j) {
        level.push_back({words[k][j], k, 0});
        ord.push_back(j);
      }
    }
    levels.push_back(std::move(labels));
    edges.push_back(std::move(level));
    order.push_back(std::move(ord));
  }
  return OrderedDiagram(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order));
}

NestedKRSequence nested_from_diagram(const OrderedDiagram& od, std::size_t depth) {
  if (depth > od.depth()) throw LevelOutOfRange("depth beyond the represented diagram");
  require_valid(od.base());
  NestedKRSequence seq;
  seq.levels.push_back({{BigInt(1)}, {{}}});
  for (std::size_t n = 1; n <= depth; ++n) {
    KRLevel level;
    level.heights = incidence_matrix(od.base(), n).apply(seq.levels.back().heights);
    for (std::size_t v = 0; v < od.level_size(n); ++v) {
      std::vector<std::size_t> word;
      for (std::size_t e : od.incoming(n, v)) word.push_back(od.source(n, e));
      level.words.push_back(std::move(word));
    }
    seq.levels.push_back(std::move(level));
  }
  return seq;
}

bool roundtrip_check(const OrderedDiagram& od, std::size_t depth) {
  return isomorphic(diagram_from_nested(nested_from_diagram(od, depth)), truncate(od, depth));
}

namespace {

template <GradedOrder D>
TowerLocation locate_with(const D& d, const std::vector<std::size_t>& edges, const std::vector<Vector>& heights) {
  TowerLocation loc;
  for (std::size_t n = 1; n <= edges.size(); ++n)
    for (auto e = d.prev_edge(n, edges[n - 1]); e; e = d.prev_edge(n, *e)) loc.floor += heights[n - 1][d.source(n, *e)];
  loc.tower = edges.empty() ? 0 : d.range(edges.size(), edges.back());
  return loc;
}

}  // namespace

TowerLocation locate(const OrderedDiagram& od, const PathPrefix& p) {
  if (p.edges.size() > od.depth()) throw LevelOutOfRange("prefix longer than the represented diagram");
  if (!is_connected(od, p)) throw PreconditionFailed("prefix is not a path from the root");
  std::vector<Vector> heights;
  for (std::size_t n = 0; n < p.edges.size(); ++n) heights.push_back(tower_heights(od, n));
  return locate_with(od, p.edges, heights);
}

TowerLocation locate(const StationaryTailDiagram& d, const AdicPath& x, std::size_t n) {
  std::vector<Vector> heights{{BigInt(1)}};
  for (std::size_t m = 1; m < n; ++m) heights.push_back(d.incidence(m).apply(heights.back()));
  return locate_with(d, x.truncated(n).edges, heights);
}

}  // namespace bratteli
