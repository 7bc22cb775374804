#include "bratteli/error.hpp"
#include "bratteli/ordered.hpp"

#include <algorithm>

namespace bratteli {
namespace {

void check_tail_words(const std::vector<std::vector<std::size_t>>& words, std::size_t k,
                      const std::vector<std::string>& names) {
  if (words.size() != k) throw InvalidDiagram("need one incoming word per symbol");
  std::vector<std::size_t> used(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (words[a].empty()) throw InvalidDiagram("symbol '" + names[a] + "' has an empty incoming word");
    for (std::size_t b : words[a]) {
      if (b >= k) throw InvalidDiagram("incoming word of '" + names[a] + "' uses an unknown symbol");
      ++used[b];
    }
  }
  for (std::size_t b = 0; b < k; ++b)
    if (used[b] == 0) throw InvalidDiagram("symbol '" + names[b] + "' is never a source (s^-1 empty)");
  // Every level a permutation: only finitely many infinite paths.
  const bool permutation =
      std::all_of(words.begin(), words.end(), [](const auto& w) { return w.size() == 1; }) &&
      std::all_of(used.begin(), used.end(), [](std::size_t c) { return c == 1; });
  if (permutation) throw DegenerateDiagram("degenerate diagram: the path space is finite");
}

}  // namespace

StationaryOrderedDiagram::StationaryOrderedDiagram(std::vector<std::string> alphabet, std::vector<std::size_t> top,
                                                   std::vector<std::vector<std::size_t>> incoming)
    : alphabet_(std::move(alphabet)), top_(std::move(top)), incoming_(std::move(incoming)) {
  const std::size_t k = alphabet_.size();
  if (k == 0) throw InvalidDiagram("empty alphabet");
  for (std::size_t a = 0; a < k; ++a)
    if (std::count(alphabet_.begin(), alphabet_.end(), alphabet_[a]) != 1)
      throw InvalidDiagram("symbol '" + alphabet_[a] + "' repeated in the alphabet");
  std::vector<std::size_t> mult(k, 0);
  for (std::size_t a : top_) {
    if (a >= k) throw InvalidDiagram("top word uses an unknown symbol");
    ++mult[a];
  }
  for (std::size_t a = 0; a < k; ++a)
    if (mult[a] == 0) throw InvalidDiagram("symbol '" + alphabet_[a] + "' has no edge from the root");
  check_tail_words(incoming_, k, alphabet_);
}

Matrix StationaryOrderedDiagram::matrix() const {
  return Substitution{alphabet_, incoming_}.matrix();
}

Vector StationaryOrderedDiagram::top_multiplicities() const {
  Vector m(size(), BigInt(0));
  for (std::size_t a : top_) m[a] += 1;
  return m;
}

StationaryDiagram StationaryOrderedDiagram::unordered() const {
  return {alphabet_, top_multiplicities(), matrix()};
}

StationaryTailDiagram StationaryOrderedDiagram::as_tail() const {
  std::vector<Edge> edges;
  std::vector<std::size_t> ord;
  std::vector<std::size_t> seen(size(), 0);
  for (std::size_t a : top_) {
    edges.push_back({0, a, 0});
    ord.push_back(seen[a]++);
  }
  OrderedDiagram head(BratteliDiagram({{"root"}, alphabet_}, {std::move(edges)}), {std::move(ord)});
  return StationaryTailDiagram(std::move(head), incoming_);
}

OrderedDiagram StationaryOrderedDiagram::truncate(std::size_t depth) const { return as_tail().truncate(depth); }

StationaryTailDiagram::StationaryTailDiagram(OrderedDiagram head, std::vector<std::vector<std::size_t>> incoming)
    : head_(std::move(head)), incoming_(std::move(incoming)) {
  if (head_.depth() == 0) throw InvalidDiagram("the head must contain at least one edge level");
  require_valid(head_.base());
  check_tail_words(incoming_, head_.level_size(head_.depth()), alphabet());
  std::size_t total = 0;
  for (std::size_t a = 0; a < incoming_.size(); ++a) {
    offsets_.push_back(total);
    total += incoming_[a].size();
    edge_symbol_.insert(edge_symbol_.end(), incoming_[a].size(), a);
  }
}

std::size_t StationaryTailDiagram::level_size(std::size_t n) const {
  return n <= head_depth() ? head_.level_size(n) : alphabet_size();
}

const std::string& StationaryTailDiagram::label(std::size_t n, std::size_t v) const {
  return n <= head_depth() ? head_.label(n, v) : alphabet().at(v);
}

std::size_t StationaryTailDiagram::edge_count(std::size_t n) const {
  return n <= head_depth() ? head_.edge_count(n) : edge_symbol_.size();
}

std::size_t StationaryTailDiagram::source(std::size_t n, std::size_t e) const {
  if (n <= head_depth()) return head_.source(n, e);
  const std::size_t a = edge_symbol_.at(e);
  return incoming_[a][e - offsets_[a]];
}

std::size_t StationaryTailDiagram::range(std::size_t n, std::size_t e) const {
  return n <= head_depth() ? head_.range(n, e) : edge_symbol_.at(e);
}

std::size_t StationaryTailDiagram::order(std::size_t n, std::size_t e) const {
  return n <= head_depth() ? head_.order(n, e) : e - offsets_[edge_symbol_.at(e)];
}

std::size_t StationaryTailDiagram::in_degree(std::size_t n, std::size_t v) const {
  return n <= head_depth() ? head_.in_degree(n, v) : incoming_.at(v).size();
}

std::optional<std::size_t> StationaryTailDiagram::next_edge(std::size_t n, std::size_t e) const {
  if (n <= head_depth()) return head_.next_edge(n, e);
  const std::size_t a = edge_symbol_.at(e);
  if (e + 1 - offsets_[a] >= incoming_[a].size()) return std::nullopt;
  return e + 1;
}

std::optional<std::size_t> StationaryTailDiagram::prev_edge(std::size_t n, std::size_t e) const {
  if (n <= head_depth()) return head_.prev_edge(n, e);
  if (e == offsets_[edge_symbol_.at(e)]) return std::nullopt;
  return e - 1;
}

std::size_t StationaryTailDiagram::min_edge(std::size_t n, std::size_t v) const {
  return n <= head_depth() ? head_.min_edge(n, v) : offsets_.at(v);
}

std::size_t StationaryTailDiagram::max_edge(std::size_t n, std::size_t v) const {
  return n <= head_depth() ? head_.max_edge(n, v) : offsets_.at(v) + incoming_.at(v).size() - 1;
}

Matrix StationaryTailDiagram::tail_matrix() const { return Substitution{alphabet(), incoming_}.matrix(); }

Matrix StationaryTailDiagram::incidence(std::size_t n) const {
  return n <= head_depth() ? incidence_matrix(head_.base(), n) : tail_matrix();
}

OrderedDiagram StationaryTailDiagram::truncate(std::size_t depth) const {
  if (depth <= head_depth()) return bratteli::truncate(head_, depth);
  std::vector<std::vector<std::string>> levels = head_.base().levels();
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order = head_.orders();
  for (std::size_t n = 1; n <= head_depth(); ++n) edges.emplace_back(head_.base().edges(n).begin(), head_.base().edges(n).end());
  std::vector<Edge> tail_edges;
  std::vector<std::size_t> tail_order;
  for (std::size_t a = 0; a < incoming_.size(); ++a)
    for (std::size_t j = 0; j < incoming_[a].size(); ++j) {
      tail_edges.push_back({incoming_[a][j], a, 0});
      tail_order.push_back(j);
    }
  for (std::size_t n = head_depth() + 1; n <= depth; ++n) {
    levels.push_back(alphabet());
    edges.push_back(tail_edges);
    order.push_back(tail_order);
  }
  return OrderedDiagram(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order));
}

StationaryTailDiagram StationaryTailDiagram::extend_head(std::size_t depth) const {
  if (depth < head_depth()) throw PreconditionFailed("cannot shrink the explicit head");
  return StationaryTailDiagram(truncate(depth), incoming_);
}

std::vector<std::size_t> periodic_points(const std::vector<std::size_t>& f) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    std::size_t x = f[a];
    for (std::size_t step = 0; step < f.size() && x != a; ++step) x = f[x];
    if (x == a) out.push_back(a);
  }
  return out;
}

ExtremeCounts count_extreme_paths(const StationaryTailDiagram& d) {
  std::vector<std::size_t> maxsrc, minsrc;
  for (const auto& w : d.incoming()) {
    maxsrc.push_back(w.back());
    minsrc.push_back(w.front());
  }
  return {periodic_points(maxsrc).size(), periodic_points(minsrc).size()};
}

ExtremeCounts count_extreme_paths(const StationaryOrderedDiagram& sd) { return count_extreme_paths(sd.as_tail()); }

ProperOrderVerdict properly_ordered(const StationaryTailDiagram& d) {
  if (!is_primitive(d.tail_matrix())) return {false, "not simple: the repeating matrix is not primitive"};
  const ExtremeCounts c = count_extreme_paths(d);
  if (c.max_paths != 1 || c.min_paths != 1)
    return {false, std::to_string(c.max_paths) + " maximal paths and " + std::to_string(c.min_paths) +
                       " minimal paths"};
  return {true, {}};
}

ProperOrderVerdict properly_ordered(const StationaryOrderedDiagram& sd) { return properly_ordered(sd.as_tail()); }

Substitution substitution_of(const StationaryOrderedDiagram& sd) { return {sd.alphabet(), sd.incoming()}; }

StationaryOrderedDiagram diagram_of_substitution(const Substitution& s) {
  require_valid(s);
  std::vector<std::size_t> top(s.alphabet.size());
  for (std::size_t a = 0; a < top.size(); ++a) top[a] = a;
  return StationaryOrderedDiagram(s.alphabet, std::move(top), s.rules);
}

}  // namespace bratteli
