#include "bratteli/error.hpp"
#include "bratteli/ordered.hpp"

#include <algorithm>
#include <set>

namespace bratteli {
namespace {

constexpr std::size_t kMaxSplitPower = 64;

// Splits `word` into `parts` consecutive nonempty pieces whose lengths differ
// by at most one, longer pieces first.
std::vector<std::vector<std::size_t>> balanced_pieces(const std::vector<std::size_t>& word, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out(parts);
  const std::size_t base = word.size() / parts;
  const std::size_t extra = word.size() % parts;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < parts; ++j) {
    const std::size_t len = base + (j < extra ? 1 : 0);
    out[j].assign(word.begin() + static_cast<std::ptrdiff_t>(pos),
                  word.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

}  // namespace

SymbolSplit symbol_split(const StationaryOrderedDiagram& sd, std::size_t witness_levels) {
  if (!is_primitive(sd.matrix()))
    throw PreconditionFailed("symbol splitting needs a simple diagram (primitive matrix)");
  if (witness_levels < 2) throw PreconditionFailed("the witness needs at least two split levels");

  const std::size_t k = sd.size();
  const Substitution sigma = substitution_of(sd);
  std::vector<std::vector<std::size_t>> tops_of(k);
  for (std::size_t t = 0; t < sd.top().size(); ++t) tops_of[sd.top()[t]].push_back(t);

  // Periodic telescoping until every block word is at least as long as the
  // number of root edges into its symbol.
  std::vector<std::vector<std::size_t>> words = sd.incoming();
  std::size_t power = 1;
  auto long_enough = [&] {
    for (std::size_t a = 0; a < k; ++a)
      if (words[a].size() < tops_of[a].size()) return false;
    return true;
  };
  while (!long_enough()) {
    if (++power > kMaxSplitPower) throw PreconditionFailed("block words do not grow; cannot split");
    for (std::size_t a = 0; a < k; ++a) words[a] = sigma.apply(words[a]);
  }

  const std::size_t count = sd.top().size();
  std::vector<std::string> names(count);
  std::set<std::string> taken;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t a = sd.top()[t];
    std::string name = sd.alphabet()[a];
    if (tops_of[a].size() > 1) {
      const auto j = static_cast<std::size_t>(std::find(tops_of[a].begin(), tops_of[a].end(), t) - tops_of[a].begin());
      name += "_" + std::to_string(j);
    }
    while (!taken.insert(name).second) name += "'";
    names[t] = std::move(name);
  }

  // pieces[t]: the old-level sources feeding the new vertex of top edge t.
  std::vector<std::vector<std::size_t>> pieces(count);
  for (std::size_t a = 0; a < k; ++a) {
    auto parts = balanced_pieces(words[a], tops_of[a].size());
    for (std::size_t j = 0; j < parts.size(); ++j) pieces[tops_of[a][j]] = std::move(parts[j]);
  }

  std::vector<std::vector<std::size_t>> split_words(count);
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t b : pieces[t]) split_words[t].insert(split_words[t].end(), tops_of[b].begin(), tops_of[b].end());

  std::vector<std::size_t> split_top(count);
  for (std::size_t t = 0; t < count; ++t) split_top[t] = t;

  // Witness levels: root, N_1, O_1, N_2, O_2, ... where N carries one vertex
  // per top edge and O the original alphabet.
  std::vector<std::vector<std::string>> levels{{"root"}};
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t r = 0; r < witness_levels; ++r) {
    std::vector<Edge> into_new;
    std::vector<std::size_t> into_new_order;
    if (r == 0) {
      for (std::size_t t = 0; t < count; ++t) {
        into_new.push_back({0, t, 0});
        into_new_order.push_back(0);
      }
    } else {
      for (std::size_t t = 0; t < count; ++t)
        for (std::size_t j = 0; j < pieces[t].size(); ++j) {
          into_new.push_back({pieces[t][j], t, 0});
          into_new_order.push_back(j);
        }
    }
    levels.push_back(names);
    edges.push_back(std::move(into_new));
    order.push_back(std::move(into_new_order));

    std::vector<Edge> into_old;
    std::vector<std::size_t> into_old_order;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < tops_of[a].size(); ++j) {
        into_old.push_back({tops_of[a][j], a, 0});
        into_old_order.push_back(j);
      }
    levels.push_back(sd.alphabet());
    edges.push_back(std::move(into_old));
    order.push_back(std::move(into_old_order));
  }

  SymbolSplit out{StationaryOrderedDiagram(names, std::move(split_top), std::move(split_words)),
                  OrderedDiagram(BratteliDiagram(std::move(levels), std::move(edges)), std::move(order)), power,
                  sd.top()};
  return out;
}

bool verify_symbol_split(const StationaryOrderedDiagram& sd, const SymbolSplit& result) {
  for (const BigInt& m : result.split.top_multiplicities())
    if (m != 1) return false;
  const std::size_t levels = result.witness.depth() / 2;
  if (levels < 2) return false;
  const OrderedDiagram original = sd.truncate(1 + result.power * (levels - 1));
  const OrderedDiagram split = result.split.truncate(levels);
  return verify_interleaving_witness(original, split, result.witness);
}

}  // namespace bratteli
