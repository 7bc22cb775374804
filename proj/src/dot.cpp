#include "bratteli/error.hpp"
#include "bratteli/io.hpp"

#include <sstream>

namespace bratteli {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node(std::size_t n, std::size_t v) { return "v" + std::to_string(n) + "_" + std::to_string(v); }

std::string render(const BratteliDiagram& d, std::size_t depth, const OrderedDiagram* od) {
  if (depth > d.depth()) throw LevelOutOfRange("dot depth beyond the represented diagram");
  std::ostringstream out;
  out << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (std::size_t n = 0; n <= depth; ++n) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < d.level_size(n); ++v) out << " " << node(n, v) << " [label=" << quoted(d.labels(n)[v]) << "];";
    out << " }\n";
  }
  for (std::size_t n = 1; n <= depth; ++n)
    for (const Edge& e : d.edges(n)) {
      out << "  " << node(n - 1, e.source) << " -> " << node(n, e.range);
      if (od) out << " [label=\"" << od->order(n, e.id) << "\"]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const BratteliDiagram& d, std::size_t depth) { return render(d, depth, nullptr); }

std::string export_dot(const OrderedDiagram& od, std::size_t depth) { return render(od.base(), depth, &od); }

}  // namespace bratteli
