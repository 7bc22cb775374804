#pragma once

#include "bratteli/dimension_group.hpp"
#include "bratteli/error.hpp"
#include "bratteli/kakutani_equiv.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace bratteli {

using AnyDiagram = std::variant<BratteliDiagram, OrderedDiagram, StationaryOrderedDiagram, StationaryTailDiagram>;

/// Reads the "kind" field: "explicit" (ordered iff every edge carries an
/// "ord"), "stationary" or "stationary-tail". Syntax errors carry a line and
/// column; broken invariants surface as InvalidDiagram or ParseError.
AnyDiagram parse_diagram(std::string_view text);

std::string serialize(const BratteliDiagram& d);
std::string serialize(const OrderedDiagram& od);
std::string serialize(const StationaryOrderedDiagram& sd);
std::string serialize(const StationaryTailDiagram& d);
std::string serialize(const AnyDiagram& d);

/// {"alphabet": [...], "rules": {"a": "ab", ...}}; a rule may also be a list
/// of symbols, which is how multi-character symbols are written.
Substitution parse_substitution(std::string_view text);
std::string serialize(const Substitution& s);

/// {"levels": [{"heights": [...], "words": [[...], ...]}, ...]}
NestedKRSequence parse_nested(std::string_view text);
std::string serialize(const NestedKRSequence& seq);

/// "stage:[v0,v1,...]", e.g. "2:[3,-1]".
GroupElement parse_element(std::string_view text);
std::string format_element(const GroupElement& g);

/// One rank per level, edges drawn downward in id order; ordered diagrams
/// label each edge with its order index.
std::string export_dot(const BratteliDiagram& d, std::size_t depth);
std::string export_dot(const OrderedDiagram& od, std::size_t depth);

std::string read_file(const std::string& path);

}  // namespace bratteli
