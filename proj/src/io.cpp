#include "bratteli/io.hpp"

#include "bratteli/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace bratteli {
namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line,
                     column);
  }
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + " lacks \"" + name + "\"");
  return *it;
}

std::string text_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text_of(x, where));
  return out;
}

std::size_t index_of(const std::map<std::string, std::size_t>& names, const std::string& s, const std::string& where) {
  auto it = names.find(s);
  if (it == names.end()) throw ParseError(where + " names unknown symbol '" + s + "'");
  return it->second;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& labels, const std::string& where) {
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!names.emplace(labels[i], i).second)
      throw InvalidDiagram(where + ": label '" + labels[i] + "' repeated (labels must be distinct within a level)");
  return names;
}

// A word is either a list of symbols or, for one-character symbols, a string.
std::vector<std::size_t> word_of(const Json& j, const std::map<std::string, std::size_t>& names,
                                 const std::string& where) {
  std::vector<std::size_t> out;
  if (j.is_string()) {
    for (char c : j.get<std::string>()) out.push_back(index_of(names, std::string(1, c), where));
  } else if (j.is_array()) {
    for (const auto& x : j) out.push_back(index_of(names, text_of(x, where), where));
  } else {
    throw ParseError(where + " must be a string or a list of symbols");
  }
  return out;
}

BigInt integer_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>()) : BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(where + " must be an integer");
}

OJson integer_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return OJson(static_cast<long long>(x));
  return OJson(x.str());
}

struct Explicit {
  BratteliDiagram base;
  std::optional<std::vector<std::vector<std::size_t>>> order;
};

Explicit explicit_of(const Json& j) {
  std::vector<std::vector<std::string>> levels;
  const Json& lv = field(j, "levels", "explicit diagram");
  if (!lv.is_array() || lv.empty()) throw ParseError("\"levels\" must be a nonempty list");
  for (std::size_t n = 0; n < lv.size(); ++n) levels.push_back(strings_of(lv[n], "level " + std::to_string(n)));
  if (levels[0].size() != 1) throw InvalidDiagram("level 0 must hold exactly one vertex (the root)");

  const Json& ev = field(j, "edges", "explicit diagram");
  if (!ev.is_array() || ev.size() + 1 != levels.size())
    throw ParseError("\"edges\" needs one list per level after the root");
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<std::size_t>> order;
  std::size_t with_order = 0, without_order = 0;
  for (std::size_t n = 1; n < levels.size(); ++n) {
    const std::string where = "edges of level " + std::to_string(n);
    const auto upper = name_index(levels[n - 1], "level " + std::to_string(n - 1));
    const auto lower = name_index(levels[n], "level " + std::to_string(n));
    const Json& list = ev[n - 1];
    if (!list.is_array()) throw ParseError(where + " must be a list");
    std::vector<Edge> level;
    std::vector<std::size_t> ord;
    for (const auto& e : list) {
      level.push_back({index_of(upper, text_of(field(e, "s", where), where), where),
                       index_of(lower, text_of(field(e, "r", where), where), where), 0});
      auto o = e.find("ord");
      if (o == e.end() || o->is_null()) {
        ++without_order;
        ord.push_back(0);
      } else if (o->is_number_unsigned()) {
        ++with_order;
        ord.push_back(o->get<std::size_t>());
      } else {
        throw ParseError(where + ": \"ord\" must be a nonnegative integer or null");
      }
    }
    edges.push_back(std::move(level));
    order.push_back(std::move(ord));
  }
  if (with_order && without_order) throw ParseError("either every edge carries \"ord\" or none does");
  Explicit out{BratteliDiagram(std::move(levels), std::move(edges)), std::nullopt};
  require_valid(out.base);
  if (with_order || out.base.depth() == 0) out.order = std::move(order);
  return out;
}

std::vector<std::vector<std::size_t>> incoming_of(const Json& j, const std::vector<std::string>& alphabet) {
  const auto names = name_index(alphabet, "alphabet");
  if (!j.is_object()) throw ParseError("\"incoming\" must map each symbol to its word");
  std::vector<std::vector<std::size_t>> words(alphabet.size());
  std::vector<bool> seen(alphabet.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::size_t a = index_of(names, it.key(), "\"incoming\"");
    seen[a] = true;
    words[a] = word_of(it.value(), names, "incoming word of '" + it.key() + "'");
  }
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    if (!seen[a]) throw ParseError("\"incoming\" lacks symbol '" + alphabet[a] + "'");
  return words;
}

OJson explicit_json(const BratteliDiagram& d, const std::vector<std::vector<std::size_t>>* order) {
  OJson j;
  j["kind"] = "explicit";
  j["levels"] = d.levels();
  OJson edges = OJson::array();
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    OJson level = OJson::array();
    for (const Edge& e : d.edges(n)) {
      OJson x;
      x["s"] = d.labels(n - 1)[e.source];
      x["r"] = d.labels(n)[e.range];
      x["ord"] = order ? OJson((*order)[n - 1][e.id]) : OJson(nullptr);
      level.push_back(std::move(x));
    }
    edges.push_back(std::move(level));
  }
  j["edges"] = std::move(edges);
  return j;
}

OJson incoming_json(const std::vector<std::string>& alphabet, const std::vector<std::vector<std::size_t>>& words) {
  OJson j = OJson::object();
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    OJson w = OJson::array();
    for (std::size_t b : words[a]) w.push_back(alphabet[b]);
    j[alphabet[a]] = std::move(w);
  }
  return j;
}

std::string dump(const OJson& j) { return j.dump(2) + "\n"; }

}  // namespace

AnyDiagram parse_diagram(std::string_view text) {
  const Json j = parse_json(text);
  const std::string kind = text_of(field(j, "kind", "diagram"), "\"kind\"");
  if (kind == "explicit") {
    Explicit e = explicit_of(j);
    if (e.order) return OrderedDiagram(std::move(e.base), std::move(*e.order));
    return std::move(e.base);
  }
  if (kind == "stationary") {
    const auto alphabet = strings_of(field(j, "alphabet", "stationary diagram"), "\"alphabet\"");
    const auto names = name_index(alphabet, "alphabet");
    auto top = word_of(field(j, "top", "stationary diagram"), names, "\"top\"");
    auto words = incoming_of(field(j, "incoming", "stationary diagram"), alphabet);
    return StationaryOrderedDiagram(alphabet, std::move(top), std::move(words));
  }
  if (kind == "stationary-tail") {
    Explicit e = explicit_of(field(j, "head", "stationary-tail diagram"));
    if (!e.order) throw ParseError("the head of a stationary-tail diagram must be ordered");
    OrderedDiagram head(std::move(e.base), std::move(*e.order));
    const auto alphabet = head.base().labels(head.depth());
    auto words = incoming_of(field(j, "incoming", "stationary-tail diagram"), alphabet);
    return StationaryTailDiagram(std::move(head), std::move(words));
  }
  throw ParseError("unknown diagram kind '" + kind + "'");
}

std::string serialize(const BratteliDiagram& d) { return dump(explicit_json(d, nullptr)); }

std::string serialize(const OrderedDiagram& od) { return dump(explicit_json(od.base(), &od.orders())); }

std::string serialize(const StationaryOrderedDiagram& sd) {
  OJson j;
  j["kind"] = "stationary";
  j["alphabet"] = sd.alphabet();
  OJson top = OJson::array();
  for (std::size_t a : sd.top()) top.push_back(sd.alphabet()[a]);
  j["top"] = std::move(top);
  j["incoming"] = incoming_json(sd.alphabet(), sd.incoming());
  return dump(j);
}

std::string serialize(const StationaryTailDiagram& d) {
  OJson j;
  j["kind"] = "stationary-tail";
  OJson head = explicit_json(d.head().base(), &d.head().orders());
  head.erase("kind");
  j["head"] = std::move(head);
  j["incoming"] = incoming_json(d.alphabet(), d.incoming());
  return dump(j);
}

std::string serialize(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return serialize(x); }, d);
}

Substitution parse_substitution(std::string_view text) {
  const Json j = parse_json(text);
  Substitution s;
  s.alphabet = strings_of(field(j, "alphabet", "substitution"), "\"alphabet\"");
  s.rules = incoming_of(field(j, "rules", "substitution"), s.alphabet);
  require_valid(s);
  return s;
}

std::string serialize(const Substitution& s) {
  OJson j;
  j["alphabet"] = s.alphabet;
  const bool single = std::all_of(s.alphabet.begin(), s.alphabet.end(), [](const auto& a) { return a.size() == 1; });
  OJson rules = OJson::object();
  for (std::size_t a = 0; a < s.alphabet.size(); ++a) {
    if (single) {
      std::string w;
      for (std::size_t b : s.rules[a]) w += s.alphabet[b];
      rules[s.alphabet[a]] = w;
    } else {
      OJson w = OJson::array();
      for (std::size_t b : s.rules[a]) w.push_back(s.alphabet[b]);
      rules[s.alphabet[a]] = std::move(w);
    }
  }
  j["rules"] = std::move(rules);
  return dump(j);
}

NestedKRSequence parse_nested(std::string_view text) {
  const Json j = parse_json(text);
  const Json& lv = field(j, "levels", "tower sequence");
  if (!lv.is_array()) throw ParseError("\"levels\" must be a list");
  NestedKRSequence seq;
  for (std::size_t n = 0; n < lv.size(); ++n) {
    const std::string where = "tower level " + std::to_string(n);
    KRLevel level;
    const Json& h = field(lv[n], "heights", where);
    if (!h.is_array()) throw ParseError(where + ": \"heights\" must be a list");
    for (const auto& x : h) level.heights.push_back(integer_of(x, where + " height"));
    const Json& w = field(lv[n], "words", where);
    if (!w.is_array()) throw ParseError(where + ": \"words\" must be a list");
    for (const auto& word : w) {
      if (!word.is_array()) throw ParseError(where + ": each word must be a list of tower indices");
      std::vector<std::size_t> out;
      for (const auto& i : word) {
        if (!i.is_number_unsigned()) throw ParseError(where + ": tower indices must be nonnegative integers");
        out.push_back(i.get<std::size_t>());
      }
      level.words.push_back(std::move(out));
    }
    seq.levels.push_back(std::move(level));
  }
  require_valid(seq);
  return seq;
}

std::string serialize(const NestedKRSequence& seq) {
  OJson levels = OJson::array();
  for (const KRLevel& level : seq.levels) {
    OJson l;
    OJson heights = OJson::array();
    for (const BigInt& h : level.heights) heights.push_back(integer_json(h));
    l["heights"] = std::move(heights);
    l["words"] = level.words;
    levels.push_back(std::move(l));
  }
  OJson j;
  j["levels"] = std::move(levels);
  return dump(j);
}

GroupElement parse_element(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("element must look like stage:[v0,v1,...]");
  GroupElement g;
  const std::string stage(text.substr(0, colon));
  if (stage.empty() || stage.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("element stage must be a nonnegative integer");
  g.stage = std::stoul(stage);
  const Json v = parse_json(text.substr(colon + 1));
  if (!v.is_array() || v.empty()) throw ParseError("element vector must be a nonempty list");
  for (const auto& x : v) g.vector.push_back(integer_of(x, "element entry"));
  return g;
}

std::string format_element(const GroupElement& g) { return std::to_string(g.stage) + ":" + to_string(g.vector); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace bratteli
