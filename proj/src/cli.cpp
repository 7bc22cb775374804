#include "bratteli/cli.hpp"

#include "bratteli/error.hpp"
#include "bratteli/io.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace bratteli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocKind { Diagram, Substitution, Towers };

DocKind document_kind(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_object() && !j.contains("kind")) {
    if (j.contains("rules")) return DocKind::Substitution;
    if (j.contains("levels")) return DocKind::Towers;
  }
  return DocKind::Diagram;
}

struct Context {
  const CommandSpec& spec;
  std::string text;

  AnyDiagram diagram() const {
    if (document_kind(text) != DocKind::Diagram) throw UsageError(spec.command + " needs a diagram file");
    return parse_diagram(text);
  }

  StationaryTailDiagram stationary() const {
    AnyDiagram d = diagram();
    if (auto* s = std::get_if<StationaryOrderedDiagram>(&d)) return s->as_tail();
    if (auto* t = std::get_if<StationaryTailDiagram>(&d)) return *t;
    throw UsageError(spec.command + " needs a stationary or stationary-tail diagram");
  }

  std::size_t depth_or(std::size_t fallback) const { return spec.depth ? spec.depth : fallback; }

  // Explicit diagrams are used as given; stationary ones are truncated.
  OrderedDiagram ordered(std::size_t stationary_depth) const {
    AnyDiagram d = diagram();
    if (auto* o = std::get_if<OrderedDiagram>(&d)) return *o;
    if (std::holds_alternative<BratteliDiagram>(d)) throw UsageError(spec.command + " needs an ordered diagram");
    return stationary().truncate(stationary_depth);
  }

  GroupPresentation presentation() const {
    AnyDiagram d = diagram();
    if (auto* b = std::get_if<BratteliDiagram>(&d)) return k0_of(*b);
    if (auto* o = std::get_if<OrderedDiagram>(&d)) return k0_of(o->base());
    return k0_of(stationary());
  }

  std::vector<GroupElement> elements(std::size_t count) const {
    if (spec.args.size() != count)
      throw UsageError(spec.command + " takes " + std::to_string(count) + " element(s) of the form stage:[v,...]");
    std::vector<GroupElement> out;
    for (const auto& a : spec.args) out.push_back(parse_element(a));
    return out;
  }

  std::set<std::size_t> keep() const {
    if (spec.keep.empty()) throw UsageError(spec.command + " needs --keep with at least one level-1 edge id");
    return {spec.keep.begin(), spec.keep.end()};
  }
};

std::string yes_no(bool b) { return b ? "YES\n" : "NO\n"; }

std::string cmd_validate(const Context& c) {
  switch (document_kind(c.text)) {
    case DocKind::Substitution: {
      const Substitution s = parse_substitution(c.text);
      return "valid substitution over " + std::to_string(s.alphabet.size()) + " symbols\n";
    }
    case DocKind::Towers: {
      const NestedKRSequence seq = parse_nested(c.text);
      return "valid tower sequence, depth " + std::to_string(seq.depth()) + "\n";
    }
    case DocKind::Diagram: break;
  }
  const AnyDiagram d = c.diagram();
  if (auto* b = std::get_if<BratteliDiagram>(&d))
    return "valid explicit diagram, depth " + std::to_string(b->depth()) + ", unordered\n";
  if (auto* o = std::get_if<OrderedDiagram>(&d))
    return "valid explicit diagram, depth " + std::to_string(o->depth()) + ", ordered\n";
  if (auto* s = std::get_if<StationaryOrderedDiagram>(&d))
    return "valid stationary diagram, " + std::to_string(s->size()) + " symbols, " + std::to_string(s->top().size()) +
           " top edges\n";
  const auto& t = std::get<StationaryTailDiagram>(d);
  return "valid stationary-tail diagram, head depth " + std::to_string(t.head_depth()) + ", " +
         std::to_string(t.alphabet_size()) + " symbols\n";
}

std::string cmd_matrix(const Context& c) {
  const GroupPresentation p = c.presentation();
  std::ostringstream out;
  for (std::size_t n = 1; n <= p.head.size(); ++n) out << "phi_" << n << " = " << p.head[n - 1].to_string() << "\n";
  if (p.repeating) out << "repeating = " << p.repeating->to_string() << "\n";
  return out.str();
}

std::string cmd_telescope(const Context& c) {
  if (c.spec.cuts.size() < 2) throw UsageError("telescope needs --cuts 0,m1,... with at least one cut after 0");
  const TelescopeSchedule s{c.spec.cuts};
  AnyDiagram d = c.diagram();
  if (auto* b = std::get_if<BratteliDiagram>(&d)) return serialize(telescope(*b, s));
  return serialize(induced_order_telescope(c.ordered(s.cuts.back()), s));
}

std::string cmd_proper(const Context& c) {
  AnyDiagram d = c.diagram();
  if (std::holds_alternative<BratteliDiagram>(d) || std::holds_alternative<OrderedDiagram>(d))
    return "UNDET: a finite truncation does not decide proper ordering\n";
  const StationaryTailDiagram t = c.stationary();
  const ProperOrderVerdict v = properly_ordered(t);
  return v ? "YES\n" : "NO: " + v.reason + "\n";
}

std::string cmd_substitution(const Context& c) {
  if (document_kind(c.text) == DocKind::Substitution)
    return serialize(diagram_of_substitution(parse_substitution(c.text)));
  AnyDiagram d = c.diagram();
  if (auto* s = std::get_if<StationaryOrderedDiagram>(&d)) return serialize(substitution_of(*s));
  throw UsageError("substitution needs a stationary diagram or a substitution file");
}

std::string cmd_orbit(const Context& c) {
  const StationaryTailDiagram d = c.stationary();
  if (c.spec.length == 0) throw UsageError("--length must be at least 1");
  return render_symbols(d.alphabet(), orbit_sequence(d, c.spec.length)) + "\n";
}

std::string cmd_towers(const Context& c) {
  if (document_kind(c.text) == DocKind::Towers) return serialize(diagram_from_nested(parse_nested(c.text)));
  const OrderedDiagram od = c.ordered(c.depth_or(3));
  return serialize(nested_from_diagram(od, c.depth_or(od.depth())));
}

std::string cmd_k0(const Context& c) {
  const GroupPresentation p = c.presentation();
  std::ostringstream out;
  out << "unit = " << format_element(unit_of(p)) << "\n" << cmd_matrix(c);
  const std::size_t stage = p.stationary() ? c.depth_or(3) : p.depth();
  out << "unit at stage " << stage << " = " << format_element(push(p, unit_of(p), stage)) << "\n";
  return out.str();
}

std::string cmd_positive(const Context& c) {
  return to_string(is_positive(c.presentation(), c.elements(1)[0], c.spec.horizon)) + "\n";
}

std::string cmd_equal(const Context& c) {
  const auto e = c.elements(2);
  switch (equal(c.presentation(), e[0], e[1])) {
    case Truth::True: return "TRUE\n";
    case Truth::False: return "FALSE\n";
    case Truth::Undetermined: break;
  }
  return "UNDET\n";
}

std::string cmd_interpolate(const Context& c) {
  const auto e = c.elements(4);
  const auto r = interpolate(c.presentation(), e[0], e[1], e[2], e[3], c.spec.horizon);
  return r ? format_element(*r) + "\n" : "UNDET\n";
}

struct CheckFailed : Error {
  using Error::Error;
};

std::string cmd_gamma_check(const Context& c) {
  const std::size_t n = c.spec.level;
  const NestedKRSequence seq = document_kind(c.text) == DocKind::Towers
                                   ? parse_nested(c.text)
                                   : nested_from_diagram(c.ordered(n + 1), n + 1);
  const bool intertwines = gamma_intertwine_check(seq, n);
  const TowerSumReport r = tower_sum_report(seq, n);
  std::ostringstream out;
  out << "intertwining at level " << n << ": " << (intertwines ? "ok" : "FAIL") << "\n"
      << "tower sums: rank " << r.rank << ", onto " << (r.onto ? "yes" : "no") << ", kernel spanned by floor differences "
      << (r.kernel_spanned ? "yes" : "no") << "\n";
  if (!intertwines || !r) throw CheckFailed(out.str() + "tower-sum check failed");
  return out.str();
}

std::string cmd_split_top(const Context& c) {
  AnyDiagram d = c.diagram();
  auto* s = std::get_if<StationaryOrderedDiagram>(&d);
  if (!s) throw UsageError("split-top needs a stationary diagram");
  return serialize(symbol_split(*s).split);
}

std::string cmd_induce(const Context& c) {
  AnyDiagram d = c.diagram();
  if (auto* o = std::get_if<OrderedDiagram>(&d)) return serialize(induce_on_top(*o, c.keep()));
  return serialize(induce_on_top(c.stationary(), c.keep()));
}

std::string cmd_change(const Context& c) {
  if (!c.spec.change_path) throw UsageError("change needs --spec with the replacement levels");
  AnyDiagram r = parse_diagram(read_file(*c.spec.change_path));
  auto* head = std::get_if<OrderedDiagram>(&r);
  if (!head) throw UsageError("the change spec must be an ordered explicit diagram");
  const FiniteChange ch{*head};
  AnyDiagram d = c.diagram();
  if (auto* o = std::get_if<OrderedDiagram>(&d)) return serialize(apply_finite_change(*o, ch));
  return serialize(apply_finite_change(c.stationary(), ch));
}

std::string cmd_first_return(const Context& c) {
  return yes_no(first_return_check(c.stationary(), c.keep(), c.spec.length));
}

std::string cmd_dot(const Context& c) {
  AnyDiagram d = c.diagram();
  if (auto* b = std::get_if<BratteliDiagram>(&d)) return export_dot(*b, c.depth_or(b->depth()));
  const OrderedDiagram od = c.ordered(c.depth_or(3));
  return export_dot(od, c.depth_or(od.depth()));
}

const std::map<std::string, std::function<std::string(const Context&)>>& commands() {
  static const std::map<std::string, std::function<std::string(const Context&)>> table{
      {"validate", cmd_validate},       {"matrix", cmd_matrix},       {"telescope", cmd_telescope},
      {"proper", cmd_proper},           {"substitution", cmd_substitution}, {"orbit", cmd_orbit},
      {"towers", cmd_towers},           {"k0", cmd_k0},               {"positive", cmd_positive},
      {"equal", cmd_equal},             {"interpolate", cmd_interpolate}, {"gamma-check", cmd_gamma_check},
      {"split-top", cmd_split_top},     {"induce", cmd_induce},       {"change", cmd_change},
      {"first-return", cmd_first_return}, {"dot", cmd_dot},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : commands()) out.push_back(name);
    return out;
  }();
  return names;
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    auto it = commands().find(spec.command);
    if (it == commands().end()) throw UsageError("unknown command '" + spec.command + "'");
    if (spec.input_path.has_value() == spec.literal.has_value())
      throw UsageError("give exactly one input: a file path or --literal");
    const Context context{spec, spec.literal ? *spec.literal : read_file(*spec.input_path)};
    const std::string result = it->second(context);
    if (spec.output_path) {
      std::ofstream file(*spec.output_path, std::ios::binary);
      if (!file) throw Error("cannot write '" + *spec.output_path + "'");
      file << result;
    } else {
      out << result;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailed& e) {
    out << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bratteli
