#include "bratteli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Ordered Bratteli diagrams: telescoping, Vershik orbits, towers, dimension groups"};
  bratteli::CommandSpec spec;
  std::vector<std::string> positionals;
  std::string literal, output, change;

  std::string names;
  for (const auto& n : bratteli::command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", spec.command, "One of: " + names)->required();
  app.add_option("args", positionals, "Input file (unless --literal), then elements stage:[v,...]");
  app.add_option("--literal", literal, "Inline input text instead of a file");
  app.add_option("-o,--output", output, "Write the result to this file");
  app.add_option("--depth", spec.depth, "Levels to materialise (default: command specific)")->check(CLI::Range(1, 4096));
  app.add_option("--length", spec.length, "Orbit length or first-return count")->check(CLI::Range(1, 100000000));
  app.add_option("--horizon", spec.horizon, "Push/refinement budget for undecided questions")->check(CLI::Range(0, 4096));
  app.add_option("--level", spec.level, "Tower level for gamma-check")->check(CLI::Range(0, 64));
  app.add_option("--keep", spec.keep, "Level-1 edge ids to keep")->delimiter(',');
  app.add_option("--cuts", spec.cuts, "Telescoping cut levels, starting with 0")->delimiter(',');
  app.add_option("--spec", change, "Replacement levels for change");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!literal.empty()) {
    spec.literal = literal;
    spec.args = positionals;
  } else if (!positionals.empty()) {
    spec.input_path = positionals.front();
    spec.args.assign(positionals.begin() + 1, positionals.end());
  }
  if (!output.empty()) spec.output_path = output;
  if (!change.empty()) spec.change_path = change;
  return bratteli::run(spec, std::cout, std::cerr);
}
