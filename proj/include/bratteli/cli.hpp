#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bratteli {

/// One parsed command line. Exactly one of `input_path` and `literal`
/// supplies the diagram (or substitution / tower sequence) text.
struct CommandSpec {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> literal;
  std::optional<std::string> output_path;
  std::vector<std::string> args;
  std::size_t depth = 0;  // 0: the command default
  std::size_t length = 16;
  std::size_t horizon = 64;
  std::size_t level = 1;
  std::vector<std::size_t> keep;
  std::vector<std::size_t> cuts;
  std::optional<std::string> change_path;
};

const std::vector<std::string>& command_names();

/// 0 on success, 1 on a domain error, 2 on a usage error. Results go to
/// `out` (or the output file), diagnostics to `err`.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace bratteli
