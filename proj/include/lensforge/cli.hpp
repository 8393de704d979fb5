#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace lensforge::cli {

enum class Command {
  Classify,
  Homeo,
  Fill,
  Cover,
  Equiv,
  LinkX,
  Basis,
  Resolve,
  Orbits,
  VerifyChain,
  Census,
};

enum class OutputFormat { Json, Dot, Text };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);
std::optional<OutputFormat> parse_format(std::string_view name);

struct JobRequest {
  Command command = Command::Classify;
  // Keys are flag names without dashes: n, q, q2, a, b, a2, b2, bound, max-n.
  std::map<std::string, std::int64_t> parameters;
  OutputFormat format = OutputFormat::Json;
  bool color = false;
};

struct Report {
  std::string output;  // newline terminated
  int exit_code = 0;
};

// Dispatches to the library. Library errors become a JSON error object on
// `output` with the matching exit code; nothing escapes as an exception.
Report run(const JobRequest& request);

inline constexpr std::int64_t kCensusMaxN = 30;
inline constexpr int kVerifyChainPoints = 100;

// Exit code table printed by --help.
std::string exit_code_help();

}  // namespace lensforge::cli
