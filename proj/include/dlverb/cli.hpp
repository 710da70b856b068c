// Command-line front end, kept in the library so it can be driven from tests.

#ifndef DLVERB_CLI_HPP
#define DLVERB_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "dlverb/oracle.hpp"
#include "dlverb/verbalizer.hpp"

namespace dlverb {

enum class Command { Verbalize, Describe, Trace, Lint, Verify, Generate };
enum class OutputFormat { Text, Structured };

struct RunConfig {
  Command command = Command::Verbalize;
  std::filesystem::path input;  // unused by generate
  RenderMode mode = RenderMode::Reduced;
  bool grouping = true;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::filesystem::path> lexicon;
  bool trace = false;
  GenParams gen;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;  // lint findings or verification failures
inline constexpr int kExitUsage = 2;     // parse, usage and input errors

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (program name first) and runs.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dlverb

#endif  // DLVERB_CLI_HPP
