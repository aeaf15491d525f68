#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace thetagraph::cli {

enum class Command { analyze, predict, verify, kloosterman, factor, export_dot };
enum class Format { table, json, dot };

struct RunConfig {
  Command command = Command::analyze;
  int n = 0;
  std::optional<std::uint64_t> poly;
  Format format = Format::table;
  bool dlog_labels = false;
  unsigned threads = 1;
  /// factor only: -1 selects pi^n - 1, +1 selects pi^n + 1.
  int sign = -1;
  /// factor only: explicit element instead of pi^n -+ 1.
  std::optional<std::string> value;
  std::optional<std::string> out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command. Output goes to `out` unless config.out_path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return 2; --help returns 0.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetagraph::cli
