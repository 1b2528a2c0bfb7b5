#pragma once

// Batch front end: every command reads files, writes to `out`, reports
// problems on `err` and returns the process exit status.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace welded {

enum class Command { compute, alexpoly, burau, compose, compare, selftest };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::compute;
  std::vector<std::string> inputs;  // "-" reads standard input
  std::optional<std::pair<int, int>> split;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 1;
  int mu = -1;          // < 0: largest color in the input
  bool raw = false;     // skip the canonical unit form
  bool glue = false;    // compose: print the glued tangle instead of γ
  double scale = 1.0;   // selftest: trial-count multiplier
};

/// Exit status: 0 success, 1 `compare` found no unit or `selftest` failed,
/// 2 bad input (I/O, syntax, validation, shape), 3 internal consistency error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses "n0,n1".
std::pair<int, int> parse_split(const std::string& text);

}  // namespace welded
