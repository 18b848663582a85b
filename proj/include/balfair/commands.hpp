#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "balfair/enumerate.hpp"

namespace balfair {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInput = 2,
  kExitInapplicable = 3,
  kExitInternal = 4,
};

struct SolveOptions {
  std::string input;
  std::string algorithm = "auto";
  std::optional<std::string> output;
  /// Treat the input as unconstrained: append dummy goods, solve, strip them.
  bool reduce = false;
  bool quiet = false;
};

struct CheckOptions {
  std::string instance;
  std::string allocation;
  bool ef1 = false;
  bool fpo = false;
  bool po = false;
  std::optional<std::string> pef1_prices;
  /// Allocation need not be balanced; fPO is tested against all fractional
  /// allocations.
  bool unconstrained = false;
  std::uint64_t max_states = kDefaultMaxStates;
  bool quiet = false;
};

struct EnumerateOptions {
  std::string instance;
  std::string format = "json";
  std::optional<std::string> output;
  std::uint64_t max_states = kDefaultMaxStates;
};

struct GenOptionsCli {
  std::uint64_t seed = 0;
  int n = 2;
  int m = 4;
  std::string cls = "general";
  int max_value = 9;
  std::optional<std::string> output;
};

struct ReduceOptions {
  std::string instance;
  std::optional<std::string> output;
  /// Sidecar path; defaults to <output>.map.json when output is set.
  std::optional<std::string> map_output;
};

// Each command writes its main product to `out` (or the output file) and
// diagnostics to `err`, and returns an ExitCode.
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptionsCli& opts, std::ostream& out, std::ostream& err);
int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace balfair
