#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace evenfix::app {

enum class Command { build, analyze, molien, cosets, bifurcate, certify };
const char* to_string(Command c) noexcept;

enum ExitCode : int { exit_pass = 0, exit_claim_failure = 1, exit_usage = 2, exit_internal = 3 };

struct Sweep {
  double a0 = 0.0, a1 = 0.0;
  int steps = 1;
};

struct RunConfig {
  Command command = Command::certify;
  std::string family = "g8";  // g3 | g8
  std::optional<int> m, l, k;
  int root = 1;
  std::optional<std::string> group_path;  // read a serialized group instead of building one
  int degree = 3;
  double a = 0.0;
  std::optional<Sweep> sweep;
  bool commuting = false;
  std::optional<int> s;
  bool check_tables = false;
  bool basis = false;
  std::optional<std::string> output;
  std::uint64_t seed = 0;
  std::optional<std::size_t> threads;
};

// "a0:a1:steps"
Sweep parse_sweep(const std::string& text);

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = exit_pass;  // meaningful when config is empty
};

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evenfix::app
