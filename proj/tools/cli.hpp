// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bracketframe/error.hpp"
#include "bracketframe/signal.hpp"

namespace bracketframe::cli {

enum class Command { bracket, gram_schmidt, frame_analyze, complete, reconstruct, bench };

/// Window spec names a kind the parser does not know.
class UnknownWindow : public Error {
 public:
  using Error::Error;
};

/// Window spec has a known kind but unusable parameters.
class BadParameter : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::frame_analyze;
  std::int64_t L = 64;
  /// Shift a = p/L and inverse modulation 1/b = q/L in grid steps; both
  /// default to L when absent. bench runs its lattice battery when neither
  /// is given.
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;

  std::string window;
  /// Second operand of `bracket`; defaults to the first.
  std::string window2;
  /// Extra window specs for gram-schmidt.
  std::vector<std::string> signals;
  std::string input;
  std::string output;
  std::string csv;
  /// "a" or "1/b".
  std::string period = "a";

  double tol = 1e-9;
  double zero_tol = 1e-6;
  double cg_tol = 1e-10;
  std::optional<double> dep_tol;
  int max_iter = 2000;
  std::int64_t margin = -1;
  bool strict = false;

  std::string op = "both";
  int repeat = 5;
  std::uint64_t seed = 0x5eed;
};

/// Builds a window on `grid` from
///   indicator:<start>,<len>   steps; each token is an integer or L, L/k, kL, k*L
///   gaussian:c=<real>,hw=<real>   e^{-c t^2} on [-hw, hw)
///   file:<path>               Signal JSON
/// Throws UnknownWindow or BadParameter.
SampledSignal parse_window(const std::string& spec, const LatticeGrid& grid);

/// Executes one command. Exit codes: 0 success, 1 failed verdict under
/// --strict (or a bench error above tolerance), 2 invalid input. Results go
/// to config.output (stdout when empty); diagnostics go to `err` as one line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run().
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bracketframe::cli
