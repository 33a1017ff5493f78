#pragma once

// Command-line surface: four subcommands over the solver toolkit.
//
//   solve   partial sums at grid points                (values CSV)
//   table   solutions with closed-form comparison      (error CSV)
//   figure  per-point absolute error curve             (figure CSV)
//   bench   instrumented timing / multiplication count (timing CSV)
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure (non-finite
// result), 4 unwritable output path.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fde/bench.hpp"
#include "fde/model.hpp"

namespace fde::cli {

enum class Command { Solve, Table, Figure, Bench };

struct RunConfig {
    Command command = Command::Solve;
    model::Kind kind = model::Kind::TanhWave;
    double c = 1.0;
    double t = 0.0;
    int terms = 10;
    int guard = 4;
    std::vector<double> xs;
    std::vector<bench::Method> methods;
    std::vector<int> steps;
    int reps = 5;
    std::string out = "-";
    bool past_front = false;
};

/// Expand a grid specification: either a comma list ("-3,-1,0") or an
/// inclusive range "start:stop:step" (endpoints included within half a
/// step).  Throws std::invalid_argument on malformed input or zero step.
std::vector<double> parse_grid(const std::string& spec);

/// Parse a comma list of method names.  Throws on unknown names or an
/// empty list.
std::vector<bench::Method> parse_methods(const std::string& spec);

/// Parse a comma list of nonnegative step counts.
std::vector<int> parse_steps(const std::string& spec);

/// Result of argument parsing: either a validated configuration, or
/// (when help was requested) the help text to print.
struct ParseOutcome {
    std::optional<RunConfig> config;
    std::string help;
};

/// Parse command-line tokens (without the program name).  Throws
/// std::invalid_argument with a diagnostic naming the offending flag.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Execute a validated configuration.  CSV goes to `out` when the
/// configured path is "-", else to the configured file; diagnostics and
/// the benchmark reference table go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map exceptions to exit codes.
int main_entry(int argc, const char* const* argv);

}  // namespace fde::cli
