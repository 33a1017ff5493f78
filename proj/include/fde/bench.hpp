#pragma once

// Benchmark and reporting utilities: error tables comparing the three
// solver routes against the closed-form wave, per-point error curves,
// instrumented timing/operation-count runs, and the CSV writers used by
// the command-line driver.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fde/model.hpp"

namespace fde::bench {

enum class Method { Rdtm, Adm, Ldm };

/// Lower-case identifier for a method ("rdtm", "adm", "ldm").
std::string_view method_name(Method m);

/// Parse a lower-case method identifier.  Throws std::invalid_argument
/// for anything else.
Method parse_method(std::string_view name);

/// One row of an error table.  `exact` is absent in values-only mode.
struct ErrorRow {
    double x = 0.0;
    Method method = Method::Rdtm;
    double approx = 0.0;
    std::optional<double> exact;

    std::optional<double> abs_error() const;
};

/// Evaluate the truncated solutions of `p` at time `t` over the grid.
/// Rows are emitted grid-point-major, methods in the order given.  With
/// `with_exact` the closed-form solution and absolute error accompany
/// each row; for the compact-front problem that mode refuses points
/// beyond the front (x > c*t) unless `past_front` is set.
std::vector<ErrorRow> error_table(const model::Problem& p, const std::vector<double>& xs,
                                  double t, const std::vector<Method>& methods,
                                  bool with_exact, bool past_front);

/// Per-point absolute error |partial sum - closed form| of the recursive
/// transform route, for error-curve plots.
std::vector<std::pair<double, double>> figure_series(const model::Problem& p,
                                                     const std::vector<double>& xs,
                                                     double t);

/// Result of one instrumented build: best wall time over `reps`
/// repetitions and the (deterministic) series-multiplication count.
struct TimingRecord {
    Method method = Method::Rdtm;
    int steps = 0;
    double wall_seconds = 0.0;
    std::uint64_t mul_count = 0;
    int reps = 0;
};

/// Build the first `steps` corrections beyond the initial profile at a
/// fixed interior point, `reps` times (at least 3), recording the best
/// wall time and the multiplication count of one build.
TimingRecord timing_run(const model::Problem& p, Method m, int steps, int reps);

/// Reference wall-clock measurement from a fixed baseline environment,
/// kept for context next to fresh runs.
struct ReferenceTiming {
    model::Kind kind = model::Kind::TanhWave;
    Method method = Method::Rdtm;
    int steps = 0;
    double wall_seconds = 0.0;
};

/// Reference wall-clock table for both problems at 5..25 steps.
const std::vector<ReferenceTiming>& reference_timings();

/// Shortest decimal form of `v` that parses back to the same double.
std::string format_double(double v);

/// Parse a decimal-comma, Fortran-style number ("0,10317037658E-4").
/// Plain C locale numbers parse too.  Throws std::invalid_argument on
/// malformed input.
double parse_reference_number(std::string_view text);

/// CSV writers.  Headers are fixed:
///   errors : x,method,approx,exact,abs_error   (blank fields in values mode)
///   figure : x,abs_error
///   timing : method,steps,wall_seconds,mul_count,reps
void write_error_csv(std::ostream& os, const std::vector<ErrorRow>& rows);
void write_figure_csv(std::ostream& os,
                      const std::vector<std::pair<double, double>>& pts);
void write_timing_csv(std::ostream& os, const std::vector<TimingRecord>& recs);

/// Human-readable rendering of the reference wall-clock table.
void write_reference_table(std::ostream& os);

}  // namespace fde::bench
