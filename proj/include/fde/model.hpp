#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "fde/series.hpp"

namespace fde::model {

enum class Kind { TanhWave, LogisticFront };

// Identifier for a problem kind ("tanh" / "logistic"), and its inverse.
// parse_kind throws std::invalid_argument for unknown names.
std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view name);

// One solver problem: the drainage equation in u-form,
//   u_t + 2 u^2 u_x - (u_x)^2 - (1/2) u u_xx = 0,
// with either the solitary-wave initial condition u(x,0) = -sqrt(c) tanh(sqrt(c) x)
// (wave speed c) or the logistic front u(x,0) = -1/2 + 1/(1 + e^x).
//
// `terms` is the series term count K; each recurrence step consumes up to two
// x-derivative orders, so series are generated at order M = 2K + guard to keep
// the center values intact through all K steps.
struct Problem {
    Kind kind = Kind::TanhWave;
    double c = 1.0;  // wave speed; meaningful for TanhWave only
    int terms = 10;
    int guard = 4;

    int order() const { return 2 * terms + guard; }
    // c == 0 collapses TanhWave to the zero solution; allowed, but flagged so
    // callers can refuse it where it makes no sense (e.g. the CLI).
    bool degenerate() const { return kind == Kind::TanhWave && c == 0.0; }
};

Problem make_tanh_wave(double c, int terms = 10, int guard = 4);
Problem make_logistic_front(int terms = 10, int guard = 4);

// Series of the initial data u(x, 0) about `center`, at order M.
series::TruncatedSeries initial_condition(const Problem& p, double center, int M);

// Right-hand side of the spectrum recurrence before division by (k+1):
//   -2 sum_{r+s+l=k} U_r U_s U'_l + sum_{r+s=k} U'_r U'_s + (1/2) sum_{r+s=k} U_r U''_s.
// The result's valid order is two less than the weakest input.
series::TruncatedSeries convolved_nonlinearity(std::span<const series::TruncatedSeries> seq,
                                               int k);

// Exact solutions. TanhWave is the piecewise solitary wave, zero ahead of the
// front x = c*t; LogisticFront is the speed-1/4 traveling wave.
double exact_u(const Problem& p, double x, double t);

// Liquid cross-section A = u^2 for the solitary wave: c*tanh^2(sqrt(c)(x-ct))
// behind the front, zero ahead of it.
double exact_A(double x, double t, double c);

// Central-difference residual of the u-form equation at (x, t), stencil
// spacing h. Near zero for true solutions (up to O(h^2) stencil error).
double pde_residual(const std::function<double(double, double)>& u_eval, double x, double t,
                    double h);

}  // namespace fde::model
