#pragma once

#include <vector>

#include "fde/model.hpp"
#include "fde/series.hpp"

namespace fde::rdtm {

// The t-Taylor spectra U_0..U_k of one problem about one center:
// u(x, t) = sum_k U_k(x) t^k, with U_k held as truncated x-series.
struct SpectrumSequence {
    model::Problem problem;
    double center = 0.0;
    std::vector<series::TruncatedSeries> spectra;
};

// U_{k+1} from U_0..U_k: the convolved nonlinearity divided by (k+1).
series::TruncatedSeries next_spectrum(const SpectrumSequence& seq);

// U_0 from the initial condition at order M = 2K + guard, then K recurrence
// steps.
SpectrumSequence build_spectra(const model::Problem& p, double center);

// sum_{k=0..K} U_k(center) t^k, evaluated only at the expansion center where
// the series are exact.
double partial_sum_at(const SpectrumSequence& seq, double t);

// Partial sums on a grid, rebuilding the spectra about each grid point so
// every returned value is a center evaluation.
std::vector<double> solve_grid(const model::Problem& p, const std::vector<double>& xs, double t);

}  // namespace fde::rdtm
