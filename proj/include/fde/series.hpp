#pragma once

#include <cstdint>
#include <vector>

namespace fde::series {

// One-variable truncated Taylor expansion about a fixed center.
//
// `valid` is the highest coefficient index that is still trustworthy:
// differentiation loses one order of information, so derived series carry
// fewer reliable coefficients than they store. Arithmetic between two series
// narrows `valid` to the minimum of the operands.
struct TruncatedSeries {
    double center = 0.0;
    int valid = 0;
    std::vector<double> a;  // coefficients a_0..a_M

    int order() const { return static_cast<int>(a.size()) - 1; }
};

TruncatedSeries make_constant(double v, double center, int M);
TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries scale(const TruncatedSeries& x, double alpha);
TruncatedSeries cauchy_mul(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries differentiate(const TruncatedSeries& x);
double eval(const TruncatedSeries& x, double at);

// tanh(s*x) about `center`, coefficients generated from y' = s*(1 - y^2).
TruncatedSeries tanh_series(double center, double s, int M);

// 1/(1 + e^x) about `center`, coefficients generated from y' = y^2 - y.
TruncatedSeries logistic_series(double center, int M);

// Spectrum of the separable source x^m * t^n: the series of x^m about
// `center` when k == n, the zero series otherwise.
TruncatedSeries monomial_spectrum(int m, int n, int k, double center, int M);

// Thread-local count of series multiplications (Cauchy products and scalar
// scalings). Deterministic per computation; used by the benchmark harness.
void reset_mul_count() noexcept;
std::uint64_t mul_count() noexcept;

}  // namespace fde::series
