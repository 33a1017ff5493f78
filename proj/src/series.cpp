#include "fde/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fde::series {

namespace {

thread_local std::uint64_t g_mul_count = 0;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_same_center(const TruncatedSeries& x, const TruncatedSeries& y) {
    if (x.center != y.center) {
        throw std::invalid_argument("series centers differ: " + std::to_string(x.center) +
                                    " vs " + std::to_string(y.center));
    }
}

}  // namespace

void reset_mul_count() noexcept { g_mul_count = 0; }
std::uint64_t mul_count() noexcept { return g_mul_count; }

TruncatedSeries make_constant(double v, double center, int M) {
    require_finite(v, "constant value");
    require_finite(center, "center");
    if (M < 0) throw std::invalid_argument("order must be nonnegative");
    TruncatedSeries s;
    s.center = center;
    s.valid = M;
    s.a.assign(static_cast<std::size_t>(M) + 1, 0.0);
    s.a[0] = v;
    return s;
}

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y) {
    require_same_center(x, y);
    const int M = std::min(x.order(), y.order());
    TruncatedSeries out;
    out.center = x.center;
    out.valid = std::min(x.valid, y.valid);
    out.a.resize(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) out.a[k] = x.a[k] + y.a[k];
    return out;
}

TruncatedSeries scale(const TruncatedSeries& x, double alpha) {
    require_finite(alpha, "scale factor");
    ++g_mul_count;
    TruncatedSeries out = x;
    for (double& c : out.a) c *= alpha;
    return out;
}

TruncatedSeries cauchy_mul(const TruncatedSeries& x, const TruncatedSeries& y) {
    require_same_center(x, y);
    ++g_mul_count;
    const int V = std::min(x.valid, y.valid);
    TruncatedSeries out;
    out.center = x.center;
    out.valid = V;
    out.a.assign(static_cast<std::size_t>(V) + 1, 0.0);
    for (int k = 0; k <= V; ++k) {
        double s = 0.0;
        for (int r = 0; r <= k; ++r) s += x.a[r] * y.a[k - r];
        out.a[k] = s;
    }
    return out;
}

TruncatedSeries differentiate(const TruncatedSeries& x) {
    if (x.valid < 1) {
        throw std::invalid_argument("derivative information exhausted (valid_order 0)");
    }
    TruncatedSeries out;
    out.center = x.center;
    out.valid = x.valid - 1;
    const int M = x.order();
    out.a.resize(static_cast<std::size_t>(M));
    for (int k = 0; k + 1 <= M; ++k) out.a[k] = (k + 1) * x.a[k + 1];
    return out;
}

double eval(const TruncatedSeries& x, double at) {
    const double h = at - x.center;
    double s = 0.0;
    for (int k = x.valid; k >= 0; --k) s = x.a[k] + h * s;
    return s;
}

TruncatedSeries tanh_series(double center, double s, int M) {
    require_finite(center, "center");
    require_finite(s, "scale");
    if (M < 0) throw std::invalid_argument("order must be nonnegative");
    TruncatedSeries out;
    out.center = center;
    out.valid = M;
    out.a.reserve(static_cast<std::size_t>(M) + 1);
    out.a.push_back(std::tanh(s * center));
    if (M >= 1) {
        // a_1 = s*(1 - a_0^2) evaluated as s*sech^2 to avoid the cancellation
        // that destroys relative accuracy deep in the tanh tail.
        const double sech = 1.0 / std::cosh(s * center);
        out.a.push_back(s * sech * sech);
    }
    for (int k = 1; k + 1 <= M; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k; ++j) conv += out.a[j] * out.a[k - j];
        out.a.push_back(-s * conv / (k + 1));
    }
    return out;
}

TruncatedSeries logistic_series(double center, int M) {
    require_finite(center, "center");
    if (M < 0) throw std::invalid_argument("order must be nonnegative");
    TruncatedSeries out;
    out.center = center;
    out.valid = M;
    out.a.reserve(static_cast<std::size_t>(M) + 1);
    out.a.push_back(1.0 / (1.0 + std::exp(center)));
    if (M >= 1) {
        // a_1 = a_0^2 - a_0 = -a_0*(1 - a_0); 1 - a_0 computed directly as
        // 1/(1 + e^{-center}) keeps full relative accuracy for center << 0.
        out.a.push_back(-out.a[0] / (1.0 + std::exp(-center)));
    }
    for (int k = 1; k + 1 <= M; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k; ++j) conv += out.a[j] * out.a[k - j];
        out.a.push_back((conv - out.a[k]) / (k + 1));
    }
    return out;
}

TruncatedSeries monomial_spectrum(int m, int n, int k, double center, int M) {
    if (m < 0 || n < 0 || k < 0) {
        throw std::invalid_argument("monomial_spectrum indices must be nonnegative");
    }
    require_finite(center, "center");
    if (M < 0) throw std::invalid_argument("order must be nonnegative");
    TruncatedSeries out = make_constant(0.0, center, M);
    if (k != n) return out;
    // x^m about the center: a_j = C(m, j) * center^(m-j).
    double binom = 1.0;
    for (int j = 0; j <= std::min(m, M); ++j) {
        out.a[j] = binom * std::pow(center, m - j);
        binom *= static_cast<double>(m - j) / (j + 1);
    }
    return out;
}

}  // namespace fde::series
