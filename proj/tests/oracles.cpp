#include "oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "fde/series.hpp"

namespace fde::testing {

using series::TruncatedSeries;

double smooth_tanh_u(double c, double x, double t) {
    const double r = std::sqrt(c);
    return -r * std::tanh(r * (x - c * t));
}

double smooth_logistic_u(double x, double t) {
    return -0.5 + 1.0 / (1.0 + std::exp(x - t / 4.0));
}

namespace {

struct StencilPoint {
    int offset;
    double weight;
};

// Central stencils of order O(h^2) for d^k/dt^k, k = 1..5.
const std::vector<StencilPoint>& stencil(int k) {
    static const std::vector<std::vector<StencilPoint>> table = {
        {{1, 0.5}, {-1, -0.5}},
        {{1, 1.0}, {0, -2.0}, {-1, 1.0}},
        {{2, 0.5}, {1, -1.0}, {-1, 1.0}, {-2, -0.5}},
        {{2, 1.0}, {1, -4.0}, {0, 6.0}, {-1, -4.0}, {-2, 1.0}},
        {{3, 0.5}, {2, -2.0}, {1, 2.5}, {-1, -2.5}, {-2, 2.0}, {-3, -0.5}},
    };
    if (k < 1 || k > 5) throw std::invalid_argument("stencil order must be 1..5");
    return table[static_cast<std::size_t>(k) - 1];
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

double taylor_coefficient_fd(const std::function<double(double)>& f, int k, double h) {
    if (k == 0) return f(0.0);
    if (!(h > 0.0)) throw std::invalid_argument("stencil spacing must be positive");
    double sum = 0.0;
    for (const auto& pt : stencil(k)) sum += pt.weight * f(pt.offset * h);
    return sum / std::pow(h, k) / factorial(k);
}

double taylor_coefficient_r2(const std::function<double(double)>& f, int k, double h) {
    if (k == 0) return f(0.0);
    const auto r1 = [&](double hh) {
        return (4.0 * taylor_coefficient_fd(f, k, hh / 2) - taylor_coefficient_fd(f, k, hh)) /
               3.0;
    };
    return (16.0 * r1(h / 2) - r1(h)) / 15.0;
}

double fd_step_tanh(int k) {
    static const double steps[5] = {0.02, 0.05, 0.03, 0.08, 0.05};
    if (k < 1 || k > 5) throw std::invalid_argument("derivative order must be 1..5");
    return steps[k - 1];
}

double fd_step_logistic(int k) {
    static const double steps[5] = {0.2, 0.3, 0.3, 0.5, 0.5};
    if (k < 1 || k > 5) throw std::invalid_argument("derivative order must be 1..5");
    return steps[k - 1];
}

double closed_tanh_spectrum(int k, double c, double x) {
    const double r = std::sqrt(c);
    const double ch = std::cosh(r * x);
    const double sh = std::sinh(r * x);
    switch (k) {
        case 0: return -r * std::tanh(r * x);
        case 1: return c * c / (ch * ch);
        case 2: return std::pow(c, 3.5) * sh / (ch * ch * ch);
        case 3: return (1.0 / 3.0) * std::pow(c, 5.0) * (2.0 * ch * ch - 3.0) / std::pow(ch, 4);
        case 4:
            return (1.0 / 3.0) * std::pow(c, 6.5) * sh * (ch * ch - 3.0) / std::pow(ch, 5);
        default: throw std::invalid_argument("closed tanh spectrum defined for k = 0..4");
    }
}

double closed_logistic_spectrum(int k, double x) {
    const double ex = std::exp(x);
    const double q = 1.0 + ex;
    switch (k) {
        case 0: return -0.5 + 1.0 / q;
        case 1: return 0.25 * ex / (q * q);
        case 2: return (1.0 / 32.0) * ex * (-1.0 + ex) / std::pow(q, 3);
        case 3: return -(1.0 / 384.0) * ex * (-1.0 + 4.0 * ex - ex * ex) / std::pow(q, 4);
        case 4:
            return (1.0 / 6144.0) * ex * (ex * ex * ex - 1.0 + 11.0 * ex - 11.0 * ex * ex) /
                   std::pow(q, 5);
        case 5:
            // Numerator re-derived analytically; its middle coefficients are
            // antisymmetric: 1 - 26 e^x + 66 e^{2x} - 26 e^{3x} + e^{4x}.
            return (1.0 / 122880.0) * ex *
                   (1.0 - 26.0 * ex + 66.0 * ex * ex - 26.0 * ex * ex * ex +
                    ex * ex * ex * ex) /
                   std::pow(q, 6);
        default: throw std::invalid_argument("closed logistic spectrum defined for k = 0..5");
    }
}

double tanh_spectrum_scale(int k, double c) { return std::pow(c, (3.0 * k + 1.0) / 2.0); }

double logistic_spectrum_scale(int k) {
    static const double scales[5] = {0.25, 1.0 / 32.0, 1.0 / 384.0, 1.0 / 6144.0,
                                     1.0 / 122880.0};
    if (k < 1 || k > 5) throw std::invalid_argument("spectrum scale defined for k = 1..5");
    return scales[k - 1];
}

decomp::TPolyComponent lambda_adomian(std::span<const decomp::TPolyComponent> us, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= us.size()) {
        throw std::invalid_argument("component index out of range");
    }
    using TPC = decomp::TPolyComponent;
    const double center = us[0].center;
    const auto empty = [&] {
        TPC e;
        e.center = center;
        return e;
    };
    using LPoly = std::vector<TPC>;  // coefficient list in the expansion variable

    LPoly u(static_cast<std::size_t>(k) + 1, empty());
    for (int i = 0; i <= k; ++i) u[static_cast<std::size_t>(i)] = us[static_cast<std::size_t>(i)];

    const auto lmul = [&](const LPoly& a, const LPoly& b) {
        LPoly out(static_cast<std::size_t>(k) + 1, empty());
        for (int j = 0; j <= k; ++j) {
            for (int r = 0; r <= j; ++r) {
                const TPC& ar = a[static_cast<std::size_t>(r)];
                const TPC& bjr = b[static_cast<std::size_t>(j - r)];
                if (ar.terms.empty() || bjr.terms.empty()) continue;
                out[static_cast<std::size_t>(j)] =
                    decomp::tp_add(out[static_cast<std::size_t>(j)], decomp::tp_mul(ar, bjr));
            }
        }
        return out;
    };
    const auto ldx = [&](const LPoly& a) {
        LPoly out(static_cast<std::size_t>(k) + 1, empty());
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!a[j].terms.empty()) out[j] = decomp::tp_dx(a[j]);
        }
        return out;
    };

    const LPoly du = ldx(u);
    const LPoly ddu = ldx(du);
    const LPoly t1 = lmul(lmul(u, u), du);
    const LPoly t2 = lmul(du, du);
    const LPoly t3 = lmul(u, ddu);

    TPC out = empty();
    const std::size_t kk = static_cast<std::size_t>(k);
    if (!t1[kk].terms.empty()) out = decomp::tp_scale(t1[kk], -2.0);
    if (!t2[kk].terms.empty()) out = decomp::tp_add(out, t2[kk]);
    if (!t3[kk].terms.empty()) out = decomp::tp_add(out, decomp::tp_scale(t3[kk], 0.5));
    out.index = k;
    return out;
}

std::vector<std::string> series_property_failures(int max_order, std::uint64_t seed) {
    std::vector<std::string> fails;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> cen(-1.5, 1.5);

    const auto fail = [&](int M, const std::string& msg) {
        fails.push_back("M=" + std::to_string(M) + ": " + msg);
    };
    const auto random_series = [&](double center, int order, int valid) {
        TruncatedSeries s;
        s.center = center;
        s.valid = valid;
        s.a.resize(static_cast<std::size_t>(order) + 1);
        for (auto& v : s.a) v = coef(rng);
        return s;
    };
    const auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };
    const auto bookkeeping_ok = [](const TruncatedSeries& s) {
        return 0 <= s.valid && s.valid <= s.order();
    };

    for (int M = 0; M <= max_order; ++M) {
        std::uniform_int_distribution<int> vd(0, M);
        for (int rep = 0; rep < 4; ++rep) {
            const double center = cen(rng);
            const auto x = random_series(center, M, vd(rng));
            const auto y = random_series(center, M, vd(rng));
            const auto z = random_series(center, M, vd(rng));

            // --- addition: bitwise commutative, valid = min ---
            const auto xy = series::add(x, y);
            const auto yx = series::add(y, x);
            if (!bookkeeping_ok(xy)) fail(M, "add breaks valid bookkeeping");
            if (xy.valid != std::min(x.valid, y.valid)) fail(M, "add valid != min of inputs");
            for (int k = 0; k <= xy.order(); ++k) {
                if (xy.a[k] != yx.a[k]) {
                    fail(M, "add not commutative");
                    break;
                }
            }

            // --- multiplication: commutative within rounding; bookkeeping ---
            const auto m1 = series::cauchy_mul(x, y);
            const auto m2 = series::cauchy_mul(y, x);
            if (!bookkeeping_ok(m1)) fail(M, "mul breaks valid bookkeeping");
            if (m1.valid != std::min(x.valid, y.valid) || m1.order() != m1.valid) {
                fail(M, "mul result must have order == valid == min input valid");
            }
            for (int k = 0; k <= m1.valid; ++k) {
                if (!near(m1.a[k], m2.a[k], 1e-12 * std::max(1.0, std::abs(m1.a[k])))) {
                    fail(M, "mul not commutative within rounding");
                    break;
                }
            }

            // --- associativity and distributivity within rounding ---
            const auto as1 = series::cauchy_mul(series::cauchy_mul(x, y), z);
            const auto as2 = series::cauchy_mul(x, series::cauchy_mul(y, z));
            if (as1.valid != as2.valid) fail(M, "associativity valid mismatch");
            for (int k = 0; k <= std::min(as1.valid, as2.valid); ++k) {
                if (!near(as1.a[k], as2.a[k], 1e-10 * std::max(1.0, std::abs(as1.a[k])))) {
                    fail(M, "mul not associative within rounding");
                    break;
                }
            }
            const auto di1 = series::cauchy_mul(x, series::add(y, z));
            const auto di2 = series::add(series::cauchy_mul(x, y), series::cauchy_mul(x, z));
            if (di1.valid != di2.valid) fail(M, "distributivity valid mismatch");
            for (int k = 0; k <= std::min(di1.valid, di2.valid); ++k) {
                if (!near(di1.a[k], di2.a[k], 1e-10 * std::max(1.0, std::abs(di1.a[k])))) {
                    fail(M, "mul not distributive within rounding");
                    break;
                }
            }

            // --- identity and annihilator ---
            const auto one = series::make_constant(1.0, center, M);
            const auto idm = series::cauchy_mul(x, one);
            for (int k = 0; k <= idm.valid; ++k) {
                if (idm.a[k] != x.a[k]) {
                    fail(M, "mul by constant one changes coefficients");
                    break;
                }
            }
            const auto zero = series::make_constant(0.0, center, M);
            const auto ann = series::cauchy_mul(x, zero);
            for (int k = 0; k <= ann.valid; ++k) {
                if (ann.a[k] != 0.0) {
                    fail(M, "mul by constant zero not zero");
                    break;
                }
            }

            // --- scale: counted, exact per coefficient, valid preserved ---
            const auto sc = series::scale(x, 3.0);
            if (sc.valid != x.valid || sc.order() != x.order()) {
                fail(M, "scale changes bookkeeping");
            }
            for (int k = 0; k <= sc.order(); ++k) {
                if (sc.a[k] != 3.0 * x.a[k]) {
                    fail(M, "scale coefficient mismatch");
                    break;
                }
            }

            // --- Leibniz rule ---
            if (std::min(x.valid, y.valid) >= 1) {
                const auto lhs = series::differentiate(series::cauchy_mul(x, y));
                const auto rhs =
                    series::add(series::cauchy_mul(series::differentiate(x), y),
                                series::cauchy_mul(x, series::differentiate(y)));
                if (lhs.valid != rhs.valid) fail(M, "Leibniz valid mismatch");
                for (int k = 0; k <= std::min(lhs.valid, rhs.valid); ++k) {
                    if (!near(lhs.a[k], rhs.a[k], 1e-10 * std::max(1.0, std::abs(lhs.a[k])))) {
                        fail(M, "Leibniz rule violated");
                        break;
                    }
                }
            }

            // --- differentiation bookkeeping ---
            if (x.valid >= 1) {
                const auto dx = series::differentiate(x);
                if (dx.valid != x.valid - 1 || dx.order() != x.order() - 1) {
                    fail(M, "differentiate must drop order and valid by one");
                }
                for (int k = 0; k + 1 <= x.order(); ++k) {
                    if (dx.a[k] != (k + 1) * x.a[k + 1]) {
                        fail(M, "differentiate coefficient mismatch");
                        break;
                    }
                }
            }

            // --- evaluation at the center reproduces a_0 ---
            if (series::eval(x, center) != x.a[0]) fail(M, "eval at center != a_0");
        }
    }

    // --- elementary-function accuracy at the top order ---
    // The widest test offset (0.25) against the nearest tanh pole
    // (pi/(2*sqrt(3)) from a real center) converges like 0.276^(M+1), so
    // the 1e-10 tolerance needs M >= 18; use 24 for margin.
    const int M = std::max(max_order, 24);
    for (double s : {1.0, std::sqrt(3.0)}) {
        for (double c0 : {-2.0, -0.7, 0.0, 1.3}) {
            const auto ts = series::tanh_series(c0, s, M);
            for (double d : {-0.25, -0.1, 0.05, 0.25}) {
                const double got = series::eval(ts, c0 + d);
                const double want = std::tanh(s * (c0 + d));
                if (!near(got, want, 1e-10)) {
                    fail(M, "tanh series inaccurate at offset " + std::to_string(d));
                }
            }
        }
    }
    for (double c0 : {-2.0, -0.7, 0.0, 1.3}) {
        const auto ls = series::logistic_series(c0, M);
        for (double d : {-0.25, -0.1, 0.05, 0.25}) {
            const double got = series::eval(ls, c0 + d);
            const double want = 1.0 / (1.0 + std::exp(c0 + d));
            if (!near(got, want, 1e-10)) {
                fail(M, "logistic series inaccurate at offset " + std::to_string(d));
            }
        }
    }
    for (int m : {0, 1, 3, 6}) {
        for (double c0 : {-1.2, 0.0, 0.8}) {
            const auto ms = series::monomial_spectrum(m, 2, 2, c0, M);
            for (double d : {-0.25, 0.25}) {
                const double got = series::eval(ms, c0 + d);
                const double want = std::pow(c0 + d, m);
                if (!near(got, want, 1e-10 * std::max(1.0, std::abs(want)))) {
                    fail(M, "monomial series inaccurate");
                }
            }
        }
    }

    return fails;
}

}  // namespace fde::testing
