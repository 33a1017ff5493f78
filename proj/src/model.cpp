#include "fde/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fde::model {

using series::TruncatedSeries;

namespace {

void validate_common(int terms, int guard) {
    if (terms < 1) throw std::invalid_argument("term count must be at least 1");
    if (guard < 0) throw std::invalid_argument("guard must be nonnegative");
}

}  // namespace

std::string_view kind_name(Kind k) {
    return k == Kind::TanhWave ? "tanh" : "logistic";
}

Kind parse_kind(std::string_view name) {
    if (name == "tanh") return Kind::TanhWave;
    if (name == "logistic") return Kind::LogisticFront;
    throw std::invalid_argument("unknown problem \"" + std::string(name) +
                                "\" (expected tanh or logistic)");
}

Problem make_tanh_wave(double c, int terms, int guard) {
    validate_common(terms, guard);
    if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("wave speed must be finite and nonnegative");
    }
    return Problem{Kind::TanhWave, c, terms, guard};
}

Problem make_logistic_front(int terms, int guard) {
    validate_common(terms, guard);
    return Problem{Kind::LogisticFront, 0.0, terms, guard};
}

series::TruncatedSeries initial_condition(const Problem& p, double center, int M) {
    if (M < 0) throw std::invalid_argument("order must be nonnegative");
    if (p.kind == Kind::TanhWave) {
        if (!(p.c >= 0.0)) throw std::invalid_argument("wave speed must be nonnegative");
        const double r = std::sqrt(p.c);
        return series::scale(series::tanh_series(center, r, M), -r);
    }
    return series::add(series::make_constant(-0.5, center, M),
                       series::logistic_series(center, M));
}

series::TruncatedSeries convolved_nonlinearity(std::span<const TruncatedSeries> seq, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= seq.size()) {
        throw std::invalid_argument("nonlinearity index out of range");
    }
    int min_valid = seq[0].valid;
    for (int i = 1; i <= k; ++i) min_valid = std::min(min_valid, seq[i].valid);
    if (min_valid < 2) {
        throw std::runtime_error("derivative budget exhausted at k=" + std::to_string(k) +
                                 " (valid_order " + std::to_string(min_valid) + " < 2)");
    }

    std::vector<TruncatedSeries> d1, d2;
    d1.reserve(k + 1);
    d2.reserve(k + 1);
    for (int i = 0; i <= k; ++i) {
        d1.push_back(series::differentiate(seq[i]));
        d2.push_back(series::differentiate(d1.back()));
    }

    // Triple convolution grouped through the pair sums S2_j = sum_{r+s=j} U_r U_s,
    // identical termwise to the flat sum over r+s+l=k.
    TruncatedSeries term1;
    bool have1 = false;
    for (int j = 0; j <= k; ++j) {
        TruncatedSeries s2;
        bool have2 = false;
        for (int r = 0; r <= j; ++r) {
            TruncatedSeries prod = series::cauchy_mul(seq[r], seq[j - r]);
            s2 = have2 ? series::add(s2, prod) : std::move(prod);
            have2 = true;
        }
        TruncatedSeries contrib = series::cauchy_mul(s2, d1[k - j]);
        term1 = have1 ? series::add(term1, contrib) : std::move(contrib);
        have1 = true;
    }

    TruncatedSeries term2;
    TruncatedSeries term3;
    for (int r = 0; r <= k; ++r) {
        TruncatedSeries p2 = series::cauchy_mul(d1[r], d1[k - r]);
        TruncatedSeries p3 = series::cauchy_mul(seq[r], d2[k - r]);
        if (r == 0) {
            term2 = std::move(p2);
            term3 = std::move(p3);
        } else {
            term2 = series::add(term2, p2);
            term3 = series::add(term3, p3);
        }
    }

    return series::add(series::add(series::scale(term1, -2.0), term2),
                       series::scale(term3, 0.5));
}

double exact_u(const Problem& p, double x, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
    if (p.kind == Kind::TanhWave) {
        if (x > p.c * t) return 0.0;
        const double r = std::sqrt(p.c);
        return -r * std::tanh(r * (x - p.c * t));
    }
    return -0.5 + 1.0 / (1.0 + std::exp(x - t / 4.0));
}

double exact_A(double x, double t, double c) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
    if (!(c > 0.0)) throw std::invalid_argument("wave speed must be positive");
    if (x > c * t) return 0.0;
    const double th = std::tanh(std::sqrt(c) * (x - c * t));
    return c * th * th;
}

double pde_residual(const std::function<double(double, double)>& u_eval, double x, double t,
                    double h) {
    if (!(h > 0.0)) throw std::invalid_argument("stencil spacing must be positive");
    const double u0 = u_eval(x, t);
    const double up = u_eval(x + h, t);
    const double um = u_eval(x - h, t);
    const double tp = u_eval(x, t + h);
    const double tm = u_eval(x, t - h);
    for (double v : {u0, up, um, tp, tm}) {
        if (!std::isfinite(v)) throw std::runtime_error("non-finite stencil value in residual");
    }
    const double ut = (tp - tm) / (2.0 * h);
    const double ux = (up - um) / (2.0 * h);
    const double uxx = (up - 2.0 * u0 + um) / (h * h);
    return ut + 2.0 * u0 * u0 * ux - ux * ux - 0.5 * u0 * uxx;
}

}  // namespace fde::model
