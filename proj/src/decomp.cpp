#include "fde/decomp.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fde::decomp {

namespace {

void check_derivative_budget(std::span<const TPolyComponent> us, int k) {
    for (int i = 0; i <= k; ++i) {
        for (const auto& [power, ser] : us[static_cast<std::size_t>(i)].terms) {
            if (ser.valid < 2) {
                throw std::runtime_error(
                    "derivative budget exhausted at k=" + std::to_string(k) +
                    " (valid_order " + std::to_string(ser.valid) + " < 2)");
            }
        }
    }
}

}  // namespace

TPolyComponent tp_add(const TPolyComponent& a, const TPolyComponent& b) {
    TPolyComponent out = a;
    for (const auto& [power, ser] : b.terms) {
        auto it = out.terms.find(power);
        if (it == out.terms.end()) {
            out.terms.emplace(power, ser);
        } else {
            it->second = series::add(it->second, ser);
        }
    }
    return out;
}

TPolyComponent tp_mul(const TPolyComponent& a, const TPolyComponent& b) {
    TPolyComponent out;
    out.index = a.index;
    out.center = a.center;
    for (const auto& [pa, sa] : a.terms) {
        for (const auto& [pb, sb] : b.terms) {
            series::TruncatedSeries prod = series::cauchy_mul(sa, sb);
            auto it = out.terms.find(pa + pb);
            if (it == out.terms.end()) {
                out.terms.emplace(pa + pb, std::move(prod));
            } else {
                it->second = series::add(it->second, prod);
            }
        }
    }
    return out;
}

TPolyComponent tp_dx(const TPolyComponent& a) {
    TPolyComponent out;
    out.index = a.index;
    out.center = a.center;
    for (const auto& [power, ser] : a.terms) {
        out.terms.emplace(power, series::differentiate(ser));
    }
    return out;
}

TPolyComponent tp_scale(const TPolyComponent& a, double alpha) {
    TPolyComponent out;
    out.index = a.index;
    out.center = a.center;
    for (const auto& [power, ser] : a.terms) {
        out.terms.emplace(power, series::scale(ser, alpha));
    }
    return out;
}

double tp_eval_at_center(const TPolyComponent& a, double t) {
    double sum = 0.0;
    int last_power = 0;
    double t_pow = 1.0;
    for (const auto& [power, ser] : a.terms) {
        for (; last_power < power; ++last_power) t_pow *= t;
        sum += series::eval(ser, a.center) * t_pow;
    }
    return sum;
}

TPolyComponent adomian_polynomial(std::span<const TPolyComponent> us, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= us.size()) {
        throw std::invalid_argument("component index k=" + std::to_string(k) +
                                    " is outside the available range");
    }
    check_derivative_budget(us, k);

    std::vector<TPolyComponent> d1;
    std::vector<TPolyComponent> d2;
    d1.reserve(static_cast<std::size_t>(k) + 1);
    d2.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        d1.push_back(tp_dx(us[static_cast<std::size_t>(i)]));
        d2.push_back(tp_dx(d1.back()));
    }

    // Cubic part: sum over i + j + l = k of u_i * u_j * (u_l)_x, grouped
    // through the pair sums S2_j = sum_{r+s=j} u_r u_s.  The grouping is
    // termwise identical to the flat triple sum, and for the t-monomial
    // components this equation produces it follows the same operation
    // sequence as the spectrum recurrence, so the two routes agree to the
    // last bit instead of drifting apart in accumulated rounding.
    TPolyComponent term1;
    bool have1 = false;
    for (int j = 0; j <= k; ++j) {
        TPolyComponent s2;
        bool have2 = false;
        for (int r = 0; r <= j; ++r) {
            TPolyComponent prod = tp_mul(us[static_cast<std::size_t>(r)],
                                         us[static_cast<std::size_t>(j - r)]);
            s2 = have2 ? tp_add(s2, prod) : std::move(prod);
            have2 = true;
        }
        TPolyComponent contrib = tp_mul(s2, d1[static_cast<std::size_t>(k - j)]);
        term1 = have1 ? tp_add(term1, contrib) : std::move(contrib);
        have1 = true;
    }

    // Quadratic parts: (u_x)^2 and u * u_xx convolutions.
    TPolyComponent term2;
    TPolyComponent term3;
    bool have23 = false;
    for (int r = 0; r <= k; ++r) {
        const std::size_t s = static_cast<std::size_t>(k - r);
        TPolyComponent p2 = tp_mul(d1[static_cast<std::size_t>(r)], d1[s]);
        TPolyComponent p3 = tp_mul(us[static_cast<std::size_t>(r)], d2[s]);
        if (have23) {
            term2 = tp_add(term2, p2);
            term3 = tp_add(term3, p3);
        } else {
            term2 = std::move(p2);
            term3 = std::move(p3);
            have23 = true;
        }
    }

    TPolyComponent out =
        tp_add(tp_add(tp_scale(term1, -2.0), term2), tp_scale(term3, 0.5));
    out.index = k;
    out.center = us[0].center;
    return out;
}

TPolyComponent adm_next_component(std::span<const TPolyComponent> us) {
    if (us.empty()) throw std::invalid_argument("component sequence is empty");
    const int k = static_cast<int>(us.size()) - 1;
    TPolyComponent a = adomian_polynomial(us, k);

    TPolyComponent out;
    out.index = k + 1;
    out.center = a.center;
    for (const auto& [power, ser] : a.terms) {
        out.terms.emplace(power + 1, series::scale(ser, 1.0 / (power + 1)));
    }
    return out;
}

LaplaceImage laplace_of_tpoly(const TPolyComponent& a) {
    LaplaceImage img;
    img.center = a.center;
    for (const auto& [power, ser] : a.terms) {
        if (power < 0) {
            throw std::invalid_argument("negative t-power " + std::to_string(power) +
                                        " has no transform");
        }
        img.terms.emplace(power + 1, ser);
    }
    return img;
}

series::TruncatedSeries coefficient(const LaplaceImage& img, int exponent) {
    auto it = img.terms.find(exponent);
    if (it == img.terms.end()) {
        throw std::invalid_argument("image has no term with exponent " +
                                    std::to_string(exponent));
    }
    double factorial = 1.0;
    for (int i = 2; i < exponent; ++i) factorial *= i;
    return series::scale(it->second, factorial);
}

LaplaceImage mul_inverse_s(const LaplaceImage& img) {
    LaplaceImage out;
    out.center = img.center;
    for (const auto& [exponent, ser] : img.terms) {
        out.terms.emplace(exponent + 1, series::scale(ser, 1.0 / exponent));
    }
    return out;
}

TPolyComponent inverse_laplace(const LaplaceImage& img) {
    TPolyComponent out;
    out.center = img.center;
    for (const auto& [exponent, ser] : img.terms) {
        if (exponent < 1) {
            throw std::invalid_argument("image exponent " + std::to_string(exponent) +
                                        " has no polynomial inverse");
        }
        out.terms.emplace(exponent - 1, ser);
    }
    return out;
}

TPolyComponent ldm_next_component(std::span<const TPolyComponent> us) {
    if (us.empty()) throw std::invalid_argument("component sequence is empty");
    const int k = static_cast<int>(us.size()) - 1;
    TPolyComponent a = adomian_polynomial(us, k);
    TPolyComponent out = inverse_laplace(mul_inverse_s(laplace_of_tpoly(a)));
    out.index = k + 1;
    return out;
}

double assemble_partial_sum(std::span<const TPolyComponent> us, double t) {
    double sum = 0.0;
    for (const auto& comp : us) sum += tp_eval_at_center(comp, t);
    return sum;
}

std::vector<TPolyComponent> build_components(const model::Problem& p, double center,
                                             bool via_laplace) {
    std::vector<TPolyComponent> comps;
    comps.reserve(static_cast<std::size_t>(p.terms) + 1);

    TPolyComponent u0;
    u0.index = 0;
    u0.center = center;
    u0.terms.emplace(0, model::initial_condition(p, center, p.order()));
    comps.push_back(std::move(u0));

    for (int k = 0; k < p.terms; ++k) {
        comps.push_back(via_laplace ? ldm_next_component(comps)
                                    : adm_next_component(comps));
    }
    return comps;
}

}  // namespace fde::decomp
