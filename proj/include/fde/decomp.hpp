#pragma once

// Decomposition solvers for the drainage equation
//
//     u_t + 2 u^2 u_x - (u_x)^2 - (1/2) u u_xx = 0.
//
// Both methods split the solution as u = sum_k u_k(x, t) and feed the
// nonlinearity N(u) = -2 u^2 u_x + (u_x)^2 + (1/2) u u_xx through its
// polynomial expansion A_k (the coefficient of lambda^k in N(sum u_i
// lambda^i)).  The direct method integrates A_k in t to obtain u_{k+1};
// the transform method routes the same A_k through a factored Laplace
// image, divides by the transform variable, and inverts.  Components are
// stored as polynomials in t whose coefficients are truncated x-series
// about a common center.

#include <map>
#include <span>
#include <vector>

#include "fde/model.hpp"
#include "fde/series.hpp"

namespace fde::decomp {

/// One component u_k of the decomposition: a polynomial in t whose
/// coefficients are truncated x-series about `center`.  `terms` maps the
/// t-power to its x-series coefficient; absent powers are zero.
struct TPolyComponent {
    int index = 0;
    double center = 0.0;
    std::map<int, series::TruncatedSeries> terms;
};

/// Sum of two components (termwise series addition; t-powers merge).
TPolyComponent tp_add(const TPolyComponent& a, const TPolyComponent& b);

/// Product of two components: t-powers add, series coefficients multiply.
/// Counts one series multiplication per pair of terms.
TPolyComponent tp_mul(const TPolyComponent& a, const TPolyComponent& b);

/// x-derivative applied to every series coefficient.
TPolyComponent tp_dx(const TPolyComponent& a);

/// Scalar multiple of every series coefficient (counted per term).
TPolyComponent tp_scale(const TPolyComponent& a, double alpha);

/// Evaluate the component at (x = its center, t): sum over t-powers in
/// ascending order of coefficient(center) * t^n.
double tp_eval_at_center(const TPolyComponent& a, double t);

/// Polynomial expansion coefficient A_k of the drainage nonlinearity for
/// the component sequence `us` (which must cover indices 0..k).  Throws
/// std::invalid_argument for out-of-range k and std::runtime_error when
/// any participating series has fewer than two valid derivative orders
/// left.
TPolyComponent adomian_polynomial(std::span<const TPolyComponent> us, int k);

/// Next component by direct time integration: u_{k+1} = integral of A_k
/// from 0 to t, where k is the index of the last component in `us`.
TPolyComponent adm_next_component(std::span<const TPolyComponent> us);

/// Factored Laplace image of a t-polynomial component.  Entry e of
/// `terms` holds the t-domain coefficient of t^(e-1); the actual image
/// coefficient of s^(-e) is that series times (e-1)!.  Keeping the
/// factorial implicit lets transform -> inverse round-trip bitwise.
struct LaplaceImage {
    double center = 0.0;
    std::map<int, series::TruncatedSeries> terms;
};

/// Transform: t^n maps to exponent n + 1.  No arithmetic is performed.
LaplaceImage laplace_of_tpoly(const TPolyComponent& a);

/// The materialized image coefficient of s^(-exponent), i.e. the stored
/// series scaled by (exponent-1)!.  Throws std::invalid_argument if the
/// exponent is absent.
series::TruncatedSeries coefficient(const LaplaceImage& img, int exponent);

/// Multiply the image by 1/s: exponent e moves to e + 1 and the stored
/// series is rebased by 1/e (one counted scale per term).
LaplaceImage mul_inverse_s(const LaplaceImage& img);

/// Invert: exponent e maps back to t^(e-1), returning the stored series
/// unchanged.  Throws std::invalid_argument if any exponent is < 1.
TPolyComponent inverse_laplace(const LaplaceImage& img);

/// Next component via the transform route: u_{k+1} is the inverse image
/// of L[A_k] / s.  Produces the same coefficients as the direct route.
TPolyComponent ldm_next_component(std::span<const TPolyComponent> us);

/// Partial sum over all components evaluated at (their center, t).
double assemble_partial_sum(std::span<const TPolyComponent> us, double t);

/// Build components u_0..u_terms for the problem about `center`, using
/// the transform route when `via_laplace` is true.
std::vector<TPolyComponent> build_components(const model::Problem& p, double center,
                                             bool via_laplace);

}  // namespace fde::decomp
