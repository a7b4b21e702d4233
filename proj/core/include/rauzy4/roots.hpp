#pragma once

#include "rauzy4/interval.hpp"
#include "rauzy4/zalpha.hpp"

namespace rauzy4 {

/// Certified enclosures of the roots of P(x) = x^4 - x^3 - x^2 - x - 1:
/// the Pisot root beta1 > 1, the real conjugate beta2 in (-1, 0), and the
/// complex conjugate pair beta3, conj(beta3) inside the unit disc.
struct RootData {
    Interval beta1;
    Interval beta2;
    Interval beta3_re;
    Interval beta3_im;  // positive imaginary part

    ComplexInterval beta3() const { return {beta3_re, beta3_im}; }
};

/// Computes the enclosures at the given working precision.  beta1 and
/// beta2 come from interval bisection; beta3 is derived from the exact
/// relations Re(beta3) = (1 - beta1 - beta2)/2 and
/// |beta3|^2 = -1/(beta1*beta2).
RootData compute_roots(mpfr_prec_t prec);

/// v evaluated at beta1 (the expanding direction).
Interval eval_beta1(const ZAlphaInt& v, const RootData& roots);

/// v evaluated at beta2 (the real contracting direction).
Interval eval_beta2(const ZAlphaInt& v, const RootData& roots);

/// v evaluated at beta3 (the complex contracting direction).
ComplexInterval eval_beta3(const ZAlphaInt& v, const RootData& roots);

/// The contracting embedding v -> (v(beta2), v(beta3)) in R x C.
struct EmbeddedPoint {
    double r;
    double z_re;
    double z_im;
};

EmbeddedPoint embed(const ZAlphaInt& v, const RootData& roots);

}  // namespace rauzy4
