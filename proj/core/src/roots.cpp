#include "rauzy4/roots.hpp"

#include <stdexcept>

namespace rauzy4 {

namespace {

// P(x) = x^4 - x^3 - x^2 - x - 1 evaluated on an interval.
Interval poly(const Interval& x) {
    mpfr_prec_t p = x.precision();
    Interval one = Interval::from_int(1, p);
    // Horner: ((x - 1) x - 1) x - 1) x - 1
    Interval r = x - one;
    r = r * x - one;
    r = r * x - one;
    r = r * x - one;
    return r;
}

// Bisects for the unique root of P in [a, b], where P has opposite certified
// signs at the endpoints.  Endpoints stay dyadic so every sign evaluation is
// exact-interval and therefore certified.
Interval bisect_root(double a, double b, mpfr_prec_t prec) {
    Interval lo = Interval::from_double(a, prec);
    Interval hi = Interval::from_double(b, prec);
    int sign_lo = poly(lo).sign();
    int sign_hi = poly(hi).sign();
    if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi)
        throw std::logic_error("bisection bracket does not straddle a root");

    // prec + 8 halvings shrink the bracket well below the representable
    // resolution at the working precision.
    for (mpfr_prec_t i = 0; i < prec + 8; ++i) {
        Interval mid(prec);
        mpfr_add(mid.lo_raw(), lo.lo_raw(), hi.lo_raw(), MPFR_RNDN);
        mpfr_div_2ui(mid.lo_raw(), mid.lo_raw(), 1, MPFR_RNDN);
        mpfr_set(mid.hi_raw(), mid.lo_raw(), MPFR_RNDN);
        int s = poly(mid).sign();
        if (s == 0) {
            // Undecidable at this precision: return the current bracket.
            break;
        }
        if (s == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    Interval r(prec);
    mpfr_set(r.lo_raw(), lo.lo_raw(), MPFR_RNDD);
    mpfr_set(r.hi_raw(), hi.hi_raw(), MPFR_RNDU);
    return r;
}

}  // namespace

RootData compute_roots(mpfr_prec_t prec) {
    Interval beta1 = bisect_root(1.0, 2.0, prec);
    Interval beta2 = bisect_root(-1.0, 0.0, prec);

    Interval one = Interval::from_int(1, prec);
    Interval two = Interval::from_int(2, prec);
    // Sum of roots = 1 and product of roots = -1 give the complex pair.
    Interval re = (one - beta1 - beta2) / two;
    Interval mod2 = -(one / (beta1 * beta2));
    Interval im = (mod2 - re.square()).sqrt();
    return RootData{std::move(beta1), std::move(beta2), std::move(re), std::move(im)};
}

Interval eval_beta1(const ZAlphaInt& v, const RootData& roots) {
    mpfr_prec_t p = roots.beta1.precision();
    Interval r = Interval::from_int(v.c3, p);
    r = r * roots.beta1 + Interval::from_int(v.c2, p);
    r = r * roots.beta1 + Interval::from_int(v.c1, p);
    r = r * roots.beta1 + Interval::from_int(v.c0, p);
    return r;
}

Interval eval_beta2(const ZAlphaInt& v, const RootData& roots) {
    mpfr_prec_t p = roots.beta2.precision();
    Interval r = Interval::from_int(v.c3, p);
    r = r * roots.beta2 + Interval::from_int(v.c2, p);
    r = r * roots.beta2 + Interval::from_int(v.c1, p);
    r = r * roots.beta2 + Interval::from_int(v.c0, p);
    return r;
}

ComplexInterval eval_beta3(const ZAlphaInt& v, const RootData& roots) {
    mpfr_prec_t p = roots.beta3_re.precision();
    Interval zero = Interval::from_int(0, p);
    ComplexInterval b = roots.beta3();
    ComplexInterval r{Interval::from_int(v.c3, p), zero};
    r = r * b + ComplexInterval{Interval::from_int(v.c2, p), zero};
    r = r * b + ComplexInterval{Interval::from_int(v.c1, p), zero};
    r = r * b + ComplexInterval{Interval::from_int(v.c0, p), zero};
    return r;
}

EmbeddedPoint embed(const ZAlphaInt& v, const RootData& roots) {
    Interval r = eval_beta2(v, roots);
    ComplexInterval z = eval_beta3(v, roots);
    return {r.midpoint(), z.re.midpoint(), z.im.midpoint()};
}

}  // namespace rauzy4
