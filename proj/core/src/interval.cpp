#include "rauzy4/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace rauzy4 {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 0);
    mpfr_set_zero(hi_, 0);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        prec_ = o.prec_;
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_int(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_))
        throw std::invalid_argument("bad decimal literal: " + text);
    if (mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU) != 0 &&
        mpfr_nan_p(r.hi_))
        throw std::invalid_argument("bad decimal literal: " + text);
    return r;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const { return 0.5 * (lower() + upper()); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    // min/max over the four endpoint products with directed rounding.
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero())
        throw std::domain_error("interval division by interval containing zero");
    Interval inv(prec_);
    if (mpfr_sgn(o.lo_) > 0) {
        mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    } else {
        mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    }
    return *this * inv;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_set(r.lo_, lo_, MPFR_RNDD);
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 0);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    }
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("interval sqrt of possibly negative value");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::square() const {
    Interval a = abs();
    Interval r(prec_);
    mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool Interval::certainly_less(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::certainly_greater(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) > 0;
}

std::optional<long> Interval::floor() const {
    mpfr_t fl, fh;
    mpfr_init2(fl, prec_);
    mpfr_init2(fh, prec_);
    mpfr_floor(fl, lo_);
    mpfr_floor(fh, hi_);
    std::optional<long> result;
    if (mpfr_cmp(fl, fh) == 0 && mpfr_fits_slong_p(fl, MPFR_RNDD))
        result = mpfr_get_si(fl, MPFR_RNDD);
    mpfr_clear(fl);
    mpfr_clear(fh);
    return result;
}

}  // namespace rauzy4
