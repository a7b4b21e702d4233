#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

namespace rauzy4 {

/// Closed interval [lo, hi] of reals with outward-rounded MPFR endpoints.
/// Used wherever a comparison or a floor must be certified rather than
/// trusted to double rounding.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_int(long v, mpfr_prec_t prec);
    static Interval from_double(double v, mpfr_prec_t prec);
    /// Tight enclosure of a decimal literal such as "2", "-0.5", "1e-3".
    static Interval from_decimal(const std::string& text, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    double lower() const;  // rounded down
    double upper() const;  // rounded up
    double midpoint() const;
    double width() const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // throws if o contains 0
    Interval abs() const;
    Interval sqrt() const;  // throws if any part is negative
    Interval square() const;

    bool contains_zero() const;
    /// -1, 0 (zero or undecided), +1.
    int sign() const;
    /// Certified strict comparisons; false means "not provable", not "false".
    bool certainly_less(const Interval& o) const;
    bool certainly_greater(const Interval& o) const;
    /// Floor if both endpoints agree on it.
    std::optional<long> floor() const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_raw() { return lo_; }
    mpfr_t& hi_raw() { return hi_; }

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/// Point of R x C with interval coordinates; enough complex arithmetic for
/// evaluating elements of Z[alpha] and their moduli.
struct ComplexInterval {
    Interval re, im;

    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Interval abs2() const { return re.square() + im.square(); }
    Interval abs() const { return abs2().sqrt(); }
};

}  // namespace rauzy4
