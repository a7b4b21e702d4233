#include "rauzy4/interval.hpp"
#include "rauzy4/roots.hpp"

#include <doctest.h>

#include <cmath>

using namespace rauzy4;

namespace {
constexpr mpfr_prec_t P = 128;
}

TEST_CASE("interval arithmetic encloses the exact result") {
    Interval third = Interval::from_int(1, P) / Interval::from_int(3, P);
    CHECK(third.lower() <= 1.0 / 3.0);
    CHECK(third.upper() >= 1.0 / 3.0);
    CHECK(third.width() > 0);  // 1/3 is not representable, so outward rounding widens
    CHECK(third.width() < 1e-30);

    Interval x = Interval::from_decimal("0.1", P);
    Interval ten = Interval::from_int(10, P);
    Interval one = x * ten;
    CHECK(one.lower() <= 1.0);
    CHECK(one.upper() >= 1.0);
}

TEST_CASE("interval comparisons are certified") {
    Interval a = Interval::from_int(1, P) / Interval::from_int(7, P);
    Interval b = Interval::from_int(1, P) / Interval::from_int(6, P);
    CHECK(a.certainly_less(b));
    CHECK(b.certainly_greater(a));
    CHECK_FALSE(a.certainly_less(a));
    CHECK((a - a).contains_zero());
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK((a - a).sign() == 0);
}

TEST_CASE("division by an interval containing zero throws") {
    Interval z = Interval::from_int(1, P) - Interval::from_int(1, P);
    CHECK_THROWS(Interval::from_int(1, P) / z);
}

TEST_CASE("floor is exact on certified enclosures") {
    Interval x = Interval::from_decimal("2.9999", P);
    REQUIRE(x.floor().has_value());
    CHECK(*x.floor() == 2);
    Interval y = Interval::from_decimal("-0.25", P);
    REQUIRE(y.floor().has_value());
    CHECK(*y.floor() == -1);
}

TEST_CASE("roots match the printed 4-decimal values and satisfy P") {
    RootData roots = compute_roots(192);
    CHECK(roots.beta1.midpoint() == doctest::Approx(1.9275619754829253).epsilon(1e-12));
    CHECK(roots.beta2.midpoint() == doctest::Approx(-0.77480411321543385).epsilon(1e-12));
    CHECK(roots.beta3_re.midpoint() ==
          doctest::Approx(-0.076378931133745725).epsilon(1e-12));
    CHECK(roots.beta3_im.midpoint() == doctest::Approx(0.81470364717038653).epsilon(1e-12));

    // P(beta1) = 0 within the enclosure width.
    auto horner = [](const Interval& x) {
        Interval one = Interval::from_int(1, 192);
        Interval r = x - one;
        r = r * x - one;
        r = r * x - one;
        r = r * x - one;
        return r;
    };
    CHECK(horner(roots.beta1).contains_zero());
    CHECK(horner(roots.beta2).contains_zero());
}

TEST_CASE("beta evaluation respects the defining relation") {
    RootData roots = compute_roots(128);
    // alpha^4 - alpha^3 - alpha^2 - alpha - 1 = 0 evaluated at beta2 and beta3.
    ZAlphaInt rel = sub(alpha_pow(4),
                        add(add(alpha_pow(3), alpha_pow(2)),
                            add(alpha_pow(1), alpha_pow(0))));
    CHECK(rel.is_zero());
    // |beta3|^2 = -1/(beta1 beta2).
    Interval mod2 = roots.beta3().abs2();
    Interval rhs = -(Interval::from_int(1, 128) / (roots.beta1 * roots.beta2));
    CHECK((mod2 - rhs).contains_zero());
}

TEST_CASE("embed is the contracting part of the geometric representation") {
    RootData roots = compute_roots(128);
    EmbeddedPoint one = embed(ZAlphaInt{1, 0, 0, 0}, roots);
    CHECK(one.r == doctest::Approx(1.0));
    CHECK(one.z_re == doctest::Approx(1.0));
    CHECK(one.z_im == doctest::Approx(0.0));
    EmbeddedPoint a = embed(alpha_pow(1), roots);
    CHECK(a.r == doctest::Approx(roots.beta2.midpoint()));
    CHECK(a.z_re == doctest::Approx(roots.beta3_re.midpoint()));
    CHECK(a.z_im == doctest::Approx(roots.beta3_im.midpoint()));
}
