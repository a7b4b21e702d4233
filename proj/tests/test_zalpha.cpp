#include "rauzy4/zalpha.hpp"

#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

using namespace rauzy4;

TEST_CASE("ring operations are componentwise and exact") {
    ZAlphaInt a{1, -2, 3, -4}, b{5, 6, -7, 8};
    CHECK(add(a, b) == ZAlphaInt{6, 4, -4, 4});
    CHECK(sub(a, b) == ZAlphaInt{-4, -8, 10, -12});
    CHECK(neg(a) == ZAlphaInt{-1, 2, -3, 4});
    CHECK(add(a, neg(a)).is_zero());
}

TEST_CASE("mul_alpha matches the reduction alpha^4 = 1 + alpha + alpha^2 + alpha^3") {
    // (c0 + c1 a + c2 a^2 + c3 a^3) * a = c3 a^4 + c0 a + c1 a^2 + c2 a^3.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-50, 50);
    for (int i = 0; i < 200; ++i) {
        ZAlphaInt v{dist(rng), dist(rng), dist(rng), dist(rng)};
        ZAlphaInt expect{v.c3, v.c0 + v.c3, v.c1 + v.c3, v.c2 + v.c3};
        CHECK(mul_alpha(v) == expect);
    }
}

TEST_CASE("mul_alpha and mul_alpha_inv are inverse bijections") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        ZAlphaInt v{dist(rng), dist(rng), dist(rng), dist(rng)};
        CHECK(mul_alpha_inv(mul_alpha(v)) == v);
        CHECK(mul_alpha(mul_alpha_inv(v)) == v);
    }
}

TEST_CASE("alpha powers") {
    CHECK(alpha_pow(0) == ZAlphaInt{1, 0, 0, 0});
    CHECK(alpha_pow(1) == ZAlphaInt{0, 1, 0, 0});
    CHECK(alpha_pow(4) == ZAlphaInt{1, 1, 1, 1});
    CHECK(alpha_pow(-1) == ZAlphaInt{-1, -1, -1, 1});
    for (int k = -6; k <= 6; ++k)
        CHECK(mul_alpha_pow(alpha_pow(k), -k) == ZAlphaInt{1, 0, 0, 0});
}

TEST_CASE("exceptional-value identities hold exactly") {
    ZAlphaInt lhs = add(add(alpha_pow(-3), alpha_pow(-2)), add(alpha_pow(0), alpha_pow(3)));
    CHECK(lhs == ZAlphaInt{1, 2, 1, 0});
    ZAlphaInt lhs2 = add(add(alpha_pow(-2), alpha_pow(-1)), alpha_pow(1));
    CHECK(lhs2 == ZAlphaInt{-1, 0, 1, 0});
}

TEST_CASE("decode_annexe_state") {
    CHECK(decode_annexe_state("0000000").is_zero());
    CHECK(decode_annexe_state("0001000") == ZAlphaInt{1, 0, 0, 0});
    CHECK(decode_annexe_state("0000001") == alpha_pow(3));
    CHECK(decode_annexe_state("1000000") == alpha_pow(-3));
    CHECK(decode_annexe_state("0110100") ==
          add(add(alpha_pow(-2), alpha_pow(-1)), alpha_pow(1)));
    CHECK(decode_annexe_state("m0001000") == ZAlphaInt{-1, 0, 0, 0});
    CHECK_THROWS(decode_annexe_state("00000"));
    CHECK_THROWS(decode_annexe_state("000000x"));
}

TEST_CASE("coordinate overflow throws instead of wrapping") {
    ZAlphaInt big{std::numeric_limits<std::int64_t>::max(), 0, 0, 0};
    CHECK_THROWS_AS(add(big, ZAlphaInt{1, 0, 0, 0}), std::overflow_error);
    ZAlphaInt small{std::numeric_limits<std::int64_t>::min(), 0, 0, 0};
    CHECK_THROWS_AS(neg(small), std::overflow_error);
}
