#include "rauzy4/greedy.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/words.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

using namespace rauzy4;

namespace {

// Independent long-double greedy oracle, safe away from floor boundaries.
std::vector<int> oracle_greedy(long double x, int n, int* start) {
    const long double beta = 1.9275619754829253043L;
    int k = static_cast<int>(std::floor(std::log(x) / std::log(beta)));
    if (std::pow(beta, k + 1) <= x) ++k;
    if (std::pow(beta, k) > x) --k;
    *start = k;
    std::vector<int> digits;
    long double r = x;
    for (int i = 0; i < n; ++i) {
        long double p = std::pow(beta, static_cast<long double>(k - i));
        int d = r >= p ? 1 : 0;
        digits.push_back(d);
        if (d) r -= p;
    }
    return digits;
}

}  // namespace

TEST_CASE("greedy expansion of 1") {
    DigitString d = greedy_expand("1", 4);
    CHECK(d.start_index == 0);
    CHECK(d.digits == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("greedy expansion agrees with a long-double oracle") {
    // Fractional decimals never land exactly on digit boundaries (those are
    // algebraic integers), so the floating oracle is safe here.
    for (const char* lit : {"0.5", "12.25", "0.037", "2.5", "6.75"}) {
        int start = 0;
        std::vector<int> expect = oracle_greedy(std::strtold(lit, nullptr), 12, &start);
        DigitString d = greedy_expand(lit, 12);
        CHECK(d.start_index == start);
        CHECK(d.digits == expect);
    }
}

TEST_CASE("integer input routes through the exact expansion") {
    // 2 - beta equals beta^-4 exactly, so the digit at index -4 must be
    // taken; a purely numeric floor could never certify this boundary.
    for (std::int64_t n : {2, 3, 7, 100}) {
        DigitString via_decimal = greedy_expand(std::to_string(n), 12);
        DigitString exact = greedy_expand_exact(ZAlphaInt{n, 0, 0, 0}, 12);
        CHECK(via_decimal == exact);
    }
    DigitString two = greedy_expand("2", 6);
    CHECK(two.start_index == 1);
    CHECK(two.digits == std::vector<int>{1, 0, 0, 0, 0, 1});
}

TEST_CASE("greedy output is always admissible with leading digit 1") {
    for (const char* lit : {"1.0001", "2.718281828", "3.14159", "55.5"}) {
        DigitString d = greedy_expand(lit, 40);
        CHECK(d.digits.front() == 1);
        CHECK(is_admissible(d));
    }
}

TEST_CASE("nonpositive input is rejected") {
    CHECK_THROWS_AS(greedy_expand("-1", 4), std::invalid_argument);
    CHECK_THROWS_AS(greedy_expand("0", 4), std::invalid_argument);
}

namespace {

ZAlphaInt reconstruct(const DigitString& d) {
    ZAlphaInt v;
    for (std::size_t i = 0; i < d.digits.size(); ++i)
        if (d.digits[i])
            v = add(v, alpha_pow(d.start_index - static_cast<int>(i)));
    return v;
}

}  // namespace

TEST_CASE("exact expansion of integer beta-polynomials terminates and reconstructs") {
    RootData roots = compute_roots(128);
    DigitString sq = finite_expansion_zbeta(alpha_pow(2), roots);
    CHECK(sq.start_index == 2);
    CHECK(sq.digits.front() == 1);
    CHECK(reconstruct(sq) == alpha_pow(2));
    // beta + 1: greedy gives 1 at index 1, remainder 1, digit at 0.
    DigitString d = finite_expansion_zbeta(ZAlphaInt{1, 1, 0, 0}, roots);
    CHECK(d.start_index == 1);
    CHECK(reconstruct(d) == ZAlphaInt{1, 1, 0, 0});
    CHECK(is_admissible(d));
}

TEST_CASE("exact expansion matches the defining relation beta^4 = beta^3+beta^2+beta+1") {
    RootData roots = compute_roots(128);
    ZAlphaInt rhs = add(add(alpha_pow(3), alpha_pow(2)), add(alpha_pow(1), alpha_pow(0)));
    DigitString d = finite_expansion_zbeta(rhs, roots);
    CHECK(d.start_index == 4);
    CHECK(reconstruct(d) == rhs);
}

TEST_CASE("greedy_expand_exact truncates the infinite expansion") {
    RootData roots = compute_roots(128);
    DigitString full = finite_expansion_zbeta(ZAlphaInt{1, 1, 0, 0}, roots);
    DigitString trunc = greedy_expand_exact(ZAlphaInt{1, 1, 0, 0}, 2);
    CHECK(trunc.start_index == full.start_index);
    CHECK(std::vector<int>(full.digits.begin(), full.digits.begin() + 2) == trunc.digits);
}
