#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace rauzy4 {

/// Element of Z[alpha] written in the basis {1, alpha, alpha^2, alpha^3},
/// where alpha is the root system of x^4 - x^3 - x^2 - x - 1.  All
/// arithmetic is exact; coordinate overflow throws instead of wrapping.
struct ZAlphaInt {
    std::int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;

    constexpr ZAlphaInt() = default;
    constexpr ZAlphaInt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
        : c0(a), c1(b), c2(c), c3(d) {}

    friend constexpr bool operator==(const ZAlphaInt&, const ZAlphaInt&) = default;
    friend constexpr auto operator<=>(const ZAlphaInt&, const ZAlphaInt&) = default;

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0; }
    std::array<std::int64_t, 4> coords() const { return {c0, c1, c2, c3}; }
    std::string str() const;
};

ZAlphaInt add(const ZAlphaInt& a, const ZAlphaInt& b);
ZAlphaInt sub(const ZAlphaInt& a, const ZAlphaInt& b);
ZAlphaInt neg(const ZAlphaInt& a);

/// alpha * a, reduced with alpha^4 = 1 + alpha + alpha^2 + alpha^3.
ZAlphaInt mul_alpha(const ZAlphaInt& a);

/// alpha^-1 * a; exact since alpha^-1 = alpha^3 - alpha^2 - alpha - 1.
ZAlphaInt mul_alpha_inv(const ZAlphaInt& a);

/// alpha^k * a for any integer k.
ZAlphaInt mul_alpha_pow(const ZAlphaInt& a, int k);

/// alpha^k as an element of Z[alpha].
ZAlphaInt alpha_pow(int k);

/// Parses a 7-character state label over {0,1} giving coefficients of
/// alpha^-3 .. alpha^3, with optional leading 'm' for negation
/// (e.g. "0110100" = alpha^-2 + alpha^-1 + alpha).
ZAlphaInt decode_annexe_state(const std::string& code);

struct ZAlphaHash {
    std::size_t operator()(const ZAlphaInt& a) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t c : a.coords()) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace rauzy4
