#include "rauzy4/zalpha.hpp"

#include <sstream>
#include <stdexcept>

namespace rauzy4 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("ZAlphaInt coordinate overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("ZAlphaInt coordinate overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

}  // namespace

std::string ZAlphaInt::str() const {
    std::ostringstream os;
    os << '(' << c0 << ',' << c1 << ',' << c2 << ',' << c3 << ')';
    return os.str();
}

ZAlphaInt add(const ZAlphaInt& a, const ZAlphaInt& b) {
    return {checked_add(a.c0, b.c0), checked_add(a.c1, b.c1),
            checked_add(a.c2, b.c2), checked_add(a.c3, b.c3)};
}

ZAlphaInt sub(const ZAlphaInt& a, const ZAlphaInt& b) {
    return {checked_sub(a.c0, b.c0), checked_sub(a.c1, b.c1),
            checked_sub(a.c2, b.c2), checked_sub(a.c3, b.c3)};
}

ZAlphaInt neg(const ZAlphaInt& a) {
    return {checked_neg(a.c0), checked_neg(a.c1), checked_neg(a.c2), checked_neg(a.c3)};
}

ZAlphaInt mul_alpha(const ZAlphaInt& a) {
    return {a.c3, checked_add(a.c0, a.c3), checked_add(a.c1, a.c3),
            checked_add(a.c2, a.c3)};
}

ZAlphaInt mul_alpha_inv(const ZAlphaInt& a) {
    return {checked_sub(a.c1, a.c0), checked_sub(a.c2, a.c0),
            checked_sub(a.c3, a.c0), a.c0};
}

ZAlphaInt mul_alpha_pow(const ZAlphaInt& a, int k) {
    ZAlphaInt r = a;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i)
        r = k >= 0 ? mul_alpha(r) : mul_alpha_inv(r);
    return r;
}

ZAlphaInt alpha_pow(int k) {
    return mul_alpha_pow(ZAlphaInt{1, 0, 0, 0}, k);
}

ZAlphaInt decode_annexe_state(const std::string& code) {
    std::string body = code;
    bool negate = false;
    if (!body.empty() && body.front() == 'm') {
        negate = true;
        body.erase(body.begin());
    }
    if (body.size() != 7)
        throw std::invalid_argument("state label must have 7 digit positions: " + code);
    ZAlphaInt v;
    for (int i = 0; i < 7; ++i) {
        char ch = body[static_cast<std::size_t>(i)];
        if (ch == '1')
            v = add(v, alpha_pow(i - 3));
        else if (ch != '0')
            throw std::invalid_argument("state label digits must be 0 or 1: " + code);
    }
    return negate ? neg(v) : v;
}

}  // namespace rauzy4
