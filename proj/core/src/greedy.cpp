#include "rauzy4/greedy.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace rauzy4 {

namespace {

constexpr mpfr_prec_t kInitialPrec = 64;
constexpr mpfr_prec_t kMaxPrec = 4096;

// Thrown internally when a floor or sign is undecidable at the current
// working precision; the driver doubles the precision and retries.
struct PrecisionExhausted {};

const RootData& cached_roots(mpfr_prec_t prec) {
    thread_local std::map<mpfr_prec_t, RootData> cache;
    auto it = cache.find(prec);
    if (it == cache.end())
        it = cache.emplace(prec, compute_roots(prec)).first;
    return it->second;
}

void check_no_1111(const std::vector<int>& digits) {
    if (!is_admissible(digits))
        throw std::logic_error("greedy expansion produced an inadmissible word");
}

DigitString greedy_at_precision(const std::string& x_decimal, int num_digits,
                                mpfr_prec_t prec) {
    const RootData& roots = cached_roots(prec);
    Interval x = Interval::from_decimal(x_decimal, prec);
    int sx = x.sign();
    if (sx < 0 || (sx == 0 && x.upper() <= 0))
        throw std::invalid_argument("greedy_expand requires x > 0: " + x_decimal);
    if (sx == 0) throw PrecisionExhausted{};

    // Leading index k with beta^k <= x < beta^{k+1}, via floor(log x / log beta).
    Interval logx(prec), logb(prec);
    mpfr_log(logx.lo_raw(), x.lo_raw(), MPFR_RNDD);
    mpfr_log(logx.hi_raw(), x.hi_raw(), MPFR_RNDU);
    mpfr_log(logb.lo_raw(), roots.beta1.lo_raw(), MPFR_RNDD);
    mpfr_log(logb.hi_raw(), roots.beta1.hi_raw(), MPFR_RNDU);
    auto k = (logx / logb).floor();
    if (!k) throw PrecisionExhausted{};

    // Certified digit recurrence: r in [0, beta), digit = floor(r).
    Interval r = x;
    Interval bp = Interval::from_int(1, prec);
    for (long i = 0; i < (*k >= 0 ? *k : -*k); ++i)
        bp = *k >= 0 ? bp * roots.beta1 : bp / roots.beta1;
    r = x / bp;

    DigitString out;
    out.start_index = static_cast<int>(*k);
    for (int i = 0; i < num_digits; ++i) {
        auto d = r.floor();
        if (!d || *d < 0 || *d > 1) throw PrecisionExhausted{};
        out.digits.push_back(static_cast<int>(*d));
        r = (r - Interval::from_int(*d, prec)) * roots.beta1;
    }
    check_no_1111(out.digits);
    return out;
}

// Sign of the value of a at beta1, certified: exact zero symbolically,
// otherwise interval refinement (a nonzero algebraic value must resolve).
int sign_at_beta1(const ZAlphaInt& a) {
    if (a.is_zero()) return 0;
    for (mpfr_prec_t prec = kInitialPrec; prec <= kMaxPrec; prec *= 2) {
        int s = eval_beta1(a, cached_roots(prec)).sign();
        if (s != 0) return s;
    }
    throw std::runtime_error("sign undecided at precision cap for " + a.str());
}

// Value of the literal when it denotes an integer ("2", "-3", "100",
// "2.000"); nullopt for anything fractional or non-numeric.
std::optional<std::int64_t> parse_integer_literal(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_begin) return std::nullopt;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] == '0') ++i;
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) return std::nullopt;
    try {
        return std::stoll(text.substr(start));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

DigitString greedy_expand(const std::string& x_decimal, int num_digits) {
    if (num_digits < 1)
        throw std::invalid_argument("num_digits must be >= 1");
    // Integer literals are elements of Z[beta]; their remainders can land
    // exactly on digit boundaries (e.g. 2 - beta = beta^-4), which no
    // finite interval precision can decide.  Route them through the exact
    // symbolic expansion instead.
    if (auto n = parse_integer_literal(x_decimal)) {
        if (*n <= 0)
            throw std::invalid_argument("greedy_expand requires x > 0: " + x_decimal);
        return greedy_expand_exact(ZAlphaInt{*n, 0, 0, 0}, num_digits);
    }
    for (mpfr_prec_t prec = kInitialPrec; prec <= kMaxPrec; prec *= 2) {
        try {
            return greedy_at_precision(x_decimal, num_digits, prec);
        } catch (const PrecisionExhausted&) {
            continue;
        }
    }
    throw std::runtime_error(
        "greedy_expand: floor undecidable at precision cap (input may lie on a "
        "digit boundary): " + x_decimal);
}

DigitString greedy_expand(double x, int num_digits) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", x);
    return greedy_expand(std::string(buf), num_digits);
}

DigitString greedy_expand_exact(const ZAlphaInt& a, int num_digits) {
    if (num_digits < 1)
        throw std::invalid_argument("num_digits must be >= 1");
    if (sign_at_beta1(a) <= 0)
        throw std::invalid_argument("greedy_expand_exact requires positive value: " + a.str());
    int k = 0;
    while (sign_at_beta1(sub(a, alpha_pow(k + 1))) >= 0) ++k;
    while (sign_at_beta1(sub(a, alpha_pow(k))) < 0) --k;

    DigitString out;
    out.start_index = k;
    ZAlphaInt rem = a;
    for (int i = 0; i < num_digits; ++i) {
        ZAlphaInt diff = sub(rem, alpha_pow(k - i));
        if (sign_at_beta1(diff) >= 0) {
            out.digits.push_back(1);
            rem = diff;
        } else {
            out.digits.push_back(0);
        }
    }
    check_no_1111(out.digits);
    return out;
}

DigitString finite_expansion_zbeta(const ZAlphaInt& a, const RootData& roots) {
    if (eval_beta1(a, roots).sign() <= 0 && sign_at_beta1(a) <= 0)
        throw std::invalid_argument("finite_expansion_zbeta requires positive value: " + a.str());
    int k = 0;
    while (sign_at_beta1(sub(a, alpha_pow(k + 1))) >= 0) ++k;
    while (sign_at_beta1(sub(a, alpha_pow(k))) < 0) --k;

    DigitString out;
    out.start_index = k;
    ZAlphaInt rem = a;
    int idx = k;
    while (!rem.is_zero()) {
        if (idx < k - 400)
            throw std::logic_error("finite expansion failed to terminate for " + a.str());
        ZAlphaInt diff = sub(rem, alpha_pow(idx));
        if (sign_at_beta1(diff) >= 0) {
            out.digits.push_back(1);
            rem = diff;
        } else {
            out.digits.push_back(0);
        }
        --idx;
    }
    check_no_1111(out.digits);
    return out;
}

}  // namespace rauzy4
