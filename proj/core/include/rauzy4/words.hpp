#pragma once

#include "rauzy4/interval.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/zalpha.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rauzy4 {

/// Finite digit string over {0,1}, most significant digit first: digits
/// occupy indices start_index, start_index-1, ..., start_index-n+1.
struct DigitString {
    int start_index = 0;
    std::vector<int> digits;

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Infinite word (eps_i)_{i >= start_index} over {0,1}: the preperiod
/// digits occupy indices start_index, start_index+1, ..., then the period
/// repeats forever.
struct EventuallyPeriodicWord {
    int start_index = 0;
    std::vector<int> preperiod;
    std::vector<int> period;  // nonempty

    /// Digit at absolute index i (zero below start_index).
    int digit_at(int i) const;

    friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;
};

/// True iff the word contains no factor 1111.
bool is_admissible(const std::vector<int>& digits);
bool is_admissible(const DigitString& w);
bool is_admissible(const EventuallyPeriodicWord& w);

/// Canonical form: leading preperiod zeros stripped, period primitive,
/// preperiod minimal (trailing digits equal to the rotated period absorbed).
EventuallyPeriodicWord canonicalize(const EventuallyPeriodicWord& w);

/// Lexicographic comparison of finite digit strings after aligning start
/// indices with leading zeros; for admissible words this coincides with
/// comparison of the beta-values.
bool lex_less(const DigitString& u, const DigitString& v);

/// All admissible {0,1}-strings of the given length in lexicographic
/// order, each starting at start_index.
std::vector<DigitString> enumerate_admissible(int depth, int start_index);

/// Number of admissible strings of the given length.
std::uint64_t count_admissible(int depth);

/// Value enclosure of a point of R x C.
struct ValueEnclosure {
    Interval r;
    ComplexInterval z;
};

/// Enclosure of (alpha^i evaluated at beta2, beta3), exact in Z[alpha].
ValueEnclosure alpha_power_value(int i, const RootData& roots);

/// Value of the series sum eps_i alpha^i at (beta2, beta3): preperiod
/// summed directly, periodic tail in closed form t/(1 - alpha^p).
ValueEnclosure value_alpha_enclosure(const EventuallyPeriodicWord& w, const RootData& roots);
EmbeddedPoint value_alpha(const EventuallyPeriodicWord& w, const RootData& roots);

/// Serialization: digit strings as "index=<k>" header plus digit line;
/// eventually periodic words as "index=<l> pre=<word> per=<word>".
std::string format_digit_string(const DigitString& w);
DigitString parse_digit_string(const std::string& text);
std::string format_word(const EventuallyPeriodicWord& w);
EventuallyPeriodicWord parse_word(const std::string& text);

}  // namespace rauzy4
