#pragma once

#include "rauzy4/roots.hpp"
#include "rauzy4/words.hpp"
#include "rauzy4/zalpha.hpp"

#include <string>

namespace rauzy4 {

/// Greedy beta-expansion of a positive real given as a decimal literal,
/// truncated to num_digits digits starting at the leading power.  All
/// floors are certified by interval arithmetic; working precision doubles
/// on demand up to 4096 bits, after which the call fails loudly.
DigitString greedy_expand(const std::string& x_decimal, int num_digits);

/// Same for a double input (the double is treated as an exact rational).
DigitString greedy_expand(double x, int num_digits);

/// Greedy expansion of a Z[beta] element with exact ZAlphaInt remainders;
/// only the sign comparisons are numeric, and an exactly-zero remainder is
/// detected symbolically, so terminating expansions terminate provably.
DigitString greedy_expand_exact(const ZAlphaInt& a, int num_digits);

/// Full finite expansion of a Z[beta] element with positive value: runs
/// greedy_expand_exact until the remainder is exactly zero.
DigitString finite_expansion_zbeta(const ZAlphaInt& a, const RootData& roots);

}  // namespace rauzy4
