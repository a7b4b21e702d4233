#pragma once

#include "rauzy4/interval.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/zalpha.hpp"

#include <optional>
#include <vector>

namespace rauzy4 {

/// The pruning constants of the accumulator tail bound:
/// a_bound = |beta2^4 / (1 + beta2)|, C = max over admissible length-6
/// word pairs of |sum (c_i - d_i) beta3^i|, b_bound = C |beta3|^4 / (1 - |beta3|^6).
struct BoundConstants {
    Interval a_bound;
    Interval b_bound;
    Interval C;
};

BoundConstants compute_bound_constants(const RootData& roots);

/// One node of an exclusion search tree.
struct ExclusionNode {
    ZAlphaInt value;
    int depth = 0;
    char killed_by = 0;     // 'a' (beta2 bound), 'b' (beta3 bound), 0 = interior
    double bound_value = 0; // certified lower bound of the killed quantity
};

/// Certificate that a candidate accumulator value is never visited: every
/// branch of the ternary successor tree {v/alpha, v/alpha +- alpha^3} is
/// pruned by one of the two bounds within the recorded depth.
struct ExclusionCertificate {
    ZAlphaInt candidate;
    int depth = 0;          // maximum kill depth over all branches
    std::vector<ExclusionNode> nodes;
};

/// Attempts to certify the candidate within max_depth; nullopt means
/// inconclusive (the candidate may be reachable).  All prunings are
/// certified with directed rounding: a branch dies only when the interval
/// lower bound of the coordinate magnitude exceeds the constant's upper bound.
std::optional<ExclusionCertificate> certify_not_reachable(const ZAlphaInt& candidate,
                                                          int max_depth,
                                                          const RootData& roots);

}  // namespace rauzy4
