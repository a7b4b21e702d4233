#include "rauzy4/exclusion.hpp"

#include "rauzy4/words.hpp"

#include <stdexcept>

namespace rauzy4 {

BoundConstants compute_bound_constants(const RootData& roots) {
    mpfr_prec_t prec = roots.beta2.precision();
    Interval one = Interval::from_int(1, prec);

    // a_bound = |beta2^4 / (1 + beta2)|.
    Interval b2 = roots.beta2;
    Interval a_bound = ((b2 * b2 * b2 * b2) / (one + b2)).abs();

    // C = max over pairs of admissible length-6 words of |sum (c_i - d_i) beta3^i|.
    // Differences c_i - d_i range over {-1,0,1}; scan all admissible pairs.
    auto words = enumerate_admissible(6, 0);
    ComplexInterval b3 = roots.beta3();
    std::vector<ComplexInterval> powers;
    ComplexInterval p{one, Interval::from_int(0, prec)};
    for (int i = 0; i < 6; ++i) {
        powers.push_back(p);
        p = p * b3;
    }
    Interval C = Interval::from_int(0, prec);
    for (const auto& c : words)
        for (const auto& d : words) {
            ComplexInterval s{Interval::from_int(0, prec), Interval::from_int(0, prec)};
            for (int i = 0; i < 6; ++i) {
                int diff = c.digits[static_cast<std::size_t>(i)] -
                           d.digits[static_cast<std::size_t>(i)];
                if (diff == 0) continue;
                ComplexInterval term = powers[static_cast<std::size_t>(i)];
                if (diff < 0) term = ComplexInterval{-term.re, -term.im};
                s = s + term;
            }
            Interval m = s.abs();
            // Interval max: keep the hull of the two upper envelopes.
            Interval merged(prec);
            mpfr_max(merged.lo_raw(), C.lo_raw(), m.lo_raw(), MPFR_RNDD);
            mpfr_max(merged.hi_raw(), C.hi_raw(), m.hi_raw(), MPFR_RNDU);
            C = merged;
        }

    // b_bound = C |beta3|^4 / (1 - |beta3|^6).
    Interval m3 = b3.abs();
    Interval m3_2 = m3 * m3;
    Interval m3_4 = m3_2 * m3_2;
    Interval m3_6 = m3_4 * m3_2;
    Interval b_bound = C * m3_4 / (one - m3_6);
    return {a_bound, b_bound, C};
}

namespace {

struct Search {
    const RootData& roots;
    const BoundConstants& bounds;
    int max_depth;
    std::vector<ExclusionNode> nodes;
    int worst_depth = 0;

    // Returns true iff every branch below v is pruned.
    bool exclude(const ZAlphaInt& v, int depth) {
        Interval e2 = eval_beta2(v, roots).abs();
        if (e2.certainly_greater(bounds.a_bound)) {
            nodes.push_back({v, depth, 'a', e2.lower()});
            worst_depth = std::max(worst_depth, depth);
            return true;
        }
        Interval e3 = eval_beta3(v, roots).abs();
        if (e3.certainly_greater(bounds.b_bound)) {
            nodes.push_back({v, depth, 'b', e3.lower()});
            worst_depth = std::max(worst_depth, depth);
            return true;
        }
        if (depth == max_depth) return false;
        nodes.push_back({v, depth, 0, 0.0});
        ZAlphaInt base = mul_alpha_inv(v);
        ZAlphaInt a3 = alpha_pow(3);
        return exclude(base, depth + 1) && exclude(add(base, a3), depth + 1) &&
               exclude(sub(base, a3), depth + 1);
    }
};

}  // namespace

std::optional<ExclusionCertificate> certify_not_reachable(const ZAlphaInt& candidate,
                                                          int max_depth,
                                                          const RootData& roots) {
    if (max_depth < 1)
        throw std::invalid_argument("max_depth must be >= 1");
    BoundConstants bounds = compute_bound_constants(roots);
    Search search{roots, bounds, max_depth, {}, 0};
    if (!search.exclude(candidate, 0)) return std::nullopt;
    return ExclusionCertificate{candidate, search.worst_depth, std::move(search.nodes)};
}

}  // namespace rauzy4
