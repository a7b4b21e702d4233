#include "rauzy4/exclusion.hpp"
#include "rauzy4/roots.hpp"

#include <doctest.h>

using namespace rauzy4;

namespace {

ZAlphaInt ps(std::initializer_list<int> powers) {
    ZAlphaInt v;
    for (int p : powers) v = add(v, alpha_pow(p));
    return v;
}

}  // namespace

TEST_CASE("bound constants match the closed forms") {
    RootData roots = compute_roots(256);
    BoundConstants bc = compute_bound_constants(roots);
    CHECK(bc.a_bound.midpoint() == doctest::Approx(1.6003).epsilon(1e-3));
    CHECK(bc.a_bound.upper() < 1.6004);
    CHECK(bc.b_bound.upper() < 1.8120);
    CHECK(bc.C.midpoint() > 1.0);
    // a_bound = |beta2^4 / (1 + beta2)| recomputed directly.
    Interval b2 = roots.beta2;
    Interval direct = (b2.square().square() /
                       (Interval::from_int(1, 256) + b2)).abs();
    CHECK((bc.a_bound - direct).contains_zero());
}

TEST_CASE("immediately excluded candidates get depth-0 certificates") {
    RootData roots = compute_roots(256);
    for (auto powers : {std::initializer_list<int>{-1, 1}, {-1, 3}, {-1, 1, 3},
                        {-1, 1, 2, 3}, {-1, 0, 3}, {-1, 2, 3}, {-1, 0, 2, 3}}) {
        ZAlphaInt cand = ps(powers);
        auto cert = certify_not_reachable(cand, 4, roots);
        REQUIRE(cert.has_value());
        CHECK(cert->depth == 0);
        CHECK(cert->candidate == cand);
        REQUIRE(!cert->nodes.empty());
        CHECK((cert->nodes.front().killed_by == 'a' ||
               cert->nodes.front().killed_by == 'b'));
    }
}

TEST_CASE("deeper candidates need the recorded search depth") {
    RootData roots = compute_roots(256);
    auto c8 = certify_not_reachable(ps({-1, 0, 1, 3}), 4, roots);
    REQUIRE(c8.has_value());
    CHECK(c8->depth == 1);
    auto c10 = certify_not_reachable(ps({-1, 0, 1}), 4, roots);
    REQUIRE(c10.has_value());
    CHECK(c10->depth == 2);
    auto c12 = certify_not_reachable(ps({-1}), 4, roots);
    REQUIRE(c12.has_value());
    CHECK(c12->depth == 3);
    // alpha^-1 + 1 passes through the node 2 alpha, whose magnitude at both
    // contracting roots sits below the pruning bounds, so the search must
    // descend one level further before every branch dies.
    auto c9 = certify_not_reachable(ps({-1, 0}), 4, roots);
    REQUIRE(c9.has_value());
    CHECK(c9->depth == 3);
}

TEST_CASE("the exceptional candidate is never certified") {
    RootData roots = compute_roots(256);
    // alpha^-1 + 1 + alpha^2 reduces into the state set, so no exclusion
    // certificate can exist at any depth.
    CHECK_FALSE(certify_not_reachable(ps({-1, 0, 2}), 3, roots).has_value());
    CHECK_FALSE(certify_not_reachable(ps({-1, 0, 2}), 5, roots).has_value());
}

TEST_CASE("certificate nodes record certified kill magnitudes") {
    RootData roots = compute_roots(256);
    auto cert = certify_not_reachable(ps({-1, 1}), 4, roots);
    REQUIRE(cert.has_value());
    BoundConstants bc = compute_bound_constants(roots);
    for (const ExclusionNode& n : cert->nodes) {
        if (n.killed_by == 'a') CHECK(n.bound_value > bc.a_bound.upper());
        if (n.killed_by == 'b') CHECK(n.bound_value > bc.b_bound.upper());
    }
}
