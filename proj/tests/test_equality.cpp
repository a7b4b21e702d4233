#include "rauzy4/equality.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace rauzy4;

namespace {

PairWord pw(EventuallyPeriodicWord a, EventuallyPeriodicWord b) {
    return PairWord{std::move(a), std::move(b)};
}

}  // namespace

TEST_CASE("identical words are equal") {
    EventuallyPeriodicWord w{0, {1, 0, 1}, {1, 0}};
    CHECK(check_equal(pw(w, w)));
}

TEST_CASE("the multi-expansion identity pair is recognized") {
    // sum_{i>=1} alpha^{4i} + alpha^{4i+1} = alpha + sum alpha^{2i}, i >= 2.
    EventuallyPeriodicWord target{4, {}, {1, 1, 0, 0}};
    EventuallyPeriodicWord alt{1, {1, 0, 0}, {1, 0}};
    CHECK(check_equal(pw(target, alt)));
}

TEST_CASE("words differing in value are rejected") {
    CHECK_FALSE(check_equal(pw({0, {}, {1, 0}}, {0, {}, {0, 1}})));
    CHECK_FALSE(check_equal(pw({0, {1}, {0}}, {0, {}, {0}})));
    CHECK_FALSE(check_equal(pw({4, {}, {1, 1, 0, 0}}, {4, {}, {1, 0, 1, 0}})));
}

TEST_CASE("inadmissible input throws") {
    EventuallyPeriodicWord bad{0, {}, {1, 1, 1, 1, 0}};
    EventuallyPeriodicWord ok{0, {}, {1, 0}};
    CHECK_THROWS(check_equal(pw(bad, ok)));
    CHECK_THROWS(check_equal(pw(ok, bad)));
}

TEST_CASE("verdicts agree with certified numeric evaluation") {
    RootData roots = compute_roots(256);
    std::vector<PairWord> pairs = {
        pw({4, {}, {1, 1, 0, 0}}, {1, {1, 0, 0}, {1, 0}}),
        pw({0, {1, 1, 0, 1, 0, 0}, {1, 1, 0, 0}}, {0, {1, 1, 0, 1, 0, 0}, {1, 1, 0, 0}}),
        pw({0, {}, {1, 0}}, {1, {}, {1, 0}}),
        pw({-2, {1, 0}, {1, 1, 0}}, {-2, {1, 0}, {1, 0, 1}}),
    };
    for (const PairWord& p : pairs) {
        bool verdict = check_equal(p);
        ValueEnclosure v1 = value_alpha_enclosure(p.first, roots);
        ValueEnclosure v2 = value_alpha_enclosure(p.second, roots);
        bool distinct = (v1.r - v2.r).sign() != 0 || (v1.z.re - v2.z.re).sign() != 0 ||
                        (v1.z.im - v2.z.im).sign() != 0;
        CHECK(verdict == !distinct);
    }
}

TEST_CASE("witness pairs exist for every state and visit it") {
    for (const ZAlphaInt& u : build_state_set()) {
        PairWord w = witness_for_state(u);
        CHECK(is_admissible(w.first));
        CHECK(is_admissible(w.second));
        std::vector<ZAlphaInt> visited;
        CHECK(check_equal(w, &visited));
        if (!u.is_zero())
            CHECK(std::find(visited.begin(), visited.end(), u) != visited.end());
    }
}

TEST_CASE("product graph liveness") {
    const PairGraph& g = PairGraph::instance();
    ProductNode start{ZAlphaInt{}, {0, 0, 0}, {0, 0, 0}};
    CHECK(g.is_live(start));
    auto succ = g.successors(start);
    CHECK(!succ.empty());
    // Labels never continue a run of four ones on either track.
    ProductNode ones{ZAlphaInt{}, {1, 1, 1}, {0, 0, 0}};
    for (const auto& [node, lab] : g.successors(ones)) CHECK(lab.first == 0);
}
