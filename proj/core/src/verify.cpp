#include "rauzy4/verify.hpp"

#include "rauzy4/automaton.hpp"
#include "rauzy4/boundary.hpp"
#include "rauzy4/equality.hpp"
#include "rauzy4/exclusion.hpp"
#include "rauzy4/greedy.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/tiling.hpp"
#include "rauzy4/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace rauzy4 {

namespace {

constexpr mpfr_prec_t kPrec = 256;

ZAlphaInt ps(std::initializer_list<int> powers) {
    ZAlphaInt v;
    for (int p : powers) v = add(v, alpha_pow(p));
    return v;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

using EdgeKey = std::tuple<ZAlphaInt, int, int, ZAlphaInt>;

std::set<EdgeKey> parse_fixture(const std::string& text) {
    std::set<EdgeKey> out;
    std::istringstream is(text);
    std::string from, label, to;
    while (is >> from >> label >> to) {
        if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
            (label[1] != '0' && label[1] != '1'))
            throw std::invalid_argument("bad edge label: " + label);
        out.insert({decode_annexe_state(from), label[0] - '0', label[1] - '0',
                    decode_annexe_state(to)});
    }
    return out;
}

// ---- individual criteria -------------------------------------------------

CheckResult check_roots(const RootData& roots) {
    CheckResult res{"roots", true, ""};
    struct Printed {
        double value;
        double mid;
    } printed[] = {
        {1.9275, roots.beta1.midpoint()},
        {-0.7748, roots.beta2.midpoint()},
        {-0.0763, roots.beta3_re.midpoint()},
        {0.8147, roots.beta3_im.midpoint()},
    };
    for (const auto& p : printed)
        if (std::abs(p.value - p.mid) >= 1e-4) {
            res.pass = false;
            res.detail += fmt("printed %.4f vs computed %.7f; ", p.value, p.mid);
        }
    auto poly_abs = [&](const Interval& x) {
        Interval one = Interval::from_int(1, kPrec);
        Interval r = x - one;
        r = r * x - one;
        r = r * x - one;
        r = r * x - one;
        return r.abs().upper();
    };
    double r1 = poly_abs(roots.beta1);
    double r2 = poly_abs(roots.beta2);
    ComplexInterval b3 = roots.beta3();
    Interval one = Interval::from_int(1, kPrec);
    Interval zero = Interval::from_int(0, kPrec);
    // Horner for x^4 - x^3 - x^2 - x - 1 at beta3.
    ComplexInterval acc{b3.re - one, b3.im};
    acc = acc * b3 + ComplexInterval{-one, zero};
    acc = acc * b3 + ComplexInterval{-one, zero};
    acc = acc * b3 + ComplexInterval{-one, zero};
    double r3 = acc.abs().upper();
    if (r1 >= 1e-12 || r2 >= 1e-12 || r3 >= 1e-12) {
        res.pass = false;
        res.detail += fmt("residuals %.2e %.2e %.2e; ", r1, r2, r3);
    }
    if (res.pass)
        res.detail = fmt("4-decimal agreement; residuals %.1e %.1e %.1e", r1, r2, r3);
    return res;
}

CheckResult check_identities() {
    CheckResult res{"identities", true, ""};
    ZAlphaInt lhs1 = ps({-3, -2, 0, 3});
    ZAlphaInt rhs1{1, 2, 1, 0};
    ZAlphaInt lhs2 = ps({-2, -1, 1});
    ZAlphaInt rhs2{-1, 0, 1, 0};
    if (lhs1 != rhs1 || lhs2 != rhs2) {
        res.pass = false;
        res.detail = fmt("got %s and %s", lhs1.str().c_str(), lhs2.str().c_str());
    } else {
        res.detail = "both exceptional reductions hold exactly";
    }
    return res;
}

CheckResult check_state_set(const std::set<EdgeKey>& fixture) {
    CheckResult res{"state-set", true, ""};
    auto states = build_state_set();
    std::set<ZAlphaInt> set(states.begin(), states.end());
    if (states.size() != 35 || set.size() != 35) {
        res.pass = false;
        res.detail = fmt("state count %zu (distinct %zu)", states.size(), set.size());
        return res;
    }
    std::set<ZAlphaInt> labels;
    for (const auto& [f, a, b, t] : fixture) {
        labels.insert(f);
        labels.insert(t);
    }
    if (labels != set) {
        res.pass = false;
        res.detail = fmt("decoded label set has %zu values and differs from the state set",
                         labels.size());
    } else {
        res.detail = "35 distinct states matching the decoded diagram labels";
    }
    return res;
}

CheckResult check_edges(const std::set<EdgeKey>& fixture) {
    CheckResult res{"edges", true, ""};
    Automaton aut = build_automaton();
    Automaton reach = reachable_subautomaton(aut);
    std::set<EdgeKey> generated;
    for (const Edge& e : reach.edges) generated.insert({e.from, e.a, e.b, e.to});

    std::size_t missing = 0, extra = 0;
    for (const auto& k : fixture)
        if (!generated.count(k)) ++missing;
    for (const auto& k : generated)
        if (!fixture.count(k)) ++extra;
    if (missing || extra) {
        res.pass = false;
        res.detail = fmt("diff vs fixture: %zu missing, %zu extra; ", missing, extra);
    }
    // Worked edges from the state alpha^3 and from 0.
    ZAlphaInt a3 = alpha_pow(3), a2 = alpha_pow(2);
    auto has = [&](const ZAlphaInt& f, int a, int b, const ZAlphaInt& t) {
        return generated.count({f, a, b, t}) != 0;
    };
    bool worked = has(a3, 1, 0, add(a2, a3)) && has(a3, 0, 0, a2) && has(a3, 1, 1, a2) &&
                  !has(a3, 0, 1, step(a3, 0, 1)) && has(ZAlphaInt{}, 0, 0, ZAlphaInt{}) &&
                  has(ZAlphaInt{}, 1, 1, ZAlphaInt{}) && has(ZAlphaInt{}, 1, 0, a3) &&
                  has(ZAlphaInt{}, 0, 1, neg(a3));
    if (!worked) {
        res.pass = false;
        res.detail += "worked-edge assertions failed; ";
    }
    if (reach.states.size() != aut.states.size()) {
        res.pass = false;
        res.detail += fmt("only %zu of %zu states reachable; ", reach.states.size(),
                          aut.states.size());
    }
    if (res.pass)
        res.detail = fmt("%zu edges agree with the fixture; all %zu states reachable",
                         generated.size(), reach.states.size());
    return res;
}

CheckResult check_bounds(const RootData& roots) {
    CheckResult res{"bounds", true, ""};
    BoundConstants bc = compute_bound_constants(roots);
    double a_hi = bc.a_bound.upper();
    double b_hi = bc.b_bound.upper();
    if (!(a_hi < 1.6004) || !(b_hi < 1.8120)) {
        res.pass = false;
        res.detail = fmt("a_bound <= %.6f, b_bound <= %.6f", a_hi, b_hi);
        return res;
    }
    // C dominates the member pair (111011, 000000).
    ComplexInterval b3 = roots.beta3();
    Interval zero = Interval::from_int(0, kPrec);
    ComplexInterval s{zero, zero};
    ComplexInterval p{Interval::from_int(1, kPrec), zero};
    int digits[6] = {1, 1, 1, 0, 1, 1};
    for (int i = 0; i < 6; ++i) {
        if (digits[i]) s = s + p;
        p = p * b3;
    }
    if (!(bc.C.upper() >= s.abs().lower())) {
        res.pass = false;
        res.detail = "C fails to dominate a member pair";
        return res;
    }
    res.detail = fmt("a_bound = %.6f < 1.6004, b_bound = %.6f < 1.8120, C = %.6f", a_hi,
                     b_hi, bc.C.midpoint());
    return res;
}

CheckResult check_exclusion(const RootData& roots) {
    CheckResult res{"exclusion", true, ""};
    BoundConstants bc = compute_bound_constants(roots);
    ZAlphaInt a3 = alpha_pow(3);

    struct Entry {
        ZAlphaInt node;
        char root;  // '2' or '3'
        double threshold;
    };
    struct Candidate {
        ZAlphaInt value;
        int expected_depth;
        std::vector<Entry> entries;
    };
    std::vector<Candidate> table;
    // Root-level exclusions by the first (beta2) entry.
    table.push_back({ps({-1, 1, 2, 3}), 0, {{ps({-1, 1, 2, 3}), '2', 1.9}}});
    table.push_back({ps({-1, 1, 3}), 0, {{ps({-1, 1, 3}), '2', 2.5}}});
    table.push_back({ps({-1, 1}), 0, {{ps({-1, 1}), '2', 2.0}}});
    table.push_back({ps({-1, 3}), 0, {{ps({-1, 3}), '2', 1.7}}});
    // Root-level exclusions by the second (beta3) entry.
    table.push_back({ps({-1, 0, 3}), 0, {{ps({-1, 0, 3}), '3', 2.0}}});
    table.push_back({ps({-1, 2, 3}), 0, {{ps({-1, 2, 3}), '3', 1.9}}});
    table.push_back({ps({-1, 0, 2, 3}), 0, {{ps({-1, 0, 2, 3}), '3', 1.9}}});
    {
        // One step for alpha^-1 + 1 + alpha + alpha^3.
        ZAlphaInt m = ps({-2, -1, 0, 2});
        table.push_back({ps({-1, 0, 1, 3}),
                         1,
                         {{m, '2', 1.9}, {add(m, a3), '3', 1.9}, {sub(m, a3), '2', 2.4}}});
    }
    {
        // Two steps claimed for alpha^-1 + 1.
        ZAlphaInt m1 = ps({-2, -1});
        ZAlphaInt m2 = mul_alpha_inv(sub(m1, a3));
        table.push_back({ps({-1, 0}),
                         2,
                         {{m1, '3', 1.83},
                          {add(m1, a3), '3', 2.0},
                          {m2, '3', 2.1},
                          {add(m2, a3), '3', 1.63},
                          {sub(m2, a3), '3', 2.7}}});
    }
    {
        // Two steps for alpha^-1 + 1 + alpha.
        ZAlphaInt b0 = ps({-2, -1, 0});
        ZAlphaInt m0 = mul_alpha_inv(b0);
        ZAlphaInt m1 = mul_alpha_inv(add(b0, a3));
        table.push_back({ps({-1, 0, 1}),
                         2,
                         {{sub(b0, a3), '2', 1.84},
                          {m0, '2', 1.77},
                          {add(m0, a3), '2', 2.23},
                          {sub(m0, a3), '3', 1.818},
                          {m1, '3', 1.86},
                          {add(m1, a3), '2', 1.63},
                          {sub(m1, a3), '3', 2.24}}});
    }
    {
        // Three steps for alpha^-1 + alpha^2.
        ZAlphaInt d1 = ps({-2, 1});
        ZAlphaInt d2 = mul_alpha_inv(add(d1, a3));
        ZAlphaInt d3 = mul_alpha_inv(add(d2, a3));
        table.push_back({ps({-1, 2}),
                         3,
                         {{d1, '3', 1.89},
                          {sub(d1, a3), '3', 2.34},
                          {d2, '3', 1.83},
                          {sub(d2, a3), '3', 2.26},
                          {d3, '3', 1.818},
                          {add(d3, a3), '3', 2.32},
                          {sub(d3, a3), '2', 1.77}}});
    }
    {
        // Three steps for alpha^-1.
        ZAlphaInt d1 = ps({-2});
        ZAlphaInt d2 = mul_alpha_inv(add(d1, a3));
        ZAlphaInt d3 = mul_alpha_inv(d2);
        table.push_back({ps({-1}),
                         3,
                         {{d1, '2', 1.66},
                          {sub(d1, a3), '2', 2.13},
                          {add(d2, a3), '2', 2.01},
                          {sub(d2, a3), '3', 2.17},
                          {d3, '3', 2.00},
                          {add(d3, a3), '3', 2.21},
                          {sub(d3, a3), '3', 1.92}}});
    }
    {
        // Three steps for alpha^-1 + alpha + alpha^2.
        ZAlphaInt d1 = ps({-2, 0, 1});
        ZAlphaInt d2 = mul_alpha_inv(add(d1, a3));
        ZAlphaInt d3 = mul_alpha_inv(sub(d2, a3));
        table.push_back({ps({-1, 1, 2}),
                         3,
                         {{d1, '2', 1.89},
                          {sub(d1, a3), '2', 2.35},
                          {d2, '2', 1.84},
                          {add(d2, a3), '2', 2.30},
                          {d3, '2', 1.77},
                          {add(d3, a3), '3', 1.818},
                          {sub(d3, a3), '2', 2.23}}});
    }

    for (const Candidate& cand : table) {
        for (const Entry& entry : cand.entries) {
            Interval mag = entry.root == '2' ? eval_beta2(entry.node, roots).abs()
                                             : eval_beta3(entry.node, roots).abs();
            if (!(mag.lower() > entry.threshold - 0.01)) {
                res.pass = false;
                res.detail += fmt("entry %s: |value| >= %.4f not above listed %.2f; ",
                                  entry.node.str().c_str(), mag.lower(), entry.threshold);
            }
            const Interval& bound = entry.root == '2' ? bc.a_bound : bc.b_bound;
            if (!mag.certainly_greater(bound)) {
                res.pass = false;
                res.detail +=
                    fmt("listed entry %s (%.2f) does not exceed the pruning bound "
                        "(|value| = %.4f); ",
                        entry.node.str().c_str(), entry.threshold, mag.lower());
            }
        }
        auto cert = certify_not_reachable(cand.value, 5, roots);
        if (!cert) {
            res.pass = false;
            res.detail += fmt("no certificate for %s; ", cand.value.str().c_str());
        } else if (cert->depth != cand.expected_depth) {
            res.pass = false;
            res.detail += fmt("certificate depth %d for %s vs listed %d; ", cert->depth,
                              cand.value.str().c_str(), cand.expected_depth);
        }
    }
    // The exceptional candidate must stay inconclusive at any depth.
    ZAlphaInt exc1 = ps({-1, 0, 2});
    if (certify_not_reachable(exc1, 4, roots)) {
        res.pass = false;
        res.detail += "exceptional candidate unexpectedly certified; ";
    }
    if (res.pass) res.detail = "all 13 candidates and table entries reproduced";
    return res;
}

CheckResult check_witnesses() {
    CheckResult res{"witnesses", true, ""};
    std::size_t visited_count = 0;
    for (const ZAlphaInt& u : build_state_set()) {
        PairWord w = witness_for_state(u);
        std::vector<ZAlphaInt> visited;
        bool equal = check_equal(w, &visited);
        bool hits = u.is_zero() ||
                    std::find(visited.begin(), visited.end(), u) != visited.end();
        if (!equal || !hits) {
            res.pass = false;
            res.detail += fmt("state %s: equal=%d visited=%d; ", u.str().c_str(), equal,
                              hits);
        } else {
            ++visited_count;
        }
    }
    if (res.pass) res.detail = fmt("all %zu states visited by verified pairs", visited_count);
    return res;
}

EventuallyPeriodicWord random_admissible_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pre_len(0, 5), per_len(1, 6), bit(0, 1),
        start(-2, 6);
    for (;;) {
        EventuallyPeriodicWord w;
        w.start_index = start(rng);
        int np = pre_len(rng), kp = per_len(rng);
        w.preperiod.clear();
        w.period.clear();
        for (int i = 0; i < np; ++i) w.preperiod.push_back(bit(rng));
        for (int i = 0; i < kp; ++i) w.period.push_back(bit(rng));
        if (is_admissible(w)) return w;
    }
}

CheckResult check_equality_oracle(const RootData& roots, std::uint64_t seed) {
    CheckResult res{"equality-oracle", true, ""};
    std::mt19937_64 rng(seed);
    auto states = build_state_set();
    std::size_t disagreements = 0, equal_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        PairWord p;
        if (trial % 10 == 8) {
            p.first = random_admissible_word(rng);
            p.second = p.first;
        } else if (trial % 10 == 9) {
            p = witness_for_state(states[static_cast<std::size_t>(trial / 10) % states.size()]);
        } else {
            p.first = random_admissible_word(rng);
            p.second = random_admissible_word(rng);
        }
        bool verdict = check_equal(p);
        ValueEnclosure v1 = value_alpha_enclosure(p.first, roots);
        ValueEnclosure v2 = value_alpha_enclosure(p.second, roots);
        Interval dr = v1.r - v2.r;
        Interval dre = v1.z.re - v2.z.re;
        Interval dim = v1.z.im - v2.z.im;
        bool numerically_distinct = dr.sign() != 0 || dre.sign() != 0 || dim.sign() != 0;
        if (verdict == numerically_distinct) {
            ++disagreements;
            res.detail += fmt("trial %d: verdict %d vs numeric; ", trial, verdict);
        }
        if (verdict) ++equal_count;
    }
    if (disagreements) res.pass = false;
    if (res.pass)
        res.detail = fmt("1000 pairs, %zu equal, zero disagreements", equal_count);
    return res;
}

CheckResult check_singletons(const RootData& roots) {
    CheckResult res{"singletons", true, ""};
    const int deep = 40;  // tail bound below 1e-3 needs 4 + depth >= 42
    double covrad = covering_radius(deep, roots);
    if (!(covrad < 1e-3)) {
        res.pass = false;
        res.detail += fmt("covering radius %.2e not below 1e-3; ", covrad);
    }
    std::vector<ZAlphaInt> singles = {ps({0, 2}), ps({-2, -1, 1}), ps({-3, -2, 0, 3})};
    for (const ZAlphaInt& u : singles) {
        auto closed = singleton_value(u, roots);
        if (!closed) {
            res.pass = false;
            res.detail += fmt("%s not recognized as singleton; ", u.str().c_str());
            continue;
        }
        PointCloud cloud = boundary_piece(u, deep, roots);
        double worst = 0;
        for (const EmbeddedPoint& p : cloud.points) {
            double d = std::hypot(p.r - closed->r,
                                  std::hypot(p.z_re - closed->z_re, p.z_im - closed->z_im));
            worst = std::max(worst, d);
        }
        if (!(worst <= covrad)) {
            res.pass = false;
            res.detail += fmt("%s: distance %.2e beyond radius %.2e; ", u.str().c_str(),
                              worst, covrad);
        }
        // Diameters collapse with depth.
        for (int depth : {6, 10, 14}) {
            PointCloud c = boundary_piece(u, depth, roots);
            double diam = 0;
            for (const EmbeddedPoint& a : c.points)
                for (const EmbeddedPoint& b : c.points)
                    diam = std::max(diam, std::hypot(a.r - b.r,
                                                     std::hypot(a.z_re - b.z_re,
                                                                a.z_im - b.z_im)));
            if (!(diam <= 2 * c.covering_radius)) {
                res.pass = false;
                res.detail += fmt("%s: diameter %.2e at depth %d; ", u.str().c_str(), diam,
                                  depth);
            }
        }
    }
    if (res.pass)
        res.detail = fmt("three closed forms matched within %.2e", covrad);
    return res;
}

CheckResult check_relations(const RootData& roots) {
    CheckResult res{"ifs-relations", true, ""};
    for (char rel : {'a', 'b', 'f', 'g', 'h', 'i'}) {
        RelationReport r = verify_relation(rel, 6, roots);
        if (!r.pass) {
            res.pass = false;
            res.detail += fmt("%c: %.3e > %.3e; ", rel, r.hausdorff, r.tolerance);
        } else {
            res.detail += fmt("%c: %.1e<=%.1e ", rel, r.hausdorff, r.tolerance);
        }
    }
    return res;
}

CheckResult check_multi_expansion(const RootData& roots) {
    CheckResult res{"multi-expansion", true, ""};
    auto value = [&](const EventuallyPeriodicWord& w) {
        return value_alpha(w, roots);
    };
    EmbeddedPoint target = value({4, {}, {1, 1, 0, 0}});
    std::vector<std::pair<std::string, EmbeddedPoint>> alts;
    alts.push_back({"alpha + even powers", value({1, {1, 0, 0}, {1, 0}})});
    alts.push_back({"1+alpha+alpha^2 + odd powers", value({0, {1, 1, 1, 0, 0}, {1, 0}})});
    alts.push_back({"1+alpha + 4i+1,4i+2", value({0, {1, 1, 0, 0, 0}, {1, 1, 0, 0}})});
    alts.push_back(
        {"alpha+alpha^2+alpha^4 + 4i+3,4i+4", value({1, {1, 1, 0, 1, 0, 0}, {1, 1, 0, 0}})});
    {
        EmbeddedPoint base = value({6, {}, {1, 1, 0, 0}});
        EmbeddedPoint u = embed(ps({-3, -2, 0, 3}), roots);
        alts.push_back({"1+2alpha+alpha^2 + 4i+2,4i+3",
                        {base.r + u.r, base.z_re + u.z_re, base.z_im + u.z_im}});
    }
    for (const auto& [name, v] : alts) {
        double d = std::hypot(v.r - target.r,
                              std::hypot(v.z_re - target.z_re, v.z_im - target.z_im));
        if (!(d < 1e-10)) {
            res.pass = false;
            res.detail += fmt("%s differs by %.2e; ", name.c_str(), d);
        }
    }
    if (res.pass) res.detail = "all five alternative series agree within 1e-10";
    return res;
}

CheckResult check_tiling(const RootData& roots) {
    CheckResult res{"tiling", true, ""};
    const int depth = 12;
    TilingReport r16 = tiling_report(1, 16, depth, roots);
    TilingReport r32 = tiling_report(1, 32, depth, roots);
    TilingReport r64 = tiling_report(1, 64, depth, roots);
    if (!(r32.multi_fraction <= r16.multi_fraction &&
          r64.multi_fraction <= r32.multi_fraction)) {
        res.pass = false;
        res.detail += fmt("fractions %.3f -> %.3f -> %.3f not decreasing; ",
                          r16.multi_fraction, r32.multi_fraction, r64.multi_fraction);
    }
    std::set<std::array<int, 3>> observed(r64.intersecting.begin(), r64.intersecting.end());
    std::set<std::array<int, 3>> expected;
    for (const ZAlphaInt& u : neighbor_set())
        expected.insert({static_cast<int>(u.c0), static_cast<int>(u.c1),
                         static_cast<int>(u.c2)});
    if (observed != expected) {
        res.pass = false;
        res.detail += fmt("observed %zu intersecting translates vs 18 expected; ",
                          observed.size());
    }
    if (res.pass)
        res.detail = fmt("fractions %.3f -> %.3f -> %.3f; exactly the 18 neighbor translates intersect",
                         r16.multi_fraction, r32.multi_fraction, r64.multi_fraction);
    return res;
}

}  // namespace

const std::string& annexe_edge_fixture() {
    static const std::string text = R"(0000000 00 0000000
0000000 11 0000000
0000000 01 m0000001
0000000 10 0000001
0000111 00 0001110
0000111 11 0001110
m0000111 00 m0001110
m0000111 11 m0001110
m0001100 10 0000110
0001100 01 m0000110
m0000110 00 m0001100
m0000110 11 m0001100
m0000110 01 m0001101
0000110 00 0001100
0000110 11 0001100
0000110 10 0001101
m0000011 01 m0000111
m0000011 00 m0000110
m0000011 11 m0000110
0000011 10 0000111
0000011 11 0000110
0000011 00 0000110
m0000001 01 m0000011
m0000001 11 m0000010
m0000001 00 m0000010
0000001 10 0000011
0000001 11 0000010
0000001 00 0000010
m0001010 10 0001010
0001010 01 m0001010
m0001110 10 0000010
0001110 01 m0000010
m0000010 01 m0000101
m0000010 00 m0000100
m0000010 11 m0000100
m0000010 10 0011010
0000010 10 0000101
0000010 00 0000100
0000010 11 0000100
0000010 01 m0011010
m0000101 01 m0001011
m0000101 00 m0001010
m0000101 11 m0001010
0000101 10 0001011
0000101 00 0001010
0000101 11 0001010
0001101 01 m0000100
m0001101 10 0000100
0001101 00 0011010
0001101 11 0011010
m0001101 00 m0011010
m0001101 11 m0011010
m0000100 01 m0001001
0000100 10 0001001
m0000100 00 m0001000
m0000100 11 m0001000
0000100 00 0001000
0000100 11 0001000
0011010 00 0110100
0011010 11 0110100
m0011010 00 m0110100
m0011010 11 m0110100
0110100 10 1101001
m0110100 01 m1101001
1101001 01 m0110100
m1101001 10 0110100
m0001000 10 0001110
0001000 01 m0001110
m0001001 10 0001100
0001001 01 m0001100
m0001011 10 0001000
0001011 01 m0001000
)";
    return text;
}

std::vector<CheckResult> run_acceptance_checks(const std::string& fixture_text,
                                               std::uint64_t seed) {
    RootData roots = compute_roots(kPrec);
    std::vector<CheckResult> out;

    std::set<EdgeKey> fixture;
    std::string fixture_error;
    try {
        fixture = parse_fixture(fixture_text.empty() ? annexe_edge_fixture() : fixture_text);
    } catch (const std::exception& e) {
        fixture_error = e.what();
    }

    out.push_back(check_roots(roots));
    out.push_back(check_identities());
    if (fixture_error.empty()) {
        out.push_back(check_state_set(fixture));
        out.push_back(check_edges(fixture));
    } else {
        out.push_back({"state-set", false, "fixture unusable: " + fixture_error});
        out.push_back({"edges", false, "fixture unusable: " + fixture_error});
    }
    out.push_back(check_bounds(roots));
    out.push_back(check_exclusion(roots));
    out.push_back(check_witnesses());
    out.push_back(check_equality_oracle(roots, seed));
    out.push_back(check_singletons(roots));
    out.push_back(check_relations(roots));
    out.push_back(check_multi_expansion(roots));
    out.push_back(check_tiling(roots));
    return out;
}

int run_verification(std::ostream& os, const std::string& fixture_text,
                     std::uint64_t seed) {
    int failures = 0;
    for (const CheckResult& r : run_acceptance_checks(fixture_text, seed)) {
        os << "CHECK " << r.name << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.detail
           << '\n';
        if (!r.pass) ++failures;
    }
    return failures;
}

}  // namespace rauzy4
