#include "rauzy4/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

namespace rauzy4 {

namespace {

struct EmbBasis {
    double b2;
    std::complex<double> b3;
};

EmbBasis basis(const RootData& roots) {
    return {roots.beta2.midpoint(),
            {roots.beta3_re.midpoint(), roots.beta3_im.midpoint()}};
}

// Digit support (over alpha^-3..alpha^3) of the nine positive neighbor
// representatives; drives the automaton start node of boundary_piece.
const std::map<ZAlphaInt, std::vector<int>>& neighbor_digits() {
    static const std::map<ZAlphaInt, std::vector<int>> m = [] {
        std::map<ZAlphaInt, std::vector<int>> out;
        auto put = [&](std::vector<int> powers) {
            ZAlphaInt v;
            for (int p : powers) v = add(v, alpha_pow(p));
            out[v] = std::move(powers);
        };
        put({0});
        put({0, 1});
        put({0, 2});
        put({0, 1, 2});
        put({-3, -2, 0, 3});
        put({1});
        put({1, 2});
        put({2});
        put({-2, -1, 1});
        return out;
    }();
    return m;
}

}  // namespace

std::vector<ZAlphaInt> neighbor_set() {
    std::vector<ZAlphaInt> out;
    for (const auto& [u, powers] : neighbor_digits()) {
        out.push_back(u);
        out.push_back(neg(u));
    }
    return out;
}

double covering_radius(int depth, const RootData& roots) {
    double m2 = std::max(std::abs(roots.beta2.lower()), std::abs(roots.beta2.upper()));
    EmbBasis eb = basis(roots);
    double m3 = std::abs(eb.b3);
    int n = 4 + depth;
    double r2 = std::pow(m2, n) / (1.0 - m2);
    double r3 = std::pow(m3, n) / (1.0 - m3);
    return std::hypot(r2, r3);
}

PointCloud central_tile(int depth, const RootData& roots) {
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
    EmbBasis eb = basis(roots);
    std::vector<double> p2(static_cast<std::size_t>(4 + depth));
    std::vector<std::complex<double>> p3(p2.size());
    for (std::size_t i = 0; i < p2.size(); ++i) {
        p2[i] = std::pow(eb.b2, static_cast<double>(i));
        p3[i] = std::pow(eb.b3, static_cast<double>(i));
    }
    PointCloud cloud;
    cloud.depth = depth;
    cloud.covering_radius = covering_radius(depth, roots);
    auto rec = [&](auto&& self, int i, int run, double r, std::complex<double> z) -> void {
        if (i == 4 + depth) {
            cloud.points.push_back({r, z.real(), z.imag()});
            return;
        }
        std::size_t ui = static_cast<std::size_t>(i);
        self(self, i + 1, 0, r, z);
        if (run < 3) self(self, i + 1, run + 1, r + p2[ui], z + p3[ui]);
    };
    rec(rec, 4, 0, 0.0, {0.0, 0.0});
    return cloud;
}

PointCloud boundary_piece(const ZAlphaInt& u, int depth, const RootData& roots) {
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
    const auto& digits_map = neighbor_digits();
    if (auto it = digits_map.find(u); it != digits_map.end()) {
        const PairGraph& graph = PairGraph::instance();
        auto has = [&](int p) {
            return std::find(it->second.begin(), it->second.end(), p) != it->second.end();
        };
        ProductNode start{neg(u), {0, 0, 0},
                          {has(1) ? 1 : 0, has(2) ? 1 : 0, has(3) ? 1 : 0}};
        if (!graph.is_live(start))
            throw std::logic_error("dead start node for neighbor " + u.str());

        EmbBasis eb = basis(roots);
        std::vector<double> p2(static_cast<std::size_t>(4 + depth));
        std::vector<std::complex<double>> p3(p2.size());
        for (std::size_t i = 0; i < p2.size(); ++i) {
            p2[i] = std::pow(eb.b2, static_cast<double>(i));
            p3[i] = std::pow(eb.b3, static_cast<double>(i));
        }
        PointCloud cloud;
        cloud.depth = depth;
        cloud.covering_radius = covering_radius(depth, roots);
        auto rec = [&](auto&& self, const ProductNode& node, int i, double r,
                       std::complex<double> z) -> void {
            if (i == 4 + depth) {
                cloud.points.push_back({r, z.real(), z.imag()});
                return;
            }
            std::size_t ui = static_cast<std::size_t>(i);
            for (const auto& [m, lab] : graph.successors(node))
                if (graph.is_live(m))
                    self(self, m, i + 1, r + lab.first * p2[ui],
                         z + std::complex<double>(lab.first) * p3[ui]);
        };
        rec(rec, start, 4, 0.0, {0.0, 0.0});
        return cloud;
    }
    ZAlphaInt v = neg(u);
    if (!digits_map.count(v))
        throw std::invalid_argument("not a neighbor: " + u.str());
    PointCloud cloud = boundary_piece(v, depth, roots);
    EmbeddedPoint t = embed(v, roots);
    for (EmbeddedPoint& p : cloud.points) {
        p.r -= t.r;
        p.z_re -= t.z_re;
        p.z_im -= t.z_im;
    }
    return cloud;
}

std::optional<EmbeddedPoint> singleton_value(const ZAlphaInt& u, const RootData& roots) {
    static const ZAlphaInt s1{1, 0, 1, 0};                         // 1 + alpha^2
    static const ZAlphaInt s2 = add(add(alpha_pow(-2), alpha_pow(-1)), alpha_pow(1));
    static const ZAlphaInt s3 =
        add(add(add(alpha_pow(-3), alpha_pow(-2)), alpha_pow(0)), alpha_pow(3));

    auto fraction = [&](const ZAlphaInt& num, const ZAlphaInt& den) {
        Interval r = eval_beta2(num, roots) / eval_beta2(den, roots);
        ComplexInterval n3 = eval_beta3(num, roots);
        ComplexInterval d3 = eval_beta3(den, roots);
        Interval norm = d3.abs2();
        Interval zre = (n3.re * d3.re + n3.im * d3.im) / norm;
        Interval zim = (n3.im * d3.re - n3.re * d3.im) / norm;
        return EmbeddedPoint{r.midpoint(), zre.midpoint(), zim.midpoint()};
    };
    ZAlphaInt one{1, 0, 0, 0};
    std::optional<EmbeddedPoint> val;
    ZAlphaInt pos = u;
    bool negated = false;
    if (!neighbor_digits().count(pos)) {
        pos = neg(u);
        negated = true;
        if (!neighbor_digits().count(pos))
            throw std::invalid_argument("not a neighbor: " + u.str());
    }
    if (pos == s1)
        val = fraction(alpha_pow(4), sub(one, alpha_pow(2)));
    else if (pos == s2)
        val = fraction(add(alpha_pow(5), alpha_pow(6)), sub(one, alpha_pow(4)));
    else if (pos == s3)
        val = fraction(add(alpha_pow(4), alpha_pow(5)), sub(one, alpha_pow(4)));
    if (!val) return std::nullopt;
    if (negated) {
        EmbeddedPoint t = embed(pos, roots);
        val->r -= t.r;
        val->z_re -= t.z_re;
        val->z_im -= t.z_im;
    }
    return val;
}

PointCloud apply_map(const AffineMap& m, const PointCloud& cloud, const RootData& roots) {
    EmbeddedPoint t = embed(m.translation, roots);
    EmbeddedPoint s = embed(alpha_pow(m.power), roots);
    std::complex<double> sc{s.z_re, s.z_im};
    std::complex<double> tc{t.z_re, t.z_im};
    PointCloud out;
    out.depth = cloud.depth;
    out.covering_radius = cloud.covering_radius * std::max(std::abs(s.r), std::abs(sc));
    out.points.reserve(cloud.points.size());
    for (const EmbeddedPoint& p : cloud.points) {
        std::complex<double> z{p.z_re, p.z_im};
        std::complex<double> w = tc + sc * z;
        out.points.push_back({t.r + s.r * p.r, w.real(), w.imag()});
    }
    return out;
}

GraphIFS ifs_maps() {
    auto tr = [](std::initializer_list<int> powers) {
        ZAlphaInt v;
        for (int p : powers) v = add(v, alpha_pow(p));
        return v;
    };
    GraphIFS ifs;
    ifs.f[0] = {tr({1}), 2};
    ifs.f[1] = {tr({1, 4}), 2};
    ifs.g[0] = {tr({5}), 4};
    ifs.g[1] = {tr({5, 6}), 4};
    ifs.g[2] = {ZAlphaInt{}, 1};
    ifs.g[3] = {tr({4}), 1};
    ifs.h[0] = {tr({4}), 4};
    ifs.h[1] = {tr({4, 6}), 4};
    ifs.h[2] = {tr({4, 5}), 4};
    ifs.h[3] = {tr({4, 5, 6}), 4};
    ifs.h[4] = {tr({0, 1, 2, 7}), 5};
    ifs.h[5] = ifs.h[2];
    ifs.h[6] = {tr({4, 7}), 4};
    ifs.h[7] = {tr({4, 8, 9}), 7};
    ifs.h[8] = ifs.h[0];
    ifs.h[9] = {tr({4, 5, 7}), 4};
    ifs.h[10] = {tr({4, 5, 8, 9}), 7};
    ifs.h[11] = {tr({0, 1, 6, 7}), 5};
    ifs.h[12] = {tr({4, 8}), 7};
    ifs.h[13] = ifs.h[7];
    ifs.h[14] = {tr({4, 5, 8}), 7};
    ifs.h[15] = ifs.h[10];
    ifs.h[16] = {tr({0, 1, 6}), 5};
    ifs.h[17] = ifs.h[11];
    return ifs;
}

std::pair<PointCloud, PointCloud> iterate_graph_ifs(int depth, const RootData& roots) {
    if (depth < 0)
        throw std::invalid_argument("depth must be >= 0");
    GraphIFS ifs = ifs_maps();
    // Seed: the fixed point of h0, z = alpha^4 + alpha^4 z.
    ZAlphaInt one{1, 0, 0, 0};
    Interval r = eval_beta2(alpha_pow(4), roots) /
                 eval_beta2(sub(one, alpha_pow(4)), roots);
    ComplexInterval n3 = eval_beta3(alpha_pow(4), roots);
    ComplexInterval d3 = eval_beta3(sub(one, alpha_pow(4)), roots);
    Interval norm = d3.abs2();
    EmbeddedPoint seed{r.midpoint(),
                      ((n3.re * d3.re + n3.im * d3.im) / norm).midpoint(),
                      ((n3.im * d3.re - n3.re * d3.im) / norm).midpoint()};
    PointCloud X, Y;
    X.points = {seed};
    Y.points = {seed};
    X.covering_radius = Y.covering_radius = 2 * covering_radius(0, roots);

    double m2 = std::max(std::abs(roots.beta2.lower()), std::abs(roots.beta2.upper()));
    double contraction = std::pow(m2, 4);  // every h map has power >= 4
    for (int it = 0; it < depth; ++it) {
        PointCloud nx, ny;
        auto extend = [&](PointCloud& dst, const AffineMap& m, const PointCloud& src) {
            PointCloud mapped = apply_map(m, src, roots);
            dst.points.insert(dst.points.end(), mapped.points.begin(), mapped.points.end());
        };
        for (int i = 0; i <= 4; ++i) extend(nx, ifs.h[static_cast<std::size_t>(i)], X);
        extend(nx, ifs.h[1], Y);
        extend(nx, ifs.h[3], Y);
        for (int i = 5; i <= 11; ++i) extend(ny, ifs.h[static_cast<std::size_t>(i)], Y);
        for (int i = 12; i <= 17; ++i) extend(ny, ifs.h[static_cast<std::size_t>(i)], X);
        nx.covering_radius = contraction * X.covering_radius;
        ny.covering_radius = contraction * std::max(X.covering_radius, Y.covering_radius);
        nx.depth = ny.depth = it + 1;
        X = std::move(nx);
        Y = std::move(ny);
    }
    return {X, Y};
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
    auto directed = [](const PointCloud& from, const PointCloud& to) {
        double worst = 0;
        for (const EmbeddedPoint& p : from.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const EmbeddedPoint& q : to.points) {
                double dr = p.r - q.r, dx = p.z_re - q.z_re, dy = p.z_im - q.z_im;
                double d = dr * dr + dx * dx + dy * dy;
                if (d < best) {
                    best = d;
                    if (best <= worst) break;  // cannot raise the max
                }
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(a, b), directed(b, a));
}

RelationReport verify_relation(char rel, int depth, const RootData& roots) {
    GraphIFS ifs = ifs_maps();
    ZAlphaInt one{1, 0, 0, 0};
    ZAlphaInt a1 = alpha_pow(1), a2 = alpha_pow(2);
    PointCloud X = boundary_piece(add(add(one, a1), a2), depth, roots);
    PointCloud Y = boundary_piece(add(one, a1), depth, roots);

    auto merge = [](std::initializer_list<const PointCloud*> parts) {
        PointCloud out;
        for (const PointCloud* p : parts) {
            out.points.insert(out.points.end(), p->points.begin(), p->points.end());
            out.covering_radius = std::max(out.covering_radius, p->covering_radius);
            out.depth = p->depth;
        }
        return out;
    };

    RelationReport report;
    report.relation = rel;
    PointCloud lhs, rhs;
    switch (rel) {
        case 'a': {
            lhs = boundary_piece(one, depth, roots);
            rhs = apply_map(AffineMap{one, 1}, X, roots);
            break;
        }
        case 'b': {
            // E(alpha^2) = -1/alpha - 1 - alpha + X/alpha; the translation
            // reduces exactly to alpha^2 - alpha^3 in the basis.
            lhs = boundary_piece(a2, depth, roots);
            ZAlphaInt t = neg(add(add(alpha_pow(-1), one), a1));
            rhs = apply_map(AffineMap{t, -1}, X, roots);
            break;
        }
        case 'f': {
            lhs = boundary_piece(a1, depth, roots);
            PointCloud r0 = apply_map(ifs.f[0], X, roots);
            PointCloud r1 = apply_map(ifs.f[1], X, roots);
            PointCloud r2 = apply_map(ifs.f[1], Y, roots);
            rhs = merge({&r0, &r1, &r2});
            break;
        }
        case 'g': {
            lhs = boundary_piece(add(a1, a2), depth, roots);
            PointCloud r0 = apply_map(ifs.g[0], X, roots);
            PointCloud r1 = apply_map(ifs.g[1], X, roots);
            PointCloud r2 = apply_map(ifs.g[1], Y, roots);
            PointCloud r3 = apply_map(ifs.g[2], Y, roots);
            PointCloud r4 = apply_map(ifs.g[3], Y, roots);
            rhs = merge({&r0, &r1, &r2, &r3, &r4});
            break;
        }
        case 'h': {
            lhs = X;
            std::vector<PointCloud> parts;
            for (int i = 0; i <= 4; ++i)
                parts.push_back(apply_map(ifs.h[static_cast<std::size_t>(i)], X, roots));
            parts.push_back(apply_map(ifs.h[1], Y, roots));
            parts.push_back(apply_map(ifs.h[3], Y, roots));
            rhs.depth = depth;
            for (const PointCloud& p : parts) {
                rhs.points.insert(rhs.points.end(), p.points.begin(), p.points.end());
                rhs.covering_radius = std::max(rhs.covering_radius, p.covering_radius);
            }
            break;
        }
        case 'i': {
            lhs = Y;
            auto build = [&](bool twelfth_on_x) {
                PointCloud out;
                out.depth = depth;
                for (int i = 5; i <= 11; ++i) {
                    PointCloud p = apply_map(ifs.h[static_cast<std::size_t>(i)], Y, roots);
                    out.points.insert(out.points.end(), p.points.begin(), p.points.end());
                    out.covering_radius = std::max(out.covering_radius, p.covering_radius);
                }
                for (int i = 12; i <= 17; ++i) {
                    const PointCloud& src = (i == 12 && !twelfth_on_x) ? Y : X;
                    PointCloud p = apply_map(ifs.h[static_cast<std::size_t>(i)], src, roots);
                    out.points.insert(out.points.end(), p.points.begin(), p.points.end());
                    out.covering_radius = std::max(out.covering_radius, p.covering_radius);
                }
                return out;
            };
            PointCloud rx = build(true);
            PointCloud ry = build(false);
            double dx = hausdorff_distance(lhs, rx);
            double dy = hausdorff_distance(lhs, ry);
            report.tolerance = lhs.covering_radius + std::max(rx.covering_radius, ry.covering_radius);
            report.hausdorff = std::min(dx, dy);
            report.pass = report.hausdorff <= report.tolerance;
            char buf[160];
            snprintf(buf, sizeof buf,
                     "twelfth map on X: %.3e; on Y: %.3e (both vs tolerance %.3e)",
                     dx, dy, report.tolerance);
            report.detail = buf;
            return report;
        }
        default:
            throw std::invalid_argument("unknown relation identifier");
    }
    report.hausdorff = hausdorff_distance(lhs, rhs);
    report.tolerance = lhs.covering_radius + rhs.covering_radius;
    report.pass = report.hausdorff <= report.tolerance;
    return report;
}

ZAlphaInt classify(const PairWord& p) {
    if (!check_equal(p))
        throw std::invalid_argument("classify requires an equal-valued pair");
    // First component must carry no digit below index 4.
    for (int i = std::min(p.first.start_index, p.second.start_index); i < 4; ++i)
        if (p.first.digit_at(i) != 0)
            throw std::invalid_argument("first component must start at index 4");

    auto e = [&](int i) { return p.first.digit_at(i); };
    auto ep = [&](int i) { return p.second.digit_at(i); };

    // Effective leading index of the second component.
    int l = p.second.start_index;
    while (l < 4 && ep(l) == 0) ++l;
    if (l >= 4)
        throw std::invalid_argument("second component carries no digit below index 4");
    if (l < -3)
        throw std::invalid_argument("leading index below -3 is impossible");

    ZAlphaInt one{1, 0, 0, 0};
    ZAlphaInt exc2v = add(add(alpha_pow(-2), alpha_pow(-1)), alpha_pow(1));
    ZAlphaInt exc3v = add(add(add(alpha_pow(-3), alpha_pow(-2)), one), alpha_pow(3));
    if (l == -3) return exc3v;
    if (l == -2) return exc2v;
    if (l == -1) {
        // Forced prefix eps'_{-1..3} = 1,1,0,1,0 and suffix a w w w ... with
        // w = (0,1)(1,0)(1,0)(0,1); a = (1,1) or (0,0) at index 4.
        int want[5] = {1, 1, 0, 1, 0};
        for (int i = -1; i <= 3; ++i)
            if (ep(i) != want[i + 1])
                throw std::invalid_argument("impossible digit pattern for l = -1");
        if (e(4) != ep(4))
            throw std::invalid_argument("impossible digit pattern for l = -1");
        return e(4) == 1 ? neg(add(alpha_pow(1), alpha_pow(2))) : neg(exc3v);
    }
    // l >= 0.
    if (ep(3) == 0)
        return ZAlphaInt{ep(0), ep(1), ep(2), 0};
    if (ep(4) == 0)
        return ZAlphaInt{ep(0) - 1, ep(1) - 1, ep(2) - 1, 0};
    if (ep(5) == 0) {
        if (ep(1) != 0 && ep(2) != 0)
            throw std::invalid_argument("impossible digit pattern (eps'_1 = eps'_2 = 1)");
        if (ep(0) == 0) return ZAlphaInt{0, ep(1) - 1, ep(2) - 1, 0};
        return neg(exc2v);
    }
    // eps'_3 = eps'_4 = eps'_5 = 1 forces eps'_2 = eps'_6 = 0.
    if (ep(2) != 0 || ep(6) != 0)
        throw std::invalid_argument("impossible digit pattern (run of ones)");
    if (ep(0) == 0 && ep(1) == 0) return ZAlphaInt{0, 0, -1, 0};
    throw std::invalid_argument("no infinite automaton path for this pattern");
}

}  // namespace rauzy4
