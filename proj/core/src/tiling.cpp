#include "rauzy4/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace rauzy4 {

namespace {

double min_distance_to_translate(const PointCloud& tile, const EmbeddedPoint& offset,
                                 double good_enough) {
    // min over p, q in tile of |p - (q + offset)|; stops early once the
    // minimum provably falls below good_enough.
    double best = std::numeric_limits<double>::infinity();
    double stop = good_enough * good_enough;
    for (const EmbeddedPoint& p : tile.points) {
        for (const EmbeddedPoint& q : tile.points) {
            double dr = p.r - q.r - offset.r;
            double dx = p.z_re - q.z_re - offset.z_re;
            double dy = p.z_im - q.z_im - offset.z_im;
            double d = dr * dr + dx * dx + dy * dy;
            if (d < best) best = d;
        }
        if (best <= stop) break;
    }
    return std::sqrt(best);
}

}  // namespace

ZAlphaInt translate_of(const std::array<int, 3>& m) {
    return ZAlphaInt{m[0], m[1], m[2], 0};
}

TilingReport tiling_report(int radius, int grid, int depth, const RootData& roots) {
    if (radius < 0 || grid < 1 || depth < 1)
        throw std::invalid_argument("tiling_report: bad parameters");
    PointCloud tile = central_tile(depth, roots);
    double covrad = tile.covering_radius;

    // Translate list: the |mi| <= radius box, extended by the neighbor set
    // (two neighbors lie outside the radius-1 box).  Radius 0 means a
    // single isolated tile, so no extension.
    std::set<std::array<int, 3>> translates;
    for (int m0 = -radius; m0 <= radius; ++m0)
        for (int m1 = -radius; m1 <= radius; ++m1)
            for (int m2 = -radius; m2 <= radius; ++m2)
                translates.insert({m0, m1, m2});
    if (radius >= 1) {
        for (const ZAlphaInt& u : neighbor_set()) {
            if (u.c3 != 0) continue;  // all neighbors satisfy c3 = 0
            translates.insert({static_cast<int>(u.c0), static_cast<int>(u.c1),
                               static_cast<int>(u.c2)});
        }
    }

    TilingReport report;
    report.radius = radius;
    report.grid = grid;
    report.depth = depth;

    // Bounding window over all translated tiles.
    double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
    std::map<std::array<int, 3>, EmbeddedPoint> offsets;
    for (const auto& m : translates) {
        EmbeddedPoint t = embed(translate_of(m), roots);
        offsets[m] = t;
        for (const EmbeddedPoint& p : tile.points) {
            double c[3] = {p.r + t.r, p.z_re + t.z_re, p.z_im + t.z_im};
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], c[i]);
                hi[i] = std::max(hi[i], c[i]);
            }
        }
    }
    for (int i = 0; i < 3; ++i) {
        lo[i] -= 1e-9;
        hi[i] += 1e-9;
    }

    // Occupancy: which grid cells each translated tile touches.
    std::map<std::array<int, 3>, int> counts;
    for (const auto& m : translates) {
        const EmbeddedPoint& t = offsets[m];
        std::set<std::array<int, 3>> cells;
        for (const EmbeddedPoint& p : tile.points) {
            double c[3] = {p.r + t.r, p.z_re + t.z_re, p.z_im + t.z_im};
            std::array<int, 3> cell;
            for (int i = 0; i < 3; ++i)
                cell[static_cast<std::size_t>(i)] = static_cast<int>(
                    std::floor((c[i] - lo[i]) / (hi[i] - lo[i]) * grid));
            cells.insert(cell);
        }
        for (const auto& cell : cells) ++counts[cell];
    }
    report.occupied_cells = counts.size();
    for (const auto& [cell, n] : counts)
        if (n > 1) ++report.multi_cells;
    report.multi_fraction = report.occupied_cells == 0
                                ? 0.0
                                : static_cast<double>(report.multi_cells) /
                                      static_cast<double>(report.occupied_cells);

    // Observed intersections with the central tile.
    for (const auto& m : translates) {
        if (m == std::array<int, 3>{0, 0, 0}) continue;
        if (min_distance_to_translate(tile, offsets[m], 2 * covrad) <= 2 * covrad)
            report.intersecting.push_back(m);
    }
    return report;
}

}  // namespace rauzy4
