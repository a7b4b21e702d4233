#pragma once

#include "rauzy4/boundary.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/zalpha.hpp"

#include <array>
#include <vector>

namespace rauzy4 {

/// Empirical occupancy check of the lattice tiling by G = Z + Z alpha + Z alpha^2
/// translates of the central tile.  Sampling-based: the report states
/// observed fractions, never proof.
struct TilingReport {
    int radius = 0;
    int grid = 0;
    int depth = 0;
    std::size_t occupied_cells = 0;
    std::size_t multi_cells = 0;
    double multi_fraction = 0;
    /// Translates (m0, m1, m2) whose tile visibly intersects the central
    /// tile (minimum point distance within twice the covering radius).
    /// Scanned over the |mi| <= radius box extended by the neighbor set.
    std::vector<std::array<int, 3>> intersecting;
};

/// Coordinates (m0, m1, m2) as a lattice element m0 + m1 alpha + m2 alpha^2.
ZAlphaInt translate_of(const std::array<int, 3>& m);

TilingReport tiling_report(int radius, int grid, int depth, const RootData& roots);

}  // namespace rauzy4
