#pragma once

#include "rauzy4/equality.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/words.hpp"
#include "rauzy4/zalpha.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rauzy4 {

/// The 18 lattice translates u with E intersect (E + u) nonempty:
/// +-{1, 1+a, 1+a^2, 1+a+a^2, 1+2a+a^2, a, a+a^2, a^2, -1+a^2}.
std::vector<ZAlphaInt> neighbor_set();

/// Finite approximation of a compact subset of R x C: every point of the
/// set lies within covering_radius of some listed point.
struct PointCloud {
    std::vector<EmbeddedPoint> points;
    double covering_radius = 0;
    int depth = 0;
};

/// Tail bound for truncating alpha-series at index 4 + depth.
double covering_radius(int depth, const RootData& roots);

/// Cloud of the full central tile E at the given digit depth.
PointCloud central_tile(int depth, const RootData& roots);

/// Cloud of the region E(u) = E intersect (E + u): partial sums over
/// admissible automaton path prefixes realizing u.  Negative u uses the
/// reflection E(-u) = E(u) - u.
PointCloud boundary_piece(const ZAlphaInt& u, int depth, const RootData& roots);

/// Closed-form point for the six singleton regions; nullopt otherwise.
/// Throws if u is not a neighbor.
std::optional<EmbeddedPoint> singleton_value(const ZAlphaInt& u, const RootData& roots);

/// z -> translation + alpha^power z, acting on R x C componentwise.
struct AffineMap {
    ZAlphaInt translation;
    int power = 1;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

PointCloud apply_map(const AffineMap& m, const PointCloud& cloud, const RootData& roots);

/// The boundary IFS maps of the X/Y system.
struct GraphIFS {
    std::array<AffineMap, 2> f;
    std::array<AffineMap, 4> g;
    std::array<AffineMap, 18> h;
};

GraphIFS ifs_maps();

/// Iterates the coupled substitution X' = h0..h4(X) u h1(Y) u h3(Y),
/// Y' = h5..h11(Y) u h12..h17(X) from point seeds.
std::pair<PointCloud, PointCloud> iterate_graph_ifs(int depth, const RootData& roots);

/// Symmetric Hausdorff distance between two clouds (exact over the listed
/// points; compare against the sum of covering radii).
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

struct RelationReport {
    char relation = 0;
    double hausdorff = 0;
    double tolerance = 0;
    bool pass = false;
    std::string detail;
};

/// Checks one of the set equations a, b, f, g, h, i by building both
/// sides as clouds.  For relation i both transcriptions of the twelfth
/// map's source (X and Y) are evaluated and the detail records each.
RelationReport verify_relation(char rel, int depth, const RootData& roots);

/// Neighbor region containing the boundary point encoded by the pair:
/// first component starts at index 4, second at index l < 4 with leading
/// digit 1 and equal value.  Follows the four-case analysis on l and the
/// digits eps'_3..eps'_6; impossible configurations throw.
ZAlphaInt classify(const PairWord& p);

}  // namespace rauzy4
