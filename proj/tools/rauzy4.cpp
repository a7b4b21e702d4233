// rauzy4 — command-line surface of the rauzy4 library.
//
// Subcommands: expand, check-equal, automaton, render, tiling, verify.
// Exit codes: 0 success, 1 check failure, 2 usage/parse error.

#include "rauzy4/automaton.hpp"
#include "rauzy4/boundary.hpp"
#include "rauzy4/equality.hpp"
#include "rauzy4/greedy.hpp"
#include "rauzy4/roots.hpp"
#include "rauzy4/tiling.hpp"
#include "rauzy4/verify.hpp"
#include "rauzy4/words.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rauzy4;

constexpr mpfr_prec_t kPrec = 256;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return 2;
}

/// Writes text to --out, or stdout when no path was given.
int emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) return usage_error("cannot open output file: " + out_path);
    os << text;
    if (!os.good()) return usage_error("write failed: " + out_path);
    return 0;
}

// ---- rendering -----------------------------------------------------------

struct RenderConfig {
    int depth = 10;
    int width = 600;
    int height = 600;
    std::string projection = "z";  // z = (Re z, Im z), rx = (r, Re z), ry = (r, Im z)
    std::vector<double> window;    // x0 x1 y0 y1; empty = auto from cloud
};

std::pair<double, double> project(const EmbeddedPoint& p, const std::string& projection) {
    if (projection == "z") return {p.z_re, p.z_im};
    if (projection == "rx") return {p.r, p.z_re};
    return {p.r, p.z_im};
}

std::string render_ppm(const PointCloud& cloud, const RenderConfig& cfg) {
    double x0, x1, y0, y1;
    if (cfg.window.size() == 4) {
        x0 = cfg.window[0];
        x1 = cfg.window[1];
        y0 = cfg.window[2];
        y1 = cfg.window[3];
    } else {
        x0 = y0 = 1e300;
        x1 = y1 = -1e300;
        for (const EmbeddedPoint& p : cloud.points) {
            auto [x, y] = project(p, cfg.projection);
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
        double pad = std::max(cloud.covering_radius, 1e-6) +
                     0.02 * std::max(x1 - x0, y1 - y0);
        x0 -= pad;
        x1 += pad;
        y0 -= pad;
        y1 += pad;
    }
    std::string pixels(static_cast<std::size_t>(cfg.width) * cfg.height * 3,
                       static_cast<char>(0xff));
    for (const EmbeddedPoint& p : cloud.points) {
        auto [x, y] = project(p, cfg.projection);
        int px = static_cast<int>((x - x0) / (x1 - x0) * cfg.width);
        int py = static_cast<int>((y1 - y) / (y1 - y0) * cfg.height);
        if (px < 0 || px >= cfg.width || py < 0 || py >= cfg.height) continue;
        std::size_t off = 3 * (static_cast<std::size_t>(py) * cfg.width + px);
        pixels[off] = pixels[off + 1] = pixels[off + 2] = 0;
    }
    std::ostringstream os;
    os << "P6\n" << cfg.width << ' ' << cfg.height << "\n255\n" << pixels;
    return os.str();
}

std::string render_csv(const PointCloud& cloud) {
    std::ostringstream os;
    os.precision(17);
    os << "# depth=" << cloud.depth << " covering_radius=" << cloud.covering_radius
       << "\nr,z_re,z_im\n";
    for (const EmbeddedPoint& p : cloud.points)
        os << p.r << ',' << p.z_re << ',' << p.z_im << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, expansions, and boundary geometry of the "
                 "quartic Pisot system x^4 = x^3 + x^2 + x + 1"};
    app.require_subcommand(1);

    // expand
    std::string expand_x;
    int expand_digits = 16;
    auto* expand = app.add_subcommand("expand", "Greedy beta-expansion of a decimal");
    expand->add_option("x", expand_x, "Positive decimal literal")->required();
    expand->add_option("--digits,--depth", expand_digits, "Number of digits")
        ->default_val(16);

    // check-equal
    std::string word1, word2;
    auto* check = app.add_subcommand(
        "check-equal", "Decide equality of two eventually periodic alpha-expansions");
    check
        ->add_option("word1", word1,
                     "First word, e.g. \"index=4 pre= per=1100\"")
        ->required();
    check->add_option("word2", word2, "Second word")->required();

    // automaton
    std::string aut_format = "edges", aut_out;
    auto* automaton = app.add_subcommand("automaton", "Export the equal-value automaton");
    automaton->add_option("--format", aut_format, "dot | edges | stats")
        ->check(CLI::IsMember({"dot", "edges", "stats"}))
        ->default_val("edges");
    automaton->add_option("--out", aut_out, "Output file (default stdout)");

    // render
    std::string render_target, render_piece, render_out, render_format = "ppm";
    RenderConfig cfg;
    auto* render = app.add_subcommand("render", "Render a point cloud to PPM or CSV");
    render->add_option("target", render_target, "E | boundary | piece | X | Y")
        ->check(CLI::IsMember({"E", "boundary", "piece", "X", "Y"}))
        ->required();
    render->add_option("code", render_piece,
                       "Region label for target 'piece' (e.g. 0000100 or m0000100)");
    render->add_option("--depth", cfg.depth, "Digit depth")->default_val(10);
    render->add_option("--out", render_out, "Output file (default stdout)");
    render->add_option("--format", render_format, "ppm | csv")
        ->check(CLI::IsMember({"ppm", "csv"}))
        ->default_val("ppm");
    render->add_option("--width", cfg.width, "Image width")->default_val(600);
    render->add_option("--height", cfg.height, "Image height")->default_val(600);
    render->add_option("--projection", cfg.projection, "z | rx | ry")
        ->check(CLI::IsMember({"z", "rx", "ry"}))
        ->default_val("z");
    render->add_option("--window", cfg.window, "x0 x1 y0 y1 (default: auto)")
        ->expected(4);

    // tiling
    int til_radius = 1, til_grid = 32, til_depth = 10;
    auto* tiling = app.add_subcommand("tiling", "Empirical lattice-tiling occupancy report");
    tiling->add_option("--radius", til_radius, "Translate box radius")->default_val(1);
    tiling->add_option("--grid", til_grid, "Grid resolution")->default_val(32);
    tiling->add_option("--depth", til_depth, "Digit depth")->default_val(10);

    // verify
    std::uint64_t seed = kDefaultSeed;
    std::string verify_fixture;
    auto* verify = app.add_subcommand("verify", "Run the full acceptance suite");
    verify->add_option("--seed", seed, "Seed of the randomized equality sampling")
        ->default_val(kDefaultSeed);
    verify->add_option("--fixture", verify_fixture,
                       "Override the built-in reference edge list with a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) {
            if (expand_digits < 1) return usage_error("--digits must be >= 1");
            DigitString d = greedy_expand(expand_x, expand_digits);
            std::cout << format_digit_string(d) << '\n';
            return 0;
        }
        if (*check) {
            PairWord p{parse_word(word1), parse_word(word2)};
            if (!is_admissible(p.first) || !is_admissible(p.second))
                return usage_error("word contains the forbidden factor 1111");
            bool equal = check_equal(p);
            std::cout << (equal ? "equal" : "distinct") << '\n';
            return equal ? 0 : 1;
        }
        if (*automaton) {
            Automaton aut = build_automaton();
            std::string text;
            if (aut_format == "dot") {
                text = export_graph(aut);
            } else if (aut_format == "edges") {
                text = export_edges(aut);
            } else {
                Automaton reach = reachable_subautomaton(aut);
                std::ostringstream os;
                os << "states=" << aut.states.size() << "\nedges=" << aut.edges.size()
                   << "\nreachable=" << reach.states.size() << '\n';
                text = os.str();
            }
            return emit(aut_out, text);
        }
        if (*render) {
            if (cfg.depth < 1) return usage_error("--depth must be >= 1");
            if (cfg.width < 1 || cfg.height < 1)
                return usage_error("image dimensions must be positive");
            RootData roots = compute_roots(kPrec);
            PointCloud cloud;
            if (render_target == "E") {
                cloud = central_tile(cfg.depth, roots);
            } else if (render_target == "piece") {
                if (render_piece.empty())
                    return usage_error("target 'piece' needs a region label");
                cloud = boundary_piece(decode_annexe_state(render_piece), cfg.depth, roots);
            } else if (render_target == "boundary") {
                double radius = 0;
                for (const ZAlphaInt& u : neighbor_set()) {
                    PointCloud piece = boundary_piece(u, cfg.depth, roots);
                    radius = std::max(radius, piece.covering_radius);
                    cloud.points.insert(cloud.points.end(), piece.points.begin(),
                                        piece.points.end());
                }
                cloud.covering_radius = radius;
                cloud.depth = cfg.depth;
            } else {
                auto [X, Y] = iterate_graph_ifs(cfg.depth, roots);
                cloud = render_target == "X" ? X : Y;
            }
            std::string text =
                render_format == "csv" ? render_csv(cloud) : render_ppm(cloud, cfg);
            return emit(render_out, text);
        }
        if (*tiling) {
            if (til_radius < 0 || til_grid < 1 || til_depth < 1)
                return usage_error("tiling parameters out of range");
            RootData roots = compute_roots(kPrec);
            TilingReport r = tiling_report(til_radius, til_grid, til_depth, roots);
            std::cout << "radius=" << r.radius << " grid=" << r.grid
                      << " depth=" << r.depth << '\n'
                      << "occupied_cells=" << r.occupied_cells << '\n'
                      << "multi_cells=" << r.multi_cells << '\n'
                      << "multi_fraction=" << r.multi_fraction << '\n'
                      << "observed fractions are sampling estimates, not proof\n"
                      << "intersecting_translates=" << r.intersecting.size() << '\n';
            for (const auto& m : r.intersecting)
                std::cout << "  m=(" << m[0] << ',' << m[1] << ',' << m[2] << ")\n";
            return 0;
        }
        if (*verify) {
            std::string fixture;
            if (!verify_fixture.empty()) {
                std::ifstream is(verify_fixture, std::ios::binary);
                if (!is) return usage_error("cannot read fixture: " + verify_fixture);
                std::ostringstream buf;
                buf << is.rdbuf();
                fixture = buf.str();
            }
            int failures = run_verification(std::cout, fixture, seed);
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
