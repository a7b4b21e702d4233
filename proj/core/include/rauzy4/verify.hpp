#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rauzy4 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The transcribed reference edge list (72 lines, one edge per line in the
/// format "<from-code> <ab> <to-code>").
const std::string& annexe_edge_fixture();

/// Default seed of the randomized equality-oracle check.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026u;

/// Runs the full acceptance suite.  fixture_text overrides the built-in
/// edge list when nonempty (used for fault injection in tests); seed
/// drives the randomized equality-oracle sampling.
std::vector<CheckResult> run_acceptance_checks(const std::string& fixture_text = "",
                                               std::uint64_t seed = kDefaultSeed);

/// Prints one "CHECK <name> PASS|FAIL <detail>" line per criterion;
/// returns the number of failures.
int run_verification(std::ostream& os, const std::string& fixture_text = "",
                     std::uint64_t seed = kDefaultSeed);

}  // namespace rauzy4
