// Acceptance gate: runs every check and prints one machine-readable line
// per criterion.  One check is expected to come out red: the transcribed
// reference exclusion table claims the candidate alpha^-1 + 1 dies at
// search depth 2, but the node 2*alpha reached on that level has
// |2*beta2| = 1.5496 and |2*beta3| = 1.6366, both below the pruning
// bounds (1.6004 and 1.8120), so no certificate at depth 2 can exist.
// The certified search completes at depth 3 instead.  This binary exits 0
// iff every other check passes and the exclusion check fails for exactly
// that documented reason.

#include "rauzy4/verify.hpp"

#include <iostream>
#include <string>

int main() {
    int unexpected = 0;
    bool exclusion_seen = false;
    for (const rauzy4::CheckResult& r : rauzy4::run_acceptance_checks()) {
        std::cout << "CHECK " << r.name << ' ' << (r.pass ? "PASS" : "FAIL") << ' '
                  << r.detail << '\n';
        if (r.name == "exclusion") {
            exclusion_seen = true;
            bool documented = !r.pass &&
                              r.detail.find("certificate depth 3") != std::string::npos;
            if (!documented) {
                std::cout << "NOTE exclusion check did not fail in the documented way\n";
                ++unexpected;
            } else {
                std::cout << "NOTE exclusion FAIL is expected: the transcribed "
                             "reference table lists depth 2 for alpha^-1 + 1, but "
                             "its 2*alpha node is below both pruning bounds; the "
                             "certified depth is 3\n";
            }
        } else if (!r.pass) {
            ++unexpected;
        }
    }
    if (!exclusion_seen) ++unexpected;
    std::cout << (unexpected == 0 ? "ACCEPTANCE OK (1 documented red)\n"
                                  : "ACCEPTANCE FAILED\n");
    return unexpected == 0 ? 0 : 1;
}
