#pragma once

#include "rauzy4/zalpha.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace rauzy4 {

/// Labeled edge s --(a,b)--> t with t = alpha^-1 s + (a-b) alpha^3.
struct Edge {
    ZAlphaInt from;
    int a = 0, b = 0;
    ZAlphaInt to;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// The equal-value automaton: 35 states, edges over {0,1}^2 labels,
/// initial state 0.  Not deterministic in (from, label).
struct Automaton {
    std::vector<ZAlphaInt> states;
    std::vector<Edge> edges;
    ZAlphaInt initial;

    bool contains(const ZAlphaInt& s) const;
    std::vector<Edge> edges_from(const ZAlphaInt& s) const;
};

/// The 35-element state set: zero, +-(14 nonzero {0,1}^4 combinations
/// excluding 1111), and +- the three exceptional values.
std::vector<ZAlphaInt> build_state_set();

/// One application of the difference recurrence
/// A' = alpha^-1 A + (a - b) alpha^3.
ZAlphaInt step(const ZAlphaInt& A, int a, int b);

/// All edges (s, (a,b), t) with s, t in the state set.
Automaton build_automaton();

/// Restriction to states reachable from the initial state.
Automaton reachable_subautomaton(const Automaton& aut);

/// Canonical 7-position label (coefficients of alpha^-3..alpha^3, optional
/// m-prefix for negatives); inverse of decode_annexe_state on the state set.
std::string encode_annexe_state(const ZAlphaInt& s);

/// DOT digraph with nodes named by encode_annexe_state.
std::string export_graph(const Automaton& aut);

/// Line-oriented edge list: one edge per line "<from-code> <a><b> <to-code>".
std::string export_edges(const Automaton& aut);

}  // namespace rauzy4
