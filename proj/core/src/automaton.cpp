#include "rauzy4/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rauzy4 {

namespace {

std::vector<ZAlphaInt> exceptional_values() {
    ZAlphaInt exc1 = add(add(alpha_pow(-1), alpha_pow(0)), alpha_pow(2));
    ZAlphaInt exc2 = add(add(alpha_pow(-2), alpha_pow(-1)), alpha_pow(1));
    ZAlphaInt exc3 = add(add(add(alpha_pow(-3), alpha_pow(-2)), alpha_pow(0)), alpha_pow(3));
    return {exc1, exc2, exc3};
}

}  // namespace

bool Automaton::contains(const ZAlphaInt& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
}

std::vector<Edge> Automaton::edges_from(const ZAlphaInt& s) const {
    std::vector<Edge> out;
    for (const Edge& e : edges)
        if (e.from == s) out.push_back(e);
    return out;
}

std::vector<ZAlphaInt> build_state_set() {
    std::vector<ZAlphaInt> states;
    states.push_back(ZAlphaInt{});
    for (int mask = 1; mask < 15; ++mask) {  // nonzero {0,1}^4 except 1111
        ZAlphaInt v{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
        states.push_back(v);
        states.push_back(neg(v));
    }
    for (const ZAlphaInt& e : exceptional_values()) {
        states.push_back(e);
        states.push_back(neg(e));
    }
    return states;
}

ZAlphaInt step(const ZAlphaInt& A, int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::invalid_argument("edge label digits must be 0 or 1");
    ZAlphaInt t = mul_alpha_inv(A);
    int d = a - b;
    if (d == 1) return add(t, alpha_pow(3));
    if (d == -1) return sub(t, alpha_pow(3));
    return t;
}

Automaton build_automaton() {
    Automaton aut;
    aut.states = build_state_set();
    aut.initial = ZAlphaInt{};
    std::unordered_set<ZAlphaInt, ZAlphaHash> member(aut.states.begin(), aut.states.end());
    for (const ZAlphaInt& s : aut.states)
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                ZAlphaInt t = step(s, a, b);
                if (member.count(t)) aut.edges.push_back(Edge{s, a, b, t});
            }
    return aut;
}

Automaton reachable_subautomaton(const Automaton& aut) {
    std::unordered_set<ZAlphaInt, ZAlphaHash> seen{aut.initial};
    std::deque<ZAlphaInt> queue{aut.initial};
    std::unordered_map<ZAlphaInt, std::vector<Edge>, ZAlphaHash> adj;
    for (const Edge& e : aut.edges) adj[e.from].push_back(e);
    while (!queue.empty()) {
        ZAlphaInt s = queue.front();
        queue.pop_front();
        for (const Edge& e : adj[s])
            if (seen.insert(e.to).second) queue.push_back(e.to);
    }
    Automaton out;
    out.initial = aut.initial;
    for (const ZAlphaInt& s : aut.states)
        if (seen.count(s)) out.states.push_back(s);
    for (const Edge& e : aut.edges)
        if (seen.count(e.from) && seen.count(e.to)) out.edges.push_back(e);
    return out;
}

std::string encode_annexe_state(const ZAlphaInt& s) {
    // Among all subsets of {alpha^-3..alpha^3} summing to s (or -s, with
    // m-prefix), pick the fewest-terms one, ties broken by smallest mask.
    // This reproduces the label scheme of the reference diagram.
    static const std::map<ZAlphaInt, std::string> table = [] {
        std::map<ZAlphaInt, std::string> best;
        std::map<ZAlphaInt, std::pair<int, int>> rank;  // (terms, mask)
        for (int mask = 1; mask < 128; ++mask) {
            ZAlphaInt v;
            std::string code(7, '0');
            int n = 0;
            for (int i = 0; i < 7; ++i)
                if (mask >> i & 1) {
                    v = add(v, alpha_pow(i - 3));
                    code[static_cast<std::size_t>(i)] = '1';
                    ++n;
                }
            auto it = rank.find(v);
            if (it == rank.end() || std::pair{n, mask} < it->second) {
                rank[v] = {n, mask};
                best[v] = code;
            }
        }
        return best;
    }();
    if (s.is_zero()) return "0000000";
    if (auto it = table.find(s); it != table.end()) return it->second;
    if (auto it = table.find(neg(s)); it != table.end()) return "m" + it->second;
    throw std::invalid_argument("no label for " + s.str());
}

std::string export_graph(const Automaton& aut) {
    std::ostringstream os;
    os << "digraph automaton {\n";
    for (const ZAlphaInt& s : aut.states)
        os << "  \"" << encode_annexe_state(s) << "\";\n";
    for (const Edge& e : aut.edges)
        os << "  \"" << encode_annexe_state(e.from) << "\" -> \""
           << encode_annexe_state(e.to) << "\" [label=\"" << e.a << e.b << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_edges(const Automaton& aut) {
    std::vector<std::string> lines;
    for (const Edge& e : aut.edges) {
        std::ostringstream os;
        os << encode_annexe_state(e.from) << ' ' << e.a << e.b << ' '
           << encode_annexe_state(e.to);
        lines.push_back(os.str());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace rauzy4
