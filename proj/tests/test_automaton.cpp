#include "rauzy4/automaton.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

using namespace rauzy4;

namespace {

using EdgeKey = std::tuple<ZAlphaInt, int, int, ZAlphaInt>;

std::set<EdgeKey> read_fixture_edges() {
    std::ifstream is(std::string(RAUZY4_FIXTURE_DIR) + "/annexe_edges.txt");
    REQUIRE(is.good());
    std::set<EdgeKey> out;
    std::string from, label, to;
    while (is >> from >> label >> to)
        out.insert({decode_annexe_state(from), label[0] - '0', label[1] - '0',
                    decode_annexe_state(to)});
    return out;
}

}  // namespace

TEST_CASE("state set has 35 distinct elements closed under negation") {
    auto states = build_state_set();
    std::set<ZAlphaInt> set(states.begin(), states.end());
    CHECK(states.size() == 35);
    CHECK(set.size() == 35);
    for (const ZAlphaInt& s : set) CHECK(set.count(neg(s)) == 1);
    CHECK(set.count(ZAlphaInt{}) == 1);
    CHECK(set.count(ZAlphaInt{1, 2, 1, 0}) == 1);
    CHECK(set.count(ZAlphaInt{-1, 0, 1, 0}) == 1);
    CHECK(set.count(ZAlphaInt{0, -1, 0, 1}) == 1);
}

TEST_CASE("step implements the difference recurrence") {
    // step(A, a, b) = alpha^-1 A + (a - b) alpha^3.
    ZAlphaInt A{1, 0, 1, 0};
    CHECK(step(A, 0, 0) == mul_alpha_inv(A));
    CHECK(step(A, 1, 1) == mul_alpha_inv(A));
    CHECK(step(A, 1, 0) == add(mul_alpha_inv(A), alpha_pow(3)));
    CHECK(step(A, 0, 1) == sub(mul_alpha_inv(A), alpha_pow(3)));
    CHECK(step(ZAlphaInt{}, 1, 0) == alpha_pow(3));
}

TEST_CASE("automaton edges match the transcribed reference list") {
    Automaton aut = build_automaton();
    Automaton reach = reachable_subautomaton(aut);
    CHECK(reach.states.size() == 35);

    std::set<EdgeKey> generated;
    for (const Edge& e : reach.edges) generated.insert({e.from, e.a, e.b, e.to});
    std::set<EdgeKey> fixture = read_fixture_edges();
    CHECK(generated == fixture);
    CHECK(generated.size() == 72);
}

TEST_CASE("worked edges from alpha^3") {
    Automaton aut = build_automaton();
    ZAlphaInt a3 = alpha_pow(3);
    auto out = aut.edges_from(a3);
    std::set<std::pair<std::pair<int, int>, ZAlphaInt>> seen;
    for (const Edge& e : out) seen.insert({{e.a, e.b}, e.to});
    CHECK(seen.count({{1, 0}, add(alpha_pow(2), a3)}) == 1);
    CHECK(seen.count({{0, 0}, alpha_pow(2)}) == 1);
    CHECK(seen.count({{1, 1}, alpha_pow(2)}) == 1);
    // (0,1) leaves the state set: alpha^2 - alpha^3 is not a state.
    for (const auto& [lab, to] : seen) CHECK(lab != std::pair<int, int>{0, 1});
}

TEST_CASE("encode_annexe_state inverts decode on every state") {
    for (const ZAlphaInt& s : build_state_set()) {
        std::string code = encode_annexe_state(s);
        CHECK(decode_annexe_state(code) == s);
    }
    CHECK(encode_annexe_state(ZAlphaInt{}) == "0000000");
    CHECK(encode_annexe_state(alpha_pow(3)) == "0000001");
    CHECK(encode_annexe_state(add(alpha_pow(2), alpha_pow(3))) == "0000011");
    CHECK(encode_annexe_state(neg(ZAlphaInt{1, 0, 0, 0})) == "m0001000");
    CHECK(encode_annexe_state(ZAlphaInt{1, 2, 1, 0}) == "1101001");
}

TEST_CASE("exports are well-formed") {
    Automaton reach = reachable_subautomaton(build_automaton());
    std::string dot = export_graph(reach);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0000001") != std::string::npos);
    CHECK(dot.find("label=\"10\"") != std::string::npos);

    std::string edges = export_edges(reach);
    CHECK(edges.find("0000001 10 0000011") != std::string::npos);
    // One line per edge, each with three space-separated fields.
    std::istringstream is(edges);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++lines;
        std::istringstream fields(line);
        std::string from, lab, to;
        REQUIRE((fields >> from >> lab >> to));
        CHECK(decode_annexe_state(to) ==
              step(decode_annexe_state(from), lab[0] - '0', lab[1] - '0'));
    }
    CHECK(lines == reach.edges.size());
}
