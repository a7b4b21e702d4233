#pragma once

#include "rauzy4/automaton.hpp"
#include "rauzy4/words.hpp"
#include "rauzy4/zalpha.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rauzy4 {

/// Pair of admissible eventually periodic words aligned to a common start
/// index (components keep their own indices; alignment pads with zeros).
struct PairWord {
    EventuallyPeriodicWord first, second;
};

/// True iff the two alpha-expansions have equal value in R x C: iterates
/// the difference recurrence from 0 and accepts iff the accumulator stays
/// inside the 35-element state set forever (certified by cycle detection
/// on (state, position-in-period)).  Throws on inadmissible input.
/// If visited is non-null, the sequence of accumulator values is appended.
bool check_equal(const PairWord& p, std::vector<ZAlphaInt>* visited = nullptr);

/// Node of the admissibility-aware product graph: accumulator state plus
/// the last three digits of each track (blocks runs of four ones).
struct ProductNode {
    ZAlphaInt state;
    std::array<int, 3> hist1{}, hist2{};

    friend bool operator==(const ProductNode&, const ProductNode&) = default;
    friend auto operator<=>(const ProductNode&, const ProductNode&) = default;
};

/// Shared product-graph machinery over the automaton: successor relation
/// and the live set (nodes admitting an infinite path).
class PairGraph {
  public:
    static const PairGraph& instance();

    /// Successors of n together with their (a, b) labels.
    std::vector<std::pair<ProductNode, std::pair<int, int>>> successors(const ProductNode& n) const;

    bool is_live(const ProductNode& n) const;

  private:
    PairGraph();
    std::vector<ProductNode> live_;
    std::unordered_set<ZAlphaInt, ZAlphaHash> states_;
};

/// An equal-valued admissible pair whose accumulator sequence visits u,
/// found by a deterministic lasso search in the live product graph.
PairWord witness_for_state(const ZAlphaInt& u);

}  // namespace rauzy4
