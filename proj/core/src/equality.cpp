#include "rauzy4/equality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rauzy4 {

namespace {

const std::unordered_set<ZAlphaInt, ZAlphaHash>& state_set() {
    static const std::unordered_set<ZAlphaInt, ZAlphaHash> s = [] {
        auto v = build_state_set();
        return std::unordered_set<ZAlphaInt, ZAlphaHash>(v.begin(), v.end());
    }();
    return s;
}

}  // namespace

bool check_equal(const PairWord& p, std::vector<ZAlphaInt>* visited) {
    if (!is_admissible(p.first) || !is_admissible(p.second))
        throw std::invalid_argument("check_equal requires admissible words");
    const auto& S = state_set();

    int l = std::min(p.first.start_index, p.second.start_index);
    int join = std::max(p.first.start_index + static_cast<int>(p.first.preperiod.size()),
                        p.second.start_index + static_cast<int>(p.second.preperiod.size()));
    long period = std::lcm(static_cast<long>(p.first.period.size()),
                           static_cast<long>(p.second.period.size()));

    ZAlphaInt A;
    std::set<std::pair<ZAlphaInt, long>> seen;
    for (int i = l;; ++i) {
        A = step(A, p.first.digit_at(i), p.second.digit_at(i));
        if (visited) visited->push_back(A);
        if (!S.count(A)) return false;
        if (i >= join) {
            long phase = (static_cast<long>(i) - join) % period;
            if (!seen.insert({A, phase}).second) return true;
        }
    }
}

const PairGraph& PairGraph::instance() {
    static const PairGraph g;
    return g;
}

std::vector<std::pair<ProductNode, std::pair<int, int>>> PairGraph::successors(
    const ProductNode& n) const {
    std::vector<std::pair<ProductNode, std::pair<int, int>>> out;
    for (int a = 0; a <= 1; ++a) {
        if (a == 1 && n.hist1 == std::array<int, 3>{1, 1, 1}) continue;
        for (int b = 0; b <= 1; ++b) {
            if (b == 1 && n.hist2 == std::array<int, 3>{1, 1, 1}) continue;
            ZAlphaInt t = step(n.state, a, b);
            if (!states_.count(t)) continue;
            ProductNode m{t, {n.hist1[1], n.hist1[2], a}, {n.hist2[1], n.hist2[2], b}};
            out.push_back({m, {a, b}});
        }
    }
    return out;
}

bool PairGraph::is_live(const ProductNode& n) const {
    return std::binary_search(live_.begin(), live_.end(), n);
}

PairGraph::PairGraph() {
    auto states = build_state_set();
    states_.insert(states.begin(), states.end());

    std::set<ProductNode> live;
    for (const ZAlphaInt& s : states)
        for (int h1 = 0; h1 < 8; ++h1)
            for (int h2 = 0; h2 < 8; ++h2)
                live.insert(ProductNode{s,
                                        {h1 >> 2 & 1, h1 >> 1 & 1, h1 & 1},
                                        {h2 >> 2 & 1, h2 >> 1 & 1, h2 & 1}});
    // Greatest fixpoint: keep nodes with at least one live successor.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = live.begin(); it != live.end();) {
            bool has_live_succ = false;
            for (const auto& [m, lab] : successors(*it))
                if (live.count(m)) {
                    has_live_succ = true;
                    break;
                }
            if (!has_live_succ) {
                it = live.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    live_.assign(live.begin(), live.end());
}

namespace {

using Label = std::pair<int, int>;

struct Lasso {
    std::vector<Label> pre, cycle;
};

Lasso find_lasso(const ZAlphaInt& u) {
    const PairGraph& g = PairGraph::instance();
    ProductNode start{ZAlphaInt{}, {0, 0, 0}, {0, 0, 0}};

    // BFS parents from the start node over the whole product graph.
    std::map<ProductNode, std::optional<std::pair<ProductNode, Label>>> parent;
    parent[start] = std::nullopt;
    std::deque<ProductNode> queue{start};
    while (!queue.empty()) {
        ProductNode n = queue.front();
        queue.pop_front();
        for (const auto& [m, lab] : g.successors(n))
            if (!parent.count(m)) {
                parent[m] = std::pair{n, lab};
                queue.push_back(m);
            }
    }

    auto path_to = [&](ProductNode n) {
        std::vector<Label> labs;
        while (parent.at(n)) {
            auto [p, lab] = *parent.at(n);
            labs.push_back(lab);
            n = p;
        }
        std::reverse(labs.begin(), labs.end());
        return labs;
    };

    // Candidate entry nodes carrying state u, nearest first (deterministic).
    std::vector<ProductNode> cands;
    for (const auto& [n, par] : parent)
        if (n.state == u && g.is_live(n)) cands.push_back(n);
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const ProductNode& x, const ProductNode& y) {
                         return path_to(x).size() < path_to(y).size();
                     });

    for (const ProductNode& n : cands) {
        // Walk greedily through live successors until a node repeats.
        std::vector<Label> labs;
        std::map<ProductNode, std::size_t> seen{{n, 0}};
        ProductNode cur = n;
        while (true) {
            std::optional<std::pair<ProductNode, Label>> next;
            for (const auto& [m, lab] : g.successors(cur))
                if (g.is_live(m)) {
                    next = {m, lab};
                    break;
                }
            if (!next) break;  // cannot happen for live nodes
            cur = next->first;
            labs.push_back(next->second);
            auto it = seen.find(cur);
            if (it != seen.end()) {
                Lasso out;
                out.pre = path_to(n);
                out.pre.insert(out.pre.end(), labs.begin(),
                               labs.begin() + static_cast<long>(it->second));
                out.cycle.assign(labs.begin() + static_cast<long>(it->second), labs.end());
                return out;
            }
            seen[cur] = labs.size();
        }
    }
    throw std::logic_error("no witness lasso for state " + u.str());
}

}  // namespace

PairWord witness_for_state(const ZAlphaInt& u) {
    static std::map<ZAlphaInt, PairWord> cache;
    auto it = cache.find(u);
    if (it != cache.end()) return it->second;

    Lasso lasso = find_lasso(u);
    PairWord p;
    p.first.start_index = 0;
    p.second.start_index = 0;
    for (auto [a, b] : lasso.pre) {
        p.first.preperiod.push_back(a);
        p.second.preperiod.push_back(b);
    }
    for (auto [a, b] : lasso.cycle) {
        p.first.period.push_back(a);
        p.second.period.push_back(b);
    }
    cache[u] = p;
    return p;
}

}  // namespace rauzy4
