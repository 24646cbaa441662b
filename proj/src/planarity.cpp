#include "eco/planarity.hpp"

#include <cstdint>
#include <map>
#include <set>

#include "eco/runtime.hpp"

namespace eco {

namespace {

constexpr int kMaxVertices = 12;

struct SimpleGraph {
    int n = 0;
    int m = 0;
    std::uint16_t adj[kMaxVertices] = {};

    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int u) const { return __builtin_popcount(adj[u]); }
};

SimpleGraph simplify(const std::vector<std::pair<long long, long long>>& edges) {
    std::map<long long, int> index;
    for (const auto& [u, v] : edges) {
        if (u == v) continue;  // loops are irrelevant to planarity
        index.emplace(u, 0);
        index.emplace(v, 0);
    }
    if (index.size() > kMaxVertices)
        runtime_error("R104",
                      "builtin_is_planar supports at most 12 vertices, got " +
                          std::to_string(index.size()));
    int next = 0;
    for (auto& [id, slot] : index) slot = next++;

    SimpleGraph g;
    g.n = next;
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        int a = index[u];
        int b = index[v];
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) continue;
        g.adj[a] |= static_cast<std::uint16_t>(1u << b);
        g.adj[b] |= static_cast<std::uint16_t>(1u << a);
        ++g.m;
    }
    return g;
}

bool acyclic(const SimpleGraph& g) {
    // iterative DFS over each component, tracking the parent edge
    std::uint16_t visited = 0;
    for (int start = 0; start < g.n; ++start) {
        if ((visited >> start) & 1) continue;
        std::vector<std::pair<int, int>> stack = {{start, -1}};
        visited |= static_cast<std::uint16_t>(1u << start);
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.n; ++w) {
                if (!g.edge(v, w) || w == parent) continue;
                if ((visited >> w) & 1) return false;
                visited |= static_cast<std::uint16_t>(1u << w);
                stack.push_back({w, v});
            }
        }
    }
    return true;
}

// Searches for vertex-disjoint paths realizing every remaining pair of
// branch vertices. `used` holds all branch vertices plus internals of
// completed paths; internals of the path under construction ride along in
// `partial`.
struct SubdivisionSearch {
    const SimpleGraph& g;
    const std::vector<std::pair<int, int>>& pairs;

    bool connect(std::size_t pair_index, std::uint16_t used) const {
        if (pair_index == pairs.size()) return true;
        auto [a, b] = pairs[pair_index];
        return extend(a, b, pair_index, used, 0);
    }

    bool extend(int cur, int target, std::size_t pair_index,
                std::uint16_t used, std::uint16_t partial) const {
        if (g.edge(cur, target) &&
            connect(pair_index + 1, used | partial))
            return true;
        std::uint16_t free =
            g.adj[cur] & static_cast<std::uint16_t>(~(used | partial));
        while (free) {
            int w = __builtin_ctz(free);
            free = static_cast<std::uint16_t>(free & (free - 1));
            if (extend(w, target, pair_index, used,
                       partial | static_cast<std::uint16_t>(1u << w)))
                return true;
        }
        return false;
    }
};

bool has_k5_subdivision(const SimpleGraph& g) {
    std::vector<int> candidates;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 4) candidates.push_back(v);
    if (candidates.size() < 5) return false;

    std::vector<int> combo(5);
    std::vector<std::pair<int, int>> pairs;
    auto try_combo = [&]() {
        pairs.clear();
        std::uint16_t used = 0;
        for (int v : combo) used |= static_cast<std::uint16_t>(1u << v);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                pairs.emplace_back(combo[i], combo[j]);
        return SubdivisionSearch{g, pairs}.connect(0, used);
    };
    // enumerate candidate 5-subsets
    std::size_t k = candidates.size();
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
    for (;;) {
        for (int i = 0; i < 5; ++i) combo[i] = candidates[idx[i]];
        if (try_combo()) return true;
        int pos = 4;
        while (pos >= 0 && idx[pos] == k - 5 + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < 5; ++i) idx[i] = idx[i - 1] + 1;
    }
}

bool has_k33_subdivision(const SimpleGraph& g) {
    std::vector<int> candidates;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) candidates.push_back(v);
    if (candidates.size() < 6) return false;

    std::vector<int> combo(6);
    std::vector<std::pair<int, int>> pairs;
    auto try_combo = [&]() {
        std::uint16_t used = 0;
        for (int v : combo) used |= static_cast<std::uint16_t>(1u << v);
        // split the six into two sides; fixing combo[0] on side A kills the
        // side-swap symmetry
        for (int s1 = 1; s1 < 6; ++s1) {
            for (int s2 = s1 + 1; s2 < 6; ++s2) {
                int side_a[3] = {combo[0], combo[s1], combo[s2]};
                int side_b[3];
                int bi = 0;
                for (int i = 1; i < 6; ++i)
                    if (i != s1 && i != s2) side_b[bi++] = combo[i];
                pairs.clear();
                for (int a : side_a)
                    for (int b : side_b) pairs.emplace_back(a, b);
                if (SubdivisionSearch{g, pairs}.connect(0, used)) return true;
            }
        }
        return false;
    };
    std::size_t k = candidates.size();
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4, 5};
    for (;;) {
        for (int i = 0; i < 6; ++i) combo[i] = candidates[idx[i]];
        if (try_combo()) return true;
        int pos = 5;
        while (pos >= 0 && idx[pos] == k - 6 + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < 6; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

bool builtin_is_planar(
    const std::vector<std::pair<long long, long long>>& edges) {
    SimpleGraph g = simplify(edges);
    if (g.m <= 8) return true;  // the smallest nonplanar graph (K3,3) has 9
    if (g.n >= 3 && g.m > 3 * g.n - 6) return false;
    if (acyclic(g)) return true;
    return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

}  // namespace eco
