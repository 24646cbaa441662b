#include <doctest.h>

#include <random>

#include "eco/planarity.hpp"
#include "eco/runtime.hpp"
#include "oracle_graph.hpp"

using eco::builtin_is_planar;
using Edges = std::vector<std::pair<long long, long long>>;

namespace {

Edges complete_graph(int n) {
    Edges edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return edges;
}

Edges complete_bipartite(int a, int b) {
    Edges edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return edges;
}

Edges petersen() {
    Edges edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return edges;
}

}  // namespace

TEST_CASE("spot values, cross-checked against the minor-search oracle") {
    struct Row {
        const char* name;
        Edges edges;
        bool planar;
    };
    const Row rows[] = {
        {"K5", complete_graph(5), false},
        {"K3,3", complete_bipartite(3, 3), false},
        {"K4", complete_graph(4), true},
        {"Petersen", petersen(), false},
        {"empty", {}, true},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        CHECK(builtin_is_planar(row.edges) == row.planar);
        CHECK(oracle::is_planar_minor_search(row.edges) == row.planar);
    }
}

TEST_CASE("quick accepts") {
    // eight edges can never hold a Kuratowski subdivision
    Edges m8 = complete_graph(4);
    m8.push_back({0, 4});
    m8.push_back({4, 5});
    CHECK(builtin_is_planar(m8));
    // trees are planar no matter the size within the guard
    Edges path;
    for (int i = 0; i + 1 < 12; ++i) path.push_back({i, i + 1});
    CHECK(builtin_is_planar(path));
}

TEST_CASE("parallel edges and self-loops do not change the verdict") {
    Edges k4 = complete_graph(4);
    k4.push_back({0, 1});
    k4.push_back({0, 1});
    k4.push_back({2, 2});
    CHECK(builtin_is_planar(k4));

    Edges k5 = complete_graph(5);
    k5.push_back({0, 1});
    CHECK(!builtin_is_planar(k5));
}

TEST_CASE("maximal planar graphs are accepted at the Euler boundary") {
    // octahedron: n = 6, m = 12 = 3n - 6, planar
    Edges octa = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                  {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    CHECK(builtin_is_planar(octa));
    CHECK(oracle::is_planar_minor_search(octa));
}

TEST_CASE("vertex guard raises R104") {
    Edges big;
    for (int i = 0; i + 1 < 13; ++i) big.push_back({i, i + 1});
    try {
        builtin_is_planar(big);
        FAIL("expected RuntimeError");
    } catch (const eco::RuntimeError& e) {
        CHECK(e.code == "R104");
    }
}

TEST_CASE("builtin agrees with the independent minor-search oracle on random "
          "graphs") {
    std::mt19937 rng(20240817);
    int nonplanar_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        Edges edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::bernoulli_distribution(p)(rng))
                    edges.push_back({i, j});
        bool a = builtin_is_planar(edges);
        bool b = oracle::is_planar_minor_search(edges);
        CAPTURE(trial);
        CHECK(a == b);
        if (!a) ++nonplanar_seen;
    }
    CHECK(nonplanar_seen > 20);  // the sample actually exercises both sides
}

TEST_CASE("connectivity oracle basics") {
    using Blocks = std::vector<std::vector<long long>>;
    CHECK(oracle::components_bfs({0, 1}, {}) == Blocks{{0}, {1}});
    CHECK(oracle::components_bfs({0, 1, 2}, {{0, 1}, {1, 2}}) ==
          Blocks{{0, 1, 2}});
    CHECK(oracle::components_bfs({}, {}) == Blocks{});
}

TEST_CASE("the two connectivity oracles agree on random graphs") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 15)(rng);
        std::vector<long long> vertices;
        for (int i = 0; i < n; ++i) vertices.push_back(i);
        Edges edges;
        int m = n ? std::uniform_int_distribution<int>(0, 2 * n)(rng) : 0;
        for (int i = 0; i < m; ++i) {
            long long u = std::uniform_int_distribution<int>(0, n - 1)(rng);
            long long v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (u != v) edges.push_back({u, v});
        }
        auto a = oracle::components_bfs(vertices, edges);
        auto b = oracle::components_union_find(vertices, edges);
        CHECK(a == b);
    }
}
