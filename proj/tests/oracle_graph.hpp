#pragma once

// Host-side test oracles, independent of the library implementation paths
// they are used to check.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Connected components by breadth-first search from every unvisited vertex.
// Canonical form: each block sorted ascending, blocks sorted by smallest
// element.
std::vector<std::vector<long long>> components_bfs(
    const std::vector<long long>& vertices,
    const std::vector<std::pair<long long, long long>>& edges);

// Second, structurally different implementation (union-find), used to
// cross-check the BFS oracle itself.
std::vector<std::vector<long long>> components_union_find(
    const std::vector<long long>& vertices,
    const std::vector<std::pair<long long, long long>>& edges);

// Planarity by Wagner's criterion: planar iff there is neither a K5 nor a
// K3,3 minor. Minors are searched as families of disjoint connected vertex
// sets with the required adjacencies. Plain exhaustive search, no shared
// screens with the library's subdivision-based builtin. Practical for small
// graphs (and for finding minors in nonplanar ones).
bool is_planar_minor_search(
    const std::vector<std::pair<long long, long long>>& edges);

// Deterministic random edit scripts in the fixture format
// (`AV | DV id | AE u v | DE id`, `#` comments).
struct EditOp {
    enum class Kind { AddVertex, DeleteVertex, AddEdge, DeleteEdge };
    Kind kind;
    long long a = 0;  // vertex/edge id, or u for AddEdge
    long long b = 0;  // v for AddEdge
};

std::vector<EditOp> generate_edit_script(std::uint32_t seed, int op_count,
                                         int max_vertices);
std::string script_to_text(const std::vector<EditOp>& ops);
std::vector<EditOp> parse_script(const std::string& text);

}  // namespace oracle
