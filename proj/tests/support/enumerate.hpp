#pragma once

// Exhaustive generators for small test graphs: every simple graph on n
// labeled vertices is one bitmask over the vertex pairs.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tdcut/graph.hpp"

namespace tdcut_test {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline tdcut::Graph graph_from_pair_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                                         std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
    return tdcut::Graph(n, std::move(edges));
}

inline void for_all_graphs(int n, const std::function<void(const tdcut::Graph&)>& fn) {
    const auto pairs = vertex_pairs(n);
    const std::uint32_t end = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < end; ++mask) fn(graph_from_pair_mask(n, pairs, mask));
}

inline void for_all_connected_graphs(int n,
                                     const std::function<void(const tdcut::Graph&)>& fn) {
    for_all_graphs(n, [&](const tdcut::Graph& g) {
        if (tdcut::is_connected(g)) fn(g);
    });
}

inline tdcut::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return tdcut::Graph(n, std::move(edges));
}

inline tdcut::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(n - 1, 0);
    return tdcut::Graph(n, std::move(edges));
}

inline tdcut::Graph complete_graph(int n) {
    return tdcut::Graph(n, vertex_pairs(n));
}

inline tdcut::Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return tdcut::Graph(n, std::move(edges));
}

}  // namespace tdcut_test
