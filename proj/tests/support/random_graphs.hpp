#pragma once

// Deterministic random graphs and trees driven by the project RNG, so every
// test run sees the same instances on every platform.

#include <utility>
#include <vector>

#include "tdcut/engine.hpp"
#include "tdcut/graph.hpp"

namespace tdcut_test {

inline bool coin(tdcut::SplitMix64& rng, double p) {
    return static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < p;
}

inline tdcut::Graph random_tree(int n, tdcut::SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.uniform(v) - 1, v);
    return tdcut::Graph(n, std::move(edges));
}

// Random attachment tree plus independent extra edges.
inline tdcut::Graph random_connected_graph(int n, double extra_p, tdcut::SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (int v = 1; v < n; ++v) {
        int u = rng.uniform(v) - 1;
        edges.emplace_back(u, v);
        used[u][v] = used[v][u] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used[u][v] && coin(rng, extra_p)) edges.emplace_back(u, v);
    return tdcut::Graph(n, std::move(edges));
}

}  // namespace tdcut_test
