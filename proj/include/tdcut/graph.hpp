#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tdcut/errors.hpp"

namespace tdcut {

// Subsets of vertices as bitmasks, bit v = vertex v. Only usable when n <= 64;
// the subset predicates below enforce that.
using VertexMask = std::uint64_t;

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Edges keep their construction order; adjacency lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Neighborhood of v as a mask; requires n <= 64.
    VertexMask neighbor_mask(int v) const;
    VertexMask full_mask() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexMask> adj_mask_;  // filled only when n_ <= 64
};

// PACE-style text format:
//   c <comment>
//   p tdp <n> <m>
//   <u> <v>          (1-indexed, one line per edge)
// Rejects self-loops, duplicate edges and malformed lines, naming the line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Whole-graph queries, any n. The empty graph counts as connected.
bool is_connected(const Graph& g);
int count_components(const Graph& g);
bool is_bipartite(const Graph& g);

// Subset queries on masks; all require n <= 64 and masks within 0..n-1.
// A cut (left, right) of a set S is consistent when no edge joins left to right.
bool is_consistent_cut(const Graph& g, VertexMask left, VertexMask right);
// Does s cover every edge of G[scope]? Requires s subset of scope.
bool is_vertex_cover(const Graph& g, VertexMask s, VertexMask scope);
// Are a and b independent sets? (Their union need not be all of V.)
bool is_bipartition(const Graph& g, VertexMask a, VertexMask b);
int count_components(const Graph& g, VertexMask s);
bool is_induced_forest(const Graph& g, VertexMask s);
int edges_within(const Graph& g, VertexMask s);
VertexMask closed_neighborhood(const Graph& g, VertexMask s);

}  // namespace tdcut
