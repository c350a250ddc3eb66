#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdcut/graph.hpp"

namespace tdcut {

// Rooted forest on vertices 0..n-1 described by parent links (-1 marks a root).
// depth_of(v) counts the vertices on the root-to-v path, so roots sit at depth 1
// and depth() is the number of vertices on a longest such path.
class EliminationForest {
public:
    explicit EliminationForest(std::vector<int> parent);

    int n() const { return n_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    const std::vector<int>& roots() const { return roots_; }
    bool is_leaf(int v) const { return children_[v].empty(); }
    int leaf_count() const { return leaf_count_; }
    int depth_of(int v) const { return depth_of_[v]; }
    int depth() const { return depth_; }

    // Strict ancestors of v, root first.
    std::vector<int> tail(int v) const;
    // tail(v) followed by v itself.
    std::vector<int> tail_closed(int v) const;
    // Strict descendants of v, ascending ids.
    std::vector<int> tree(int v) const;
    // tail(v) + {v} + tree(v), ascending ids.
    std::vector<int> broom(int v) const;

    bool is_strict_ancestor(int u, int v) const;

    bool operator==(const EliminationForest& other) const { return parent_ == other.parent_; }

private:
    int n_ = 0;
    int depth_ = 0;
    int leaf_count_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> roots_;
    std::vector<int> depth_of_;
};

// Checks that f covers exactly g's vertices (mismatch is a contract violation)
// and that every edge of g joins an ancestor-descendant pair. Returns nullopt
// when f is an elimination forest for g, otherwise a one-line report naming a
// violating edge.
std::optional<std::string> validate_forest(const Graph& g, const EliminationForest& f);

// DFS tree from vertex 0; requires g connected. Valid because a DFS tree has
// no cross edges.
EliminationForest build_dfs_forest(const Graph& g);

// Centroid decomposition; requires g acyclic (a forest). Depth is at most
// ceil(log2(n+1)) per tree component. Ties pick the lowest vertex id.
EliminationForest build_centroid_forest(const Graph& g);

// Root path of x (ascending id) with centroid forests of g - x attached below
// the path's lowest vertex. Requires g connected and g - x acyclic.
EliminationForest build_forest_from_fvs(const Graph& g, const std::vector<int>& x);

// Exact minimum-depth forest by exhaustive search over vertex subsets.
// Refuses n > 12.
EliminationForest optimal_forest_small(const Graph& g);

// Text format: first line n, then one line per vertex with its 1-indexed
// parent, 0 marking a root.
EliminationForest parse_forest(std::istream& in);
EliminationForest parse_forest(const std::string& text);
std::string serialize_forest(const EliminationForest& f);

}  // namespace tdcut
