#include "tdcut/elim_forest.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <sstream>

namespace tdcut {

EliminationForest::EliminationForest(std::vector<int> parent)
    : parent_(std::move(parent)) {
    n_ = static_cast<int>(parent_.size());
    for (int v = 0; v < n_; ++v)
        if (parent_[v] < -1 || parent_[v] >= n_ || parent_[v] == v)
            throw InvalidInput("parent index out of range at vertex " + std::to_string(v + 1));
    children_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
        if (parent_[v] == -1)
            roots_.push_back(v);
        else
            children_[parent_[v]].push_back(v);  // ascending since v ascends
    }
    depth_of_.assign(n_, 0);
    std::vector<int> stack;
    for (int r : roots_) {
        depth_of_[r] = 1;
        stack.push_back(r);
    }
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        depth_ = std::max(depth_, depth_of_[v]);
        for (int u : children_[v]) {
            depth_of_[u] = depth_of_[v] + 1;
            stack.push_back(u);
        }
    }
    if (reached != n_) throw InvalidInput("cycle in parent links");
    for (int v = 0; v < n_; ++v)
        if (children_[v].empty()) ++leaf_count_;
}

std::vector<int> EliminationForest::tail(int v) const {
    std::vector<int> up;
    for (int u = parent_[v]; u != -1; u = parent_[u]) up.push_back(u);
    std::reverse(up.begin(), up.end());
    return up;
}

std::vector<int> EliminationForest::tail_closed(int v) const {
    std::vector<int> out = tail(v);
    out.push_back(v);
    return out;
}

std::vector<int> EliminationForest::tree(int v) const {
    std::vector<int> out, stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : children_[u]) {
            out.push_back(c);
            stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> EliminationForest::broom(int v) const {
    std::vector<int> out = tail(v);
    out.push_back(v);
    std::vector<int> below = tree(v);
    out.insert(out.end(), below.begin(), below.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool EliminationForest::is_strict_ancestor(int u, int v) const {
    if (depth_of_[u] >= depth_of_[v]) return false;
    int cur = v;
    while (depth_of_[cur] > depth_of_[u]) cur = parent_[cur];
    return cur == u;
}

std::optional<std::string> validate_forest(const Graph& g, const EliminationForest& f) {
    if (g.n() != f.n())
        throw ContractViolation("validate_forest: forest covers " + std::to_string(f.n()) +
                                " vertices, graph has " + std::to_string(g.n()));
    for (const auto& [u, v] : g.edges()) {
        if (!f.is_strict_ancestor(u, v) && !f.is_strict_ancestor(v, u))
            return "edge {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                   "} joins two vertices with no ancestor relation";
    }
    return std::nullopt;
}

EliminationForest build_dfs_forest(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("build_dfs_forest requires a connected graph");
    const int n = g.n();
    std::vector<int> parent(n, -1);
    if (n == 0) return EliminationForest(parent);
    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
    visited[0] = 1;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& nb = g.neighbors(v);
        if (i == nb.size()) {
            stack.pop_back();
            continue;
        }
        int u = nb[i++];
        if (!visited[u]) {
            visited[u] = 1;
            parent[u] = v;
            stack.emplace_back(u, 0);
        }
    }
    return EliminationForest(parent);
}

namespace {

// Subtree sizes of the tree induced on comp (rooted at comp.front()), then the
// vertex minimizing the largest remaining part after its removal. comp must be
// sorted ascending so ties land on the lowest id.
int tree_centroid(const Graph& g, const std::vector<int>& comp,
                  const std::vector<char>& removed) {
    const int total = static_cast<int>(comp.size());
    std::vector<int> order, par_of(g.n(), -1), size_of(g.n(), 1);
    order.reserve(total);
    order.push_back(comp.front());
    par_of[comp.front()] = comp.front();
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : g.neighbors(v)) {
            if (removed[u] || par_of[u] != -1) continue;
            par_of[u] = v;
            order.push_back(u);
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) size_of[par_of[order[i]]] += size_of[order[i]];
    int best = -1, best_part = std::numeric_limits<int>::max();
    for (int v : comp) {
        int part = total - size_of[v];
        for (int u : g.neighbors(v))
            if (!removed[u] && par_of[u] == v) part = std::max(part, size_of[u]);
        if (part < best_part) {
            best_part = part;
            best = v;
        }
    }
    return best;
}

void centroid_decompose(const Graph& g, std::vector<int> comp, int attach,
                        std::vector<char>& removed, std::vector<int>& parent) {
    int c = tree_centroid(g, comp, removed);
    parent[c] = attach;
    removed[c] = 1;
    if (comp.size() == 1) return;
    // Split the remainder into the subtrees hanging off c.
    std::vector<char> taken(g.n(), 0);
    for (int s : g.neighbors(c)) {
        if (removed[s] || taken[s]) continue;
        std::vector<int> sub{s};
        taken[s] = 1;
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (int u : g.neighbors(sub[i]))
                if (!removed[u] && !taken[u]) {
                    taken[u] = 1;
                    sub.push_back(u);
                }
        std::sort(sub.begin(), sub.end());
        centroid_decompose(g, std::move(sub), c, removed, parent);
    }
}

}  // namespace

EliminationForest build_centroid_forest(const Graph& g) {
    const int n = g.n();
    if (g.m() != n - count_components(g))
        throw InvalidInput("build_centroid_forest requires an acyclic graph");
    std::vector<int> parent(n, -1);
    std::vector<char> removed(n, 0), seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        centroid_decompose(g, std::move(comp), -1, removed, parent);
    }
    return EliminationForest(parent);
}

EliminationForest build_forest_from_fvs(const Graph& g, const std::vector<int>& x) {
    if (!is_connected(g)) throw InvalidInput("build_forest_from_fvs requires a connected graph");
    const int n = g.n();
    std::vector<char> in_x(n, 0);
    for (int v : x) {
        if (v < 0 || v >= n) throw InvalidInput("deletion set vertex out of range");
        if (in_x[v]) throw InvalidInput("duplicate vertex in deletion set");
        in_x[v] = 1;
    }
    // Remaining graph, relabeled to 0..n-|x|-1.
    std::vector<int> old_id, new_id(n, -1);
    for (int v = 0; v < n; ++v)
        if (!in_x[v]) {
            new_id[v] = static_cast<int>(old_id.size());
            old_id.push_back(v);
        }
    std::vector<std::pair<int, int>> rest_edges;
    for (const auto& [u, v] : g.edges())
        if (!in_x[u] && !in_x[v]) rest_edges.emplace_back(new_id[u], new_id[v]);
    Graph rest(static_cast<int>(old_id.size()), std::move(rest_edges));
    if (rest.m() != rest.n() - count_components(rest))
        throw InvalidInput("build_forest_from_fvs: graph minus the deletion set has a cycle");
    EliminationForest below = build_centroid_forest(rest);

    std::vector<int> path(x);
    std::sort(path.begin(), path.end());
    std::vector<int> parent(n, -1);
    for (std::size_t i = 1; i < path.size(); ++i) parent[path[i]] = path[i - 1];
    int attach = path.empty() ? -1 : path.back();
    for (int v = 0; v < rest.n(); ++v)
        parent[old_id[v]] = below.parent(v) == -1 ? attach : old_id[below.parent(v)];
    return EliminationForest(parent);
}

namespace {

constexpr int kOptimalLimit = 12;

struct TdSearch {
    const Graph& g;
    std::vector<std::uint32_t> adj;
    std::vector<signed char> best_depth;  // 0 = unknown
    std::vector<signed char> best_root;   // -2 = disconnected subset

    explicit TdSearch(const Graph& graph) : g(graph) {
        adj.assign(g.n(), 0);
        for (int v = 0; v < g.n(); ++v)
            adj[v] = static_cast<std::uint32_t>(g.neighbor_mask(v));
        best_depth.assign(std::size_t{1} << g.n(), 0);
        best_root.assign(std::size_t{1} << g.n(), -1);
    }

    std::uint32_t component_of(std::uint32_t mask, int v) const {
        std::uint32_t comp = std::uint32_t{1} << v, frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t mm = frontier; mm;) {
                int u = std::countr_zero(mm);
                mm &= mm - 1;
                next |= adj[u];
            }
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int depth_of(std::uint32_t mask) {
        if (mask == 0) return 0;
        if (best_depth[mask]) return best_depth[mask];
        std::uint32_t first = component_of(mask, std::countr_zero(mask));
        int d;
        if (first != mask) {
            d = std::max(depth_of(first), depth_of(mask & ~first));
            best_root[mask] = -2;
        } else {
            d = g.n() + 1;
            for (std::uint32_t mm = mask; mm;) {
                int v = std::countr_zero(mm);
                mm &= mm - 1;
                int cand = 1 + depth_of(mask & ~(std::uint32_t{1} << v));
                if (cand < d) {
                    d = cand;
                    best_root[mask] = static_cast<signed char>(v);
                }
            }
        }
        best_depth[mask] = static_cast<signed char>(d);
        return d;
    }

    void rebuild(std::uint32_t mask, int attach, std::vector<int>& parent) {
        while (mask) {
            std::uint32_t comp = component_of(mask, std::countr_zero(mask));
            depth_of(comp);
            int r = best_root[comp];
            parent[r] = attach;
            rebuild(comp & ~(std::uint32_t{1} << r), r, parent);
            mask &= ~comp;
        }
    }
};

}  // namespace

EliminationForest optimal_forest_small(const Graph& g) {
    if (g.n() > kOptimalLimit)
        throw InvalidInput("optimal_forest_small refuses n > " + std::to_string(kOptimalLimit));
    TdSearch search(g);
    std::vector<int> parent(g.n(), -1);
    if (g.n() > 0) {
        std::uint32_t all = static_cast<std::uint32_t>(g.full_mask());
        search.depth_of(all);
        search.rebuild(all, -1, parent);
    }
    return EliminationForest(parent);
}

EliminationForest parse_forest(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<int> parent;
    auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tok, extra;
        if (!(ss >> tok)) continue;  // blank line
        if (ss >> extra) fail("expected a single integer");
        long value = 0;
        std::size_t pos = 0;
        try {
            value = std::stol(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size()) fail("expected a single integer, got '" + tok + "'");
        if (n < 0) {
            if (value < 0) fail("vertex count must be nonnegative");
            n = value;
            parent.reserve(static_cast<std::size_t>(n));
        } else {
            if (static_cast<long>(parent.size()) == n) fail("extra line after " + std::to_string(n) + " parents");
            if (value < 0 || value > n) fail("parent index out of range 0.." + std::to_string(n));
            parent.push_back(static_cast<int>(value - 1));
        }
    }
    if (n < 0) throw ParseError("missing vertex count line");
    if (static_cast<long>(parent.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " parent lines, found " +
                         std::to_string(parent.size()));
    try {
        return EliminationForest(std::move(parent));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

EliminationForest parse_forest(const std::string& text) {
    std::istringstream in(text);
    return parse_forest(in);
}

std::string serialize_forest(const EliminationForest& f) {
    std::ostringstream out;
    out << f.n() << '\n';
    for (int v = 0; v < f.n(); ++v) out << (f.parent(v) + 1) << '\n';
    return out.str();
}

}  // namespace tdcut
