#include "tdcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <istream>
#include <set>
#include <sstream>

namespace tdcut {

namespace {

// Counts of components computed below treat the empty set as having zero
// components, so the empty graph/subgraph ends up "connected" by convention.

std::string edge_str(int u, int v) {
    return "{" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + "}";
}

bool parse_long(const std::string& tok, long& out) {
    std::size_t pos = 0;
    try {
        out = std::stol(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InvalidInput("vertex count must be nonnegative");
    adj_.assign(n_, {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InvalidInput("edge endpoint out of range: " + edge_str(u, v));
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u + 1));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw InvalidInput("duplicate edge " + edge_str(u, v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n_ <= 64) {
        adj_mask_.assign(n_, 0);
        for (const auto& [u, v] : edges_) {
            adj_mask_[u] |= VertexMask{1} << v;
            adj_mask_[v] |= VertexMask{1} << u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

VertexMask Graph::neighbor_mask(int v) const {
    if (n_ > 64) throw InvalidInput("neighbor_mask requires n <= 64");
    return adj_mask_[v];
}

VertexMask Graph::full_mask() const {
    if (n_ > 64) throw InvalidInput("full_mask requires n <= 64");
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    long edges_read = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;  // blank line
        if (tok[0] == 'c') continue;
        if (n < 0) {
            if (tok != "p") fail("expected 'p tdp <n> <m>' header, got '" + tok + "'");
            std::string kind, a, b, extra;
            if (!(ss >> kind >> a >> b)) fail("incomplete problem header");
            if (kind != "tdp") fail("unknown problem descriptor '" + kind + "'");
            if (!parse_long(a, n) || !parse_long(b, m) || n < 0 || m < 0)
                fail("invalid vertex/edge counts in header");
            if (ss >> extra) fail("trailing tokens after header");
            edges.reserve(static_cast<std::size_t>(m));
        } else {
            if (edges_read == m) fail("unexpected extra line after " + std::to_string(m) + " edges");
            std::string b, extra;
            long u, v;
            if (!(ss >> b)) fail("edge line needs two endpoints");
            if (!parse_long(tok, u) || !parse_long(b, v)) fail("edge endpoints must be integers");
            if (ss >> extra) fail("trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n)
                fail("edge endpoint out of range 1.." + std::to_string(n));
            if (u == v) fail("self-loop at vertex " + std::to_string(u));
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second)
                fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++edges_read;
        }
    }
    if (n < 0) throw ParseError("missing 'p tdp <n> <m>' header");
    if (edges_read != m)
        throw ParseError("header promised " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_read));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p tdp " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

int count_components(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

bool is_bipartite(const Graph& g) {
    std::vector<signed char> color(g.n(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = static_cast<signed char>(1 - color[v]);
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

void require_mask_use(const Graph& g, VertexMask s, const char* op) {
    if (g.n() > 64) throw InvalidInput(std::string(op) + " requires n <= 64");
    if ((s & ~g.full_mask()) != 0)
        throw ContractViolation(std::string(op) + ": mask has bits beyond the vertex range");
}

#ifndef NDEBUG
// Independent acyclicity check by DFS with parent edge skipping; backs the
// component-counting route in is_induced_forest below.
bool acyclic_by_dfs(const Graph& g, VertexMask s) {
    std::vector<signed char> state(g.n(), 0);
    for (int r = 0; r < g.n(); ++r) {
        if (!((s >> r) & 1) || state[r]) continue;
        // stack of (vertex, parent)
        std::vector<std::pair<int, int>> stack{{r, -1}};
        state[r] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            bool parent_skipped = false;
            for (int u : g.neighbors(v)) {
                if (!((s >> u) & 1)) continue;
                if (u == parent && !parent_skipped) {
                    parent_skipped = true;  // skip the tree edge once; a multiedge would be a cycle
                    continue;
                }
                if (state[u]) return false;
                state[u] = 1;
                stack.emplace_back(u, v);
            }
        }
    }
    return true;
}
#endif

}  // namespace

bool is_consistent_cut(const Graph& g, VertexMask left, VertexMask right) {
    require_mask_use(g, left | right, "is_consistent_cut");
    if (left & right) throw ContractViolation("is_consistent_cut: sides overlap");
    for (VertexMask mm = left; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        if (g.neighbor_mask(v) & right) return false;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, VertexMask s, VertexMask scope) {
    require_mask_use(g, s | scope, "is_vertex_cover");
    if (s & ~scope) throw ContractViolation("is_vertex_cover: s not contained in scope");
    VertexMask rest = scope & ~s;
    for (VertexMask mm = rest; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        if (g.neighbor_mask(v) & rest) return false;
    }
    return true;
}

bool is_bipartition(const Graph& g, VertexMask a, VertexMask b) {
    require_mask_use(g, a | b, "is_bipartition");
    if (a & b) throw ContractViolation("is_bipartition: sides overlap");
    for (VertexMask mm = a; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        if (g.neighbor_mask(v) & a) return false;
    }
    for (VertexMask mm = b; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        if (g.neighbor_mask(v) & b) return false;
    }
    return true;
}

int count_components(const Graph& g, VertexMask s) {
    require_mask_use(g, s, "count_components");
    int comps = 0;
    VertexMask rest = s;
    while (rest) {
        ++comps;
        VertexMask comp = rest & (~rest + 1);  // lowest remaining vertex
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask mm = frontier; mm;) {
                int v = std::countr_zero(mm);
                mm &= mm - 1;
                next |= g.neighbor_mask(v);
            }
            next &= s & ~comp;
            comp |= next;
            frontier = next;
        }
        rest &= ~comp;
    }
    return comps;
}

int edges_within(const Graph& g, VertexMask s) {
    require_mask_use(g, s, "edges_within");
    int twice = 0;
    for (VertexMask mm = s; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        twice += std::popcount(g.neighbor_mask(v) & s);
    }
    return twice / 2;
}

bool is_induced_forest(const Graph& g, VertexMask s) {
    require_mask_use(g, s, "is_induced_forest");
    // G[s] is a forest iff components(s) <= |s| - |E(G[s])|; every graph
    // satisfies >=, with equality exactly in the acyclic case.
    int size = std::popcount(s);
    int edges = edges_within(g, s);
    bool forest = count_components(g, s) <= size - edges;
    assert(forest == acyclic_by_dfs(g, s));
    return forest;
}

VertexMask closed_neighborhood(const Graph& g, VertexMask s) {
    require_mask_use(g, s, "closed_neighborhood");
    VertexMask out = s;
    for (VertexMask mm = s; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        out |= g.neighbor_mask(v);
    }
    return out;
}

}  // namespace tdcut
