#include "tdcut/oracle.hpp"

#include <bit>

namespace tdcut {

namespace {

constexpr int kSolveLimit = 20;
constexpr int kParityLimit = 10;

// The empty induced subgraph counts as connected (zero components).
bool induced_connected(const Graph& g, VertexMask s) {
    return s == 0 || count_components(g, s) == 1;
}

bool induced_bipartite(const Graph& g, VertexMask s) {
    VertexMask c0 = 0, c1 = 0, seen = 0;
    while (s & ~seen) {
        VertexMask frontier = (s & ~seen) & (~(s & ~seen) + 1);
        bool odd_level = false;
        while (frontier) {
            (odd_level ? c1 : c0) |= frontier;
            seen |= frontier;
            VertexMask next = 0;
            for (VertexMask mm = frontier; mm;) {
                int v = std::countr_zero(mm);
                mm &= mm - 1;
                next |= g.neighbor_mask(v);
            }
            frontier = next & s & ~seen;
            odd_level = !odd_level;
        }
    }
    return is_bipartition(g, c0, c1);
}

int mask_weight(VertexMask s, const WeightFunction& w, int stride, int offset) {
    int total = 0;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        total += w(stride * v + offset);
    }
    return total;
}

void check_instance(const ProblemInstance& inst, const Graph& g, int limit,
                    const char* who) {
    if (g.n() > limit)
        throw InvalidInput(std::string(who) + " refuses n > " + std::to_string(limit));
    if (inst.k < 0 || inst.k > g.n())
        throw InvalidInput("k must lie in 0..n, got " + std::to_string(inst.k));
    if (inst.problem == Problem::St)
        for (int t : inst.terminals)
            if (t < 0 || t >= g.n()) throw InvalidInput("terminal out of range");
}

}  // namespace

bool brute_solve(const ProblemInstance& inst, const Graph& g) {
    check_instance(inst, g, kSolveLimit, "brute_solve");
    const int n = g.n();
    const VertexMask full = g.full_mask();
    VertexMask t_mask = 0;
    if (inst.problem == Problem::St) {
        if (inst.terminals.empty() && inst.k >= 1)
            throw InvalidInput("Steiner tree needs terminals when k >= 1");
        for (int t : inst.terminals) t_mask |= VertexMask{1} << t;
    }
    const VertexMask end = n == 0 ? 1 : VertexMask{1} << n;
    for (VertexMask x = 0; x < end; ++x) {
        if (std::popcount(x) != inst.k) continue;
        bool good = false;
        switch (inst.problem) {
            case Problem::Cvc:
                good = is_vertex_cover(g, x, full) && induced_connected(g, x);
                break;
            case Problem::Fvs:
                good = is_induced_forest(g, full & ~x);
                break;
            case Problem::St:
                good = (x & t_mask) == t_mask && induced_connected(g, x);
                break;
            case Problem::Cds:
                good = closed_neighborhood(g, x) == full && induced_connected(g, x);
                break;
            case Problem::Coct:
                good = induced_connected(g, x) && induced_bipartite(g, full & ~x);
                break;
        }
        if (good) return true;
    }
    return false;
}

ParityMap brute_q_parity(const ProblemInstance& inst, const Graph& g,
                         const WeightFunction& w) {
    check_instance(inst, g, kParityLimit, "brute_q_parity");
    const int n = g.n();
    const Universe u = universe_for(inst.problem, n);
    if (w.size() != u.size()) throw InvalidInput("weight function covers the wrong universe");
    ParityMap out(static_cast<std::size_t>(u.max_total_weight()) + 1, 0);
    const VertexMask full = g.full_mask();
    const VertexMask end = n == 0 ? 1 : VertexMask{1} << n;

    if (inst.problem == Problem::Fvs) {
        // Pairs ((Y, M), (Y_L, Y_R)): |Y| = n - k, the markers M sit on the
        // left side, and the marker budget equals components-if-acyclic:
        // |M| = n - k - |E(G[Y])|.
        const int y_size = n - inst.k;
        for (VertexMask y = 0; y < end; ++y) {
            if (std::popcount(y) != y_size) continue;
            const int markers = y_size - edges_within(g, y);
            if (markers < 1) continue;
            const int y_weight = mask_weight(y, w, 2, 0);
            VertexMask left = y;
            while (true) {
                if (is_consistent_cut(g, left, y & ~left)) {
                    VertexMask m = left;
                    while (true) {
                        if (std::popcount(m) == markers)
                            out[static_cast<std::size_t>(y_weight + mask_weight(m, w, 2, 1))] ^= 1;
                        if (m == 0) break;
                        m = (m - 1) & left;
                    }
                }
                if (left == 0) break;
                left = (left - 1) & y;
            }
        }
        return out;
    }

    if (inst.problem == Problem::Coct) {
        if (inst.v1 < 0 || inst.v1 >= n) throw InvalidInput("forced vertex out of range");
        const VertexMask v1_bit = VertexMask{1} << inst.v1;
        for (VertexMask x = 0; x < end; ++x) {
            if (std::popcount(x) != inst.k) continue;
            const int x_weight = mask_weight(x, w, 2, 0);
            const VertexMask outside = full & ~x;
            VertexMask a = outside;
            while (true) {
                if (is_bipartition(g, a, outside & ~a)) {
                    const int pair_weight = x_weight + mask_weight(a, w, 2, 1);
                    VertexMask left = x;
                    while (true) {
                        if ((left & v1_bit) && is_consistent_cut(g, left, x & ~left))
                            out[static_cast<std::size_t>(pair_weight)] ^= 1;
                        if (left == 0) break;
                        left = (left - 1) & x;
                    }
                }
                if (a == 0) break;
                a = (a - 1) & outside;
            }
        }
        return out;
    }

    // CVC, ST, CDS: plain candidates with a forced left vertex.
    if (inst.v1 < 0 || inst.v1 >= n) throw InvalidInput("forced vertex out of range");
    VertexMask t_mask = 0;
    for (int t : inst.terminals) t_mask |= VertexMask{1} << t;
    const VertexMask v1_bit = VertexMask{1} << inst.v1;
    for (VertexMask x = 0; x < end; ++x) {
        if (std::popcount(x) != inst.k) continue;
        bool candidate = false;
        switch (inst.problem) {
            case Problem::Cvc: candidate = is_vertex_cover(g, x, full); break;
            case Problem::St: candidate = (x & t_mask) == t_mask; break;
            case Problem::Cds: candidate = closed_neighborhood(g, x) == full; break;
            default: break;
        }
        if (!candidate) continue;
        const int x_weight = mask_weight(x, w, 1, 0);
        VertexMask left = x;
        while (true) {
            if ((left & v1_bit) && is_consistent_cut(g, left, x & ~left))
                out[static_cast<std::size_t>(x_weight)] ^= 1;
            if (left == 0) break;
            left = (left - 1) & x;
        }
    }
    return out;
}

std::uint64_t brute_consistent_cut_count(const Graph& g, VertexMask x, int v1) {
    if (v1 < 0 || v1 >= g.n() || !((x >> v1) & 1))
        throw InvalidInput("forced vertex must belong to the cut set");
    if (std::popcount(x) > 20) throw InvalidInput("brute_consistent_cut_count refuses |x| > 20");
    const VertexMask v1_bit = VertexMask{1} << v1;
    std::uint64_t count = 0;
    VertexMask left = x;
    while (true) {
        if ((left & v1_bit) && is_consistent_cut(g, left, x & ~left)) ++count;
        if (left == 0) break;
        left = (left - 1) & x;
    }
    return count;
}

}  // namespace tdcut
