#pragma once

// Independent re-implementations of predicates under test, on purpose using
// different algorithms than the library (union-find, map-based arithmetic).

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "tdcut/gf2_poly.hpp"
#include "tdcut/graph.hpp"

namespace tdcut_test {

// Acyclicity of G[s] by union-find: a cycle shows as an edge inside one class.
inline bool acyclic_by_union_find(const tdcut::Graph& g, tdcut::VertexMask s) {
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges()) {
        if (!((s >> u) & 1) || !((s >> v) & 1)) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

using ExponentTuple = std::array<std::uint32_t, 4>;

inline std::map<ExponentTuple, int> poly_to_map(const tdcut::TrackedPoly& p) {
    std::map<ExponentTuple, int> out;
    for (std::uint64_t key : p.keys()) {
        tdcut::ExponentVec ev = p.bounds().unpack(key);
        out[{ev.w, ev.x, ev.e, ev.m}] ^= 1;
    }
    return out;
}

// Schoolbook multiplication on coefficient maps, reduced mod 2.
inline std::map<ExponentTuple, int> naive_mul(const std::map<ExponentTuple, int>& a,
                                              const std::map<ExponentTuple, int>& b) {
    std::map<ExponentTuple, int> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            if (!ca || !cb) continue;
            ExponentTuple e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out[e] ^= 1;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<ExponentTuple, int> naive_add(const std::map<ExponentTuple, int>& a,
                                              const std::map<ExponentTuple, int>& b) {
    std::map<ExponentTuple, int> out = a;
    for (const auto& [e, c] : b) out[e] ^= c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace tdcut_test
