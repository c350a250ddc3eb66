#pragma once

#include <cstdint>

#include "tdcut/engine.hpp"
#include "tdcut/graph.hpp"
#include "tdcut/solvers.hpp"

namespace tdcut {

// Exhaustive ground truth by direct subset enumeration, no elimination forest
// and no algebra. Refuses n > 20. inst.v1 is ignored.
bool brute_solve(const ProblemInstance& inst, const Graph& g);

// Weight-class parities of the relaxed candidate/cut pairs, enumerated
// verbatim from their definition: every candidate (pair (Y, M) for FVS),
// every cut of it, membership checked by the graph predicates. Gold standard
// for countc_all. Refuses n > 10.
ParityMap brute_q_parity(const ProblemInstance& inst, const Graph& g,
                         const WeightFunction& w);

// Number of consistent cuts (l, r) of x with v1 on the left. Requires v1 in x
// and |x| <= 20. Equals 2^(c-1) for c the number of components of G[x].
std::uint64_t brute_consistent_cut_count(const Graph& g, VertexMask x, int v1);

}  // namespace tdcut
