#pragma once

// Unpruned reference recursion, assembled from the public leaf predicates and
// pin functions exactly as the plain branch/subtree definition reads: every
// state is explored, leaf predicates are evaluated in full at the leaves. The
// production path prunes dead states early; these routines exist to show that
// the pruning never changes the resulting polynomial.

#include <vector>

#include "tdcut/elim_forest.hpp"
#include "tdcut/gf2_poly.hpp"
#include "tdcut/solvers.hpp"

namespace tdcut_test {

struct RefCtx {
    const tdcut::Graph& g;
    const tdcut::EliminationForest& forest;
    const tdcut::ProblemInstance& inst;
    const tdcut::WeightFunction& w;
    tdcut::PolyBounds bounds;
};

inline tdcut::TrackedPoly ref_branch(RefCtx& ctx, int v, tdcut::PathAssignment& f);

inline tdcut::TrackedPoly ref_subtree(RefCtx& ctx, int v, tdcut::PathAssignment& f) {
    if (ctx.forest.is_leaf(v)) {
        return tdcut::leaf_value(ctx.g, ctx.inst, f) ? tdcut::poly_one(ctx.bounds)
                                                     : tdcut::poly_zero(ctx.bounds);
    }
    tdcut::TrackedPoly prod = tdcut::poly_one(ctx.bounds);
    for (int u : ctx.forest.children(v)) prod.mul_assign(ref_branch(ctx, u, f));
    return prod;
}

inline tdcut::TrackedPoly ref_branch(RefCtx& ctx, int v, tdcut::PathAssignment& f) {
    const int states = tdcut::state_count(ctx.inst.problem);
    const int delta = ctx.inst.problem == tdcut::Problem::Fvs
                          ? tdcut::fvs_incident_forest_edges(ctx.g, f, v)
                          : 0;
    std::vector<tdcut::TrackedPoly> ps;
    ps.reserve(states);
    for (int s = 0; s < states; ++s) {
        f.push(v, s);
        ps.push_back(ref_subtree(ctx, v, f));
        f.pop();
    }
    switch (ctx.inst.problem) {
        case tdcut::Problem::Cvc: return tdcut::pin_cvc(ctx.w, v, ps[0], ps[1], ps[2]);
        case tdcut::Problem::St: return tdcut::pin_st(ctx.w, v, ps[0], ps[1], ps[2]);
        case tdcut::Problem::Fvs:
            return tdcut::pin_fvs(ctx.w, v, delta, ps[0], ps[1], ps[2]);
        case tdcut::Problem::Cds:
            return tdcut::pin_cds(ctx.w, v, ps[0], ps[1], ps[2], ps[3]);
        case tdcut::Problem::Coct:
            return tdcut::pin_coct(ctx.w, v, ps[0], ps[1], ps[2], ps[3]);
    }
    return tdcut::poly_zero(ctx.bounds);
}

inline tdcut::TrackedPoly ref_root_poly(const tdcut::Graph& g,
                                        const tdcut::EliminationForest& forest,
                                        const tdcut::ProblemInstance& inst,
                                        const tdcut::WeightFunction& w) {
    RefCtx ctx{g, forest, inst, w, tdcut::bounds_for(inst.problem, g)};
    tdcut::PathAssignment f(g.n());
    tdcut::TrackedPoly total = tdcut::poly_one(ctx.bounds);
    for (int r : forest.roots()) total.mul_assign(ref_branch(ctx, r, f));
    return total;
}

}  // namespace tdcut_test
