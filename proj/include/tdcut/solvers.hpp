#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdcut/elim_forest.hpp"
#include "tdcut/engine.hpp"
#include "tdcut/gf2_poly.hpp"
#include "tdcut/graph.hpp"

namespace tdcut {

enum class Problem { Cvc, Fvs, St, Cds, Coct };

const char* problem_name(Problem p);
int state_count(Problem p);
Universe universe_for(Problem p, int n);
PolyBounds bounds_for(Problem p, const Graph& g);

// Branch states, in evaluation order. The left/right split is the candidate
// cut side; CVC/ST keep excluded vertices in one plain state, FVS splits the
// kept forest by cut side and deletes the rest, CDS distinguishes vertices
// that may stay undominated inside an inclusion-exclusion pair, COCT assigns
// removed-set membership or a bipartition side.
enum CvcState : int { CvcOut = 0, CvcInLeft = 1, CvcInRight = 2 };
enum FvsState : int { FvsForestLeft = 0, FvsForestRight = 1, FvsDeleted = 2 };
enum CdsState : int { CdsAllowed = 0, CdsForbidden = 1, CdsInLeft = 2, CdsInRight = 3 };
enum CoctState : int { CoctSideA = 0, CoctSideB = 1, CoctInLeft = 2, CoctInRight = 3 };

// One problem instance. v1 is the vertex forced onto the left cut side (the
// smallest terminal for ST); -1 means no forced vertex and is required for
// FVS, whose isolation runs over markers instead.
struct ProblemInstance {
    Problem problem = Problem::Cvc;
    int k = 0;
    std::vector<int> terminals;  // ST only, sorted and unique
    int v1 = -1;
};

// Assignment of branch states along the current root-to-v path.
class PathAssignment {
public:
    explicit PathAssignment(int n) : state_(n, -1) {}

    void push(int v, int s) {
        stack_.emplace_back(v, s);
        state_[v] = static_cast<signed char>(s);
    }
    void pop() {
        state_[stack_.back().first] = -1;
        stack_.pop_back();
    }
    // -1 when v is unassigned.
    int state_of(int v) const { return state_[v]; }
    bool assigned(int v) const { return state_[v] >= 0; }
    const std::vector<std::pair<int, int>>& entries() const { return stack_; }
    std::size_t size() const { return stack_.size(); }

private:
    std::vector<std::pair<int, int>> stack_;
    std::vector<signed char> state_;
};

// Leaf acceptance predicates: does a full assignment of tail[v] describe a
// locally valid partial candidate? These spell out the base case directly and
// back the pruned production recursion in tests.
bool leaf_cvc(const Graph& g, const PathAssignment& f, int v1);
bool leaf_st(const Graph& g, const PathAssignment& f, const std::vector<int>& terminals, int t1);
bool leaf_fvs(const Graph& g, const PathAssignment& f);
bool leaf_cds(const Graph& g, const PathAssignment& f, int v1);
bool leaf_coct(const Graph& g, const PathAssignment& f, int v1);
bool leaf_value(const Graph& g, const ProblemInstance& inst, const PathAssignment& f);

// Number of forest-state neighbors of v in the assignment; the edge-counter
// increment when v itself takes a forest state.
int fvs_incident_forest_edges(const Graph& g, const PathAssignment& f, int v);

// Branch combination rules: merge the per-state subtree polynomials of v into
// the polynomial of v's parent slot. All sums are over GF(2).
TrackedPoly pin_cvc(const WeightFunction& w, int v, const TrackedPoly& p_out,
                    const TrackedPoly& p_left, const TrackedPoly& p_right);
TrackedPoly pin_st(const WeightFunction& w, int v, const TrackedPoly& p_out,
                   const TrackedPoly& p_left, const TrackedPoly& p_right);
TrackedPoly pin_fvs(const WeightFunction& w, int v, int delta, const TrackedPoly& p_forest_left,
                    const TrackedPoly& p_forest_right, const TrackedPoly& p_deleted);
TrackedPoly pin_cds(const WeightFunction& w, int v, const TrackedPoly& p_allowed,
                    const TrackedPoly& p_forbidden, const TrackedPoly& p_left,
                    const TrackedPoly& p_right);
TrackedPoly pin_coct(const WeightFunction& w, int v, const TrackedPoly& p_side_a,
                     const TrackedPoly& p_side_b, const TrackedPoly& p_left,
                     const TrackedPoly& p_right);

struct SolverStats {
    std::uint64_t leaf_evals = 0;
    std::uint64_t branch_calls = 0;
    std::uint64_t peak_live_polys = 0;
    std::uint64_t leaf_count = 0;
    int depth = 0;
    int state_count = 0;
    // When set before the call, every (vertex, tail assignment) pair seen by
    // the branching recursion is hashed and revisits are counted. Small
    // instances only.
    bool check_unique_visits = false;
    std::uint64_t repeated_visits = 0;

    void absorb(const SolverStats& other);
};

// Full tracking polynomial of the root product for one weight function.
TrackedPoly countc_root_poly(const Graph& g, const EliminationForest& forest,
                             const ProblemInstance& inst, const WeightFunction& w,
                             SolverStats* stats = nullptr);

// Per-target-weight parity of the candidate count, for every total weight
// 0..|U|*2|U|. For FVS the entry at w folds all edge/marker splits of the
// acyclicity budget into one bit.
ParityMap countc_all(const Graph& g, const EliminationForest& forest,
                     const ProblemInstance& inst, const WeightFunction& w,
                     SolverStats* stats = nullptr);

// Decision procedures. YES answers are exact; NO answers are wrong with
// probability at most 2^-trials per forced-vertex choice. All expect k in
// [0, n] and, outside the documented degenerate cases, a connected graph.
bool solve_cvc(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg = {},
               SolverStats* stats = nullptr);
bool solve_fvs(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg = {},
               SolverStats* stats = nullptr);
bool solve_st(const Graph& g, const EliminationForest& forest, int k,
              const std::vector<int>& terminals, const RunConfig& cfg = {},
              SolverStats* stats = nullptr);
bool solve_cds(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg = {},
               SolverStats* stats = nullptr);
bool solve_coct(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg = {},
                SolverStats* stats = nullptr);
// Dispatch on inst.problem; inst.v1 is ignored (strategies pick it).
bool solve(const Graph& g, const EliminationForest& forest, const ProblemInstance& inst,
           const RunConfig& cfg = {}, SolverStats* stats = nullptr);

// Subdivide every edge with a terminal vertex: for k >= 1, g has a connected
// vertex cover of size k iff the subdivided graph has a Steiner tree on
// k + m(g) vertices. k = 0 maps to budget 0 instead, since a single
// subdivision vertex would otherwise pass as a one-vertex tree. Each
// subdivision vertex hangs below the deeper endpoint of its edge, so the
// forest depth grows by exactly one (given m >= 1).
struct CvcToStReduction {
    Graph graph;
    std::vector<int> terminals;
    int k = 0;
    EliminationForest forest;
};
CvcToStReduction reduce_cvc_to_st(const Graph& g, const EliminationForest& forest, int k);

}  // namespace tdcut
