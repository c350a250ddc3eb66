#include "tdcut/solvers.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_set>

namespace tdcut {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::Cvc: return "cvc";
        case Problem::Fvs: return "fvs";
        case Problem::St: return "st";
        case Problem::Cds: return "cds";
        case Problem::Coct: return "coct";
    }
    return "?";
}

int state_count(Problem p) {
    switch (p) {
        case Problem::Cvc:
        case Problem::Fvs:
        case Problem::St: return 3;
        case Problem::Cds:
        case Problem::Coct: return 4;
    }
    return 0;
}

Universe universe_for(Problem p, int n) {
    switch (p) {
        case Problem::Fvs: return {UniverseKind::VertexPairs, n, {"F", "M"}};
        case Problem::Coct: return {UniverseKind::VertexPairs, n, {"X", "A"}};
        default: return {UniverseKind::PlainVertices, n, {"", ""}};
    }
}

PolyBounds bounds_for(Problem p, const Graph& g) {
    const Universe u = universe_for(p, g.n());
    const auto w_max = static_cast<std::uint32_t>(u.max_total_weight());
    const auto n = static_cast<std::uint32_t>(g.n());
    if (p == Problem::Fvs)
        return PolyBounds::four_tracker(w_max, n, static_cast<std::uint32_t>(g.m()), n);
    return PolyBounds::two_tracker(w_max, n);
}

// ---------------------------------------------------------------------------
// Leaf predicates. Each inspects only pairs of assigned vertices plus the
// forced-vertex rule, so it is meaningful for any prefix assignment; at a leaf
// of the elimination forest the assignment covers a maximal clique-path and
// the checks add up to candidate validity inside tail[v].

bool leaf_cvc(const Graph& g, const PathAssignment& f, int v1) {
    if (v1 >= 0 && f.assigned(v1) && f.state_of(v1) != CvcInLeft) return false;
    for (const auto& [v, sv] : f.entries())
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (sv == CvcOut && su == CvcOut) return false;       // uncovered edge
            if (sv == CvcInLeft && su == CvcInRight) return false;  // cut crossed
        }
    return true;
}

bool leaf_st(const Graph& g, const PathAssignment& f, const std::vector<int>& terminals,
             int t1) {
    if (t1 >= 0 && f.assigned(t1) && f.state_of(t1) != CvcInLeft) return false;
    for (int t : terminals)
        if (f.assigned(t) && f.state_of(t) == CvcOut) return false;
    for (const auto& [v, sv] : f.entries())
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (sv == CvcInLeft && su == CvcInRight) return false;
        }
    return true;
}

bool leaf_fvs(const Graph& g, const PathAssignment& f) {
    for (const auto& [v, sv] : f.entries())
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (sv == FvsForestLeft && su == FvsForestRight) return false;
        }
    return true;
}

bool leaf_cds(const Graph& g, const PathAssignment& f, int v1) {
    if (v1 >= 0 && f.assigned(v1) && f.state_of(v1) != CdsInLeft) return false;
    for (const auto& [v, sv] : f.entries())
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (sv == CdsInLeft && su == CdsInRight) return false;
            // Forbidden vertices must stay undominated by the candidate.
            if ((sv == CdsInLeft || sv == CdsInRight) && su == CdsForbidden) return false;
        }
    return true;
}

bool leaf_coct(const Graph& g, const PathAssignment& f, int v1) {
    if (v1 >= 0 && f.assigned(v1) && f.state_of(v1) != CoctInLeft) return false;
    for (const auto& [v, sv] : f.entries())
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (sv == CoctInLeft && su == CoctInRight) return false;
            if (sv == CoctSideA && su == CoctSideA) return false;  // side A independent
            if (sv == CoctSideB && su == CoctSideB) return false;  // side B independent
        }
    return true;
}

bool leaf_value(const Graph& g, const ProblemInstance& inst, const PathAssignment& f) {
    switch (inst.problem) {
        case Problem::Cvc: return leaf_cvc(g, f, inst.v1);
        case Problem::Fvs: return leaf_fvs(g, f);
        case Problem::St: return leaf_st(g, f, inst.terminals, inst.v1);
        case Problem::Cds: return leaf_cds(g, f, inst.v1);
        case Problem::Coct: return leaf_coct(g, f, inst.v1);
    }
    return false;
}

int fvs_incident_forest_edges(const Graph& g, const PathAssignment& f, int v) {
    int count = 0;
    for (int u : g.neighbors(v)) {
        int su = f.state_of(u);
        if (su == FvsForestLeft || su == FvsForestRight) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Per-state monomial shifts. One table per problem feeds both the standalone
// pin functions and the branching recursion, so the two cannot drift apart.
// FVS is the only problem where a state contributes two monomials: keeping a
// forest vertex on the left happens either unmarked or marked, and the marked
// row also pays the marker copy's weight.

namespace {

struct StateShifts {
    int count = 0;
    std::array<ExponentVec, 2> ev{};
};

StateShifts cvc_shifts(const WeightFunction& w, int v, int s) {
    if (s == CvcOut) return {1, {}};
    return {1, {ExponentVec{static_cast<std::uint32_t>(w(v)), 1, 0, 0}, {}}};
}

StateShifts fvs_shifts(const WeightFunction& w, int v, int s, int delta) {
    const auto d = static_cast<std::uint32_t>(delta);
    const auto wf = static_cast<std::uint32_t>(w(2 * v));
    const auto wm = static_cast<std::uint32_t>(w(2 * v + 1));
    switch (s) {
        case FvsForestLeft:
            return {2, {ExponentVec{wf, 1, d, 0}, ExponentVec{wf + wm, 1, d, 1}}};
        case FvsForestRight: return {1, {ExponentVec{wf, 1, d, 0}, {}}};
        default: return {1, {}};
    }
}

StateShifts cds_shifts(const WeightFunction& w, int v, int s) {
    if (s == CdsAllowed || s == CdsForbidden) return {1, {}};
    return {1, {ExponentVec{static_cast<std::uint32_t>(w(v)), 1, 0, 0}, {}}};
}

StateShifts coct_shifts(const WeightFunction& w, int v, int s) {
    switch (s) {
        case CoctSideA:
            return {1, {ExponentVec{static_cast<std::uint32_t>(w(2 * v + 1)), 0, 0, 0}, {}}};
        case CoctSideB: return {1, {}};
        default: return {1, {ExponentVec{static_cast<std::uint32_t>(w(2 * v)), 1, 0, 0}, {}}};
    }
}

void append_state(TrackedPoly& acc, const TrackedPoly& p, const StateShifts& sh) {
    for (int i = 0; i < sh.count; ++i) acc.add_shifted(p, sh.ev[i]);
}

}  // namespace

TrackedPoly pin_cvc(const WeightFunction& w, int v, const TrackedPoly& p_out,
                    const TrackedPoly& p_left, const TrackedPoly& p_right) {
    TrackedPoly acc(p_out.bounds());
    append_state(acc, p_out, cvc_shifts(w, v, CvcOut));
    append_state(acc, p_left, cvc_shifts(w, v, CvcInLeft));
    append_state(acc, p_right, cvc_shifts(w, v, CvcInRight));
    return acc;
}

TrackedPoly pin_st(const WeightFunction& w, int v, const TrackedPoly& p_out,
                   const TrackedPoly& p_left, const TrackedPoly& p_right) {
    return pin_cvc(w, v, p_out, p_left, p_right);
}

TrackedPoly pin_fvs(const WeightFunction& w, int v, int delta, const TrackedPoly& p_forest_left,
                    const TrackedPoly& p_forest_right, const TrackedPoly& p_deleted) {
    TrackedPoly acc(p_forest_left.bounds());
    append_state(acc, p_forest_left, fvs_shifts(w, v, FvsForestLeft, delta));
    append_state(acc, p_forest_right, fvs_shifts(w, v, FvsForestRight, delta));
    append_state(acc, p_deleted, fvs_shifts(w, v, FvsDeleted, delta));
    return acc;
}

TrackedPoly pin_cds(const WeightFunction& w, int v, const TrackedPoly& p_allowed,
                    const TrackedPoly& p_forbidden, const TrackedPoly& p_left,
                    const TrackedPoly& p_right) {
    // Allowed minus forbidden cancels completions with an undominated vertex;
    // over GF(2) the subtraction is an addition.
    TrackedPoly acc(p_allowed.bounds());
    append_state(acc, p_allowed, cds_shifts(w, v, CdsAllowed));
    append_state(acc, p_forbidden, cds_shifts(w, v, CdsForbidden));
    append_state(acc, p_left, cds_shifts(w, v, CdsInLeft));
    append_state(acc, p_right, cds_shifts(w, v, CdsInRight));
    return acc;
}

TrackedPoly pin_coct(const WeightFunction& w, int v, const TrackedPoly& p_side_a,
                     const TrackedPoly& p_side_b, const TrackedPoly& p_left,
                     const TrackedPoly& p_right) {
    TrackedPoly acc(p_side_a.bounds());
    append_state(acc, p_side_a, coct_shifts(w, v, CoctSideA));
    append_state(acc, p_side_b, coct_shifts(w, v, CoctSideB));
    append_state(acc, p_left, coct_shifts(w, v, CoctInLeft));
    append_state(acc, p_right, coct_shifts(w, v, CoctInRight));
    return acc;
}

// ---------------------------------------------------------------------------
// Branching recursion. States that already violate a pairwise check against an
// assigned ancestor (or the forced-vertex rule) contribute the zero polynomial
// whatever happens below, so they are pruned at push time; the leaf case then
// reduces to the constant one. Every other (vertex, assignment) pair is
// visited exactly once, no memoization.

namespace {

struct CvcPolicy {
    static constexpr Problem kProblem = Problem::Cvc;
    static constexpr int kStates = 3;
    static constexpr bool kNeedsDelta = false;

    static bool push_ok(const Graph& g, const ProblemInstance& inst,
                        const std::vector<char>&, const PathAssignment& f, int v, int s) {
        if (v == inst.v1 && s != CvcInLeft) return false;
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if (s == CvcOut && su == CvcOut) return false;
            if ((s == CvcInLeft && su == CvcInRight) || (s == CvcInRight && su == CvcInLeft))
                return false;
        }
        return true;
    }
    static StateShifts shifts(const WeightFunction& w, int v, int s, int) {
        return cvc_shifts(w, v, s);
    }
};

struct StPolicy {
    static constexpr Problem kProblem = Problem::St;
    static constexpr int kStates = 3;
    static constexpr bool kNeedsDelta = false;

    static bool push_ok(const Graph& g, const ProblemInstance& inst,
                        const std::vector<char>& is_terminal, const PathAssignment& f, int v,
                        int s) {
        if (v == inst.v1 && s != CvcInLeft) return false;
        if (is_terminal[v] && s == CvcOut) return false;
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if ((s == CvcInLeft && su == CvcInRight) || (s == CvcInRight && su == CvcInLeft))
                return false;
        }
        return true;
    }
    static StateShifts shifts(const WeightFunction& w, int v, int s, int) {
        return cvc_shifts(w, v, s);
    }
};

struct FvsPolicy {
    static constexpr Problem kProblem = Problem::Fvs;
    static constexpr int kStates = 3;
    static constexpr bool kNeedsDelta = true;

    static bool push_ok(const Graph& g, const ProblemInstance&, const std::vector<char>&,
                        const PathAssignment& f, int v, int s) {
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if ((s == FvsForestLeft && su == FvsForestRight) ||
                (s == FvsForestRight && su == FvsForestLeft))
                return false;
        }
        return true;
    }
    static StateShifts shifts(const WeightFunction& w, int v, int s, int delta) {
        return fvs_shifts(w, v, s, delta);
    }
};

struct CdsPolicy {
    static constexpr Problem kProblem = Problem::Cds;
    static constexpr int kStates = 4;
    static constexpr bool kNeedsDelta = false;

    static bool push_ok(const Graph& g, const ProblemInstance& inst,
                        const std::vector<char>&, const PathAssignment& f, int v, int s) {
        if (v == inst.v1 && s != CdsInLeft) return false;
        const bool in_candidate = s == CdsInLeft || s == CdsInRight;
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if ((s == CdsInLeft && su == CdsInRight) || (s == CdsInRight && su == CdsInLeft))
                return false;
            if (in_candidate && su == CdsForbidden) return false;
            if (s == CdsForbidden && (su == CdsInLeft || su == CdsInRight)) return false;
        }
        return true;
    }
    static StateShifts shifts(const WeightFunction& w, int v, int s, int) {
        return cds_shifts(w, v, s);
    }
};

struct CoctPolicy {
    static constexpr Problem kProblem = Problem::Coct;
    static constexpr int kStates = 4;
    static constexpr bool kNeedsDelta = false;

    static bool push_ok(const Graph& g, const ProblemInstance& inst,
                        const std::vector<char>&, const PathAssignment& f, int v, int s) {
        if (v == inst.v1 && s != CoctInLeft) return false;
        for (int u : g.neighbors(v)) {
            int su = f.state_of(u);
            if (su < 0) continue;
            if ((s == CoctInLeft && su == CoctInRight) || (s == CoctInRight && su == CoctInLeft))
                return false;
            if (s == CoctSideA && su == CoctSideA) return false;
            if (s == CoctSideB && su == CoctSideB) return false;
        }
        return true;
    }
    static StateShifts shifts(const WeightFunction& w, int v, int s, int) {
        return coct_shifts(w, v, s);
    }
};

template <class Policy>
class BranchRun {
public:
    BranchRun(const Graph& g, const EliminationForest& forest, const ProblemInstance& inst,
              const WeightFunction& w, const PolyBounds& bounds, SolverStats* stats)
        : g_(g), forest_(forest), inst_(inst), w_(w), bounds_(bounds), stats_(stats),
          f_(g.n()) {
        is_terminal_.assign(g.n(), 0);
        for (int t : inst.terminals) is_terminal_[t] = 1;
        if (stats_ && stats_->check_unique_visits) visit_log_.emplace();
    }

    TrackedPoly run() {
        TrackedPoly total = poly_one(bounds_);
        for (int r : forest_.roots()) {
            if (total.is_zero()) break;
            TrackedPoly sub = branch(r);
            total.mul_assign(sub);
        }
        return total;
    }

private:
    TrackedPoly branch(int v) {
        if (stats_) ++stats_->branch_calls;
        if (visit_log_) log_visit(v);
        const int delta =
            Policy::kNeedsDelta ? fvs_incident_forest_edges(g_, f_, v) : 0;
        TrackedPoly acc(bounds_);
        for (int s = 0; s < Policy::kStates; ++s) {
            if (!Policy::push_ok(g_, inst_, is_terminal_, f_, v, s)) continue;
            f_.push(v, s);
            TrackedPoly sub = subtree(v);
            f_.pop();
            if (!sub.is_zero()) append_state(acc, sub, Policy::shifts(w_, v, s, delta));
        }
        return acc;
    }

    TrackedPoly subtree(int v) {
        TrackedPoly prod = poly_one(bounds_);
        if (forest_.is_leaf(v)) {
            if (stats_) ++stats_->leaf_evals;
            return prod;  // pruning already rejected invalid assignments
        }
        for (int u : forest_.children(v)) {
            if (prod.is_zero()) break;
            TrackedPoly sub = branch(u);
            prod.mul_assign(sub);
        }
        return prod;
    }

    void log_visit(int v) {
        std::string key;
        key.reserve(4 + f_.size());
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>(v >> (8 * b)));
        for (const auto& [u, s] : f_.entries()) key.push_back(static_cast<char>(s));
        if (!visit_log_->insert(std::move(key)).second && stats_) ++stats_->repeated_visits;
    }

    const Graph& g_;
    const EliminationForest& forest_;
    const ProblemInstance& inst_;
    const WeightFunction& w_;
    PolyBounds bounds_;
    SolverStats* stats_;
    PathAssignment f_;
    std::vector<char> is_terminal_;
    std::optional<std::unordered_set<std::string>> visit_log_;
};

void validate_countc_input(const Graph& g, const EliminationForest& forest,
                           const ProblemInstance& inst, const WeightFunction& w) {
    if (g.n() < 1) throw InvalidInput("count needs at least one vertex");
    if (auto why = validate_forest(g, forest))
        throw InvalidInput("invalid elimination forest: " + *why);
    if (inst.k < 0 || inst.k > g.n())
        throw InvalidInput("k must lie in 0..n, got " + std::to_string(inst.k));
    const Universe u = universe_for(inst.problem, g.n());
    if (w.size() != u.size()) throw InvalidInput("weight function covers the wrong universe");
    if (w.ceiling != u.weight_ceiling()) throw InvalidInput("weight ceiling mismatch");
    for (int value : w.weights)
        if (value < 1 || value > w.ceiling) throw InvalidInput("weight outside 1..2|U|");
    switch (inst.problem) {
        case Problem::Fvs:
            if (inst.v1 != -1) throw InvalidInput("feedback vertex set takes no forced vertex");
            break;
        case Problem::St: {
            if (inst.terminals.empty()) throw InvalidInput("Steiner tree needs terminals");
            if (!std::is_sorted(inst.terminals.begin(), inst.terminals.end()) ||
                std::adjacent_find(inst.terminals.begin(), inst.terminals.end()) !=
                    inst.terminals.end())
                throw InvalidInput("terminals must be sorted and unique");
            for (int t : inst.terminals)
                if (t < 0 || t >= g.n()) throw InvalidInput("terminal out of range");
            if (!std::binary_search(inst.terminals.begin(), inst.terminals.end(), inst.v1))
                throw InvalidInput("forced vertex must be a terminal");
            break;
        }
        default:
            if (inst.v1 < 0 || inst.v1 >= g.n())
                throw InvalidInput("forced vertex out of range");
    }
}

template <class Policy>
TrackedPoly run_policy(const Graph& g, const EliminationForest& forest,
                       const ProblemInstance& inst, const WeightFunction& w,
                       SolverStats* stats) {
    const PolyBounds bounds = bounds_for(inst.problem, g);
    const PolyCounters entry = poly_counters();
    reset_poly_peak();
    BranchRun<Policy> run(g, forest, inst, w, bounds, stats);
    TrackedPoly result = run.run();
    if (stats) {
        stats->peak_live_polys =
            static_cast<std::uint64_t>(poly_counters().peak - entry.live);
        stats->depth = forest.depth();
        stats->state_count = state_count(inst.problem);
        stats->leaf_count = static_cast<std::uint64_t>(forest.leaf_count());
    }
    return result;
}

}  // namespace

void SolverStats::absorb(const SolverStats& other) {
    leaf_evals += other.leaf_evals;
    branch_calls += other.branch_calls;
    peak_live_polys = std::max(peak_live_polys, other.peak_live_polys);
    leaf_count = other.leaf_count;
    depth = other.depth;
    state_count = other.state_count;
    repeated_visits += other.repeated_visits;
}

TrackedPoly countc_root_poly(const Graph& g, const EliminationForest& forest,
                             const ProblemInstance& inst, const WeightFunction& w,
                             SolverStats* stats) {
    validate_countc_input(g, forest, inst, w);
    switch (inst.problem) {
        case Problem::Cvc: return run_policy<CvcPolicy>(g, forest, inst, w, stats);
        case Problem::Fvs: return run_policy<FvsPolicy>(g, forest, inst, w, stats);
        case Problem::St: return run_policy<StPolicy>(g, forest, inst, w, stats);
        case Problem::Cds: return run_policy<CdsPolicy>(g, forest, inst, w, stats);
        case Problem::Coct: return run_policy<CoctPolicy>(g, forest, inst, w, stats);
    }
    throw ContractViolation("unknown problem tag");
}

ParityMap countc_all(const Graph& g, const EliminationForest& forest,
                     const ProblemInstance& inst, const WeightFunction& w,
                     SolverStats* stats) {
    const TrackedPoly p = countc_root_poly(g, forest, inst, w, stats);
    const Universe u = universe_for(inst.problem, g.n());
    ParityMap out(static_cast<std::size_t>(u.max_total_weight()) + 1, 0);
    if (inst.problem == Problem::Fvs) {
        // Candidates keep y = n - k vertices; a forest on them has j edges and
        // n - k - j components, each of which consumes one marker. Fold every
        // admissible (j, marker) split into the weight-class bit.
        const auto y = static_cast<std::uint32_t>(g.n() - inst.k);
        for (std::uint64_t key : p.keys()) {
            ExponentVec ev = p.bounds().unpack(key);
            if (ev.x == y && ev.e + ev.m == y && ev.m >= 1) out[ev.w] ^= 1;
        }
    } else {
        const auto k = static_cast<std::uint32_t>(inst.k);
        for (std::uint64_t key : p.keys()) {
            ExponentVec ev = p.bounds().unpack(key);
            if (ev.x == k) out[ev.w] ^= 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decision procedures.

namespace {

void check_k(const Graph& g, int k) {
    if (k < 0 || k > g.n())
        throw InvalidInput("k must lie in 0..n, got " + std::to_string(k));
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("input graph must be connected");
}

void require_valid_forest(const Graph& g, const EliminationForest& forest) {
    if (auto why = validate_forest(g, forest))
        throw InvalidInput("invalid elimination forest: " + *why);
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> out(g.n());
    for (int v = 0; v < g.n(); ++v) out[v] = v;
    return out;
}

// Runs the trial loop for each forced-vertex choice in order; empty means a
// single run with no forced vertex. Any odd weight class anywhere is a YES.
bool run_cutcount(const Graph& g, const EliminationForest& forest, ProblemInstance inst,
                  const RunConfig& cfg, SolverStats* stats,
                  const std::vector<int>& v1_choices) {
    require_valid_forest(g, forest);
    const Universe u = universe_for(inst.problem, g.n());
    auto attempt = [&](int v1, std::uint64_t slot) {
        inst.v1 = v1;
        CountCFn fn = [&](const WeightFunction& w) {
            if (!stats) return countc_all(g, forest, inst, w, nullptr);
            SolverStats local;
            local.check_unique_visits = stats->check_unique_visits;
            ParityMap pm = countc_all(g, forest, inst, w, &local);
            stats->absorb(local);
            return pm;
        };
        return run_isolation_trials(u, fn, cfg, slot);
    };
    if (v1_choices.empty()) return attempt(-1, 0);
    for (int v1 : v1_choices)
        if (attempt(v1, static_cast<std::uint64_t>(v1) + 1)) return true;
    return false;
}

std::vector<int> resolve_v1_choices(const Graph& g, Problem p, const RunConfig& cfg,
                                    const std::vector<int>& terminals) {
    V1Strategy strategy;
    switch (p) {
        case Problem::Cvc: strategy = V1Strategy::EdgeEndpoints; break;
        case Problem::Fvs: strategy = V1Strategy::None; break;
        case Problem::St: strategy = V1Strategy::FixedVertex; break;
        default: strategy = V1Strategy::AllVertices; break;
    }
    if (cfg.v1_strategy) strategy = *cfg.v1_strategy;
    switch (strategy) {
        case V1Strategy::None:
            if (p != Problem::Fvs)
                throw InvalidInput("this problem needs a forced-vertex strategy");
            return {};
        case V1Strategy::FixedVertex: {
            int v1 = p == Problem::St && !cfg.v1_strategy ? terminals.front() : cfg.fixed_v1;
            if (p == Problem::St &&
                !std::binary_search(terminals.begin(), terminals.end(), v1))
                throw InvalidInput("fixed forced vertex must be a terminal");
            if (v1 < 0 || v1 >= g.n()) throw InvalidInput("fixed forced vertex out of range");
            return {v1};
        }
        case V1Strategy::EdgeEndpoints: {
            if (p == Problem::Fvs || p == Problem::St)
                throw InvalidInput("edge-endpoints strategy not available here");
            if (g.m() == 0) throw InvalidInput("edge-endpoints strategy needs an edge");
            std::pair<int, int> best{g.n(), g.n()};
            for (const auto& [a, b] : g.edges()) {
                std::pair<int, int> cand = std::minmax(a, b);
                best = std::min(best, cand);
            }
            return {best.first, best.second};
        }
        case V1Strategy::AllVertices:
            if (p == Problem::St) return terminals;
            return all_vertices(g);
    }
    throw ContractViolation("unknown forced-vertex strategy");
}

}  // namespace

bool solve_cvc(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg,
               SolverStats* stats) {
    check_k(g, k);
    if (k == 0) return g.m() == 0;  // only the empty cover is available
    if (g.m() == 0) {
        // A connected edgeless graph is a single vertex; that vertex is a
        // connected cover of any admissible size. The forced-edge strategy
        // needs an edge, hence the shortcut.
        require_connected(g);
        return true;
    }
    require_connected(g);
    ProblemInstance inst{Problem::Cvc, k, {}, -1};
    return run_cutcount(g, forest, inst, cfg, stats,
                        resolve_v1_choices(g, Problem::Cvc, cfg, {}));
}

bool solve_fvs(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg,
               SolverStats* stats) {
    check_k(g, k);
    if (k >= g.n()) return true;  // deleting every vertex leaves the empty forest
    require_connected(g);
    ProblemInstance inst{Problem::Fvs, k, {}, -1};
    return run_cutcount(g, forest, inst, cfg, stats,
                        resolve_v1_choices(g, Problem::Fvs, cfg, {}));
}

bool solve_st(const Graph& g, const EliminationForest& forest, int k,
              const std::vector<int>& terminals, const RunConfig& cfg, SolverStats* stats) {
    check_k(g, k);
    std::vector<int> t(terminals);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int v : t)
        if (v < 0 || v >= g.n()) throw InvalidInput("terminal out of range");
    if (t.empty()) {
        if (k == 0) return true;
        throw InvalidInput("Steiner tree needs terminals when k >= 1");
    }
    if (k == 0) return false;  // terminals exist but no vertex may be picked
    if (t.size() == 1 && k == 1) return true;
    require_connected(g);
    ProblemInstance inst{Problem::St, k, t, -1};
    return run_cutcount(g, forest, inst, cfg, stats,
                        resolve_v1_choices(g, Problem::St, cfg, t));
}

bool solve_cds(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg,
               SolverStats* stats) {
    check_k(g, k);
    if (k == 0) return g.n() == 0;  // the empty set dominates nothing
    require_connected(g);
    ProblemInstance inst{Problem::Cds, k, {}, -1};
    return run_cutcount(g, forest, inst, cfg, stats,
                        resolve_v1_choices(g, Problem::Cds, cfg, {}));
}

bool solve_coct(const Graph& g, const EliminationForest& forest, int k, const RunConfig& cfg,
                SolverStats* stats) {
    check_k(g, k);
    if (k == 0) return is_bipartite(g);
    require_connected(g);
    ProblemInstance inst{Problem::Coct, k, {}, -1};
    return run_cutcount(g, forest, inst, cfg, stats,
                        resolve_v1_choices(g, Problem::Coct, cfg, {}));
}

bool solve(const Graph& g, const EliminationForest& forest, const ProblemInstance& inst,
           const RunConfig& cfg, SolverStats* stats) {
    switch (inst.problem) {
        case Problem::Cvc: return solve_cvc(g, forest, inst.k, cfg, stats);
        case Problem::Fvs: return solve_fvs(g, forest, inst.k, cfg, stats);
        case Problem::St: return solve_st(g, forest, inst.k, inst.terminals, cfg, stats);
        case Problem::Cds: return solve_cds(g, forest, inst.k, cfg, stats);
        case Problem::Coct: return solve_coct(g, forest, inst.k, cfg, stats);
    }
    throw ContractViolation("unknown problem tag");
}

CvcToStReduction reduce_cvc_to_st(const Graph& g, const EliminationForest& forest, int k) {
    check_k(g, k);
    require_valid_forest(g, forest);
    const int n = g.n();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.m());
    std::vector<int> parent(n + g.m());
    std::vector<int> terminals(g.m());
    for (int v = 0; v < n; ++v) parent[v] = forest.parent(v);
    for (int i = 0; i < g.m(); ++i) {
        const auto& [a, b] = g.edges()[i];
        const int mid = n + i;
        edges.emplace_back(a, mid);
        edges.emplace_back(mid, b);
        // The endpoints are ancestor and descendant; hang mid below the deeper.
        parent[mid] = forest.depth_of(a) > forest.depth_of(b) ? a : b;
        terminals[i] = mid;
    }
    // k = 0 is satisfiable only on edgeless graphs. The generic budget k + m
    // would wrongly accept a lone subdivision vertex when m = 1, so map it to
    // budget 0, which is NO exactly when terminals exist.
    const int budget = k == 0 ? 0 : k + g.m();
    return {Graph(n + g.m(), std::move(edges)), std::move(terminals), budget,
            EliminationForest(std::move(parent))};
}

}  // namespace tdcut
