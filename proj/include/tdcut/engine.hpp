#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tdcut/errors.hpp"

namespace tdcut {

// The weighted universe behind the isolation argument. Either the plain vertex
// set or two labeled copies of it; a labeled element (v, slot) has index
// 2v + slot.
enum class UniverseKind { PlainVertices, VertexPairs };

struct Universe {
    UniverseKind kind = UniverseKind::PlainVertices;
    int n = 0;
    std::array<const char*, 2> labels{"", ""};

    int size() const { return kind == UniverseKind::PlainVertices ? n : 2 * n; }
    int weight_ceiling() const { return 2 * size(); }
    // Largest total weight any subset of the universe can reach.
    int max_total_weight() const { return size() * weight_ceiling(); }
};

// SplitMix64. The standard library distributions are not pinned across
// implementations, so all randomness flows through this generator and its
// rejection sampler to keep runs byte-identical everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Unbiased uniform draw from [1, bound].
    int uniform(int bound);

private:
    std::uint64_t state_;
};

// Stateless finalizer used to derive independent substreams.
std::uint64_t mix64(std::uint64_t z);
// Stream layout: one substream per (trial, v1 slot) pair, where v1_slot is 0
// for problems without a forced vertex and v1 + 1 otherwise. Each substream
// draws its own complete weight function.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t trial,
                             std::uint64_t v1_slot);

struct WeightFunction {
    std::vector<int> weights;  // one per universe element, each in [1, ceiling]
    int ceiling = 0;

    int operator()(int element) const { return weights[element]; }
    int size() const { return static_cast<int>(weights.size()); }
};

WeightFunction sample_weights(const Universe& u, SplitMix64& rng);

enum class V1Strategy { FixedVertex, EdgeEndpoints, AllVertices, None };

struct RunConfig {
    int trials = 16;
    std::uint64_t seed = 0;
    // Unset picks the per-problem default; FixedVertex forces fixed_v1.
    std::optional<V1Strategy> v1_strategy;
    int fixed_v1 = 0;
};

// Index t holds |{candidates of weight t}| mod 2.
using ParityMap = std::vector<std::uint8_t>;
using CountCFn = std::function<ParityMap(const WeightFunction&)>;

// One full sweep per trial: draw fresh weights, evaluate the parity map once,
// report success if any weight class is odd. One-sided: true is always
// correct, false can be wrong with probability at most 2^-trials.
bool run_isolation_trials(const Universe& u, const CountCFn& countc_all,
                          const RunConfig& cfg, std::uint64_t v1_slot = 0);

}  // namespace tdcut
