#include "tdcut/engine.hpp"

namespace tdcut {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

int SplitMix64::uniform(int bound) {
    if (bound < 1) throw ContractViolation("uniform draw needs a positive bound");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t reject_below = (0 - b) % b;  // 2^64 mod b
    std::uint64_t r;
    do {
        r = next();
    } while (r < reject_below);
    return static_cast<int>(r % b) + 1;
}

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t trial,
                             std::uint64_t v1_slot) {
    std::uint64_t s = mix64(master_seed ^ 0x9E3779B97F4A7C15ULL * (trial + 1));
    return mix64(s ^ 0xC2B2AE3D27D4EB4FULL * (v1_slot + 1));
}

WeightFunction sample_weights(const Universe& u, SplitMix64& rng) {
    WeightFunction w;
    w.ceiling = u.weight_ceiling();
    w.weights.reserve(u.size());
    for (int i = 0; i < u.size(); ++i) w.weights.push_back(rng.uniform(w.ceiling));
    return w;
}

bool run_isolation_trials(const Universe& u, const CountCFn& countc_all,
                          const RunConfig& cfg, std::uint64_t v1_slot) {
    if (cfg.trials < 1) throw InvalidInput("trial count must be positive");
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng(substream_seed(cfg.seed, static_cast<std::uint64_t>(trial), v1_slot));
        WeightFunction w = sample_weights(u, rng);
        ParityMap parities = countc_all(w);
        for (std::uint8_t bit : parities)
            if (bit & 1) return true;
    }
    return false;
}

}  // namespace tdcut
