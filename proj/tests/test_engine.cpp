#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "tdcut/engine.hpp"

using namespace tdcut;

TEST_SUITE_BEGIN("engine");

TEST_CASE("universe sizes and weight ranges") {
    Universe plain{UniverseKind::PlainVertices, 5, {"", ""}};
    CHECK(plain.size() == 5);
    CHECK(plain.weight_ceiling() == 10);
    CHECK(plain.max_total_weight() == 50);
    Universe paired{UniverseKind::VertexPairs, 5, {"F", "M"}};
    CHECK(paired.size() == 10);
    CHECK(paired.weight_ceiling() == 20);
    CHECK(paired.max_total_weight() == 200);
}

TEST_CASE("generator is deterministic per seed") {
    SplitMix64 a(42), b(42), c(43);
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("uniform draws cover exactly 1..bound") {
    SplitMix64 rng(5);
    std::map<int, int> seen;
    for (int i = 0; i < 3000; ++i) ++seen[rng.uniform(6)];
    CHECK(seen.size() == 6);
    CHECK(seen.begin()->first == 1);
    CHECK(seen.rbegin()->first == 6);
    for (const auto& [value, count] : seen) CHECK(count > 300);  // crude uniformity
    CHECK(rng.uniform(1) == 1);
    CHECK_THROWS_AS(rng.uniform(0), ContractViolation);
}

TEST_CASE("substreams differ across trials and slots") {
    std::map<std::uint64_t, int> seen;
    for (std::uint64_t trial = 0; trial < 8; ++trial)
        for (std::uint64_t slot = 0; slot < 8; ++slot) ++seen[substream_seed(1, trial, slot)];
    CHECK(seen.size() == 64);
    CHECK(substream_seed(1, 0, 0) != substream_seed(2, 0, 0));
}

TEST_CASE("weight sampling respects the universe ceiling") {
    Universe u{UniverseKind::VertexPairs, 4, {"F", "M"}};
    SplitMix64 rng(8);
    WeightFunction w = sample_weights(u, rng);
    CHECK(w.size() == 8);
    CHECK(w.ceiling == 16);
    for (int i = 0; i < w.size(); ++i) {
        CHECK(w(i) >= 1);
        CHECK(w(i) <= w.ceiling);
    }
}

TEST_CASE("isolation trials report odd weight classes") {
    Universe u{UniverseKind::PlainVertices, 3, {"", ""}};
    RunConfig cfg;
    cfg.trials = 4;

    int calls = 0;
    CountCFn always_odd = [&](const WeightFunction& w) {
        ++calls;
        ParityMap out(static_cast<std::size_t>(u.max_total_weight()) + 1, 0);
        out[static_cast<std::size_t>(w(0))] = 1;
        return out;
    };
    CHECK(run_isolation_trials(u, always_odd, cfg));
    CHECK(calls == 1);  // first success short-circuits

    CountCFn always_even = [&](const WeightFunction&) {
        return ParityMap(static_cast<std::size_t>(u.max_total_weight()) + 1, 0);
    };
    CHECK_FALSE(run_isolation_trials(u, always_even, cfg));

    // Same seed, same weights, call by call.
    std::vector<std::vector<int>> first_run, second_run;
    CountCFn recorder = [&](const WeightFunction& w) {
        first_run.push_back(w.weights);
        return ParityMap(1, 0);
    };
    run_isolation_trials(u, recorder, cfg, 2);
    CountCFn recorder2 = [&](const WeightFunction& w) {
        second_run.push_back(w.weights);
        return ParityMap(1, 0);
    };
    run_isolation_trials(u, recorder2, cfg, 2);
    CHECK(first_run.size() == 4);
    CHECK(first_run == second_run);

    // A different forced-vertex slot sees different weights.
    std::vector<std::vector<int>> other_slot;
    CountCFn recorder3 = [&](const WeightFunction& w) {
        other_slot.push_back(w.weights);
        return ParityMap(1, 0);
    };
    run_isolation_trials(u, recorder3, cfg, 3);
    CHECK(first_run != other_slot);

    RunConfig bad;
    bad.trials = 0;
    CHECK_THROWS_AS(run_isolation_trials(u, always_even, bad), InvalidInput);
}

TEST_SUITE_END();
