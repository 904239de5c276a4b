#pragma once
// Named sweep presets: small, CI-sized configurations runnable by name from
// the CLI. Byte-identical CSV for a fixed master seed is part of the
// contract, so everything here is deterministic arithmetic.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmlab/experiment.hpp"

namespace asmlab {

enum class PresetKind { Capacity, Noise, Repeats };

struct PresetRun {
    std::string name;
    PresetKind kind = PresetKind::Capacity;
    ExperimentConfig cfg;
    std::vector<double> eps_grid; // noise sweeps
    std::vector<double> r_grid;   // repeats sweeps
};

inline PresetRun make_preset(const std::string& name, uint64_t seed) {
    PresetRun pr;
    pr.name = name;
    pr.cfg.seed = seed;
    if (name == "capacity-uniform-small") {
        pr.kind = PresetKind::Capacity;
        pr.cfg.G = 10000;
        pr.cfg.lbar_grid = {0.8, 2.0, 3.0};
        pr.cfg.algo = AlgoId::Greedy;
        pr.cfg.trials_per_point = 10;
        pr.cfg.target_success = 0.9;
    } else if (name == "noise-small") {
        pr.kind = PresetKind::Noise;
        pr.cfg.G = 3000;
        pr.cfg.lbar_grid = {2.0}; // unused by the noise sweep; kept nonempty
        pr.cfg.algo = AlgoId::NoisyGreedy;
        pr.cfg.trials_per_point = 6;
        pr.cfg.target_success = 0.5;
        pr.eps_grid = {0.0, 0.05};
    } else if (name == "repeats-small") {
        pr.kind = PresetKind::Repeats;
        pr.cfg.G = 20000;
        pr.cfg.algo = AlgoId::Repeats;
        pr.cfg.trials_per_point = 10;
        pr.cfg.target_success = 0.9;
        PairedSpec ps;
        ps.M = 8;
        ps.K = 40;
        ps.J = 80;
        ps.d = 3;
        pr.cfg.paired = ps;
        const double g_full = static_cast<double>(pr.cfg.G + ps.M * ps.K);
        const double L = 24;
        // 23.5 rather than 24: ceil(lbar * log2 G) must not round 24 up
        pr.cfg.lbar_grid = {23.5 / std::log2(g_full)}; // pins L = 24
        const double b = std::min(
            bridging_rate_bound(static_cast<double>(ps.J), L, ps.d, static_cast<double>(ps.K),
                                static_cast<double>(ps.M)),
            L / std::log(g_full)); // coverage-limited cap on R = G/N
        pr.r_grid = {0.7 * b, 1.5 * b};
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return pr;
}

inline std::string run_preset_csv(const PresetRun& pr) {
    switch (pr.kind) {
        case PresetKind::Capacity: return capacity_csv(sweep_capacity(pr.cfg));
        case PresetKind::Noise: return noise_csv(sweep_noise(pr.cfg, pr.eps_grid));
        default: return repeats_csv(sweep_repeats(pr.cfg, pr.r_grid));
    }
}

} // namespace asmlab
