#pragma once
// Monte Carlo harness: trial runner (OpenMP-parallel with a serial
// reference), empirical Nmin search, and the three threshold sweeps that
// regenerate the phase-transition figures at desk scale.
//
// Every result is a pure function of (config, master seed): trial t at grid
// tag g uses derive_seed(seed, g, t, 0), and aggregation is an
// order-independent reduction, so parallel and serial runs agree exactly.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asmlab/entropy.hpp"
#include "asmlab/sequence.hpp"

namespace asmlab {

enum class AlgoId { Greedy, Sequential, DeBruijn, NoisyGreedy, Repeats };

AlgoId algo_from_name(const std::string& name); // throws on unknown
const char* algo_name(AlgoId a);

struct SourceSpec {
    bool markov = false;
    IidModel iid = uniform_model();
    MarkovModel markov_model{};
    std::array<double, 4> marginal() const; // iid p, or Markov stationary law
};

struct PairedSpec {
    long long K = 0, M = 0, J = 0;
    int d = 0;
};

struct ExperimentConfig {
    long long G = 10000; // base genome length (pre-planting for repeats runs)
    std::vector<double> lbar_grid;
    SourceSpec source;
    std::optional<double> noise_eps;
    AlgoId algo = AlgoId::Greedy;
    int kmer_k = -1; // de Bruijn K; < 0 means 3L/4
    double theta_override = -1; // MAP threshold pin; < 0 means the I* argmax
    long long trials_per_point = 40;
    double target_success = 0.9;
    uint64_t seed = 0;
    std::optional<PairedSpec> paired;
    void validate() const; // throws std::invalid_argument
};

// one sample of the error event: generate, sample, assemble, compare
// (circular equality; perfect layout under noise)
bool run_trial(const ExperimentConfig& cfg, long long L, long long N, uint64_t trial_seed);

// `trials` samples at grid tag `point_tag`; parallel over trials when built
// with OpenMP. run_trials_serial is the reference implementation the
// benchmark compares against.
long long run_trials(const ExperimentConfig& cfg, long long L, long long N, long long trials,
                     uint64_t point_tag);
long long run_trials_serial(const ExperimentConfig& cfg, long long L, long long N,
                            long long trials, uint64_t point_tag);

struct NminEstimate {
    long long nmin = 0; // meaningful iff !infinite
    bool infinite = false;
    long long ncov = 0;
    double success_rate = 0; // empirical rate at nmin (0 when infinite)
};

// exponential search up from ncov, then bisection to resolution
// max(1, ncov/32); cap 64*ncov reached => infinite sentinel
NminEstimate estimate_nmin(const ExperimentConfig& cfg, long long L);

struct SweepRow {
    double lbar = 0;
    long long L = 0;
    long long ncov = 0;
    long long nmin = 0; // -1 encodes the infinity sentinel
    double ratio = 0;   // nmin/ncov; inf for sentinel rows
    double success_rate = 0;
    long long trials = 0;
};

std::vector<SweepRow> sweep_capacity(const ExperimentConfig& cfg);

struct NoiseRow {
    double eps = 0;
    double two_over_istar = 0; // theory
    double empirical_lbar = 0; // bisection on lbar at generous coverage
};

std::vector<NoiseRow> sweep_noise(const ExperimentConfig& cfg, const std::vector<double>& eps_grid);

struct RepeatsRow {
    double r = 0; // genome symbols per read, G/N
    double bridging_bound = 0;
    double repeats_bound = 0;
    double success_rate = 0;
    long long trials = 0;
};

std::vector<RepeatsRow> sweep_repeats(const ExperimentConfig& cfg, const std::vector<double>& r_grid);

// CSV emission, %.6g everywhere; headers:
//   capacity: lbar,L,ncov,nmin,ratio,success_rate,trials   (nmin/ratio "inf")
//   noise:    eps,two_over_istar,empirical_lbar
//   repeats:  r,bridging_bound,repeats_bound,success_rate,trials
std::string capacity_csv(const std::vector<SweepRow>& rows);
std::string noise_csv(const std::vector<NoiseRow>& rows);
std::string repeats_csv(const std::vector<RepeatsRow>& rows);

} // namespace asmlab
