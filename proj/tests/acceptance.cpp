// Acceptance gate: one numbered criterion per invocation (argv[1] in 1..11),
// one "criterion N: PASS/FAIL — detail" line on stdout, nonzero exit on FAIL.
// Settings are fixed here, not flags, so the gate cannot drift.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asmlab/assemble.hpp"
#include "asmlab/diagnostics.hpp"
#include "asmlab/entropy.hpp"
#include "asmlab/experiment.hpp"
#include "asmlab/overlap.hpp"
#include "asmlab/presets.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/rng.hpp"
#include "asmlab/sequence.hpp"

using namespace asmlab;

namespace {

constexpr std::array<double, 4> kUniform{0.25, 0.25, 0.25, 0.25};
const double kLog2G4 = std::log2(10000.0);

long long ceil_ll(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

// ---- 1: threshold arithmetic ----
Verdict criterion1() {
    const double thr = 2.0 / renyi2(kUniform);
    bool ok = thr == 1.0;
    MarkovModel m{};
    const std::array<double, 4> col{0.4, 0.3, 0.2, 0.1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.q[i][j] = col[i];
    const double rate = renyi2_rate_markov(m);
    const double want = renyi2(col);
    ok = ok && std::abs(rate - want) <= 1e-9;
    std::ostringstream ss;
    ss << "2/H2(uniform) = " << thr << ", markov rate " << rate << " vs " << want;
    return {ok, ss.str()};
}

// ---- 2: noisy thresholds ----
Verdict criterion2() {
    const double t10 = 2.0 / istar_symmetric(0.1);
    const double t01 = 2.0 / istar_symmetric(0.01);
    bool ok = std::abs(t10 - 5.29) <= 0.05 && std::abs(t01 - 2.16) <= 0.05;
    double max_gap = 0;
    for (double eps : {0.01, 0.05, 0.1}) {
        const double g = istar_general(kUniform, symmetric_channel(eps).t).istar_bits;
        max_gap = std::max(max_gap, std::abs(g - istar_symmetric(eps)));
    }
    ok = ok && max_gap <= 1e-6;
    std::ostringstream ss;
    ss << "2/I*(0.1) = " << t10 << ", 2/I*(0.01) = " << t01 << ", general-vs-symmetric gap "
       << max_gap;
    return {ok, ss.str()};
}

// ---- 3: achievability side of the phase transition ----
Verdict criterion3() {
    ExperimentConfig cfg;
    cfg.G = 10000;
    cfg.lbar_grid = {2.0};
    cfg.seed = 301;
    const long long L = ceil_ll(2.0 * kLog2G4);
    const long long ncov = ncov_estimate(0.1, static_cast<double>(cfg.G), static_cast<double>(L));
    const long long N = (13 * ncov + 9) / 10;
    const long long ok = run_trials(cfg, L, N, 100, 1);
    std::ostringstream ss;
    ss << ok << "/100 exact circular reconstructions at L = " << L << ", N = " << N;
    return {ok >= 95, ss.str()};
}

// ---- 4: converse side ----
Verdict criterion4() {
    const long long G = 10000;
    const long long L = ceil_ll(0.8 * kLog2G4);
    int interleaved = 0;
    for (uint64_t t = 0; t < 100; ++t) {
        const DnaSequence g = generate_iid(uniform_model(), G, derive_seed(401, 1, t, 0));
        interleaved += find_repeats(g, static_cast<int>(L)).interleaved;
    }
    ExperimentConfig cfg;
    cfg.G = G;
    cfg.lbar_grid = {0.8};
    cfg.trials_per_point = 20;
    cfg.target_success = 0.9;
    cfg.seed = 402;
    const NminEstimate est = estimate_nmin(cfg, L);
    std::ostringstream ss;
    ss << interleaved << "/100 genomes interleaved at ell = " << L << "; nmin "
       << (est.infinite ? "= infinity sentinel" : "finite (unexpected)");
    return {interleaved >= 95 && est.infinite, ss.str()};
}

// ---- 5: coverage law ----
// gap frequency = fraction of trials with a coverage gap, checked in the
// rare-event regime where N exp(-lambda L) is that probability; expected
// gap counts at moderate lambda carry an O(lambda) lattice bias that no
// (N, L) at this G can hide inside 3 sigma of 500 trials
Verdict criterion5() {
    const long long G = 10000;
    const int kTrials = 500;
    struct Setting {
        long long N, L;
    };
    const Setting settings[] = {{916, 100}, {1611, 60}, {700, 120}};
    std::ostringstream ss;
    bool ok = true;
    int idx = 0;
    for (const Setting& st : settings) {
        const DnaSequence g = generate_iid(uniform_model(), G, 500 + idx);
        double sum = 0;
        for (int t = 0; t < kTrials; ++t) {
            const ReadSet rs = sample_reads(g, st.N, st.L, derive_seed(501, idx, t, 0));
            sum += !check_coverage(rs).covered;
        }
        const double freq = sum / kTrials;
        const double se = std::sqrt(std::max(freq * (1 - freq), 1e-6) / kTrials);
        const double pred = st.N * std::exp(-static_cast<double>(st.N) * st.L / G);
        const bool in = std::abs(freq - pred) <= 3 * se;
        ok = ok && in;
        if (idx) ss << "; ";
        ss << "(N=" << st.N << ",L=" << st.L << ") freq " << freq << " vs " << pred << " +/- "
           << 3 * se;
        ++idx;
    }
    return {ok, ss.str()};
}

// ---- 6: expected repeats ----
Verdict criterion6() {
    const long long G = 10000;
    std::ostringstream ss;
    bool ok = true;
    int idx = 0;
    for (int L : {10, 11}) {
        const double pred = expected_repeats(static_cast<double>(G), L, kUniform);
        double total = 0;
        for (uint64_t t = 0; t < 100; ++t) {
            const DnaSequence g = generate_iid(uniform_model(), G, derive_seed(601, L, t, 0));
            const RepeatReport rep = find_repeats(g, L);
            total += static_cast<double>(rep.repeat_pairs.size() + rep.overlapping_pairs.size());
        }
        const double mean = total / 100.0;
        const bool in = mean >= pred / 2 && mean <= 2 * pred;
        ok = ok && in;
        if (idx++) ss << "; ";
        ss << "L=" << L << " mean " << mean << " vs predicted " << pred;
    }
    return {ok, ss.str()};
}

// ---- 7: greedy > sequential, de Bruijn at lbar = 1.5 ----
Verdict criterion7() {
    const long long G = 10000;
    const long long L = ceil_ll(1.5 * kLog2G4);
    const long long ncov = ncov_estimate(0.1, static_cast<double>(G), static_cast<double>(L));
    const long long N = (14 * ncov + 9) / 10; // fixed N with greedy comfortably >= 90%
    ExperimentConfig cfg;
    cfg.G = G;
    cfg.lbar_grid = {1.5};
    cfg.seed = 701;
    cfg.algo = AlgoId::Greedy;
    const long long g = run_trials(cfg, L, N, 200, 7);
    cfg.algo = AlgoId::Sequential;
    const long long s = run_trials(cfg, L, N, 200, 7);
    cfg.algo = AlgoId::DeBruijn; // default K = 3L/4
    const long long d = run_trials(cfg, L, N, 200, 7);
    const double gr = g / 200.0, sr = s / 200.0, dr = d / 200.0;
    std::ostringstream ss;
    ss << "success greedy " << gr << ", sequential " << sr << ", debruijn " << dr << " at N = "
       << N;
    return {gr >= 0.9 && gr - sr >= 0.10 && gr - dr >= 0.10, ss.str()};
}

// ---- 8: noisy assembly, both sides of the noisy threshold ----
Verdict criterion8() {
    ExperimentConfig cfg;
    cfg.G = 10000;
    cfg.lbar_grid = {3.0};
    cfg.noise_eps = 0.01;
    cfg.algo = AlgoId::NoisyGreedy;
    cfg.seed = 801;
    const long long L_hi = ceil_ll(3.0 * kLog2G4);
    const long long N_hi =
        (13 * ncov_estimate(0.1, static_cast<double>(cfg.G), static_cast<double>(L_hi)) + 9) / 10;
    const long long hi = run_trials(cfg, L_hi, N_hi, 100, 81);
    const long long L_lo = ceil_ll(1.5 * kLog2G4);
    const long long N_lo =
        (13 * ncov_estimate(0.1, static_cast<double>(cfg.G), static_cast<double>(L_lo)) + 9) / 10;
    const long long lo = run_trials(cfg, L_lo, N_lo, 100, 82);
    std::ostringstream ss;
    ss << "perfect layout " << hi << "/100 at lbar = 3.0 (need >= 90), " << lo
       << "/100 at lbar = 1.5 (need < 50)";
    return {hi >= 90 && lo < 50, ss.str()};
}

// ---- 9: repeats pipeline ----
Verdict criterion9() {
    const long long G0 = 100000, M = 10, K = 60, L = 30, J = 100;
    const long long d = d_parameter(M, 0.05, kUniform);
    if (d != 4) return {false, "d_parameter(10, 0.05, uniform) != 4"};
    const double g_full = static_cast<double>(G0 + M * K);
    const double bridging =
        bridging_rate_bound(static_cast<double>(J), static_cast<double>(L), static_cast<double>(d),
                            static_cast<double>(K), static_cast<double>(M));
    const double r_cap = std::min(bridging, L / std::log(g_full)); // coverage-limited
    const long long N = ceil_ll(1.3 * g_full / r_cap);
    const long long pairs = N / 2; // run_trial samples N/2 mate pairs for N reads

    ExperimentConfig cfg;
    cfg.G = G0;
    cfg.lbar_grid = {L / std::log2(g_full)};
    cfg.algo = AlgoId::Repeats;
    PairedSpec ps;
    ps.K = K;
    ps.M = M;
    ps.J = J;
    ps.d = static_cast<int>(d);
    cfg.paired = ps;
    cfg.seed = 901;
    const long long ok = run_trials(cfg, L, N, 100, 91);

    ps.J = 0;
    cfg.paired = ps;
    cfg.seed = 902;
    const long long neg = run_trials(cfg, L, N, 100, 92);

    // bridging frequency vs M exp(-lambda (2L + J - (2d+K)) / 2) at sparse N
    const long long N_b = 10000, pairs_b = N_b / 2;
    const double lam = static_cast<double>(N_b) / g_full;
    const double pred = M * std::exp(-lam * (2 * L + J - (2 * d + K)) / 2.0);
    double sum = 0, sumsq = 0;
    const int kTrials = 500;
    for (int t = 0; t < kTrials; ++t) {
        const uint64_t s = derive_seed(903, 0, static_cast<uint64_t>(t), 0);
        const DnaSequence base = generate_iid(uniform_model(), G0, derive_seed(s, 1, 0, 0));
        const DnaSequence x = generate_iid(uniform_model(), K, derive_seed(s, 2, 0, 0));
        const PlantResult pr = plant_repeats(base, x.symbols, M);
        const MatePairSet ms =
            sample_mate_pairs(pr.sequence, pairs_b, L, J, derive_seed(s, 3, 0, 0));
        std::vector<long long> qs(pr.positions.begin(), pr.positions.end());
        const BridgingReport rep = check_bridging(ms, qs, static_cast<int>(K), static_cast<int>(d));
        double unb = 0;
        for (bool b : rep.bridged) unb += !b;
        sum += unb;
        sumsq += unb * unb;
    }
    const double mean = sum / kTrials;
    const double var = std::max(0.0, sumsq / kTrials - mean * mean);
    const double se = std::sqrt(var / kTrials);
    const bool freq_ok = std::abs(mean - pred) <= 3 * std::max(se, 1e-12);

    std::ostringstream ss;
    ss << ok << "/100 reconstructions at " << pairs << " pairs (need >= 90); J=0 control " << neg
       << "/100 (need <= 20); unbridged mean " << mean << " vs " << pred << " +/- " << 3 * se;
    return {ok >= 90 && neg <= 20 && freq_ok, ss.str()};
}

// ---- 10: exhaustive small-instance oracles ----
Verdict criterion10() {
    // sort-and-extend vs naive all-pairs
    const DnaSequence s = generate_iid(uniform_model(), 800, 1001);
    const ReadSet rs = sample_reads(s, 500, 14, 1002);
    const BlindReads br = blind(rs);
    bool idx_ok = true;
    for (int ell : {2, 5, 9, 14}) {
        const LmerIndex idx = build_index(br.reads, ell);
        std::vector<std::pair<int, int>> naive;
        for (size_t i = 0; i < br.reads.size(); ++i)
            for (size_t j = 0; j < br.reads.size(); ++j) {
                if (i == j) continue;
                if (std::equal(br.reads[i].end() - ell, br.reads[i].end(), br.reads[j].begin()))
                    naive.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        std::sort(naive.begin(), naive.end());
        idx_ok = idx_ok && idx.pairs == naive;
    }

    // find_repeats vs quadratic scan
    bool rep_ok = true;
    for (uint64_t seed : {1u, 2u}) {
        const DnaSequence g = generate_iid(uniform_model(), 2000, 1100 + seed);
        for (int ell : {4, 6}) {
            const RepeatReport rep = find_repeats(g, ell);
            std::set<std::pair<long long, long long>> got;
            for (auto [i, j, l] : rep.repeat_pairs) got.emplace(std::min(i, j), std::max(i, j));
            for (auto [i, j, l] : rep.overlapping_pairs)
                got.emplace(std::min(i, j), std::max(i, j));
            std::set<std::pair<long long, long long>> brute;
            const long long G = static_cast<long long>(g.size());
            for (long long i = 0; i < G; ++i)
                for (long long j = i + 1; j < G; ++j) {
                    bool eq = true;
                    for (int k = 0; k < ell && eq; ++k) eq = g.at_mod(i + k) == g.at_mod(j + k);
                    if (eq) brute.emplace(i, j);
                }
            rep_ok = rep_ok && got == brute;
        }
    }

    // greedy exact reconstruction on 200 repeat-free covered instances.
    // admission = no repeated 12-mer and every adjacent read overlap >= 13,
    // the regime where stage-greedy correctness is a theorem (false merges
    // would need a genome repeat at least as long as the smallest overlap)
    int done = 0, exact = 0;
    const int L = 24, kMinOv = 13;
    for (uint64_t seed = 0; done < 200 && seed < 4000; ++seed) {
        const long long G = 100 + static_cast<long long>(derive_seed(1200, seed, 0, 0) % 201);
        const DnaSequence g = generate_iid(uniform_model(), G, derive_seed(1201, seed, 0, 0));
        const RepeatReport rep = find_repeats(g, kMinOv - 1);
        if (!rep.repeat_pairs.empty() || !rep.overlapping_pairs.empty()) continue;
        const ReadSet reads = sample_reads(g, 150, L, derive_seed(1202, seed, 0, 0));
        std::vector<long long> starts;
        for (const Read& r : reads.reads) starts.push_back(r.true_start);
        std::sort(starts.begin(), starts.end());
        long long min_ov = L;
        for (size_t i = 0; i < starts.size(); ++i) {
            const long long next = i + 1 < starts.size() ? starts[i + 1] : starts[0] + G;
            min_ov = std::min(min_ov, starts[i] + L - next);
        }
        if (min_ov < kMinOv) continue;
        ++done;
        const AssemblyOutcome out = greedy_assemble(blind(reads));
        exact += out.kind == OutcomeKind::SingleCircular &&
                 sequences_equal_circular(DnaSequence{out.sequence}, g);
    }
    std::ostringstream ss;
    ss << "index oracle " << (idx_ok ? "ok" : "MISMATCH") << ", repeat oracle "
       << (rep_ok ? "ok" : "MISMATCH") << ", greedy exact on " << exact << "/" << done
       << " covered repeat-free instances";
    return {idx_ok && rep_ok && done == 200 && exact == 200, ss.str()};
}

// ---- 11: preset determinism ----
Verdict criterion11() {
    std::ostringstream ss;
    bool ok = true;
    int idx = 0;
    for (const char* name : {"capacity-uniform-small", "noise-small", "repeats-small"}) {
        const std::string a = run_preset_csv(make_preset(name, 4242));
        const std::string b = run_preset_csv(make_preset(name, 4242));
        const bool same = !a.empty() && a == b;
        ok = ok && same;
        if (idx++) ss << ", ";
        ss << name << (same ? " byte-identical" : " DIFFERS");
    }
    return {ok, ss.str()};
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..11>\n";
        return 2;
    }
    const int n = std::atoi(argv[1]);
    Verdict v;
    switch (n) {
        case 1: v = criterion1(); break;
        case 2: v = criterion2(); break;
        case 3: v = criterion3(); break;
        case 4: v = criterion4(); break;
        case 5: v = criterion5(); break;
        case 6: v = criterion6(); break;
        case 7: v = criterion7(); break;
        case 8: v = criterion8(); break;
        case 9: v = criterion9(); break;
        case 10: v = criterion10(); break;
        case 11: v = criterion11(); break;
        default: std::cerr << "usage: acceptance <criterion 1..11>\n"; return 2;
    }
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << " — " << v.detail
              << "\n";
    return v.pass ? 0 : 1;
}
