#include "asmlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "asmlab/assemble.hpp"
#include "asmlab/diagnostics.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/rng.hpp"

namespace asmlab {

AlgoId algo_from_name(const std::string& name) {
    if (name == "greedy") return AlgoId::Greedy;
    if (name == "sequential") return AlgoId::Sequential;
    if (name == "debruijn") return AlgoId::DeBruijn;
    if (name == "noisy-greedy") return AlgoId::NoisyGreedy;
    if (name == "repeats") return AlgoId::Repeats;
    throw std::invalid_argument("unknown algorithm: " + name);
}

const char* algo_name(AlgoId a) {
    switch (a) {
        case AlgoId::Greedy: return "greedy";
        case AlgoId::Sequential: return "sequential";
        case AlgoId::DeBruijn: return "debruijn";
        case AlgoId::NoisyGreedy: return "noisy-greedy";
        default: return "repeats";
    }
}

std::array<double, 4> SourceSpec::marginal() const {
    return markov ? stationary_distribution(markov_model) : iid.p;
}

void ExperimentConfig::validate() const {
    if (G < 4) throw std::invalid_argument("config: G >= 4 required");
    if (trials_per_point < 1) throw std::invalid_argument("config: trials >= 1 required");
    if (!(target_success > 0 && target_success < 1))
        throw std::invalid_argument("config: target_success in (0,1) required");
    if (source.markov)
        source.markov_model.validate();
    else
        source.iid.validate();
    if (algo == AlgoId::Repeats && !paired)
        throw std::invalid_argument("config: repeats algorithm needs a paired spec");
    if (noise_eps && (*noise_eps < 0 || *noise_eps >= 0.75))
        throw std::invalid_argument("config: noise_eps in [0, 0.75) required");
}

namespace {

DnaSequence gen_base(const SourceSpec& src, long long G, uint64_t seed) {
    return src.markov ? generate_markov(src.markov_model, G, seed)
                      : generate_iid(src.iid, G, seed);
}

bool circular_match(const AssemblyOutcome& o, const DnaSequence& truth) {
    if (o.kind == OutcomeKind::SingleCircular)
        return sequences_equal_circular(DnaSequence{o.sequence}, truth);
    // a lone linear contig spelling the whole circle (the L = G, N = 1 case)
    if (o.kind == OutcomeKind::ContigSet && o.contigs.size() == 1 &&
        o.contigs[0].symbols.size() == truth.size())
        return sequences_equal_circular(DnaSequence{o.contigs[0].symbols}, truth);
    return false;
}

} // namespace

bool run_trial(const ExperimentConfig& cfg, long long L, long long N, uint64_t trial_seed) {
    if (N < 1 || L < 1) return false;
    const uint64_t s_gen = derive_seed(trial_seed, 1, 0, 0);
    const uint64_t s_rep = derive_seed(trial_seed, 2, 0, 0);
    const uint64_t s_smp = derive_seed(trial_seed, 3, 0, 0);
    const uint64_t s_noi = derive_seed(trial_seed, 4, 0, 0);

    if (cfg.algo == AlgoId::Repeats) {
        const PairedSpec& ps = *cfg.paired;
        if (2 * L + ps.J > cfg.G + ps.M * ps.K) return false;
        const DnaSequence base = gen_base(cfg.source, cfg.G, s_gen);
        const DnaSequence xrep = gen_base(cfg.source, ps.K, s_rep);
        const PlantResult planted = plant_repeats(base, xrep.symbols, ps.M);
        const long long n_pairs = std::max<long long>(1, N / 2);
        const MatePairSet ms =
            sample_mate_pairs(planted.sequence, n_pairs, L, ps.J, s_smp);
        try {
            const AssemblyOutcome out =
                repeats_assemble(blind(ms), static_cast<int>(ps.K), ps.d);
            return circular_match(out, planted.sequence);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    const DnaSequence genome = gen_base(cfg.source, cfg.G, s_gen);
    if (L > static_cast<long long>(genome.size())) return false;
    ReadSet rs = sample_reads(genome, N, L, s_smp);
    const bool noisy = cfg.noise_eps && *cfg.noise_eps > 0;
    if (noisy) rs = apply_noise(rs, symmetric_channel(*cfg.noise_eps), *cfg.noise_eps, s_noi);

    switch (cfg.algo) {
        case AlgoId::Greedy:
            return circular_match(greedy_assemble(blind(rs)), genome);
        case AlgoId::Sequential:
            return circular_match(sequential_assemble(blind(rs)), genome);
        case AlgoId::DeBruijn: {
            int K = cfg.kmer_k > 0 ? cfg.kmer_k : std::max(2, static_cast<int>((3 * L) / 4));
            K = std::min<int>(K, static_cast<int>(L));
            return circular_match(debruijn_assemble(blind(rs), K), genome);
        }
        case AlgoId::NoisyGreedy: {
            const DmcChannel ch =
                noisy ? symmetric_channel(*cfg.noise_eps) : identity_channel();
            const MapScorerConfig mc =
                MapScorerConfig::make(cfg.source.marginal(), ch, cfg.theta_override);
            const AssemblyOutcome out = noisy_greedy_assemble(blind(rs), mc);
            if (out.layout.empty()) return false;
            return verify_layout(out, rs);
        }
        default:
            return false;
    }
}

long long run_trials_serial(const ExperimentConfig& cfg, long long L, long long N,
                            long long trials, uint64_t point_tag) {
    long long ok = 0;
    for (long long t = 0; t < trials; ++t)
        ok += run_trial(cfg, L, N, derive_seed(cfg.seed, point_tag, static_cast<uint64_t>(t), 0));
    return ok;
}

long long run_trials(const ExperimentConfig& cfg, long long L, long long N, long long trials,
                     uint64_t point_tag) {
    long long ok = 0;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) reduction(+ : ok)
#endif
    for (long long t = 0; t < trials; ++t)
        ok += run_trial(cfg, L, N, derive_seed(cfg.seed, point_tag, static_cast<uint64_t>(t), 0));
    return ok;
}

namespace {

uint64_t point_tag(long long L, long long N) {
    return static_cast<uint64_t>(L) * 1000003ULL + static_cast<uint64_t>(N);
}

} // namespace

NminEstimate estimate_nmin(const ExperimentConfig& cfg, long long L) {
    cfg.validate();
    const double eps_target = 1.0 - cfg.target_success;
    NminEstimate est;
    est.ncov = ncov_estimate(eps_target, static_cast<double>(cfg.G), static_cast<double>(L));
    const long long cap = 64 * est.ncov;
    const long long need =
        static_cast<long long>(std::ceil(cfg.target_success * cfg.trials_per_point));

    std::vector<std::pair<long long, long long>> samples; // (N, successes)
    // serial with early exit: the verdict is fixed once either the success
    // target or the failure budget is reached, and search points far from
    // the transition resolve after one or two trials
    const long long fail_budget = cfg.trials_per_point - need;
    auto ok_at = [&](long long N) {
        long long succ = 0, fails = 0;
        for (long long t = 0; t < cfg.trials_per_point; ++t) {
            if (run_trial(cfg, L, N,
                          derive_seed(cfg.seed, point_tag(L, N), static_cast<uint64_t>(t), 0)))
                ++succ;
            else if (++fails > fail_budget)
                break;
            if (succ >= need) break;
        }
        samples.emplace_back(N, succ);
        return succ >= need;
    };

    long long hi = est.ncov;
    bool found = ok_at(hi);
    long long lo = found ? std::max<long long>(1, est.ncov / 2) : hi;
    while (!found && hi < cap) {
        lo = hi;
        hi = std::min(cap, hi * 2);
        found = ok_at(hi);
    }
    if (!found) {
        est.infinite = true;
        est.nmin = -1;
        return est;
    }
    const long long step = std::max<long long>(1, est.ncov / 32);
    while (hi - lo > step) {
        const long long mid = lo + (hi - lo) / 2;
        if (ok_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    est.nmin = hi;
    est.success_rate =
        static_cast<double>(run_trials(cfg, L, hi, cfg.trials_per_point, point_tag(L, hi))) /
        static_cast<double>(cfg.trials_per_point);

    // monotonicity violation detector (search assumes success grows with N)
    std::sort(samples.begin(), samples.end());
    for (size_t i = 1; i < samples.size(); ++i)
        if (samples[i].second + cfg.trials_per_point / 4 < samples[i - 1].second)
            std::fprintf(stderr,
                         "estimate_nmin: non-monotone success (N=%lld: %lld/%lld vs N=%lld: "
                         "%lld/%lld)\n",
                         samples[i - 1].first, samples[i - 1].second, cfg.trials_per_point,
                         samples[i].first, samples[i].second, cfg.trials_per_point);
    return est;
}

std::vector<SweepRow> sweep_capacity(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.lbar_grid.empty()) throw std::invalid_argument("sweep_capacity: empty lbar grid");
    std::vector<SweepRow> rows;
    const double log2g = std::log2(static_cast<double>(cfg.G));
    for (double lbar : cfg.lbar_grid) {
        SweepRow row;
        row.lbar = lbar;
        row.L = static_cast<long long>(std::ceil(lbar * log2g));
        row.trials = cfg.trials_per_point;
        const NminEstimate est = estimate_nmin(cfg, row.L);
        row.ncov = est.ncov;
        if (est.infinite) {
            row.nmin = -1;
            row.ratio = INFINITY;
            row.success_rate = 0;
        } else {
            row.nmin = est.nmin;
            row.ratio = static_cast<double>(est.nmin) / static_cast<double>(est.ncov);
            row.success_rate = est.success_rate;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<NoiseRow> sweep_noise(const ExperimentConfig& cfg,
                                  const std::vector<double>& eps_grid) {
    cfg.validate();
    if (eps_grid.empty()) throw std::invalid_argument("sweep_noise: empty eps grid");
    std::vector<NoiseRow> rows;
    const double log2g = std::log2(static_cast<double>(cfg.G));
    for (size_t e = 0; e < eps_grid.size(); ++e) {
        const double eps = eps_grid[e];
        NoiseRow row;
        row.eps = eps;
        row.two_over_istar = 2.0 / istar_symmetric(eps);

        ExperimentConfig point = cfg;
        point.algo = AlgoId::NoisyGreedy;
        point.noise_eps = eps;
        auto ok_at = [&](double lbar) {
            const long long L =
                std::max<long long>(2, static_cast<long long>(std::ceil(lbar * log2g)));
            const long long N = static_cast<long long>(
                std::ceil(1.6 * ncov_estimate(0.1, static_cast<double>(cfg.G),
                                              static_cast<double>(L))));
            const long long s =
                run_trials(point, L, N, cfg.trials_per_point,
                           point_tag(L, N) ^ (static_cast<uint64_t>(e) << 48));
            return 2 * s >= cfg.trials_per_point; // median success
        };
        double lo = 0.3, hi = std::max(6.0, 1.5 * row.two_over_istar);
        if (ok_at(lo)) {
            row.empirical_lbar = lo;
        } else {
            for (int it = 0; it < 8; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (ok_at(mid))
                    hi = mid;
                else
                    lo = mid;
            }
            row.empirical_lbar = hi;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<RepeatsRow> sweep_repeats(const ExperimentConfig& cfg,
                                      const std::vector<double>& r_grid) {
    cfg.validate();
    if (!cfg.paired) throw std::invalid_argument("sweep_repeats: paired spec required");
    if (r_grid.empty()) throw std::invalid_argument("sweep_repeats: empty R grid");
    if (cfg.lbar_grid.empty()) throw std::invalid_argument("sweep_repeats: lbar grid sets L");
    const PairedSpec& ps = *cfg.paired;
    const double g_full = static_cast<double>(cfg.G + ps.M * ps.K);
    const long long L =
        static_cast<long long>(std::ceil(cfg.lbar_grid[0] * std::log2(g_full)));
    const double ln_g = std::log(g_full);
    const std::array<double, 4> p = cfg.source.marginal();

    std::vector<RepeatsRow> rows;
    for (double r : r_grid) {
        RepeatsRow row;
        row.r = r;
        row.bridging_bound =
            bridging_rate_bound(static_cast<double>(ps.J), static_cast<double>(L),
                                static_cast<double>(ps.d), static_cast<double>(ps.K),
                                static_cast<double>(ps.M));
        // alpha = 1: the capacity-recovery normalization of the theorem bound
        row.repeats_bound = repeats_rate_bound(L / ln_g, ps.J / ln_g, ps.K / ln_g, 1.0, p);
        const long long N = std::max<long long>(2, static_cast<long long>(std::ceil(g_full / r)));
        row.trials = cfg.trials_per_point;
        const long long s = run_trials(cfg, L, N, cfg.trials_per_point, point_tag(L, N));
        row.success_rate = static_cast<double>(s) / static_cast<double>(cfg.trials_per_point);
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string capacity_csv(const std::vector<SweepRow>& rows) {
    std::string out = "lbar,L,ncov,nmin,ratio,success_rate,trials\n";
    for (const SweepRow& r : rows) {
        out += fmt_g(r.lbar) + "," + std::to_string(r.L) + "," + std::to_string(r.ncov) + ",";
        out += (r.nmin < 0 ? std::string("inf") : std::to_string(r.nmin)) + ",";
        out += fmt_g(r.ratio) + "," + fmt_g(r.success_rate) + "," + std::to_string(r.trials);
        out += "\n";
    }
    return out;
}

std::string noise_csv(const std::vector<NoiseRow>& rows) {
    std::string out = "eps,two_over_istar,empirical_lbar\n";
    for (const NoiseRow& r : rows)
        out += fmt_g(r.eps) + "," + fmt_g(r.two_over_istar) + "," + fmt_g(r.empirical_lbar) + "\n";
    return out;
}

std::string repeats_csv(const std::vector<RepeatsRow>& rows) {
    std::string out = "r,bridging_bound,repeats_bound,success_rate,trials\n";
    for (const RepeatsRow& r : rows) {
        out += fmt_g(r.r) + "," + fmt_g(r.bridging_bound) + "," + fmt_g(r.repeats_bound) + ",";
        out += fmt_g(r.success_rate) + "," + std::to_string(r.trials) + "\n";
    }
    return out;
}

} // namespace asmlab
