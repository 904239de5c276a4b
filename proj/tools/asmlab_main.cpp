// asmlab: generate genomes, sample reads, assemble, diagnose, and run the
// threshold sweeps from the command line. Every run prints a JSON manifest
// (fully-resolved config + seed + version) to stdout; bulk outputs go to
// files named by flags. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmlab/assemble.hpp"
#include "asmlab/diagnostics.hpp"
#include "asmlab/entropy.hpp"
#include "asmlab/experiment.hpp"
#include "asmlab/presets.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/rng.hpp"
#include "asmlab/sequence.hpp"

using json = nlohmann::ordered_json;
using namespace asmlab;

namespace {

constexpr const char* kVersion = "asmlab 0.1.0";

std::vector<double> parse_doubles(const std::string& csv, size_t want, const char* what) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.size() != want)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                    " comma-separated values");
    return out;
}

std::array<double, 4> parse_p(const std::string& s) {
    if (s == "uniform") return {0.25, 0.25, 0.25, 0.25};
    const auto v = parse_doubles(s, 4, "--p");
    return {v[0], v[1], v[2], v[3]};
}

MarkovModel parse_q(const std::string& s) {
    const auto v = parse_doubles(s, 16, "--q");
    MarkovModel m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.q[i][j] = v[4 * i + j]; // row-major q[i][j]
    m.validate();
    return m;
}

void emit_manifest(json manifest) {
    manifest["version"] = kVersion;
    std::cout << manifest.dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

json outcome_json(const AssemblyOutcome& out) {
    json j;
    j["kind"] = outcome_kind_name(out.kind);
    j["n_contigs"] = out.kind == OutcomeKind::SingleCircular ? 1 : out.contigs.size();
    size_t length = out.sequence.size();
    if (out.kind == OutcomeKind::ContigSet) {
        length = 0;
        for (const Contig& c : out.contigs) length += c.symbols.size();
    }
    j["length"] = length;
    j["closed"] = out.closed;
    j["stage_histogram"] = out.stage_merges;
    if (!out.failure_reason.empty()) j["failure_reason"] = out.failure_reason;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shotgun-sequencing assembly laboratory"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a circular genome");
    std::string gen_model = "iid", gen_p = "uniform", gen_q, gen_out;
    uint64_t gen_G = 0, gen_seed = 0;
    gen->add_option("--model", gen_model)->check(CLI::IsMember({"iid", "markov"}));
    gen->add_option("--G", gen_G)->required();
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--p", gen_p);
    gen->add_option("--q", gen_q);
    gen->add_option("--out", gen_out)->required();

    // ---- sample ----
    auto* smp = app.add_subcommand("sample", "sample reads from a genome");
    std::string smp_genome, smp_out, smp_positions;
    uint64_t smp_N = 0, smp_L = 0, smp_J = 0, smp_seed = 0;
    double smp_eps = 0;
    bool smp_paired = false;
    smp->add_option("--genome", smp_genome)->required();
    smp->add_option("--N", smp_N)->required();
    smp->add_option("--L", smp_L)->required();
    smp->add_option("--seed", smp_seed)->required();
    smp->add_option("--eps", smp_eps);
    smp->add_flag("--paired", smp_paired);
    smp->add_option("--J", smp_J);
    smp->add_option("--out", smp_out)->required();
    smp->add_option("--positions", smp_positions);

    // ---- assemble ----
    auto* asmcmd = app.add_subcommand("assemble", "run an assembler on a read file");
    std::string asm_algo, asm_reads, asm_p = "uniform";
    int asm_k = -1, asm_d = -1;
    double asm_theta = -1, asm_alpha = -1, asm_eps = 0;
    asmcmd->add_option("--algo", asm_algo)
        ->required()
        ->check(CLI::IsMember({"greedy", "sequential", "debruijn", "noisy-greedy", "repeats"}));
    asmcmd->add_option("--reads", asm_reads)->required();
    asmcmd->add_option("--k", asm_k);
    asmcmd->add_option("--theta", asm_theta);
    asmcmd->add_option("--alpha", asm_alpha);
    asmcmd->add_option("--d", asm_d);
    asmcmd->add_option("--eps", asm_eps);
    asmcmd->add_option("--p", asm_p);

    // ---- diagnose ----
    auto* dia = app.add_subcommand("diagnose", "repeat / coverage diagnostics");
    std::string dia_genome, dia_reads, dia_positions;
    int dia_ell = 0;
    dia->add_option("--genome", dia_genome);
    dia->add_option("--ell", dia_ell);
    dia->add_option("--reads", dia_reads);
    dia->add_option("--positions", dia_positions);

    // ---- thresholds ----
    auto* thr = app.add_subcommand("thresholds", "closed-form threshold report");
    std::string thr_p = "uniform", thr_q;
    double thr_eps = -1;
    thr->add_option("--p", thr_p);
    thr->add_option("--markov-q", thr_q);
    thr->add_option("--eps", thr_eps);

    // ---- sweep ----
    auto* swp = app.add_subcommand("sweep", "run a named sweep preset");
    std::string swp_preset, swp_out;
    uint64_t swp_seed = 0;
    swp->add_option("--preset", swp_preset)
        ->required()
        ->check(CLI::IsMember({"capacity-uniform-small", "noise-small", "repeats-small"}));
    swp->add_option("--seed", swp_seed)->required();
    swp->add_option("--out", swp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            DnaSequence s;
            if (gen_model == "markov") {
                if (gen_q.empty()) throw std::invalid_argument("--model markov needs --q");
                s = generate_markov(parse_q(gen_q), gen_G, gen_seed);
            } else {
                IidModel m{parse_p(gen_p)};
                m.validate();
                s = generate_iid(m, gen_G, gen_seed);
            }
            save_sequence(gen_out, s);
            emit_manifest({{"subcommand", "gen"},
                           {"model", gen_model},
                           {"G", gen_G},
                           {"p", gen_p},
                           {"seed", gen_seed},
                           {"out", gen_out}});
        } else if (*smp) {
            const DnaSequence s = load_sequence(smp_genome);
            if (smp_paired) {
                if (smp_eps > 0)
                    throw std::invalid_argument("noisy mate pairs are not supported");
                save_mate_pairs(smp_out, sample_mate_pairs(s, smp_N, smp_L, smp_J, smp_seed));
            } else {
                ReadSet rs = sample_reads(s, smp_N, smp_L, smp_seed);
                if (smp_eps > 0)
                    rs = apply_noise(rs, symmetric_channel(smp_eps), smp_eps,
                                     derive_seed(smp_seed, 1, 0, 0));
                save_reads(smp_out, rs);
                if (!smp_positions.empty()) save_positions(smp_positions, rs);
            }
            emit_manifest({{"subcommand", "sample"},
                           {"genome", smp_genome},
                           {"N", smp_N},
                           {"L", smp_L},
                           {"J", smp_J},
                           {"paired", smp_paired},
                           {"eps", smp_eps},
                           {"seed", smp_seed},
                           {"out", smp_out}});
        } else if (*asmcmd) {
            AssemblyOutcome out;
            if (asm_algo == "repeats") {
                if (asm_k < 1 || asm_d < 1)
                    throw std::invalid_argument("repeats needs --k (repeat length) and --d");
                out = repeats_assemble(load_blind_mate_pairs(asm_reads), asm_k, asm_d);
            } else {
                const BlindReads br = load_blind_reads(asm_reads);
                if (asm_algo == "greedy") {
                    out = greedy_assemble(br);
                } else if (asm_algo == "sequential") {
                    out = sequential_assemble(br);
                } else if (asm_algo == "debruijn") {
                    if (asm_k < 2) throw std::invalid_argument("debruijn needs --k >= 2");
                    out = debruijn_assemble(br, asm_k);
                } else {
                    const DmcChannel ch =
                        asm_eps > 0 ? symmetric_channel(asm_eps) : identity_channel();
                    MapScorerConfig mc = MapScorerConfig::make(parse_p(asm_p), ch, asm_theta);
                    if (asm_alpha >= 0) {
                        // Hamming knob: dist < alpha*l is the MAP test with
                        // theta = llr_match - alpha*(llr_match - llr_mismatch)
                        const double a = mc.llr[0][0], b = mc.llr[0][1];
                        mc.theta = a - asm_alpha * (a - b);
                    }
                    out = noisy_greedy_assemble(br, mc);
                }
            }
            std::cout << outcome_json(out).dump(2) << "\n";
        } else if (*dia) {
            json j;
            j["subcommand"] = "diagnose";
            if (!dia_genome.empty()) {
                if (dia_ell < 1) throw std::invalid_argument("diagnose --genome needs --ell >= 1");
                const RepeatReport rep = find_repeats(load_sequence(dia_genome), dia_ell);
                json pairs = json::array();
                for (size_t i = 0; i < rep.repeat_pairs.size() && i < 100; ++i) {
                    const auto& [a, b, l] = rep.repeat_pairs[i];
                    pairs.push_back({a, b, l});
                }
                j["repeats"] = {{"ell", rep.ell},
                                {"n_repeat_pairs", rep.repeat_pairs.size()},
                                {"n_overlapping_pairs", rep.overlapping_pairs.size()},
                                {"interleaved", rep.interleaved},
                                {"triple", rep.triple},
                                {"pairs", pairs}};
            }
            if (!dia_reads.empty()) {
                if (dia_positions.empty())
                    throw std::invalid_argument("coverage check needs --positions");
                std::ifstream rf(dia_reads, std::ios::binary);
                if (!rf) throw std::runtime_error("cannot open for reading: " + dia_reads);
                ReadSet rs;
                uint64_t N = 0;
                double eps = 0;
                if (!(rf >> rs.G >> rs.L >> N >> eps))
                    throw std::runtime_error("malformed reads header in " + dia_reads);
                std::ifstream pf(dia_positions, std::ios::binary);
                if (!pf) throw std::runtime_error("cannot open for reading: " + dia_positions);
                uint32_t t = 0;
                while (pf >> t) rs.reads.push_back(Read{{}, t});
                if (rs.reads.size() != N)
                    throw std::runtime_error("position count mismatch in " + dia_positions);
                const CoverageReport cov = check_coverage(rs);
                json gaps = json::array();
                for (size_t i = 0; i < cov.gaps.size() && i < 100; ++i)
                    gaps.push_back({cov.gaps[i].first, cov.gaps[i].second});
                j["coverage"] = {{"covered", cov.covered},
                                 {"islands", cov.islands},
                                 {"n_gaps", cov.gaps.size()},
                                 {"gaps", gaps}};
            }
            if (dia_genome.empty() && dia_reads.empty())
                throw std::invalid_argument("diagnose needs --genome and/or --reads");
            std::cout << j.dump(2) << "\n";
        } else if (*thr) {
            const std::optional<double> eps =
                thr_eps >= 0 ? std::optional<double>(thr_eps) : std::nullopt;
            ThresholdReport rep;
            if (!thr_q.empty()) {
                rep = threshold_report_markov(parse_q(thr_q), eps);
            } else {
                IidModel m{parse_p(thr_p)};
                m.validate();
                rep = threshold_report(m.p, eps);
            }
            json j;
            j["h2_bits"] = rep.h2_bits;
            j["lbar_threshold_log2"] = rep.lbar_threshold_log2;
            j["lbar_threshold_ln"] = rep.lbar_threshold_ln;
            if (rep.istar_bits) j["istar_bits"] = *rep.istar_bits;
            if (rep.two_over_istar) j["two_over_istar"] = *rep.two_over_istar;
            if (rep.markov_rate_bits) j["markov_rate_bits"] = *rep.markov_rate_bits;
            std::cout << j.dump(2) << "\n";
        } else if (*swp) {
            const PresetRun pr = make_preset(swp_preset, swp_seed);
            write_file(swp_out, run_preset_csv(pr));
            json paired = nullptr;
            if (pr.cfg.paired)
                paired = {{"K", pr.cfg.paired->K},
                          {"M", pr.cfg.paired->M},
                          {"J", pr.cfg.paired->J},
                          {"d", pr.cfg.paired->d}};
            emit_manifest({{"subcommand", "sweep"},
                           {"preset", pr.name},
                           {"G", pr.cfg.G},
                           {"algo", algo_name(pr.cfg.algo)},
                           {"lbar_grid", pr.cfg.lbar_grid},
                           {"eps_grid", pr.eps_grid},
                           {"r_grid", pr.r_grid},
                           {"trials_per_point", pr.cfg.trials_per_point},
                           {"target_success", pr.cfg.target_success},
                           {"paired", paired},
                           {"seed", swp_seed},
                           {"out", swp_out}});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
