// End-to-end checks of the asmlab binary: exit codes, manifest output,
// gen/sample/assemble round trips, determinism. argv[1] is the binary path.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;
std::string g_bin;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
    const std::string cmd = g_bin + " " + args + " > " + stdout_path + " 2> cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <asmlab-binary>\n";
        return 2;
    }
    g_bin = argv[1];

    // exit codes: no subcommand / bad flag -> 2, --help -> 0
    check(run("") == 2, "no subcommand exits 2");
    check(run("frobnicate") == 2, "unknown subcommand exits 2");
    check(run("gen --G 10") == 2, "missing required flags exit 2");
    check(run("--help") == 0, "--help exits 0");

    // thresholds: uniform source, noiseless
    check(run("thresholds --p uniform", "cli_thr.json") == 0, "thresholds runs");
    const std::string thr = slurp("cli_thr.json");
    check(thr.find("\"h2_bits\": 2.0") != std::string::npos, "uniform h2 = 2 bits");
    check(thr.find("\"lbar_threshold_log2\": 1.0") != std::string::npos,
          "uniform threshold lbar = 1 (log2 units)");
    check(thr.find("istar_bits") == std::string::npos, "no istar without --eps");
    check(run("thresholds --p uniform --eps 0.01", "cli_thr2.json") == 0, "noisy thresholds run");
    check(slurp("cli_thr2.json").find("two_over_istar") != std::string::npos,
          "noisy report exposes 2/I*");
    check(run("thresholds --p 0.9,0.1,0.1,0.1") == 1, "non-distribution --p exits 1");

    // gen: determinism + seed sensitivity
    check(run("gen --G 400 --seed 7 --out cli_g1.txt") == 0, "gen runs");
    check(run("gen --G 400 --seed 7 --out cli_g2.txt") == 0, "gen reruns");
    check(run("gen --G 400 --seed 8 --out cli_g3.txt") == 0, "gen other seed");
    check(slurp("cli_g1.txt") == slurp("cli_g2.txt"), "gen is deterministic in the seed");
    check(slurp("cli_g1.txt") != slurp("cli_g3.txt"), "gen depends on the seed");
    check(run("gen --model markov --G 200 --seed 1 --out cli_gm.txt") == 1,
          "markov without --q exits 1");
    check(run("gen --model markov --G 200 --seed 1 --out cli_gm.txt "
              "--q 0.7,0.1,0.1,0.1,0.1,0.7,0.1,0.1,0.1,0.1,0.7,0.1,0.1,0.1,0.1,0.7") == 0,
          "markov gen runs");

    // sample + assemble round trip: dense reads reassemble the circle
    check(run("sample --genome cli_g1.txt --N 300 --L 20 --seed 3 --out cli_r.txt "
              "--positions cli_pos.txt") == 0,
          "sample runs");
    check(run("assemble --algo greedy --reads cli_r.txt", "cli_asm.json") == 0, "assemble runs");
    const std::string asm_out = slurp("cli_asm.json");
    check(asm_out.find("\"kind\": \"single_circular_sequence\"") != std::string::npos,
          "greedy closes the circle");
    check(asm_out.find("\"length\": 400") != std::string::npos, "assembled length is G");
    check(run("assemble --algo debruijn --reads cli_r.txt") == 1, "debruijn without --k exits 1");
    check(run("assemble --algo debruijn --reads cli_r.txt --k 12", "cli_db.json") == 0,
          "debruijn runs with --k");
    check(run("assemble --algo noisy-greedy --reads cli_r.txt --alpha 0.2", "cli_ng.json") == 0,
          "noisy-greedy with --alpha runs");

    // diagnose both modes
    check(run("diagnose --genome cli_g1.txt --ell 8", "cli_rep.json") == 0, "repeat diagnose runs");
    check(slurp("cli_rep.json").find("\"interleaved\"") != std::string::npos,
          "repeat report present");
    check(run("diagnose --reads cli_r.txt --positions cli_pos.txt", "cli_cov.json") == 0,
          "coverage diagnose runs");
    check(slurp("cli_cov.json").find("\"covered\": true") != std::string::npos,
          "dense sampling covers the circle");
    check(run("diagnose") == 1, "diagnose without inputs exits 1");

    // paired sampling + repeats assembler wiring
    check(run("sample --genome cli_g1.txt --N 10 --L 15 --seed 5 --paired --J 40 "
              "--out cli_mp.txt") == 0,
          "paired sample runs");
    check(run("assemble --algo repeats --reads cli_mp.txt") == 1, "repeats without --k/--d exits 1");
    check(run("assemble --algo repeats --reads cli_mp.txt --k 30 --d 2", "cli_rp.json") == 0,
          "repeats assembler runs (outcome may be a failure report)");
    check(slurp("cli_rp.json").find("\"kind\"") != std::string::npos, "repeats outcome emitted");

    // manifests carry the version string
    check(run("gen --G 50 --seed 1 --out cli_gv.txt", "cli_man.json") == 0, "manifest emitted");
    check(slurp("cli_man.json").find("asmlab 0.1.0") != std::string::npos, "version in manifest");

    // sweep: preset names are validated at parse time
    check(run("sweep --preset nope --seed 1 --out cli_sw.csv") == 2, "unknown preset exits 2");

    for (const char* f :
         {"cli_stderr.txt", "cli_thr.json", "cli_thr2.json", "cli_g1.txt", "cli_g2.txt",
          "cli_g3.txt", "cli_gm.txt", "cli_r.txt", "cli_pos.txt", "cli_asm.json", "cli_db.json",
          "cli_ng.json", "cli_rep.json", "cli_cov.json", "cli_mp.txt", "cli_rp.json", "cli_gv.txt",
          "cli_man.json"})
        std::remove(f);

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cout << "test_cli: " << g_failures << " check(s) failed\n";
    return 1;
}
