#pragma once
// Read sampling under the three physical models: uniform noiseless,
// memoryless substitution noise, and paired-end.
//
// True start positions are oracle data for the diagnostics module only.
// Assemblers consume BlindReads / BlindMatePairs, which carry no position
// metadata; the strip happens at this module boundary.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "asmlab/sequence.hpp"

namespace asmlab {

struct Read {
    SymbolVec symbols;
    uint32_t true_start = 0; // oracle-only
};

// T[r][s] = Q(r|s); columns sum to 1
struct DmcChannel {
    std::array<std::array<double, 4>, 4> t;
    void validate() const;
};

DmcChannel symmetric_channel(double eps);
DmcChannel identity_channel();

struct ReadSet {
    std::vector<Read> reads;
    uint32_t G = 0;
    uint32_t L = 0;
    bool noisy = false;
    double noise_eps = 0; // descriptor only (for the file header)
};

struct MatePair {
    Read left, right; // right.true_start = (left.true_start + L + J) mod G
};

struct MatePairSet {
    std::vector<MatePair> pairs;
    uint32_t G = 0, L = 0, J = 0;
};

// i.i.d. uniform starts on the circle; wrap-around permitted
ReadSet sample_reads(const DnaSequence& s, size_t N, size_t L, uint64_t seed);

// every symbol independently through the channel; rejects double noising
ReadSet apply_noise(const ReadSet& rs, const DmcChannel& ch, double eps_label, uint64_t seed);

MatePairSet sample_mate_pairs(const DnaSequence& s, size_t pairs, size_t L, size_t J,
                              uint64_t seed);

// ---- position-blind views handed to assemblers ----

struct BlindReads {
    std::vector<SymbolVec> reads;
    uint32_t L = 0;
};

struct BlindMatePairs {
    std::vector<std::pair<SymbolVec, SymbolVec>> pairs;
    uint32_t L = 0, J = 0;
};

BlindReads blind(const ReadSet& rs);
BlindMatePairs blind(const MatePairSet& ms);

// file format: header "G L N noise_eps", then one ACGT read per line;
// true positions go to a separate sidecar file (one integer per line)
void save_reads(const std::string& path, const ReadSet& rs);
BlindReads load_blind_reads(const std::string& path);
void save_positions(const std::string& path, const ReadSet& rs);

// mate-pair format: header "G L N J noise_eps", then alternating left/right lines
void save_mate_pairs(const std::string& path, const MatePairSet& ms);
BlindMatePairs load_blind_mate_pairs(const std::string& path);

} // namespace asmlab
