#pragma once
// Overlap scoring (exact, MAP, Hamming) and the sort-and-extend l-mer
// index behind the O(L N log N) greedy pipeline.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "asmlab/entropy.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/sequence.hpp"

namespace asmlab {

// largest l <= min(|a|,|b|) with suffix(a,l) == prefix(b,l); 0 if none
int suffix_prefix_overlap(const SymbolVec& a, const SymbolVec& b);

// 2-bit packed l-mer key, l <= 64
using LmerKey = std::pair<uint64_t, uint64_t>;
LmerKey prefix_key(const SymbolVec& v, int ell);
LmerKey suffix_key(const SymbolVec& v, int ell);

// Sort-and-extend index for one stage length: sorts suffix keys and prefix
// keys jointly; candidate pairs are the cross products within equal-key
// groups (a read is never paired with itself).
struct LmerIndex {
    int ell = 0;
    // (suffix-side id, prefix-side id), sorted ascending; i != j
    std::vector<std::pair<int, int>> pairs;
};

LmerIndex build_index(const std::vector<SymbolVec>& seqs, int ell);

// Same, but the suffix side and prefix side come from different id sets
// (used by the stage-driver where ends belong to distinct contigs).
LmerIndex build_index_two_sided(const std::vector<std::pair<LmerKey, int>>& suffixes,
                                const std::vector<std::pair<LmerKey, int>>& prefixes,
                                int ell);

// ---- MAP overlap scoring for noisy reads ----

struct MapScorerConfig {
    std::array<double, 4> source{};
    DmcChannel channel{};
    double theta = 0;             // bits per symbol
    double llr[4][4];             // log2( Pxy(x,y) / (Px(x) Py(y)) ), clamped
    static constexpr double kZeroClamp = -1e6; // stand-in for log2(0)

    // theta defaults to the I*-maximizing threshold; pass theta_override
    // to pin it (config knob).
    static MapScorerConfig make(const std::array<double, 4>& source, const DmcChannel& channel,
                                double theta_override = -1);
};

// H0 (overlap) iff sum_j llr(x_j, y_j) >= l * theta
bool map_overlap_test(const Symbol* x, const Symbol* y, int ell, const MapScorerConfig& cfg);

// largest l with map_overlap_test(suffix(ri,l), prefix(rj,l)) == H0; 0 if none
int map_overlap_score(const SymbolVec& ri, const SymbolVec& rj, const MapScorerConfig& cfg);

// largest l with Hamming(suffix(ri,l), prefix(rj,l)) < alpha * l
int hamming_overlap_score(const SymbolVec& ri, const SymbolVec& rj, double alpha);

} // namespace asmlab
