#pragma once
// Ground-truth-aware verifiers: coverage of the circle, repeat structure
// (including the interleaved/triple patterns that make reconstruction
// impossible), layout correctness, and mate-pair bridging.

#include <tuple>
#include <utility>
#include <vector>

#include "asmlab/assemble.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/sequence.hpp"

namespace asmlab {

struct CoverageReport {
    bool covered = false;
    std::vector<std::pair<long long, long long>> gaps; // (start, length), circular coords
    long long islands = 0; // maximal covered runs
};

// exact circular union of the [start, start+L) read intervals
CoverageReport check_coverage(const ReadSet& rs);

struct RepeatReport {
    int ell = 0;
    // physically disjoint occurrence pairs of an identical ell-mer
    std::vector<std::tuple<long long, long long, int>> repeat_pairs; // (pos_i, pos_j, ell)
    // occurrence pairs whose circular intervals intersect (self-overlap)
    std::vector<std::tuple<long long, long long, int>> overlapping_pairs;
    bool interleaved = false; // disjoint pairs x..y..x..y around the circle
    bool triple = false;      // >= 3 pairwise-disjoint occurrences of one ell-mer
};

// exhaustive repeated-ell-mer scan of the circular sequence (sorted l-mers)
RepeatReport find_repeats(const DnaSequence& s, int ell);

// true iff the outcome is a closed circle of the right length and every
// read's layout position equals its true start under one global rotation
bool verify_layout(const AssemblyOutcome& outcome, const ReadSet& rs);

struct BridgingReport {
    std::vector<bool> bridged; // one per repeat position
    bool interval_empty = false;
};

// repeat r is bridged iff some pair's left read starts within the window
// [q + K + d - 2L - J, q - d] (mod G), q = repeat start
BridgingReport check_bridging(const MatePairSet& pairs,
                              const std::vector<long long>& repeat_positions, int K, int d);

} // namespace asmlab
