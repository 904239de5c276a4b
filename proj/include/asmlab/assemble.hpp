#pragma once
// The four assembly algorithms plus the paired-end repeats pipeline.
// All of them consume position-blind reads and emit an AssemblyOutcome;
// ambiguity and gaps yield outcomes, never exceptions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asmlab/overlap.hpp"
#include "asmlab/reads.hpp"
#include "asmlab/sequence.hpp"

namespace asmlab {

enum class OutcomeKind { SingleCircular, ContigSet, Failure };

const char* outcome_kind_name(OutcomeKind k);

struct Contig {
    SymbolVec symbols;
    std::vector<std::pair<int, long long>> layout; // (read id, offset in contig)
};

struct AssemblyOutcome {
    OutcomeKind kind = OutcomeKind::Failure;
    SymbolVec sequence;          // circle content when kind == SingleCircular
    std::vector<Contig> contigs; // populated for ContigSet
    bool closed = false;
    std::vector<int> stage_merges; // index = stage l, size L+1
    // read id -> position on the circle (only when closed); de Bruijn and
    // repeats outcomes do not carry a read layout
    std::vector<std::pair<int, long long>> layout;
    std::string failure_reason;
};

// Stage-based greedy: stages l = L down to 1 over the sort-and-extend
// index; stage-0 merges are refused (they would be pure guesses).
// Ties break on the lowest (read id, read id) pair.
AssemblyOutcome greedy_assemble(const BlindReads& reads);

// Extend a single contig rightward from read 0 by the unused read with the
// largest exact overlap; stop when no positive-overlap extension exists,
// then try to close the circle.
AssemblyOutcome sequential_assemble(const BlindReads& reads);

// K-mer / Eulerian assembly with set semantics (duplicate K-mers collapse).
// Emits the spelled circle only when the Eulerian circuit exists and is
// unique up to rotation (BEST-theorem count on the unitig-compressed graph);
// otherwise the unambiguous paths as a contig set.
AssemblyOutcome debruijn_assemble(const BlindReads& reads, int K);

// Greedy with the MAP overlap score; success criterion downstream is
// perfect layout rather than symbol-exact sequence. Candidate pairs come
// from shared q-gram seeds; once few contig ends remain, all remaining
// end pairs are scored exhaustively so small-overlap stages are exact.
AssemblyOutcome noisy_greedy_assemble(const BlindReads& reads, const MapScorerConfig& cfg);

// Paired-end pipeline for a genome with M planted copies of a length-K
// repeat (K >= L): identify the repeat, assemble the M inter-repeat
// segments on a modified overlap graph with permanent end nodes, then
// order the segments with bridging mate pairs (anchor parameter d).
AssemblyOutcome repeats_assemble(const BlindMatePairs& pairs, int K, int d);

} // namespace asmlab
