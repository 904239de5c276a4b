#pragma once
// Ground-truth circular genome models: i.i.d., first-order Markov, and
// repeat-planted composites, plus circular-string utilities.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace asmlab {

using Symbol = uint8_t; // 0..3 <-> A,C,G,T
using SymbolVec = std::vector<Symbol>;

char symbol_to_char(Symbol s);
Symbol char_to_symbol(char c); // throws std::invalid_argument on non-ACGT

std::string symbols_to_string(const SymbolVec& v);
SymbolVec string_to_symbols(const std::string& s);

struct IidModel {
    std::array<double, 4> p;
    void validate() const; // throws std::invalid_argument
};

// Column-stochastic: q[i][j] = P(next = i | prev = j).
struct MarkovModel {
    std::array<std::array<double, 4>, 4> q;
    void validate() const; // throws; also requires strictly positive entries
    std::array<double, 4> column(int j) const;
};

inline IidModel uniform_model() { return IidModel{{0.25, 0.25, 0.25, 0.25}}; }

// All sequences in this library are circular; DnaSequence is the symbol
// array with modular indexing helpers.
struct DnaSequence {
    SymbolVec symbols;
    size_t size() const { return symbols.size(); }
    Symbol at_mod(long long i) const {
        const long long g = static_cast<long long>(symbols.size());
        return symbols[static_cast<size_t>(((i % g) + g) % g)];
    }
};

DnaSequence generate_iid(const IidModel& model, size_t G, uint64_t seed);
DnaSequence generate_markov(const MarkovModel& model, size_t G, uint64_t seed);

// pi with Q*pi = pi, by power iteration to 1e-12 residual.
std::array<double, 4> stationary_distribution(const MarkovModel& model);

// Insert M copies of `repeat` into `base`, equally spaced around the circle
// (gap lengths floor(G0/M) or ceil(G0/M)); the first copy starts at index 0,
// so no copy straddles the index-0 seam. Returns the planted sequence and
// the copy start positions (diagnostics only).
struct PlantResult {
    DnaSequence sequence;
    std::vector<size_t> positions;
};
PlantResult plant_repeats(const DnaSequence& base, const SymbolVec& repeat, size_t M);

// Booth's minimal-rotation algorithm; returns the rotation index.
size_t minimal_rotation(const SymbolVec& v);

// true iff |a| == |b| and b is a rotation of a
bool sequences_equal_circular(const DnaSequence& a, const DnaSequence& b);

SymbolVec rotate(const SymbolVec& v, size_t k);

// One ACGT line, newline-terminated.
void save_sequence(const std::string& path, const DnaSequence& s);
DnaSequence load_sequence(const std::string& path);

} // namespace asmlab
