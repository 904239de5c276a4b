#include "asmlab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "asmlab/rng.hpp"

namespace asmlab {

static const char kAlphabet[5] = "ACGT";

char symbol_to_char(Symbol s) { return kAlphabet[s & 3]; }

Symbol char_to_symbol(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: throw std::invalid_argument("non-ACGT character in sequence");
    }
}

std::string symbols_to_string(const SymbolVec& v) {
    std::string s;
    s.reserve(v.size());
    for (Symbol x : v) s.push_back(symbol_to_char(x));
    return s;
}

SymbolVec string_to_symbols(const std::string& s) {
    SymbolVec v;
    v.reserve(s.size());
    for (char c : s) v.push_back(char_to_symbol(c));
    return v;
}

void IidModel::validate() const {
    double sum = 0;
    for (double x : p) {
        if (x < 0) throw std::invalid_argument("negative probability in IidModel");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("IidModel probabilities must sum to 1");
}

void MarkovModel::validate() const {
    for (int j = 0; j < 4; ++j) {
        double sum = 0;
        for (int i = 0; i < 4; ++i) {
            if (q[i][j] <= 0)
                throw std::invalid_argument("MarkovModel entries must be strictly positive");
            sum += q[i][j];
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("MarkovModel columns must sum to 1");
    }
}

std::array<double, 4> MarkovModel::column(int j) const {
    return {q[0][j], q[1][j], q[2][j], q[3][j]};
}

DnaSequence generate_iid(const IidModel& model, size_t G, uint64_t seed) {
    model.validate();
    if (G < 1) throw std::invalid_argument("G must be >= 1");
    const auto cdf = cdf4(model.p);
    Rng rng(seed);
    DnaSequence s;
    s.symbols.resize(G);
    for (size_t i = 0; i < G; ++i)
        s.symbols[i] = static_cast<Symbol>(rng.sample_cdf4(cdf));
    return s;
}

std::array<double, 4> stationary_distribution(const MarkovModel& model) {
    model.validate();
    std::array<double, 4> pi{0.25, 0.25, 0.25, 0.25};
    for (int it = 0; it < 100000; ++it) {
        std::array<double, 4> next{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                next[i] += model.q[i][j] * pi[j];
        double norm = next[0] + next[1] + next[2] + next[3];
        double resid = 0;
        for (int i = 0; i < 4; ++i) {
            next[i] /= norm;
            resid += std::abs(next[i] - pi[i]);
        }
        pi = next;
        if (resid <= 1e-13) return pi;
    }
    throw std::runtime_error("stationary_distribution: power iteration did not converge");
}

DnaSequence generate_markov(const MarkovModel& model, size_t G, uint64_t seed) {
    model.validate();
    if (G < 1) throw std::invalid_argument("G must be >= 1");
    const auto pi = stationary_distribution(model);
    Rng rng(seed);
    DnaSequence s;
    s.symbols.resize(G);
    int prev = rng.sample_cdf4(cdf4(pi));
    s.symbols[0] = static_cast<Symbol>(prev);
    std::array<std::array<double, 4>, 4> colcdf;
    for (int j = 0; j < 4; ++j) colcdf[j] = cdf4(model.column(j));
    for (size_t i = 1; i < G; ++i) {
        prev = rng.sample_cdf4(colcdf[prev]);
        s.symbols[i] = static_cast<Symbol>(prev);
    }
    return s;
}

PlantResult plant_repeats(const DnaSequence& base, const SymbolVec& repeat, size_t M) {
    if (M < 1) throw std::invalid_argument("plant_repeats: M must be >= 1");
    if (repeat.empty()) throw std::invalid_argument("plant_repeats: empty repeat");
    const size_t G0 = base.size();
    PlantResult out;
    out.sequence.symbols.reserve(G0 + M * repeat.size());
    // gap m gets floor(G0/M) symbols, the first G0 % M gaps one extra
    size_t consumed = 0;
    for (size_t m = 0; m < M; ++m) {
        out.positions.push_back(out.sequence.symbols.size());
        out.sequence.symbols.insert(out.sequence.symbols.end(), repeat.begin(), repeat.end());
        size_t gap = G0 / M + (m < G0 % M ? 1 : 0);
        out.sequence.symbols.insert(out.sequence.symbols.end(),
                                    base.symbols.begin() + consumed,
                                    base.symbols.begin() + consumed + gap);
        consumed += gap;
    }
    return out;
}

size_t minimal_rotation(const SymbolVec& v) {
    // Booth's algorithm on the doubled string
    const size_t n = v.size();
    if (n == 0) return 0;
    size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Symbol a = v[(i + k) % n], b = v[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

SymbolVec rotate(const SymbolVec& v, size_t k) {
    const size_t n = v.size();
    SymbolVec out(n);
    for (size_t i = 0; i < n; ++i) out[i] = v[(i + k) % n];
    return out;
}

bool sequences_equal_circular(const DnaSequence& a, const DnaSequence& b) {
    if (a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    return rotate(a.symbols, minimal_rotation(a.symbols)) ==
           rotate(b.symbols, minimal_rotation(b.symbols));
}

void save_sequence(const std::string& path, const DnaSequence& s) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << symbols_to_string(s.symbols) << '\n';
}

DnaSequence load_sequence(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty sequence file: " + path);
    return DnaSequence{string_to_symbols(line)};
}

} // namespace asmlab
