#include "asmlab/reads.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "asmlab/rng.hpp"

namespace asmlab {

void DmcChannel::validate() const {
    for (int s = 0; s < 4; ++s) {
        double sum = 0;
        for (int r = 0; r < 4; ++r) {
            if (t[r][s] < 0) throw std::invalid_argument("DmcChannel: negative entry");
            sum += t[r][s];
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("DmcChannel: columns must sum to 1");
    }
}

DmcChannel symmetric_channel(double eps) {
    if (eps < 0 || eps > 1) throw std::invalid_argument("symmetric_channel: eps out of [0,1]");
    DmcChannel ch{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            ch.t[r][s] = (r == s) ? 1 - eps : eps / 3;
    return ch;
}

DmcChannel identity_channel() { return symmetric_channel(0.0); }

ReadSet sample_reads(const DnaSequence& s, size_t N, size_t L, uint64_t seed) {
    const size_t G = s.size();
    if (L < 1 || L > G) throw std::invalid_argument("sample_reads: need 1 <= L <= G");
    Rng rng(seed);
    ReadSet rs;
    rs.G = static_cast<uint32_t>(G);
    rs.L = static_cast<uint32_t>(L);
    rs.reads.resize(N);
    for (size_t i = 0; i < N; ++i) {
        const size_t t = rng.below(G);
        Read& r = rs.reads[i];
        r.true_start = static_cast<uint32_t>(t);
        r.symbols.resize(L);
        for (size_t k = 0; k < L; ++k) {
            size_t pos = t + k;
            if (pos >= G) pos -= G;
            r.symbols[k] = s.symbols[pos];
        }
    }
    return rs;
}

ReadSet apply_noise(const ReadSet& rs, const DmcChannel& ch, double eps_label, uint64_t seed) {
    if (rs.noisy) throw std::invalid_argument("apply_noise: read set already noisy");
    ch.validate();
    std::array<std::array<double, 4>, 4> colcdf;
    for (int s = 0; s < 4; ++s) {
        std::array<double, 4> col{ch.t[0][s], ch.t[1][s], ch.t[2][s], ch.t[3][s]};
        colcdf[s] = cdf4(col);
    }
    Rng rng(seed);
    ReadSet out = rs;
    out.noisy = true;
    out.noise_eps = eps_label;
    for (Read& r : out.reads)
        for (Symbol& x : r.symbols)
            x = static_cast<Symbol>(rng.sample_cdf4(colcdf[x]));
    return out;
}

MatePairSet sample_mate_pairs(const DnaSequence& s, size_t pairs, size_t L, size_t J,
                              uint64_t seed) {
    const size_t G = s.size();
    if (2 * L + J > G) throw std::invalid_argument("sample_mate_pairs: insert 2L+J exceeds G");
    if (L < 1) throw std::invalid_argument("sample_mate_pairs: L >= 1 required");
    Rng rng(seed);
    MatePairSet ms;
    ms.G = static_cast<uint32_t>(G);
    ms.L = static_cast<uint32_t>(L);
    ms.J = static_cast<uint32_t>(J);
    ms.pairs.resize(pairs);
    auto extract = [&](size_t t, Read& r) {
        r.true_start = static_cast<uint32_t>(t);
        r.symbols.resize(L);
        for (size_t k = 0; k < L; ++k) {
            size_t pos = t + k;
            if (pos >= G) pos -= G;
            r.symbols[k] = s.symbols[pos];
        }
    };
    for (size_t i = 0; i < pairs; ++i) {
        const size_t t = rng.below(G);
        extract(t, ms.pairs[i].left);
        extract((t + L + J) % G, ms.pairs[i].right);
    }
    return ms;
}

BlindReads blind(const ReadSet& rs) {
    BlindReads b;
    b.L = rs.L;
    b.reads.reserve(rs.reads.size());
    for (const Read& r : rs.reads) b.reads.push_back(r.symbols);
    return b;
}

BlindMatePairs blind(const MatePairSet& ms) {
    BlindMatePairs b;
    b.L = ms.L;
    b.J = ms.J;
    b.pairs.reserve(ms.pairs.size());
    for (const MatePair& p : ms.pairs) b.pairs.emplace_back(p.left.symbols, p.right.symbols);
    return b;
}

void save_reads(const std::string& path, const ReadSet& rs) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << rs.G << ' ' << rs.L << ' ' << rs.reads.size() << ' ' << rs.noise_eps << '\n';
    for (const Read& r : rs.reads) f << symbols_to_string(r.symbols) << '\n';
}

BlindReads load_blind_reads(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::string header;
    if (!std::getline(f, header)) throw std::runtime_error("empty reads file: " + path);
    std::istringstream hs(header);
    uint64_t G = 0, L = 0, N = 0;
    double eps = 0;
    if (!(hs >> G >> L >> N >> eps))
        throw std::runtime_error("malformed reads header (want 'G L N noise_eps'): " + path);
    BlindReads b;
    b.L = static_cast<uint32_t>(L);
    b.reads.reserve(N);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        SymbolVec v = string_to_symbols(line);
        if (v.size() != L) throw std::runtime_error("read length mismatch in " + path);
        b.reads.push_back(std::move(v));
    }
    if (b.reads.size() != N) throw std::runtime_error("read count mismatch in " + path);
    return b;
}

void save_mate_pairs(const std::string& path, const MatePairSet& ms) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << ms.G << ' ' << ms.L << ' ' << ms.pairs.size() << ' ' << ms.J << ' ' << 0.0 << '\n';
    for (const MatePair& p : ms.pairs)
        f << symbols_to_string(p.left.symbols) << '\n' << symbols_to_string(p.right.symbols) << '\n';
}

BlindMatePairs load_blind_mate_pairs(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::string header;
    if (!std::getline(f, header)) throw std::runtime_error("empty mate-pair file: " + path);
    std::istringstream hs(header);
    uint64_t G = 0, L = 0, N = 0, J = 0;
    double eps = 0;
    if (!(hs >> G >> L >> N >> J >> eps))
        throw std::runtime_error("malformed mate-pair header (want 'G L N J noise_eps'): " + path);
    BlindMatePairs b;
    b.L = static_cast<uint32_t>(L);
    b.J = static_cast<uint32_t>(J);
    b.pairs.reserve(N);
    std::string left;
    std::string right;
    while (std::getline(f, left)) {
        if (left.empty()) continue;
        if (!std::getline(f, right)) throw std::runtime_error("odd read count in " + path);
        SymbolVec lv = string_to_symbols(left), rv = string_to_symbols(right);
        if (lv.size() != L || rv.size() != L)
            throw std::runtime_error("read length mismatch in " + path);
        b.pairs.emplace_back(std::move(lv), std::move(rv));
    }
    if (b.pairs.size() != N) throw std::runtime_error("pair count mismatch in " + path);
    return b;
}

void save_positions(const std::string& path, const ReadSet& rs) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    for (const Read& r : rs.reads) f << r.true_start << '\n';
}

} // namespace asmlab
