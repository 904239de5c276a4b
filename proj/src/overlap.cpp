#include "asmlab/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asmlab {

int suffix_prefix_overlap(const SymbolVec& a, const SymbolVec& b) {
    const int maxl = static_cast<int>(std::min(a.size(), b.size()));
    for (int ell = maxl; ell >= 1; --ell) {
        if (std::equal(a.end() - ell, a.end(), b.begin())) return ell;
    }
    return 0;
}

LmerKey prefix_key(const SymbolVec& v, int ell) {
    if (ell > 64 || ell > static_cast<int>(v.size()))
        throw std::invalid_argument("prefix_key: ell out of range");
    uint64_t hi = 0, lo = 0;
    for (int i = 0; i < ell; ++i) {
        if (i < 32)
            hi = (hi << 2) | v[i];
        else
            lo = (lo << 2) | v[i];
    }
    // keys are only ever compared between l-mers of the same length
    return {hi, lo};
}

LmerKey suffix_key(const SymbolVec& v, int ell) {
    if (ell > 64 || ell > static_cast<int>(v.size()))
        throw std::invalid_argument("suffix_key: ell out of range");
    const size_t off = v.size() - ell;
    uint64_t hi = 0, lo = 0;
    for (int i = 0; i < ell; ++i) {
        if (i < 32)
            hi = (hi << 2) | v[off + i];
        else
            lo = (lo << 2) | v[off + i];
    }
    return {hi, lo};
}

namespace {

struct Entry {
    LmerKey key;
    int id;
    uint8_t side; // 0 = suffix, 1 = prefix
};

LmerIndex pair_up(std::vector<Entry>& entries, int ell, bool exclude_self) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key != b.key) return a.key < b.key;
        if (a.side != b.side) return a.side < b.side;
        return a.id < b.id;
    });
    LmerIndex idx;
    idx.ell = ell;
    size_t g = 0;
    while (g < entries.size()) {
        size_t h = g;
        while (h < entries.size() && entries[h].key == entries[g].key) ++h;
        size_t mid = g;
        while (mid < h && entries[mid].side == 0) ++mid;
        for (size_t i = g; i < mid; ++i)
            for (size_t j = mid; j < h; ++j) {
                if (exclude_self && entries[i].id == entries[j].id) continue;
                idx.pairs.emplace_back(entries[i].id, entries[j].id);
            }
        g = h;
    }
    std::sort(idx.pairs.begin(), idx.pairs.end());
    return idx;
}

} // namespace

LmerIndex build_index(const std::vector<SymbolVec>& seqs, int ell) {
    std::vector<Entry> entries;
    entries.reserve(2 * seqs.size());
    for (size_t i = 0; i < seqs.size(); ++i) {
        if (static_cast<int>(seqs[i].size()) < ell) continue;
        entries.push_back({suffix_key(seqs[i], ell), static_cast<int>(i), 0});
        entries.push_back({prefix_key(seqs[i], ell), static_cast<int>(i), 1});
    }
    return pair_up(entries, ell, /*exclude_self=*/true);
}

LmerIndex build_index_two_sided(const std::vector<std::pair<LmerKey, int>>& suffixes,
                                const std::vector<std::pair<LmerKey, int>>& prefixes,
                                int ell) {
    std::vector<Entry> entries;
    entries.reserve(suffixes.size() + prefixes.size());
    for (const auto& [k, id] : suffixes) entries.push_back({k, id, 0});
    for (const auto& [k, id] : prefixes) entries.push_back({k, id, 1});
    return pair_up(entries, ell, /*exclude_self=*/true);
}

MapScorerConfig MapScorerConfig::make(const std::array<double, 4>& source,
                                      const DmcChannel& channel, double theta_override) {
    MapScorerConfig cfg;
    cfg.source = source;
    cfg.channel = channel;
    const JointLaw law = channel_joint(source, channel.t);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const double pj = law.pxy[x * 4 + y];
            const double pi = law.px[x] * law.py[y];
            cfg.llr[x][y] = (pj > 0 && pi > 0) ? std::log2(pj / pi) : kZeroClamp;
        }
    if (theta_override >= 0) {
        cfg.theta = theta_override;
    } else {
        // identity channel: I* degenerates to H2(source); any theta in
        // (0, H2] makes the test match exact suffix-prefix overlap
        bool noiseless = true;
        for (int r = 0; r < 4 && noiseless; ++r)
            for (int s = 0; s < 4; ++s)
                if (std::abs(channel.t[r][s] - (r == s ? 1.0 : 0.0)) > 1e-15) {
                    noiseless = false;
                    break;
                }
        cfg.theta = noiseless ? renyi2(source) : istar_general(source, channel.t).theta_star;
    }
    return cfg;
}

bool map_overlap_test(const Symbol* x, const Symbol* y, int ell, const MapScorerConfig& cfg) {
    if (ell < 1) throw std::invalid_argument("map_overlap_test: ell >= 1 required");
    double sum = 0;
    for (int j = 0; j < ell; ++j) sum += cfg.llr[x[j]][y[j]];
    return sum >= ell * cfg.theta;
}

int map_overlap_score(const SymbolVec& ri, const SymbolVec& rj, const MapScorerConfig& cfg) {
    const int maxl = static_cast<int>(std::min(ri.size(), rj.size()));
    for (int ell = maxl; ell >= 1; --ell)
        if (map_overlap_test(ri.data() + (ri.size() - ell), rj.data(), ell, cfg)) return ell;
    return 0;
}

int hamming_overlap_score(const SymbolVec& ri, const SymbolVec& rj, double alpha) {
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("hamming_overlap_score: alpha in [0,1]");
    const int maxl = static_cast<int>(std::min(ri.size(), rj.size()));
    for (int ell = maxl; ell >= 1; --ell) {
        int dist = 0;
        const Symbol* a = ri.data() + (ri.size() - ell);
        for (int j = 0; j < ell; ++j) dist += (a[j] != rj[j]);
        if (dist < alpha * ell) return ell;
    }
    return 0;
}

} // namespace asmlab
