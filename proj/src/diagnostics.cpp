#include "asmlab/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace asmlab {

CoverageReport check_coverage(const ReadSet& rs) {
    CoverageReport rep;
    const long long G = rs.G, L = rs.L;
    if (rs.reads.empty()) {
        rep.covered = false;
        rep.gaps.emplace_back(0, G);
        rep.islands = 0;
        return rep;
    }
    std::vector<long long> starts;
    starts.reserve(rs.reads.size());
    for (const Read& r : rs.reads) starts.push_back(r.true_start);
    std::sort(starts.begin(), starts.end());
    const long long wrap_limit = starts[0] + G; // one full turn
    long long cur_end = starts[0] + L;
    for (size_t i = 1; i < starts.size() && cur_end < wrap_limit; ++i) {
        if (starts[i] > cur_end) rep.gaps.emplace_back(cur_end % G, starts[i] - cur_end);
        cur_end = std::max(cur_end, starts[i] + L);
    }
    if (cur_end < wrap_limit) rep.gaps.emplace_back(cur_end % G, wrap_limit - cur_end);
    rep.covered = rep.gaps.empty();
    rep.islands = rep.covered ? 1 : static_cast<long long>(rep.gaps.size());
    return rep;
}

namespace {

// does position q start inside the circular interval [p, p+ell)?
inline bool starts_inside(long long p, long long q, long long ell, long long G) {
    return ((q - p) % G + G) % G < ell;
}

inline bool disjoint_on_circle(long long p, long long q, long long ell, long long G) {
    return !starts_inside(p, q, ell, G) && !starts_inside(q, p, ell, G);
}

} // namespace

RepeatReport find_repeats(const DnaSequence& s, int ell) {
    const long long G = static_cast<long long>(s.size());
    if (ell < 1 || ell > static_cast<int>(s.size()))
        throw std::invalid_argument("find_repeats: need 1 <= ell <= G");
    RepeatReport rep;
    rep.ell = ell;

    std::vector<std::pair<std::string, long long>> lmers;
    lmers.reserve(s.size());
    std::string buf(ell, '\0');
    for (long long p = 0; p < G; ++p) {
        for (int k = 0; k < ell; ++k) buf[k] = static_cast<char>(s.at_mod(p + k));
        lmers.emplace_back(buf, p);
    }
    std::sort(lmers.begin(), lmers.end());

    struct DisjointPair {
        int group;
        long long p, q;
    };
    std::vector<DisjointPair> dps;
    constexpr size_t kPairCap = 5000;
    int group = 0;
    size_t g = 0;
    while (g < lmers.size()) {
        size_t h = g;
        while (h < lmers.size() && lmers[h].first == lmers[g].first) ++h;
        const size_t cnt = h - g;
        if (cnt >= 2) {
            std::vector<long long> pos;
            pos.reserve(cnt);
            for (size_t i = g; i < h; ++i) pos.push_back(lmers[i].second);
            for (size_t i = 0; i < cnt; ++i)
                for (size_t j = i + 1; j < cnt; ++j) {
                    if (disjoint_on_circle(pos[i], pos[j], ell, G)) {
                        rep.repeat_pairs.emplace_back(pos[i], pos[j], ell);
                        if (dps.size() < kPairCap) dps.push_back({group, pos[i], pos[j]});
                    } else {
                        rep.overlapping_pairs.emplace_back(pos[i], pos[j], ell);
                    }
                }
            // triple: three pairwise-disjoint occurrences of this l-mer
            if (!rep.triple && cnt >= 3 && cnt <= 50) {
                for (size_t a = 0; a < cnt && !rep.triple; ++a)
                    for (size_t b = a + 1; b < cnt && !rep.triple; ++b)
                        for (size_t c = b + 1; c < cnt && !rep.triple; ++c)
                            rep.triple = disjoint_on_circle(pos[a], pos[b], ell, G) &&
                                         disjoint_on_circle(pos[a], pos[c], ell, G) &&
                                         disjoint_on_circle(pos[b], pos[c], ell, G);
            }
            ++group;
        }
        g = h;
    }

    // interleaved: pairs from two distinct l-mers alternating x..y..x..y,
    // all four occurrences physically disjoint
    for (size_t i = 0; i < dps.size() && !rep.interleaved; ++i)
        for (size_t j = i + 1; j < dps.size() && !rep.interleaved; ++j) {
            const DisjointPair& A = dps[i];
            const DisjointPair& B = dps[j];
            if (A.group == B.group) continue;
            if (!disjoint_on_circle(A.p, B.p, ell, G) || !disjoint_on_circle(A.p, B.q, ell, G) ||
                !disjoint_on_circle(A.q, B.p, ell, G) || !disjoint_on_circle(A.q, B.q, ell, G))
                continue;
            const long long span = ((A.q - A.p) % G + G) % G;
            const bool b1_in = ((B.p - A.p) % G + G) % G < span;
            const bool b2_in = ((B.q - A.p) % G + G) % G < span;
            rep.interleaved = b1_in != b2_in;
        }
    return rep;
}

bool verify_layout(const AssemblyOutcome& outcome, const ReadSet& rs) {
    if (outcome.layout.empty()) throw std::invalid_argument("verify_layout: layout absent");
    if (!outcome.closed) return false;
    const long long G = static_cast<long long>(outcome.sequence.size());
    if (G != static_cast<long long>(rs.G)) return false;
    if (outcome.layout.size() != rs.reads.size()) return false;
    std::vector<char> seen(rs.reads.size(), 0);
    long long rot = -1;
    for (const auto& [id, pos] : outcome.layout) {
        if (id < 0 || id >= static_cast<int>(rs.reads.size()) || seen[id]) return false;
        seen[id] = 1;
        const long long want = rs.reads[id].true_start;
        const long long r = ((want - pos) % G + G) % G;
        if (rot < 0)
            rot = r;
        else if (r != rot)
            return false;
    }
    return true;
}

BridgingReport check_bridging(const MatePairSet& pairs,
                              const std::vector<long long>& repeat_positions, int K, int d) {
    BridgingReport rep;
    const long long G = pairs.G, L = pairs.L, J = pairs.J;
    const long long width = J + 2 * L - (2 * d + K);
    rep.bridged.assign(repeat_positions.size(), false);
    if (width <= 0) {
        rep.interval_empty = true;
        return rep;
    }
    for (size_t r = 0; r < repeat_positions.size(); ++r) {
        const long long lo = repeat_positions[r] + K + d - 2 * L - J;
        for (const MatePair& p : pairs.pairs) {
            const long long t = p.left.true_start;
            if (((t - lo) % G + G) % G <= width) {
                rep.bridged[r] = true;
                break;
            }
        }
    }
    return rep;
}

} // namespace asmlab
