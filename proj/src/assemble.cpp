#include "asmlab/assemble.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "chain_detail.hpp"

namespace asmlab {

const char* outcome_kind_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::SingleCircular: return "single_circular_sequence";
        case OutcomeKind::ContigSet: return "contig_set";
        default: return "failure";
    }
}

namespace {

using detail::ChainState;

// Spell all chains; if exactly one contig remains, try to close it into a
// circle (largest end overlap in [1, L-1]); a lone linear contig stays a
// contig_set, which counts as failure against circular ground truth.
AssemblyOutcome finalize_chains(ChainState& st, int closure_overlap) {
    AssemblyOutcome out;
    const auto roots = st.roots();
    if (roots.size() == 1) {
        Contig c = st.spell(roots[0]);
        const long long linear_len = static_cast<long long>(c.symbols.size());
        const int ov = closure_overlap;
        if (ov >= 1 && ov < linear_len) {
            out.kind = OutcomeKind::SingleCircular;
            out.closed = true;
            const long long circ = linear_len - ov;
            out.sequence.assign(c.symbols.begin(), c.symbols.begin() + circ);
            out.layout = c.layout;
            for (auto& [id, pos] : out.layout) pos %= circ;
            out.contigs.push_back(std::move(c));
            return out;
        }
    }
    out.kind = OutcomeKind::ContigSet;
    for (int r : roots) out.contigs.push_back(st.spell(r));
    return out;
}

int exact_closure_overlap(ChainState& st, int root) {
    const SymbolVec& t = (*st.reads)[st.tail[root]];
    const SymbolVec& h = (*st.reads)[st.head[root]];
    const int maxl = static_cast<int>(std::min(t.size(), h.size())) - 1;
    for (int ell = maxl; ell >= 1; --ell)
        if (std::equal(t.end() - ell, t.end(), h.begin())) return ell;
    return 0;
}

} // namespace

AssemblyOutcome greedy_assemble(const BlindReads& reads) {
    if (reads.reads.empty()) throw std::invalid_argument("greedy_assemble: empty read set");
    const int L = static_cast<int>(reads.L);
    ChainState st(reads.reads, L);
    std::vector<int> stage_merges(L + 1, 0);

    std::vector<std::pair<LmerKey, int>> sufs, prefs;
    for (int ell = L; ell >= 1; --ell) {
        sufs.clear();
        prefs.clear();
        for (size_t i = 0; i < reads.reads.size(); ++i) {
            const int id = static_cast<int>(i);
            if (st.is_tail(id)) sufs.emplace_back(suffix_key(reads.reads[i], ell), id);
            if (st.is_head(id)) prefs.emplace_back(prefix_key(reads.reads[i], ell), id);
        }
        const LmerIndex idx = build_index_two_sided(sufs, prefs, ell);
        for (const auto& [i, j] : idx.pairs) {
            if (!st.is_tail(i) || !st.is_head(j)) continue; // consumed this stage
            if (st.same(i, j)) continue;                    // circle closing handled at the end
            st.merge(i, j, ell);
            ++stage_merges[ell];
        }
    }

    const auto roots = st.roots();
    const int ov = roots.size() == 1 ? exact_closure_overlap(st, roots[0]) : 0;
    AssemblyOutcome out = finalize_chains(st, ov);
    out.stage_merges = std::move(stage_merges);
    return out;
}

AssemblyOutcome sequential_assemble(const BlindReads& reads) {
    if (reads.reads.empty()) throw std::invalid_argument("sequential_assemble: empty read set");
    const int L = static_cast<int>(reads.L);
    const size_t N = reads.reads.size();

    // per-length prefix buckets: extension candidates at overlap l are the
    // reads whose l-prefix equals the tail's l-suffix
    std::vector<std::unordered_map<uint64_t, std::vector<int>>> buckets(L + 1);
    auto mix_key = [](const LmerKey& k) {
        uint64_t h = k.first * 0x9e3779b97f4a7c15ULL;
        h ^= k.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    for (size_t i = 0; i < N; ++i)
        for (int ell = 1; ell <= L; ++ell)
            buckets[ell][mix_key(prefix_key(reads.reads[i], ell))].push_back(static_cast<int>(i));

    ChainState st(reads.reads, L);
    std::vector<int> stage_merges(L + 1, 0);
    std::vector<unsigned char> used(N, 0);
    int cur = 0;
    used[0] = 1;
    size_t n_used = 1;
    while (true) {
        int pick = -1, pick_ell = 0;
        for (int ell = L; ell >= 1 && pick < 0; --ell) {
            const auto it = buckets[ell].find(mix_key(suffix_key(reads.reads[cur], ell)));
            if (it == buckets[ell].end()) continue;
            for (int cand : it->second) {
                if (used[cand]) continue;
                // hash buckets can collide; confirm the match
                if (prefix_key(reads.reads[cand], ell) != suffix_key(reads.reads[cur], ell))
                    continue;
                if (pick < 0 || cand < pick) pick = cand;
            }
            if (pick >= 0) pick_ell = ell;
        }
        if (pick < 0) break;
        st.merge(cur, pick, pick_ell);
        ++stage_merges[pick_ell];
        used[pick] = 1;
        ++n_used;
        cur = pick;
    }

    AssemblyOutcome out;
    if (n_used == N) {
        const int ov = exact_closure_overlap(st, st.find(0));
        out = finalize_chains(st, ov);
    } else {
        out.kind = OutcomeKind::ContigSet;
        out.contigs.push_back(st.spell(st.find(0)));
        for (size_t i = 0; i < N; ++i)
            if (!used[i]) out.contigs.push_back(st.spell(static_cast<int>(i)));
    }
    out.stage_merges = std::move(stage_merges);
    return out;
}

AssemblyOutcome noisy_greedy_assemble(const BlindReads& reads, const MapScorerConfig& cfg) {
    if (reads.reads.empty()) throw std::invalid_argument("noisy_greedy_assemble: empty read set");
    const int L = static_cast<int>(reads.L);
    const size_t N = reads.reads.size();
    const int q = std::min(8, L);

    // q-gram seeding: an exact shared q-mer proposes the implied alignment
    std::unordered_map<uint64_t, std::vector<std::pair<int, int>>> qmers;
    qmers.reserve(N * (L - q + 1));
    for (size_t i = 0; i < N; ++i) {
        uint64_t key = 0;
        const uint64_t mask = (q == 32) ? ~uint64_t{0} : ((uint64_t{1} << (2 * q)) - 1);
        for (int p = 0; p < L; ++p) {
            key = ((key << 2) | reads.reads[i][p]) & mask;
            if (p >= q - 1) qmers[key].emplace_back(static_cast<int>(i), p - (q - 1));
        }
    }
    // candidate shift sets per ordered pair (i precedes j, shift s >= 0)
    std::map<std::pair<int, int>, std::vector<int>> cand;
    constexpr size_t kBucketCap = 512;
    for (const auto& [key, occ] : qmers) {
        if (occ.size() < 2 || occ.size() > kBucketCap) continue;
        for (size_t u = 0; u < occ.size(); ++u)
            for (size_t v = 0; v < occ.size(); ++v) {
                if (u == v || occ[u].first == occ[v].first) continue;
                const int s = occ[u].second - occ[v].second;
                if (s >= 0) cand[{occ[u].first, occ[v].first}].push_back(s);
            }
    }

    // score = largest l among the candidate alignments passing the MAP test
    auto seed_score = [&](int i, int j, std::vector<int>& shifts) {
        std::sort(shifts.begin(), shifts.end());
        shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
        for (int s : shifts) {
            const int ell = L - s;
            if (ell < 1) continue;
            if (map_overlap_test(reads.reads[i].data() + s, reads.reads[j].data(), ell, cfg))
                return ell;
        }
        return 0;
    };

    std::vector<std::vector<std::pair<int, int>>> by_score(L + 1);
    std::unordered_set<uint64_t> scored;
    scored.reserve(cand.size() * 2);
    auto pair_id = [](int i, int j) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) |
               static_cast<uint32_t>(j);
    };
    for (auto& [ij, shifts] : cand) {
        const int sc = seed_score(ij.first, ij.second, shifts);
        scored.insert(pair_id(ij.first, ij.second));
        if (sc >= 1) by_score[sc].emplace_back(ij);
    }
    cand.clear();

    ChainState st(reads.reads, L);
    std::vector<int> stage_merges(L + 1, 0);
    size_t n_contigs = N;
    bool bruteforced = false;
    constexpr size_t kBruteThreshold = 64;

    for (int ell = L; ell >= 1; --ell) {
        if (!bruteforced && n_contigs <= kBruteThreshold) {
            bruteforced = true;
            std::vector<int> tails, heads;
            for (size_t i = 0; i < N; ++i) {
                if (st.is_tail(static_cast<int>(i))) tails.push_back(static_cast<int>(i));
                if (st.is_head(static_cast<int>(i))) heads.push_back(static_cast<int>(i));
            }
            for (int i : tails)
                for (int j : heads) {
                    if (i == j || scored.count(pair_id(i, j))) continue;
                    const int sc = map_overlap_score(reads.reads[i], reads.reads[j], cfg);
                    scored.insert(pair_id(i, j));
                    if (sc >= 1) by_score[sc].emplace_back(i, j);
                }
            for (int s = 1; s <= L; ++s) std::sort(by_score[s].begin(), by_score[s].end());
        }
        // late-discovered pairs with score above the current stage merge
        // first, highest score first
        const int top = bruteforced && ell < L ? L : ell;
        for (int sc = top; sc >= ell; --sc) {
            auto& bucket = by_score[sc];
            if (bucket.empty()) continue;
            if (!bruteforced || sc == ell) std::sort(bucket.begin(), bucket.end());
            for (const auto& [i, j] : bucket) {
                if (!st.is_tail(i) || !st.is_head(j)) continue;
                if (st.same(i, j)) continue;
                st.merge(i, j, sc);
                ++stage_merges[sc];
                --n_contigs;
            }
            bucket.clear();
        }
    }

    const auto roots = st.roots();
    int ov = 0;
    if (roots.size() == 1) {
        const SymbolVec& t = reads.reads[st.tail[roots[0]]];
        const SymbolVec& h = reads.reads[st.head[roots[0]]];
        for (int e = L - 1; e >= 1; --e)
            if (map_overlap_test(t.data() + (L - e), h.data(), e, cfg)) {
                ov = e;
                break;
            }
    }
    AssemblyOutcome out = finalize_chains(st, ov);
    out.stage_merges = std::move(stage_merges);
    return out;
}

} // namespace asmlab
