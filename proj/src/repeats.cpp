#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "asmlab/assemble.hpp"
#include "chain_detail.hpp"

namespace asmlab {

namespace {

using detail::ChainState;

// Step 1: locate the repeated K-mer x. Sub-k-mers inside the repeat occur
// about M times the background multiplicity; chain the anomalously frequent
// ones by (k-1)-overlap and demand the longest chain spell exactly K symbols.
bool identify_repeat(const std::vector<SymbolVec>& all_reads, int L, int K, SymbolVec& x_out) {
    const int k = std::min(20, L);
    std::unordered_map<std::string, int> counts;
    std::string buf;
    for (const SymbolVec& r : all_reads)
        for (int p = 0; p + k <= static_cast<int>(r.size()); ++p) {
            buf.assign(r.begin() + p, r.begin() + p + k);
            ++counts[buf];
        }
    std::vector<int> mults;
    mults.reserve(counts.size());
    for (const auto& [km, c] : counts) mults.push_back(c);
    if (mults.empty()) return false;
    std::nth_element(mults.begin(), mults.begin() + mults.size() / 2, mults.end());
    const int median = mults[mults.size() / 2];
    const int hot_cut = std::max(3 * median, 3);

    std::vector<std::string> hot;
    for (const auto& [km, c] : counts)
        if (c >= hot_cut) hot.push_back(km);
    std::sort(hot.begin(), hot.end()); // deterministic traversal order
    const int H = static_cast<int>(hot.size());
    if (H == 0) return false;

    std::unordered_map<std::string, std::vector<int>> by_prefix;
    for (int i = 0; i < H; ++i) by_prefix[hot[i].substr(0, k - 1)].push_back(i);
    std::vector<std::vector<int>> succ(H);
    std::vector<char> has_pred(H, 0);
    for (int i = 0; i < H; ++i) {
        const auto it = by_prefix.find(hot[i].substr(1));
        if (it == by_prefix.end()) continue;
        for (int j : it->second)
            if (j != i) {
                succ[i].push_back(j);
                has_pred[j] = 1;
            }
    }

    // longest simple chain by DFS; the graph is tiny (roughly K-k+1 nodes)
    std::vector<char> on_path(H, 0);
    long long steps = 0;
    constexpr long long kStepCap = 200000;
    std::vector<int> path, best_path;
    auto dfs = [&](auto&& self, int v) -> void {
        if (++steps > kStepCap) return;
        on_path[v] = 1;
        path.push_back(v);
        if (path.size() > best_path.size()) best_path = path;
        for (int w : succ[v])
            if (!on_path[w]) self(self, w);
        on_path[v] = 0;
        path.pop_back();
    };
    for (int i = 0; i < H; ++i)
        if (!has_pred[i]) dfs(dfs, i);
    if (best_path.empty()) return false;

    std::string spelled = hot[best_path[0]];
    for (size_t i = 1; i < best_path.size(); ++i) spelled += hot[best_path[i]].back();
    if (static_cast<int>(spelled.size()) < K) return false;

    // the chain can overrun K: k-mers straddling a repeat boundary go hot
    // when several copies share flanking symbols. Those have depressed
    // multiplicity (only the sharing copies contribute), so pick the
    // length-K window with the best worst-case node count.
    const int n = static_cast<int>(best_path.size());
    const int w = K - k + 1; // nodes per length-K window
    std::vector<long long> node_count(n);
    for (int i = 0; i < n; ++i) node_count[i] = counts[hot[best_path[i]]];
    int best_i = -1;
    long long best_min = -1, best_sum = -1;
    for (int i = 0; i + w <= n; ++i) {
        long long mn = node_count[i], sm = 0;
        for (int j = i; j < i + w; ++j) {
            mn = std::min(mn, node_count[j]);
            sm += node_count[j];
        }
        if (mn > best_min || (mn == best_min && sm > best_sum)) {
            best_i = i;
            best_min = mn;
            best_sum = sm;
        }
    }
    if (best_i < 0) return false;
    const std::string xs = spelled.substr(best_i, K);
    x_out.assign(xs.begin(), xs.end());
    return true;
}

bool match_at(const SymbolVec& contig, const SymbolVec& read, long long off) {
    if (off < 0 || off + static_cast<long long>(read.size()) > static_cast<long long>(contig.size()))
        return false;
    return std::memcmp(contig.data() + off, read.data(), read.size()) == 0;
}

AssemblyOutcome fail(const std::string& reason) {
    AssemblyOutcome out;
    out.kind = OutcomeKind::Failure;
    out.failure_reason = reason;
    return out;
}

} // namespace

AssemblyOutcome repeats_assemble(const BlindMatePairs& pairs, int K, int d) {
    const int L = static_cast<int>(pairs.L);
    const int J = static_cast<int>(pairs.J);
    if (K < L) throw std::invalid_argument("repeats_assemble: K >= L required");
    if (d < 1) throw std::invalid_argument("repeats_assemble: d >= 1 required");
    if (pairs.pairs.empty()) throw std::invalid_argument("repeats_assemble: empty pair set");

    std::vector<SymbolVec> all_reads;
    all_reads.reserve(2 * pairs.pairs.size());
    for (const auto& [lft, rgt] : pairs.pairs) {
        all_reads.push_back(lft);
        all_reads.push_back(rgt);
    }

    SymbolVec x;
    if (!identify_repeat(all_reads, L, K, x)) return fail("repeat identification failed");

    // Step 2: drop reads contained in x; they carry no position information.
    // The special nodes a (= first L of x) and b (= last L of x) enter as
    // closure targets in Step 3 rather than as merge-able reads.
    std::vector<char> contained(all_reads.size(), 0);
    for (size_t i = 0; i < all_reads.size(); ++i)
        for (int off = 0; off + L <= K; ++off)
            if (match_at(x, all_reads[i], off)) {
                contained[i] = 1;
                break;
            }
    std::vector<SymbolVec> kept;
    std::vector<int> kept_orig; // kept index -> all_reads index
    for (size_t i = 0; i < all_reads.size(); ++i)
        if (!contained[i]) {
            kept.push_back(all_reads[i]);
            kept_orig.push_back(static_cast<int>(i));
        }
    if (kept.empty()) return fail("gap: no reads outside the repeat");

    // Step 3: stage greedy with x-closures. A contig whose tail l-suffix
    // equals the l-prefix of x has reached the next repeat copy (node a);
    // symmetric for heads and the l-suffix of x (node b). Closures are
    // processed before ordinary merges at the same stage.
    ChainState st(kept, L);
    std::vector<std::pair<LmerKey, int>> sufs, prefs;
    for (int ell = L; ell >= 1; --ell) {
        if (ell <= L - 1) {
            const LmerKey xa = prefix_key(x, ell);
            const LmerKey xb = suffix_key(x, ell);
            for (size_t i = 0; i < kept.size(); ++i) {
                const int id = static_cast<int>(i);
                if (st.can_extend_right(id) && st.is_tail(id) && suffix_key(kept[i], ell) == xa) {
                    const int r = st.find(id);
                    st.right_closed[r] = 1;
                    st.right_close_ov[r] = ell;
                }
                if (st.can_extend_left(id) && st.is_head(id) && prefix_key(kept[i], ell) == xb) {
                    const int r = st.find(id);
                    st.left_closed[r] = 1;
                    st.left_close_ov[r] = ell;
                }
            }
        }
        sufs.clear();
        prefs.clear();
        for (size_t i = 0; i < kept.size(); ++i) {
            const int id = static_cast<int>(i);
            if (st.is_tail(id) && st.can_extend_right(id))
                sufs.emplace_back(suffix_key(kept[i], ell), id);
            if (st.is_head(id) && st.can_extend_left(id))
                prefs.emplace_back(prefix_key(kept[i], ell), id);
        }
        const LmerIndex idx = build_index_two_sided(sufs, prefs, ell);
        for (const auto& [i, j] : idx.pairs) {
            if (!st.can_extend_right(i) || !st.is_tail(i)) continue;
            if (!st.can_extend_left(j) || !st.is_head(j)) continue;
            if (st.same(i, j)) continue;
            st.merge(i, j, ell);
        }
    }

    const std::vector<int> roots = st.roots();
    for (int r : roots)
        if (!st.left_closed[r] || !st.right_closed[r]) return fail("gap: unclosed contig");

    // normalize: extend every contig to start with the full b and end with
    // the full a, so all contigs share identical length-L flanks
    struct Seg {
        SymbolVec full; // b + core + a
        long long q_r;  // offset where the trailing repeat copy begins
    };
    std::vector<Seg> segs;
    for (int r : roots) {
        const Contig c = st.spell(r);
        const int la = st.right_close_ov[r];
        const int lb = st.left_close_ov[r];
        SymbolVec full;
        full.insert(full.end(), x.begin() + (K - L), x.begin() + (K - lb));
        full.insert(full.end(), c.symbols.begin(), c.symbols.end());
        full.insert(full.end(), x.begin() + la, x.begin() + L);
        if (static_cast<int>(full.size()) < 2 * L) return fail("gap: contig shorter than flanks");
        segs.push_back({std::move(full), static_cast<long long>(0)});
        segs.back().q_r = static_cast<long long>(segs.back().full.size()) - L;
    }
    const int M = static_cast<int>(segs.size());

    auto spell_genome = [&](const std::vector<int>& order) {
        AssemblyOutcome out;
        out.kind = OutcomeKind::SingleCircular;
        out.closed = true;
        for (int i : order) {
            const SymbolVec& f = segs[i].full;
            out.sequence.insert(out.sequence.end(), f.begin() + L, f.end() - L);
            out.sequence.insert(out.sequence.end(), x.begin(), x.end());
        }
        return out;
    };

    if (M == 1) return spell_genome({0});

    // Step 4: order contigs with bridging pairs. A pair bridges the repeat
    // after contig i when its left read sits within d of the repeat with the
    // right read reaching d past it; the right read then lands at a fixed
    // offset inside the successor contig.
    const long long t_lo_rel = static_cast<long long>(K) + d - 2 * L - J;
    const long long t_hi_rel = -static_cast<long long>(d);
    if (t_lo_rel > t_hi_rel) return fail("unbridged repeat: empty bridging window");

    std::map<LmerKey, std::vector<std::pair<int, long long>>> window_lmers;
    for (int i = 0; i < M; ++i) {
        const Seg& s = segs[i];
        for (long long t = std::max<long long>(0, s.q_r + t_lo_rel);
             t <= s.q_r + t_hi_rel && t + L <= static_cast<long long>(s.full.size()); ++t) {
            SymbolVec w(s.full.begin() + t, s.full.begin() + t + L);
            window_lmers[prefix_key(w, L)].emplace_back(i, t);
        }
    }

    std::vector<int> succ(M, -1);
    for (const auto& [lft, rgt] : pairs.pairs) {
        const auto it = window_lmers.find(prefix_key(lft, L));
        if (it == window_lmers.end()) continue;
        // a left read whose contig-specific anchor is short can match the
        // windows of several contigs (the rest of it is the shared repeat
        // prefix); such a pair has ambiguous placement and is skipped
        std::vector<std::pair<int, long long>> placed;
        for (const auto& [i, t] : it->second)
            if (match_at(segs[i].full, lft, t)) placed.emplace_back(i, t);
        if (placed.size() == 1) {
            const auto& [i, t] = placed.front();
            const long long o_succ = t + 2 * L + J - segs[i].q_r - K;
            int hit = -1;
            bool ambiguous = false;
            for (int j = 0; j < M; ++j)
                if (match_at(segs[j].full, rgt, o_succ)) {
                    if (hit >= 0) ambiguous = true;
                    hit = j;
                }
            // a right read landing just past the shared flank can match a
            // second contig (prob 4^-o_succ); such a pair is uninformative,
            // not fatal -- the true successor always matches, so confident
            // assignments never point at the wrong contig
            if (ambiguous) continue;
            if (hit < 0) continue; // noise match of the left read; ignore
            if (succ[i] >= 0 && succ[i] != hit) return fail("ambiguous bridging read");
            succ[i] = hit;
        }
    }
    for (int i = 0; i < M; ++i)
        if (succ[i] < 0) return fail("unbridged repeat " + std::to_string(i));

    // successor map must be one M-cycle
    std::vector<int> order;
    std::vector<char> seen(M, 0);
    for (int v = 0; static_cast<int>(order.size()) < M; v = succ[v]) {
        if (seen[v]) return fail("ambiguous ordering: successor map is not a single cycle");
        seen[v] = 1;
        order.push_back(v);
    }
    if (succ[order.back()] != order.front())
        return fail("ambiguous ordering: successor map is not a single cycle");

    return spell_genome(order);
}

} // namespace asmlab
