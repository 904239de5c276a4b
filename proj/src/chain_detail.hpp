#pragma once
// Internal contig-chain bookkeeping shared by the greedy-style assemblers.
// Contigs are singly linked chains of read ids with per-link shifts; a
// disjoint-set forest tracks membership, with the chain's head and tail
// read stored at each root. Merging never copies symbols; sequences are
// spelled once at the end.

#include <vector>

#include "asmlab/assemble.hpp"
#include "asmlab/sequence.hpp"

namespace asmlab::detail {

struct ChainState {
    const std::vector<SymbolVec>* reads = nullptr;
    int L = 0;
    std::vector<int> parent, next, shift, head, tail;
    std::vector<unsigned char> left_closed, right_closed; // repeats a/b closures
    std::vector<int> left_close_ov, right_close_ov;

    explicit ChainState(const std::vector<SymbolVec>& r, int L_)
        : reads(&r), L(L_), parent(r.size()), next(r.size(), -1), shift(r.size(), 0),
          head(r.size()), tail(r.size()), left_closed(r.size(), 0), right_closed(r.size(), 0),
          left_close_ov(r.size(), 0), right_close_ov(r.size(), 0) {
        for (size_t i = 0; i < r.size(); ++i) parent[i] = head[i] = tail[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool same(int i, int j) { return find(i) == find(j); }
    bool is_tail(int i) { return tail[find(i)] == i; }
    bool is_head(int j) { return head[find(j)] == j; }
    bool can_extend_right(int i) { return is_tail(i) && !right_closed[find(i)]; }
    bool can_extend_left(int j) { return is_head(j) && !left_closed[find(j)]; }

    // append the contig headed by j to the contig tailed by i, overlap ell
    void merge(int i, int j, int ell) {
        const int ri = find(i), rj = find(j);
        next[i] = j;
        shift[i] = L - ell;
        parent[rj] = ri;
        tail[ri] = tail[rj];
        right_closed[ri] = right_closed[rj];
        right_close_ov[ri] = right_close_ov[rj];
    }

    std::vector<int> roots() {
        std::vector<int> out;
        for (size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    // spell the chain rooted at r into symbols + layout (linear coordinates)
    Contig spell(int r) {
        Contig c;
        long long pos = 0;
        for (int cur = head[r];; cur = next[cur]) {
            c.layout.emplace_back(cur, pos);
            const SymbolVec& rd = (*reads)[cur];
            if (c.symbols.size() < static_cast<size_t>(pos) + rd.size())
                c.symbols.resize(pos + rd.size());
            for (size_t k = 0; k < rd.size(); ++k) c.symbols[pos + k] = rd[k];
            if (cur == tail[r]) break;
            pos += shift[cur];
        }
        return c;
    }
};

} // namespace asmlab::detail
