#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "asmlab/assemble.hpp"

namespace asmlab {

namespace {

struct Graph {
    std::vector<std::string> node_label;           // (K-1)-mers
    std::vector<std::vector<std::pair<int, Symbol>>> adj; // (target, appended symbol)
    std::vector<int> in_deg;
};

// number of Eulerian circuits up to rotation, via the BEST theorem on the
// branch-node multigraph (non-branch chains compressed away). Capped: we
// only need to distinguish "exactly one" from "more than one".
bool circuit_is_unique(const Graph& g) {
    const int n = static_cast<int>(g.node_label.size());
    std::vector<int> out_deg(n);
    for (int v = 0; v < n; ++v) out_deg[v] = static_cast<int>(g.adj[v].size());
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (out_deg[v] != 1 || g.in_deg[v] != 1) branch.push_back(v);
    if (branch.empty()) return true; // a single simple cycle
    constexpr size_t kBranchCap = 40;
    if (branch.size() > kBranchCap) return false; // astronomically many circuits

    std::vector<int> bid(n, -1);
    for (size_t i = 0; i < branch.size(); ++i) bid[branch[i]] = static_cast<int>(i);
    const int m = static_cast<int>(branch.size());
    // compressed multigraph: walk each out-edge through degree-(1,1) nodes
    std::vector<std::vector<int>> mult(m, std::vector<int>(m, 0));
    std::vector<int> cdeg(m, 0);
    for (int bi = 0; bi < m; ++bi) {
        for (const auto& [first_to, sym] : g.adj[branch[bi]]) {
            (void)sym;
            int v = first_to;
            while (bid[v] < 0) v = g.adj[v][0].first;
            ++mult[bi][bid[v]];
            ++cdeg[bi];
        }
    }
    // ec = t_w * prod (deg-1)!; t_w >= 1 when a circuit exists, so any
    // nontrivial factorial already implies multiple circuits
    for (int bi = 0; bi < m; ++bi)
        if (cdeg[bi] > 2) return false;
    if (m == 1) return true; // single branch node, deg <= 2, loops only

    // arborescence count: det of the out-Laplacian minor (self-loops cancel)
    std::vector<std::vector<double>> a(m - 1, std::vector<double>(m - 1, 0));
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < m; ++j) a[i - 1][j - 1] = -static_cast<double>(mult[i][j]);
        a[i - 1][i - 1] += cdeg[i];
    }
    double det = 1;
    for (int c = 0; c < m - 1; ++c) {
        int piv = c;
        for (int r = c + 1; r < m - 1; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-12) return false; // det 0: shouldn't happen
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < m - 1; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < m - 1; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return std::abs(det) < 1.5;
}

SymbolVec label_symbols(const std::string& s) {
    SymbolVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i) v[i] = static_cast<Symbol>(s[i]);
    return v;
}

// maximal non-branching paths; pure cycles get linearized from an arbitrary node
std::vector<Contig> unitig_contigs(const Graph& g) {
    const int n = static_cast<int>(g.node_label.size());
    std::vector<size_t> cursor(n, 0);
    std::vector<Contig> out;
    auto walk = [&](int start) {
        Contig c;
        c.symbols = label_symbols(g.node_label[start]);
        int v = start;
        while (cursor[v] < g.adj[v].size()) {
            const auto [to, sym] = g.adj[v][cursor[v]++];
            c.symbols.push_back(sym);
            v = to;
            if (g.adj[v].size() != 1 || g.in_deg[v] != 1) break;
        }
        out.push_back(std::move(c));
    };
    for (int v = 0; v < n; ++v)
        if (g.adj[v].size() != 1 || g.in_deg[v] != 1)
            while (cursor[v] < g.adj[v].size()) walk(v);
    for (int v = 0; v < n; ++v)
        while (cursor[v] < g.adj[v].size()) walk(v); // leftover simple cycles
    return out;
}

} // namespace

AssemblyOutcome debruijn_assemble(const BlindReads& reads, int K) {
    const int L = static_cast<int>(reads.L);
    if (K < 2 || K > L) throw std::invalid_argument("debruijn_assemble: need 2 <= K <= L");
    if (reads.reads.empty()) throw std::invalid_argument("debruijn_assemble: empty read set");

    // distinct K-mers only (set semantics)
    std::unordered_set<std::string> kmers;
    std::string buf;
    for (const SymbolVec& r : reads.reads)
        for (int p = 0; p + K <= static_cast<int>(r.size()); ++p) {
            buf.assign(r.begin() + p, r.begin() + p + K);
            kmers.insert(buf);
        }

    Graph g;
    std::unordered_map<std::string, int> node_id;
    auto get_node = [&](const std::string& s) {
        auto it = node_id.find(s);
        if (it != node_id.end()) return it->second;
        const int id = static_cast<int>(g.node_label.size());
        node_id.emplace(s, id);
        g.node_label.push_back(s);
        g.adj.emplace_back();
        g.in_deg.push_back(0);
        return id;
    };
    {
        std::vector<std::string> sorted(kmers.begin(), kmers.end()); // deterministic edge order
        std::sort(sorted.begin(), sorted.end());
        for (const std::string& km : sorted) {
            const int u = get_node(km.substr(0, K - 1));
            const int v = get_node(km.substr(1));
            g.adj[u].emplace_back(v, static_cast<Symbol>(km.back()));
            ++g.in_deg[v];
        }
    }
    const int n = static_cast<int>(g.node_label.size());

    // weak connectivity
    {
        std::vector<int> comp(n, -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        std::vector<std::vector<int>> undirected(n);
        for (int v = 0; v < n; ++v)
            for (const auto& [to, sym] : g.adj[v]) {
                (void)sym;
                undirected[v].push_back(to);
                undirected[to].push_back(v);
            }
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : undirected[v])
                if (comp[w] < 0) {
                    comp[w] = 0;
                    stack.push_back(w);
                }
        }
        for (int v = 0; v < n; ++v)
            if (comp[v] < 0) {
                AssemblyOutcome out;
                out.kind = OutcomeKind::Failure;
                out.failure_reason = "disconnected de Bruijn graph";
                return out;
            }
    }

    bool balanced = true;
    for (int v = 0; v < n && balanced; ++v)
        balanced = g.in_deg[v] == static_cast<int>(g.adj[v].size());

    AssemblyOutcome out;
    if (!balanced || !circuit_is_unique(g)) {
        out.kind = OutcomeKind::ContigSet;
        out.contigs = unitig_contigs(g);
        return out;
    }

    // Hierholzer: spell the unique circuit, one symbol per edge
    std::vector<size_t> cursor(n, 0);
    std::vector<int> vstack{0};
    std::vector<Symbol> sstack{0}; // sentinel for the start
    SymbolVec circuit;
    while (!vstack.empty()) {
        const int v = vstack.back();
        if (cursor[v] < g.adj[v].size()) {
            const auto [to, sym] = g.adj[v][cursor[v]++];
            vstack.push_back(to);
            sstack.push_back(sym);
        } else {
            if (vstack.size() > 1) circuit.push_back(sstack.back());
            vstack.pop_back();
            sstack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    out.kind = OutcomeKind::SingleCircular;
    out.closed = true;
    out.sequence = std::move(circuit);
    return out;
}

} // namespace asmlab
