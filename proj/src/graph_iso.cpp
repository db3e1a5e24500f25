#include "ringlab/graph.hpp"

#include "ringlab/errors.hpp"

#include <algorithm>

namespace ringlab {

namespace {

// degree plus sorted multiset of neighbor degrees, the standard cheap
// refinement for candidate pruning
std::vector<std::vector<int>> neighbor_degree_sig(const NCGraph& g) {
    int n = g.vcount();
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
        sig[i].push_back(deg[i]);
        for (int j : g.adj[i].to_vector()) sig[i].push_back(deg[j]);
        std::sort(sig[i].begin() + 1, sig[i].end());
    }
    return sig;
}

struct IsoSearch {
    const NCGraph& g1;
    const NCGraph& g2;
    int n;
    std::vector<int> map12;       // position in g1 -> position in g2
    std::vector<char> used2;
    std::vector<int> order;       // g1 positions in assignment order
    std::vector<std::vector<int>> cand;

    bool dfs(size_t step) {
        if (step == order.size()) return true;
        int u = order[step];
        for (int v : cand[u]) {
            if (used2[v]) continue;
            bool ok = true;
            for (size_t k = 0; k < step && ok; ++k) {
                int w = order[k];
                if (g1.adjacent(u, w) != g2.adjacent(v, map12[w])) ok = false;
            }
            if (!ok) continue;
            map12[u] = v;
            used2[v] = 1;
            if (dfs(step + 1)) return true;
            used2[v] = 0;
            map12[u] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::pair<int, int>>> are_isomorphic(const NCGraph& g1,
                                                               const NCGraph& g2,
                                                               int vertex_cap) {
    if (g1.vcount() > vertex_cap || g2.vcount() > vertex_cap)
        throw Error(Err::SizeLimitExceeded, "isomorphism search capped at " +
                                                std::to_string(vertex_cap) + " vertices");
    if (g1.vcount() != g2.vcount() || g1.ecount() != g2.ecount()) return std::nullopt;
    int n = g1.vcount();
    if (n == 0) return std::vector<std::pair<int, int>>{};

    auto sig1 = neighbor_degree_sig(g1);
    auto sig2 = neighbor_degree_sig(g2);
    {
        auto a = sig1, b = sig2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    IsoSearch s{g1, g2, n, std::vector<int>(n, -1), std::vector<char>(n, 0), {}, {}};
    s.cand.resize(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (sig1[u] == sig2[v]) s.cand[u].push_back(v);
    s.order.resize(n);
    for (int i = 0; i < n; ++i) s.order[i] = i;
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (s.cand[a].size() != s.cand[b].size()) return s.cand[a].size() < s.cand[b].size();
        return a < b;
    });
    if (!s.dfs(0)) return std::nullopt;

    std::vector<std::pair<int, int>> out;
    out.reserve(n);
    for (int u = 0; u < n; ++u) out.emplace_back(g1.labels[u], g2.labels[s.map12[u]]);
    return out;
}

} // namespace ringlab
