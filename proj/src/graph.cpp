#include "ringlab/graph.hpp"

#include "ringlab/errors.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace ringlab {

long long NCGraph::ecount() const {
    long long twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

int NCGraph::index_of(int label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<int>(it - labels.begin());
}

std::vector<std::pair<int, int>> NCGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vcount(); ++i)
        for (int j : adj[i].to_vector())
            if (j > i) out.emplace_back(labels[i], labels[j]);
    std::sort(out.begin(), out.end());
    return out;
}

NCGraph NCGraph::empty(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    NCGraph g;
    g.labels = std::move(labels);
    g.adj.assign(g.labels.size(), Bitset(static_cast<int>(g.labels.size())));
    return g;
}

NCGraph NCGraph::from_edges(std::vector<int> labels,
                            const std::vector<std::pair<int, int>>& edge_list) {
    NCGraph g = empty(std::move(labels));
    for (auto [a, b] : edge_list) {
        int i = g.index_of(a), j = g.index_of(b);
        if (i < 0 || j < 0)
            throw Error(Err::NotASubset, "edge endpoint not a vertex");
        if (i != j) g.add_edge(i, j);
    }
    return g;
}

namespace {

// BFS distances from src; -1 where unreachable. skip_i/skip_j suppress one
// edge (for girth).
std::vector<int> bfs(const NCGraph& g, int src, int skip_i = -1, int skip_j = -1) {
    std::vector<int> dist(g.vcount(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u].to_vector()) {
            if ((u == skip_i && v == skip_j) || (u == skip_j && v == skip_i)) continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

} // namespace

GraphMetrics metrics(const NCGraph& g) {
    GraphMetrics m;
    int n = g.vcount();
    m.degrees.resize(n);
    for (int i = 0; i < n; ++i) {
        m.degrees[i] = g.degree(i);
        m.max_degree = std::max(m.max_degree, m.degrees[i]);
    }
    if (n == 0) {
        m.connected = true;
        return m;
    }
    int diameter = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                m.connected = false;
            } else {
                diameter = std::max(diameter, dist[v]);
            }
        }
    }
    if (m.connected) m.diameter = diameter;
    // girth: shortest cycle through each edge = 1 + shortest detour
    int best = -1;
    for (int i = 0; i < n; ++i)
        for (int j : g.adj[i].to_vector()) {
            if (j <= i) continue;
            auto dist = bfs(g, i, i, j);
            if (dist[j] >= 0 && (best < 0 || dist[j] + 1 < best)) best = dist[j] + 1;
        }
    if (best >= 0) m.girth = best;
    return m;
}

GraphShape classify(const NCGraph& g) {
    GraphShape s;
    int n = g.vcount();
    long long e = g.ecount();
    s.empty_edges = (e == 0);
    // bipartite via 2-coloring BFS over every component
    s.bipartite = true;
    {
        std::vector<int> color(n, -1);
        for (int start = 0; start < n && s.bipartite; ++start) {
            if (color[start] >= 0) continue;
            color[start] = 0;
            std::queue<int> q;
            q.push(start);
            while (!q.empty() && s.bipartite) {
                int u = q.front();
                q.pop();
                for (int v : g.adj[u].to_vector()) {
                    if (color[v] < 0) {
                        color[v] = 1 - color[u];
                        q.push(v);
                    } else if (color[v] == color[u]) {
                        s.bipartite = false;
                        break;
                    }
                }
            }
        }
    }
    s.complete = (n >= 1) && (e == static_cast<long long>(n) * (n - 1) / 2);
    if (n > 0) {
        int d0 = g.degree(0);
        bool regular = true;
        for (int i = 1; i < n; ++i)
            if (g.degree(i) != d0) { regular = false; break; }
        if (regular) s.regular = d0;
    }
    // star: a tree with one vertex of degree n-1 and the rest degree 1
    if (n >= 1 && e == n - 1) {
        GraphMetrics m = metrics(g);
        if (m.connected) {
            int centers = 0, leaves = 0;
            for (int d : m.degrees) {
                if (d == n - 1) ++centers;
                else if (d == 1) ++leaves;
            }
            if (n == 1) s.star = true;
            else if (n == 2) s.star = true; // both endpoints qualify
            else s.star = (centers == 1 && leaves == n - 1);
        }
    }
    return s;
}

bool is_dominating(const NCGraph& g, const Bitset& d) {
    for (int v = 0; v < g.vcount(); ++v) {
        if (d.test(v)) continue;
        if (!g.adj[v].intersects(d)) return false;
    }
    return true;
}

bool is_dominating(const NCGraph& g, const std::vector<int>& d_labels) {
    Bitset d(g.vcount());
    for (int lab : d_labels) {
        int i = g.index_of(lab);
        if (i < 0) throw Error(Err::NotASubset, "label " + std::to_string(lab) + " is not a vertex");
        d.set(i);
    }
    return is_dominating(g, d);
}

namespace {

struct DomSearch {
    const NCGraph& g;
    int n;
    std::vector<Bitset> closed; // N[v]
    std::vector<int> pick;
    std::vector<int> best;

    explicit DomSearch(const NCGraph& g) : g(g), n(g.vcount()) {
        closed.reserve(n);
        for (int v = 0; v < n; ++v) {
            Bitset c = g.adj[v];
            c.set(v);
            closed.push_back(std::move(c));
        }
    }

    // Lexicographic DFS over vertex choices; the first full hit at size k is
    // the lexicographically smallest dominating set of that size.
    bool dfs(int start, int remaining, const Bitset& dominated) {
        if (dominated.count() == n) {
            // only reachable with remaining == 0 when k is minimal; fill
            // defensively otherwise
            for (int v = 0; v < n && remaining > 0; ++v) {
                if (std::find(pick.begin(), pick.end(), v) == pick.end()) {
                    pick.push_back(v);
                    --remaining;
                }
            }
            best = pick;
            return true;
        }
        if (remaining == 0) return false;
        // the lowest undominated vertex must be covered by some choice >= start
        int u = dominated.complement().find_first();
        bool coverable = false;
        for (int w = start; w < n; ++w)
            if (closed[u].test(w)) { coverable = true; break; }
        if (!coverable) return false;
        for (int v = start; v < n; ++v) {
            Bitset nd = dominated;
            nd |= closed[v];
            pick.push_back(v);
            if (dfs(v + 1, remaining - 1, nd)) return true;
            pick.pop_back();
        }
        return false;
    }
};

} // namespace

std::vector<int> minimum_dominating_set(const NCGraph& g, int vertex_cap) {
    int n = g.vcount();
    if (n > vertex_cap)
        throw Error(Err::SizeLimitExceeded, "minimum dominating set capped at " +
                                                std::to_string(vertex_cap) + " vertices, graph has " +
                                                std::to_string(n));
    if (n == 0) return {};
    DomSearch search(g);
    // greedy upper bound
    int ub = 0;
    {
        Bitset dom(n);
        while (dom.count() < n) {
            int bestv = -1, bestc = -1;
            for (int v = 0; v < n; ++v) {
                Bitset gain = search.closed[v];
                gain.subtract(dom);
                int c = gain.count();
                if (c > bestc) { bestc = c; bestv = v; }
            }
            dom |= search.closed[bestv];
            ++ub;
        }
    }
    for (int k = 1; k <= ub; ++k) {
        search.pick.clear();
        Bitset none(n);
        if (search.dfs(0, k, none)) {
            std::vector<int> out;
            for (int v : search.best) out.push_back(g.labels[v]);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    // unreachable: ub itself always succeeds
    throw Error(Err::SizeLimitExceeded, "dominating set search failed internally");
}

std::string to_dot(const NCGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int lab : g.labels) os << "  " << lab << ";\n";
    for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ringlab
