#include "ringlab/graph.hpp"

#include "ringlab/errors.hpp"

#include <algorithm>
#include <chrono>

namespace ringlab {

namespace {

struct EdgeRef {
    int u, v;      // positions
    int orig;      // index into edges() order
};

struct ColorSearch {
    int ncolors;
    std::vector<EdgeRef> order;
    std::vector<uint32_t> used; // per vertex, bitmask of incident colors
    std::vector<int> assigned;  // per ordered edge
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;
    long long nodes = 0;
    bool timed_out = false;

    bool run(size_t i, int colors_used) {
        if (i == order.size()) return true;
        if ((++nodes & 0x1fff) == 0 && use_deadline &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        const EdgeRef& e = order[i];
        uint32_t avail = ~(used[e.u] | used[e.v]);
        // canonical color order: at most one brand-new color per step
        int limit = std::min(ncolors, colors_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!(avail >> c & 1)) continue;
            used[e.u] |= uint32_t(1) << c;
            used[e.v] |= uint32_t(1) << c;
            assigned[i] = c;
            if (run(i + 1, std::max(colors_used, c + 1))) return true;
            if (timed_out) return false;
            used[e.u] &= ~(uint32_t(1) << c);
            used[e.v] &= ~(uint32_t(1) << c);
        }
        return false;
    }
};

} // namespace

ChromaticResult chromatic_index(const NCGraph& g, const ChromaticOptions& opts) {
    auto edge_pairs = g.edges();
    long long m = static_cast<long long>(edge_pairs.size());
    if (m > opts.edge_cap)
        throw Error(Err::SizeLimitExceeded, "edge coloring capped at " + std::to_string(opts.edge_cap) +
                                                " edges, graph has " + std::to_string(m));
    ChromaticResult res;
    GraphMetrics met = metrics(g);
    res.max_degree = met.max_degree;
    if (m == 0) {
        res.chi_prime = 0;
        res.vizing_class = 1;
        return res;
    }

    std::vector<EdgeRef> refs;
    refs.reserve(edge_pairs.size());
    for (size_t i = 0; i < edge_pairs.size(); ++i) {
        int u = g.index_of(edge_pairs[i].first);
        int v = g.index_of(edge_pairs[i].second);
        refs.push_back({u, v, static_cast<int>(i)});
    }

    auto attempt = [&](int k, ChromaticResult& out) -> int {
        // 1 success, 0 exhausted, -1 timeout
        ColorSearch s;
        s.ncolors = k;
        s.order = refs;
        std::stable_sort(s.order.begin(), s.order.end(), [&](const EdgeRef& a, const EdgeRef& b) {
            int da = met.degrees[a.u] + met.degrees[a.v];
            int db = met.degrees[b.u] + met.degrees[b.v];
            if (da != db) return da > db;
            return a.orig < b.orig;
        });
        s.used.assign(g.vcount(), 0);
        s.assigned.assign(s.order.size(), -1);
        s.use_deadline = opts.timeout_ms > 0;
        if (s.use_deadline)
            s.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.timeout_ms);
        if (s.run(0, 0)) {
            out.coloring.assign(s.order.size(), -1);
            for (size_t i = 0; i < s.order.size(); ++i) out.coloring[s.order[i].orig] = s.assigned[i];
            return 1;
        }
        return s.timed_out ? -1 : 0;
    };

    int r = attempt(res.max_degree, res);
    if (r == 1) {
        res.chi_prime = res.max_degree;
        res.vizing_class = 1;
        return res;
    }
    if (r == -1) {
        res.determinate = false;
        res.note = "timeout after " + std::to_string(opts.timeout_ms) + "ms at max_degree colors";
        return res;
    }
    // exhausted: class 2; a (max_degree+1)-coloring exists and is the certificate
    r = attempt(res.max_degree + 1, res);
    if (r != 1) {
        res.determinate = false;
        res.note = r == -1 ? "timeout while producing the class-2 certificate"
                           : "internal: no coloring with max_degree+1 colors";
        return res;
    }
    res.chi_prime = res.max_degree + 1;
    res.vizing_class = 2;
    return res;
}

} // namespace ringlab
