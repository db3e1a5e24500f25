#include "ringlab/graph.hpp"

#include "oracles.hpp"
#include "ringlab/rncg.hpp"
#include "ringlab/sweep.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ringlab;

namespace {

NCGraph k3() { return NCGraph::from_edges({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}); }

NCGraph path3() { return NCGraph::from_edges({0, 1, 2}, {{0, 1}, {1, 2}}); }

NCGraph t2_row_graph() {
    RingPtr t2 = construct("ut2:z2");
    RingPair pair = RingPair::make(t2, Subring::make(t2, {0, 2, 4, 6}));
    return build_rncg(pair);
}

std::vector<NCGraph> small_corpus() {
    std::vector<NCGraph> out;
    out.push_back(k3());
    out.push_back(path3());
    out.push_back(NCGraph::empty({0, 1, 2, 3}));
    out.push_back(t2_row_graph());
    out.push_back(NCGraph::from_edges({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}})); // star
    SplitMix64 rng(1234);
    for (int t = 0; t < 40; ++t)
        out.push_back(oracles::random_graph(rng, 2 + static_cast<int>(rng.below(7)),
                                            10 + static_cast<int>(rng.below(80))));
    return out;
}

} // namespace

TEST_CASE("metrics on the worked examples") {
    GraphMetrics m = metrics(k3());
    REQUIRE(m.degrees == std::vector<int>{2, 2, 2});
    REQUIRE(m.connected);
    REQUIRE(m.diameter == 1);
    REQUIRE(m.girth == 3);
    REQUIRE(m.max_degree == 2);

    m = metrics(path3());
    REQUIRE(m.connected);
    REQUIRE(m.diameter == 2);
    REQUIRE_FALSE(m.girth.has_value());

    NCGraph g = t2_row_graph();
    REQUIRE(g.vcount() == 6);
    REQUIRE(g.ecount() == 9);
    m = metrics(g);
    REQUIRE(m.diameter == 2);
    REQUIRE(m.girth == 3);
    REQUIRE(m.max_degree == 4);
}

TEST_CASE("metrics degenerate cases") {
    NCGraph empty = NCGraph::empty({});
    GraphMetrics m = metrics(empty);
    REQUIRE(m.connected);
    REQUIRE_FALSE(m.diameter.has_value());

    NCGraph one = NCGraph::empty({5});
    m = metrics(one);
    REQUIRE(m.connected);
    REQUIRE(m.diameter == 0);
    REQUIRE_FALSE(m.girth.has_value());

    NCGraph two = NCGraph::empty({1, 2});
    m = metrics(two);
    REQUIRE_FALSE(m.connected);
    REQUIRE_FALSE(m.diameter.has_value());
}

TEST_CASE("degree sum equals twice the edge count") {
    for (const NCGraph& g : small_corpus()) {
        GraphMetrics m = metrics(g);
        long long sum = 0;
        for (int d : m.degrees) sum += d;
        REQUIRE(sum == 2 * g.ecount());
    }
}

TEST_CASE("classification of the worked examples") {
    GraphShape s = classify(k3());
    REQUIRE_FALSE(s.bipartite);
    REQUIRE(s.complete);
    REQUIRE_FALSE(s.star);
    REQUIRE(s.regular == 2);
    REQUIRE_FALSE(s.empty_edges);

    s = classify(NCGraph::from_edges({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE(s.bipartite);
    REQUIRE_FALSE(s.complete);
    REQUIRE(s.star);
    REQUIRE_FALSE(s.regular.has_value());

    s = classify(t2_row_graph());
    REQUIRE_FALSE(s.bipartite); // triangle 2-4-6
    REQUIRE_FALSE(s.complete);
    REQUIRE_FALSE(s.star);
    REQUIRE_FALSE(s.regular.has_value());
}

TEST_CASE("bipartite agrees with odd girth and with forests") {
    for (const NCGraph& g : small_corpus()) {
        GraphMetrics m = metrics(g);
        GraphShape s = classify(g);
        if (m.girth && *m.girth % 2 == 1) REQUIRE_FALSE(s.bipartite);
        if (!m.girth) REQUIRE(s.bipartite); // acyclic
    }
}

TEST_CASE("dominating sets on the row-subring graph") {
    NCGraph g = t2_row_graph();
    REQUIRE(is_dominating(g, g.labels));           // V(G) always dominates
    REQUIRE(is_dominating(g, std::vector<int>{2, 6}));
    REQUIRE_FALSE(is_dominating(g, std::vector<int>{2})); // vertex 7 undominated
    REQUIRE_THROWS_AS(is_dominating(g, std::vector<int>{0}), Error); // 0 not a vertex
}

TEST_CASE("minimum dominating set examples") {
    REQUIRE(minimum_dominating_set(k3()) == std::vector<int>{1});

    NCGraph g = t2_row_graph();
    std::vector<int> d = minimum_dominating_set(g);
    REQUIRE(d.size() == 2);
    REQUIRE(is_dominating(g, d));
    // no singleton works: max degree 4 < |V| - 1 = 5
    for (int lab : g.labels) REQUIRE_FALSE(is_dominating(g, std::vector<int>{lab}));

    NCGraph edgeless = NCGraph::empty({3, 5, 9});
    REQUIRE(minimum_dominating_set(edgeless) == std::vector<int>{3, 5, 9});

    NCGraph none = NCGraph::empty(std::vector<int>{});
    REQUIRE(minimum_dominating_set(none).empty());
}

TEST_CASE("minimum dominating set is minimal and lexicographically first") {
    for (const NCGraph& g : small_corpus()) {
        if (g.vcount() > 12) continue;
        std::vector<int> d = minimum_dominating_set(g);
        if (g.vcount() == 0) {
            REQUIRE(d.empty());
            continue;
        }
        REQUIRE(is_dominating(g, d));
        REQUIRE(static_cast<int>(d.size()) == oracles::brute_min_dominating_size(g));
        // lexicographic tie-break: no dominating set of equal size precedes it
        int n = g.vcount();
        std::vector<int> dpos;
        for (int lab : d) dpos.push_back(g.index_of(lab));
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Bitset cand(n);
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    cand.set(i);
                    members.push_back(i);
                }
            if (members.size() != d.size() || !is_dominating(g, cand)) continue;
            REQUIRE(dpos <= members);
        }
    }
}

TEST_CASE("size caps throw") {
    std::vector<int> labels(40);
    for (int i = 0; i < 40; ++i) labels[i] = i;
    NCGraph big = NCGraph::empty(labels);
    REQUIRE_THROWS_AS(minimum_dominating_set(big), Error);
    REQUIRE_THROWS_AS(are_isomorphic(big, big, 32), Error);
}

TEST_CASE("chromatic index: worked examples") {
    ChromaticResult r = chromatic_index(k3());
    REQUIRE(r.determinate);
    REQUIRE(r.chi_prime == 3);
    REQUIRE(r.vizing_class == 2);

    r = chromatic_index(path3());
    REQUIRE(r.chi_prime == 2);
    REQUIRE(r.vizing_class == 1);

    r = chromatic_index(NCGraph::empty({1, 2}));
    REQUIRE(r.chi_prime == 0);
    REQUIRE(r.vizing_class == 1);

    // the 9-edge row-subring graph: confirmed by the search, never assumed
    NCGraph g = t2_row_graph();
    r = chromatic_index(g);
    REQUIRE(r.determinate);
    REQUIRE(r.vizing_class == 1);
    REQUIRE(r.chi_prime == 4);
}

TEST_CASE("chromatic index coloring is proper and uses chi_prime colors") {
    for (const NCGraph& g : small_corpus()) {
        ChromaticResult r = chromatic_index(g);
        REQUIRE(r.determinate);
        REQUIRE((r.vizing_class == 1 || r.vizing_class == 2));
        REQUIRE(r.chi_prime == r.max_degree + (r.vizing_class == 2 ? 1 : 0));
        auto edges = g.edges();
        REQUIRE(r.coloring.size() == edges.size());
        int used = 0;
        for (size_t i = 0; i < edges.size(); ++i) {
            REQUIRE(r.coloring[i] >= 0);
            REQUIRE(r.coloring[i] < r.chi_prime);
            used = std::max(used, r.coloring[i] + 1);
            for (size_t j = i + 1; j < edges.size(); ++j) {
                bool incident = edges[i].first == edges[j].first ||
                                edges[i].first == edges[j].second ||
                                edges[i].second == edges[j].first ||
                                edges[i].second == edges[j].second;
                if (incident) REQUIRE(r.coloring[i] != r.coloring[j]);
            }
        }
        if (!edges.empty()) REQUIRE(used == r.chi_prime);
    }
}

TEST_CASE("classifier agrees with the naive exhaustive colorer") {
    for (const NCGraph& g : small_corpus()) {
        if (g.ecount() > 12) continue;
        ChromaticResult r = chromatic_index(g);
        REQUIRE(r.determinate);
        bool delta_ok = oracles::brute_edge_colorable(g, r.max_degree);
        REQUIRE(delta_ok == (r.vizing_class == 1));
    }
}

TEST_CASE("edge cap throws") {
    // K8 has 28 edges
    std::vector<int> labels(8);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) {
        labels[i] = i;
        for (int j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
    }
    NCGraph k8 = NCGraph::from_edges(labels, edges);
    ChromaticOptions opts;
    opts.edge_cap = 10;
    REQUIRE_THROWS_AS(chromatic_index(k8, opts), Error);
}

TEST_CASE("isomorphism: identity, refusal, cross-ring example") {
    NCGraph g = t2_row_graph();
    auto self = are_isomorphic(g, g);
    REQUIRE(self.has_value());
    for (auto [a, b] : *self) {
        (void)b;
        REQUIRE(g.index_of(a) >= 0);
    }

    REQUIRE_FALSE(are_isomorphic(k3(), path3()).has_value());

    // Gamma_{R,R}(E2) vs the standalone row subring of T2: both K_3
    RingPtr e2 = construct("row_ring:z2");
    RingPair pe2 = RingPair::make(e2, subring_generated(e2, {1, 2, 3}));
    RingPtr row = subring_as_ring(Subring::make(construct("ut2:z2"), {0, 2, 4, 6}));
    RingPair prow = RingPair::make(row, subring_generated(row, {1, 2, 3}));
    auto bij = are_isomorphic(build_rncg(pe2), build_rncg(prow));
    REQUIRE(bij.has_value());
}

TEST_CASE("returned bijections preserve adjacency and the relation is symmetric") {
    SplitMix64 rng(777);
    for (int t = 0; t < 30; ++t) {
        NCGraph g1 = oracles::random_graph(rng, 2 + static_cast<int>(rng.below(6)),
                                           20 + static_cast<int>(rng.below(60)));
        NCGraph g2 = oracles::random_graph(rng, 2 + static_cast<int>(rng.below(6)),
                                           20 + static_cast<int>(rng.below(60)));
        auto fwd = are_isomorphic(g1, g2);
        auto bwd = are_isomorphic(g2, g1);
        REQUIRE(fwd.has_value() == bwd.has_value());
        if (fwd) {
            for (auto [a, b] : *fwd)
                for (auto [c, d] : *fwd) {
                    if (a == c) continue;
                    REQUIRE(g1.adjacent(g1.index_of(a), g1.index_of(c)) ==
                            g2.adjacent(g2.index_of(b), g2.index_of(d)));
                }
        }
    }
}

TEST_CASE("shuffled relabelings stay isomorphic") {
    SplitMix64 rng(31);
    for (int t = 0; t < 20; ++t) {
        NCGraph g = oracles::random_graph(rng, 3 + static_cast<int>(rng.below(5)),
                                          20 + static_cast<int>(rng.below(60)));
        int n = g.vcount();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng.below(static_cast<uint64_t>(i + 1)))]);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
        NCGraph h = NCGraph::from_edges(g.labels, edges);
        REQUIRE(are_isomorphic(g, h).has_value());
    }
}

TEST_CASE("DOT output is byte-exact") {
    REQUIRE(to_dot(NCGraph::empty({0})) == "graph G {\n  0;\n}\n");
    REQUIRE(to_dot(k3()) ==
            "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
    // the 9 edge lines match the oracle edge list
    NCGraph g = t2_row_graph();
    std::string dot = to_dot(g);
    RingPtr t2 = construct("ut2:z2");
    RingPair pair = RingPair::make(t2, Subring::make(t2, {0, 2, 4, 6}));
    NCGraph oracle = oracles::brute_rncg(pair);
    REQUIRE(oracle.ecount() == 9);
    for (auto [a, b] : oracle.edges())
        REQUIRE(dot.find("  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n") !=
                std::string::npos);
}
