#include "ringlab/rncg.hpp"

#include "oracles.hpp"
#include "ringlab/sweep.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ringlab;

namespace {

RingPair e2_pair() {
    RingPtr e2 = construct("row_ring:z2");
    return RingPair::make(e2, subring_generated(e2, {1, 2, 3}));
}

RingPair t2_row_pair() {
    RingPtr t2 = construct("ut2:z2");
    return RingPair::make(t2, Subring::make(t2, {0, 2, 4, 6}));
}

// every (ring, subring) combination of the desk rings up to order 8
std::vector<RingPair> mini_catalog() {
    std::vector<RingPair> out;
    for (const char* spec :
         {"row_ring:z2", "ut2:z2", "su3:z2", "prod:(row_ring:z2,z2)", "zn:4", "zn:6"}) {
        RingPtr ring = construct(spec);
        for (const Subring& s : enumerate_subrings(ring)) out.push_back(RingPair::make(ring, s));
    }
    return out;
}

} // namespace

TEST_CASE("cached subsets equal recomputation") {
    for (const RingPair& p : mini_catalog()) {
        ElementSubset whole = whole_ring_subset(p.ring);
        REQUIRE(p.c_r_s.members == centralizer(whole, p.sub.as_subset()).members);
        REQUIRE(p.z_r.members == centralizer(whole, whole).members);
        REQUIRE(p.z_s.members == centralizer(p.sub.as_subset(), p.sub.as_subset()).members);
        Bitset zrs = p.z_r.mask;
        zrs &= p.sub.mask;
        REQUIRE(p.z_r_cap_s.mask == zrs);
        // Z(S) = S n C_R(S)
        Bitset zs = p.c_r_s.mask;
        zs &= p.sub.mask;
        REQUIRE(p.z_s.mask == zs);
    }
}

TEST_CASE("graph construction matches the pair-scan oracle everywhere") {
    for (const RingPair& p : mini_catalog()) {
        NCGraph got = build_rncg(p);
        NCGraph expect = oracles::brute_rncg(p);
        REQUIRE(got.labels == expect.labels);
        REQUIRE(got.edges() == expect.edges());
    }
}

TEST_CASE("worked graph examples") {
    NCGraph k3 = build_rncg(e2_pair());
    REQUIRE(k3.labels == std::vector<int>{1, 2, 3});
    REQUIRE(k3.ecount() == 3);

    RingPtr e2 = construct("row_ring:z2");
    RingPair commutative_sub = RingPair::make(e2, Subring::make(e2, {0, 2}));
    NCGraph empty = build_rncg(commutative_sub);
    REQUIRE(empty.labels == std::vector<int>{1, 3});
    REQUIRE(empty.ecount() == 0);

    NCGraph row = build_rncg(t2_row_pair());
    REQUIRE(row.labels == std::vector<int>{1, 2, 3, 4, 6, 7});
    std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 6}, {2, 3}, {2, 4}, {2, 6},
                                                 {3, 4}, {4, 6}, {4, 7}, {6, 7}};
    REQUIRE(row.edges() == expected);
}

TEST_CASE("commuting probabilities") {
    ProbabilityReport p = commuting_probability(e2_pair());
    REQUIRE(p.pr_sr == Rational(5, 8));
    REQUIRE(p.pr_s == Rational(5, 8));
    REQUIRE(p.commuting_pair_count == 10);

    p = commuting_probability(t2_row_pair());
    REQUIRE(p.pr_sr == Rational(5, 8));
    REQUIRE(p.pr_s == Rational(5, 8));
    REQUIRE(p.commuting_pair_count == 20);

    // central commutative subring: probability one
    RingPtr t2 = construct("ut2:z2");
    RingPair central = RingPair::make(t2, Subring::make(t2, {0, 5}));
    REQUIRE(commuting_probability(central).pr_sr == Rational(1));

    for (const RingPair& q : mini_catalog())
        REQUIRE(commuting_probability(q).commuting_pair_count == oracles::brute_commuting_pairs(q));
}

TEST_CASE("edge count via the probability identity") {
    REQUIRE(edge_count_via_formula(e2_pair()) == Rational(3));
    REQUIRE(edge_count_via_formula(t2_row_pair()) == Rational(9));

    // the identity is exact whenever Z(S) is central in R, and the deviation
    // is twice the count of non-central Z(S) elements' non-commuting partners
    for (const RingPair& p : mini_catalog()) {
        Rational formula = edge_count_via_formula(p);
        long long direct = build_rncg(p).ecount();
        long long overcount = 0;
        for (int z : p.z_s.members)
            for (int r = 0; r < p.ring->n; ++r)
                if (p.ring->times(z, r) != p.ring->times(r, z)) ++overcount;
        REQUIRE(formula == Rational(direct) + Rational(overcount));
        bool z_s_central = true;
        for (int z : p.z_s.members) z_s_central = z_s_central && p.z_r.contains(z);
        if (z_s_central) REQUIRE(formula == Rational(direct));
    }
}

TEST_CASE("degree formulas on the worked examples") {
    NCGraph g = build_rncg(e2_pair());
    DegreeReport rep = degree_check(e2_pair(), g);
    REQUIRE(rep.applicable);
    for (const DegreeRow& row : rep.rows) {
        REQUIRE(row.match);
        REQUIRE(row.actual == 2);
    }

    RingPair t2row = t2_row_pair();
    NCGraph gr = build_rncg(t2row);
    rep = degree_check(t2row, gr);
    REQUIRE(rep.inner_mismatches == 0);
    REQUIRE(rep.outer_mismatches == 0);
    for (const DegreeRow& row : rep.rows) {
        if (row.vertex == 4) {
            REQUIRE(row.in_subring);
            REQUIRE(row.formula == 4); // 8 - |C_R(4)| = 8 - 4
        }
        if (row.vertex == 1) {
            REQUIRE_FALSE(row.in_subring);
            REQUIRE(row.formula == 2); // |S| - |C_S(1)| = 4 - 2
        }
    }

    RingPtr e2 = construct("row_ring:z2");
    DegreeReport vac = degree_check(RingPair::make(e2, Subring::make(e2, {0, 2})),
                                    build_rncg(RingPair::make(e2, Subring::make(e2, {0, 2}))));
    REQUIRE_FALSE(vac.applicable);
}

TEST_CASE("inner degree formula is unconditional over the mini catalog") {
    for (const RingPair& p : mini_catalog()) {
        if (p.s_commutative) continue;
        NCGraph g = build_rncg(p);
        DegreeReport rep = degree_check(p, g);
        REQUIRE(rep.inner_mismatches == 0);
    }
}

TEST_CASE("theorem suite on the baseline pairs") {
    RingPair e2 = e2_pair();
    NCGraph ge2 = build_rncg(e2);
    TheoremReport rep = theorem_suite(e2, ge2);
    REQUIRE(rep.complete_graph_corner); // K_3 with S = R
    REQUIRE(rep.find("not_star")->status == CheckStatus::Pass);
    REQUIRE(rep.find("regular_degree_not_odd_squarefree")->status == CheckStatus::Pass);
    REQUIRE(rep.find("not_complete_with_unity")->status == CheckStatus::NotApplicable);
    REQUIRE(rep.find("diameter_two")->status == CheckStatus::Pass); // corner, flagged
    REQUIRE(rep.find("girth_three")->status == CheckStatus::Pass);
    REQUIRE(rep.find("class_two_when_s_equals_r")->status == CheckStatus::Pass);
    REQUIRE(rep.vizing_class == 2);

    RingPair t2row = t2_row_pair();
    NCGraph gr = build_rncg(t2row);
    rep = theorem_suite(t2row, gr);
    REQUIRE_FALSE(rep.complete_graph_corner);
    REQUIRE(rep.find("not_star")->status == CheckStatus::Pass);
    REQUIRE(rep.find("not_bipartite")->status == CheckStatus::Pass);
    REQUIRE(rep.find("not_complete_with_unity")->status == CheckStatus::Pass);
    REQUIRE(rep.find("connected")->status == CheckStatus::Pass);
    REQUIRE(rep.find("diameter_two")->status == CheckStatus::Pass);
    REQUIRE(rep.find("girth_three")->status == CheckStatus::Pass);
    REQUIRE(rep.find("class_two_when_s_equals_r")->status == CheckStatus::NotApplicable);

    // commutative subring: edgeless, consistent with the iff
    RingPtr e2r = construct("row_ring:z2");
    RingPair comm = RingPair::make(e2r, Subring::make(e2r, {0, 2}));
    rep = theorem_suite(comm, build_rncg(comm));
    REQUIRE(rep.find("edgeless_iff_commutative")->status == CheckStatus::Pass);
    REQUIRE(rep.find("not_star")->status == CheckStatus::NotApplicable);
}

TEST_CASE("the whole-ring pair of T2 is a class-1 counterexample") {
    RingPtr t2 = construct("ut2:z2");
    RingPair whole = RingPair::make(t2, subring_generated(t2, {1, 2, 3, 4, 5, 6, 7}));
    NCGraph g = build_rncg(whole);
    REQUIRE(g.vcount() == 6);
    REQUIRE(g.ecount() == 12); // K_6 minus a perfect matching
    TheoremReport rep = theorem_suite(whole, g);
    REQUIRE(rep.vizing_class == 1);
    REQUIRE(rep.find("class_two_when_s_equals_r")->status == CheckStatus::Fail);
    // the naive colorer agrees: 4 colors suffice
    REQUIRE(oracles::brute_edge_colorable(g, 4));
}

TEST_CASE("bounds on the two acceptance pairs") {
    RingPair e2 = e2_pair();
    BoundsReport b = bounds_report(e2, build_rncg(e2));
    REQUIRE(b.edge_count == 3);
    REQUIRE(b.formula_value == Rational(3));
    REQUIRE(b.formula_matches);
    REQUIRE(b.degree_sum_lower.applicable);
    REQUIRE(b.degree_sum_lower.value == Rational(3)); // tight
    REQUIRE(b.degree_sum_lower.holds);
    REQUIRE(b.smallest_prime_upper.value == Rational(3)); // tight
    REQUIRE(b.smallest_prime_upper.holds);
    REQUIRE(b.probability_lower.value == Rational(3)); // tight
    REQUIRE(b.probability_lower.holds);
    REQUIRE(b.star_exclusion.applicable); // |C_R(S)| = 1
    REQUIRE(b.star_exclusion.lhs == Rational(5, 2));
    REQUIRE(b.star_exclusion.rhs == Rational(3));
    REQUIRE(b.star_exclusion.holds);

    RingPair t2row = t2_row_pair();
    b = bounds_report(t2row, build_rncg(t2row));
    REQUIRE(b.edge_count == 9);
    REQUIRE(b.formula_value == Rational(9));
    REQUIRE(b.degree_sum_lower.value == Rational(9)); // tight
    REQUIRE(b.smallest_prime_upper.value == Rational(15));
    REQUIRE(b.smallest_prime_upper.holds);
    REQUIRE(b.probability_lower.value == Rational(9)); // tight
    REQUIRE_FALSE(b.star_exclusion.applicable); // |C_R(S)| = 2

    RingPtr e2r = construct("row_ring:z2");
    RingPair comm = RingPair::make(e2r, Subring::make(e2r, {0, 2}));
    b = bounds_report(comm, build_rncg(comm));
    REQUIRE_FALSE(b.degree_sum_lower.applicable);
    REQUIRE_FALSE(b.smallest_prime_upper.applicable);
    REQUIRE_FALSE(b.probability_lower.applicable);
    REQUIRE_FALSE(b.star_exclusion.applicable);
}

TEST_CASE("dominating criterion examples, including the documented iff failure") {
    RingPair p = t2_row_pair();
    NCGraph g = build_rncg(p);

    DominatingCriterionResult r =
        dominating_criterion(p, g, ElementSubset::make(p.ring, {2}));
    REQUIRE_FALSE(r.criterion_holds); // 7 escapes A u C_R(S)
    REQUIRE_FALSE(r.is_dominating);
    REQUIRE(r.agree);

    r = dominating_criterion(p, g, ElementSubset::make(p.ring, {2, 6}));
    REQUIRE(r.criterion_holds);
    REQUIRE(r.is_dominating);
    REQUIRE(r.agree);

    r = dominating_criterion(p, g, ElementSubset::make(p.ring, g.labels));
    REQUIRE(r.criterion_holds);
    REQUIRE(r.is_dominating);
    REQUIRE(r.agree);

    // A = {1,3} lies outside S: the centralizer criterion holds but vertex 7
    // has no neighbor in A, so the two sides genuinely disagree. The
    // criterion is an iff only for A inside S.
    r = dominating_criterion(p, g, ElementSubset::make(p.ring, {1, 3}));
    REQUIRE(r.criterion_holds);
    REQUIRE_FALSE(r.is_dominating);
    REQUIRE_FALSE(r.agree);

    REQUIRE_THROWS_AS(dominating_criterion(p, g, ElementSubset::make(p.ring, {0})), Error);
}

TEST_CASE("criterion agrees with domination for subsets of S") {
    for (const RingPair& p : mini_catalog()) {
        NCGraph g = build_rncg(p);
        std::vector<int> s_vertices;
        for (int lab : g.labels)
            if (p.sub.contains(lab)) s_vertices.push_back(lab);
        int n = static_cast<int>(s_vertices.size());
        if (n > 10) continue;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> a;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) a.push_back(s_vertices[i]);
            DominatingCriterionResult r =
                dominating_criterion(p, g, ElementSubset::make(p.ring, a));
            if (r.criterion_holds) REQUIRE(r.is_dominating);
        }
    }
}

TEST_CASE("canonical dominating sets") {
    RingPair e2 = e2_pair();
    CanonicalDominatingSets c = canonical_dominating_sets(e2, build_rncg(e2));
    REQUIRE(c.subring_minus_center == std::vector<int>{1, 2, 3});
    REQUIRE(c.subring_minus_center_dominates);
    REQUIRE(c.sumset_dominates);

    RingPair t2row = t2_row_pair();
    c = canonical_dominating_sets(t2row, build_rncg(t2row));
    REQUIRE(c.subring_minus_center == std::vector<int>{2, 4, 6});
    REQUIRE(c.subring_minus_center_dominates);
    REQUIRE(c.sumset == std::vector<int>{1, 2, 3, 4, 6, 7}); // S + {0,5} minus {0,5}
    REQUIRE(c.sumset_dominates);

    for (const RingPair& p : mini_catalog()) {
        if (p.s_commutative) continue;
        CanonicalDominatingSets sets = canonical_dominating_sets(p, build_rncg(p));
        REQUIRE(sets.subring_minus_center_dominates);
        REQUIRE(sets.sumset_dominates);
    }
}

TEST_CASE("dominating set from a generating set") {
    RingPair p = t2_row_pair();
    NCGraph g = build_rncg(p);

    GeneratingDominatingSet k = generating_dominating_set(p, g, {2, 6});
    REQUIRE(k.k == std::vector<int>{2, 6});
    REQUIRE(k.dominates);

    k = generating_dominating_set(p, g, {2, 4, 6});
    REQUIRE(k.k == std::vector<int>{2, 4, 6});
    REQUIRE(k.dominates);

    REQUIRE_THROWS_AS(generating_dominating_set(p, g, {2}), Error); // generates {0,2} only

    // E2 has no unity
    RingPair e2 = e2_pair();
    REQUIRE_THROWS_AS(generating_dominating_set(e2, build_rncg(e2), {1, 2}), Error);
}

TEST_CASE("probability monotonicity and the 5/8 ceiling over the mini catalog") {
    for (const RingPair& p : mini_catalog()) {
        ProbabilityReport prob = commuting_probability(p);
        REQUIRE(prob.pr_sr <= prob.pr_s);
        REQUIRE(prob.pr_sr > Rational(0));
        REQUIRE(prob.pr_s <= Rational(1));
        if (!p.s_commutative) REQUIRE(prob.pr_s <= Rational(5, 8));
    }
}

TEST_CASE("no isolated vertices for non-commutative subrings in the mini catalog") {
    for (const RingPair& p : mini_catalog()) {
        if (p.s_commutative) continue;
        NCGraph g = build_rncg(p);
        GraphMetrics m = metrics(g);
        for (int d : m.degrees) REQUIRE(d > 0);
        REQUIRE(m.connected);
    }
}
