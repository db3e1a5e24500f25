#include "ringlab/rncg.hpp"

#include "ringlab/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "na";
    }
    return "?";
}

RingPair RingPair::make(RingPtr ring, Subring sub) {
    if (sub.parent.get() != ring.get())
        throw Error(Err::ParentMismatch, "subring belongs to a different ring");
    RingPair p;
    p.ring = std::move(ring);
    p.sub = std::move(sub);
    ElementSubset whole = whole_ring_subset(p.ring);
    p.c_r_s = centralizer(whole, p.sub.as_subset());
    p.z_r = centralizer(whole, whole);
    p.z_s = centralizer(p.sub.as_subset(), p.sub.as_subset());
    Bitset zrs = p.z_r.mask;
    zrs &= p.sub.mask;
    p.z_r_cap_s = ElementSubset::from_mask(p.ring, zrs);
    p.s_commutative = (p.z_s.size() == p.sub.size());
    return p;
}

NCGraph build_rncg(const RingPair& pair) {
    const FiniteRing& r = *pair.ring;
    Bitset vmask = pair.c_r_s.mask.complement();
    std::vector<int> labels = vmask.to_vector();
    NCGraph g = NCGraph::empty(labels);
    // adjacency: a or b in S, ab != ba, both vertices
    for (int i = 0; i < g.vcount(); ++i) {
        int a = labels[i];
        if (!pair.sub.contains(a)) continue;
        Bitset nc = r.commute_mask(a).complement();
        nc &= vmask;
        for (int b : nc.to_vector()) {
            int j = g.index_of(b);
            if (j != i) g.add_edge(i, j);
        }
    }
    return g;
}

ProbabilityReport commuting_probability(const RingPair& pair) {
    const FiniteRing& r = *pair.ring;
    long long count_sr = 0, count_ss = 0;
    for (int s : pair.sub.members) {
        count_sr += static_cast<long long>(
            kernels::eq_count_u16(r.mul_row(s), r.mulT_row(s), size_t(r.n)));
        count_ss += static_cast<long long>(kernels::eq_count_masked_u16(
            r.mul_row(s), r.mulT_row(s), size_t(r.n), pair.sub.mask.data()));
    }
    ProbabilityReport rep;
    rep.commuting_pair_count = count_sr;
    rep.pr_sr = Rational(count_sr, static_cast<long long>(pair.sub.size()) * r.n);
    rep.pr_s = Rational(count_ss, static_cast<long long>(pair.sub.size()) * pair.sub.size());
    return rep;
}

Rational edge_count_via_formula(const RingPair& pair) {
    ProbabilityReport p = commuting_probability(pair);
    Rational s(pair.sub.size()), r(pair.ring->n);
    return s * r * (1 - p.pr_sr) - s * s / 2 * (1 - p.pr_s);
}

DegreeReport degree_check(const RingPair& pair, const NCGraph& graph) {
    DegreeReport rep;
    if (pair.s_commutative) return rep; // vacuous
    rep.applicable = true;
    const FiniteRing& r = *pair.ring;
    ElementSubset s_subset = pair.sub.as_subset();
    for (int i = 0; i < graph.vcount(); ++i) {
        DegreeRow row;
        row.vertex = graph.labels[i];
        row.in_subring = pair.sub.contains(row.vertex);
        row.actual = graph.degree(i);
        if (row.in_subring) {
            long long c = r.commute_mask(row.vertex).count();
            row.formula = r.n - c;
        } else {
            long long cs = static_cast<long long>(kernels::eq_count_masked_u16(
                r.mul_row(row.vertex), r.mulT_row(row.vertex), size_t(r.n),
                pair.sub.mask.data()));
            row.formula = pair.sub.size() - cs;
        }
        row.match = (row.actual == row.formula);
        if (!row.match) {
            if (row.in_subring) ++rep.inner_mismatches;
            else ++rep.outer_mismatches;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

bool square_free(long long n) {
    for (long long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

} // namespace

const CheckResult* TheoremReport::find(const std::string& name) const {
    for (const auto& [k, v] : checks)
        if (k == name) return &v;
    return nullptr;
}

TheoremReport theorem_suite(const RingPair& pair, const NCGraph& graph,
                            const TheoremSuiteOptions& opts) {
    TheoremReport rep;
    GraphMetrics met = metrics(graph);
    GraphShape shape = classify(graph);
    RingFacts facts = ring_predicates(*pair.ring);
    bool nc = !pair.s_commutative;
    bool s_is_r = pair.sub.is_whole_ring();
    bool z_s_trivial = (pair.z_s.size() == 1);
    rep.complete_graph_corner = s_is_r && shape.complete && graph.vcount() > 0;

    auto add = [&](const std::string& name, CheckStatus st, std::string detail = "") {
        rep.checks.emplace_back(name, CheckResult{st, std::move(detail)});
    };
    auto gated = [&](bool gate, bool ok, const std::string& name, const std::string& why = "") {
        if (!gate) add(name, CheckStatus::NotApplicable);
        else add(name, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : why);
    };

    bool edgeless_iff = (graph.ecount() == 0) == pair.s_commutative;
    add("edgeless_iff_commutative", edgeless_iff ? CheckStatus::Pass : CheckStatus::Fail,
        edgeless_iff ? "" : "edge count " + std::to_string(graph.ecount()));

    bool no_isolated = true;
    int isolated = -1;
    for (int i = 0; i < graph.vcount(); ++i)
        if (met.degrees[i] == 0) { no_isolated = false; isolated = graph.labels[i]; break; }
    gated(nc, no_isolated, "no_isolated_vertex",
          no_isolated ? "" : "vertex " + std::to_string(isolated) + " is isolated");

    gated(nc, met.connected, "connected", "graph is disconnected");
    gated(nc, !shape.star, "not_star", "graph is a star");
    gated(nc && pair.s_proper(), !shape.bipartite, "not_bipartite", "graph is bipartite");

    {
        bool ok = true;
        std::string why;
        if (shape.regular && *shape.regular > 0 && *shape.regular % 2 == 1 &&
            square_free(*shape.regular)) {
            ok = false;
            why = "regular of square-free odd degree " + std::to_string(*shape.regular);
        }
        gated(nc, ok, "regular_degree_not_odd_squarefree", why);
    }

    gated(facts.unity.has_value(), !shape.complete, "not_complete_with_unity",
          "graph is complete");

    // diameter 2 / girth 3 under Z(S) = {0}; a complete Gamma_R has
    // diameter 1 and is recorded as the corner case, flagged in the detail
    {
        bool gate = nc && z_s_trivial;
        if (!gate) {
            add("diameter_two", CheckStatus::NotApplicable);
            add("girth_three", CheckStatus::NotApplicable);
        } else if (rep.complete_graph_corner) {
            bool ok = met.diameter && (*met.diameter == 1 || *met.diameter == 2);
            add("diameter_two", ok ? CheckStatus::Pass : CheckStatus::Fail,
                "complete graph with S = R: diameter " +
                    (met.diameter ? std::to_string(*met.diameter) : std::string("inf")));
            bool g3 = met.girth && *met.girth == 3;
            add("girth_three", g3 ? CheckStatus::Pass : CheckStatus::Fail,
                g3 ? "" : "girth " + (met.girth ? std::to_string(*met.girth) : std::string("inf")));
        } else {
            bool d2 = met.diameter && *met.diameter == 2;
            add("diameter_two", d2 ? CheckStatus::Pass : CheckStatus::Fail,
                d2 ? "" : "diameter " + (met.diameter ? std::to_string(*met.diameter) : std::string("inf")));
            bool g3 = met.girth && *met.girth == 3;
            add("girth_three", g3 ? CheckStatus::Pass : CheckStatus::Fail,
                g3 ? "" : "girth " + (met.girth ? std::to_string(*met.girth) : std::string("inf")));
        }
    }

    // Vizing class: class 2 asserted for S = R only; for proper S the class
    // is conjecture evidence and never asserted here.
    if (nc) {
        try {
            ChromaticResult cr = chromatic_index(graph, opts.chromatic);
            if (cr.determinate) {
                rep.vizing_class = cr.vizing_class;
            } else {
                rep.vizing_class = 0;
                rep.vizing_note = cr.note;
            }
        } catch (const Error& e) {
            rep.vizing_class = 0;
            rep.vizing_note = e.what();
        }
        if (s_is_r) {
            if (rep.vizing_class == 0)
                add("class_two_when_s_equals_r", CheckStatus::NotApplicable, rep.vizing_note);
            else
                gated(true, rep.vizing_class == 2, "class_two_when_s_equals_r",
                      "graph is class " + std::to_string(rep.vizing_class));
        } else {
            add("class_two_when_s_equals_r", CheckStatus::NotApplicable);
        }
    } else {
        add("class_two_when_s_equals_r", CheckStatus::NotApplicable);
    }

    return rep;
}

BoundsReport bounds_report(const RingPair& pair, const NCGraph& graph) {
    BoundsReport rep;
    rep.edge_count = graph.ecount();
    rep.formula_value = edge_count_via_formula(pair);
    rep.formula_matches = (rep.formula_value == Rational(rep.edge_count));

    bool nc = !pair.s_commutative;
    Rational S(pair.sub.size()), R(pair.ring->n);
    Rational ZS(pair.z_s.size()), CRS(pair.c_r_s.size()), ZRS(pair.z_r_cap_s.size());
    Rational E(rep.edge_count);

    // All four derivations lean on the degree formulas, which need a
    // non-commutative S; commutative pairs are reported not-applicable.
    if (nc) {
        rep.degree_sum_lower.applicable = true;
        rep.degree_sum_lower.value =
            S * R / 2 - S * S / 4 - ZS * R / 4 - S * CRS / 4 + ZS * S / 4;
        rep.degree_sum_lower.holds = rep.degree_sum_lower.value <= E;

        RingFacts facts = ring_predicates(*pair.ring);
        Rational p(facts.smallest_prime);
        rep.smallest_prime_upper.applicable = true;
        rep.smallest_prime_upper.value = S * (R - S * 3 / 16 - p) - ZRS * (R - p);
        rep.smallest_prime_upper.holds = rep.smallest_prime_upper.value >= E;

        rep.probability_lower.applicable = true;
        rep.probability_lower.value = S * S * (-3) / 16 + S * R * 3 / 8;
        rep.probability_lower.holds = rep.probability_lower.value <= E;

        if (pair.c_r_s.size() == 1) {
            ProbabilityReport prob = commuting_probability(pair);
            rep.star_exclusion.applicable = true;
            rep.star_exclusion.lhs = 2 * R * prob.pr_sr - S * prob.pr_s;
            rep.star_exclusion.rhs = -2 * R / S + 4 / S + 2 * R - S;
            rep.star_exclusion.holds = rep.star_exclusion.lhs != rep.star_exclusion.rhs;
        }
    }
    return rep;
}

DominatingCriterionResult dominating_criterion(const RingPair& pair, const NCGraph& graph,
                                               const ElementSubset& a) {
    if (a.parent.get() != pair.ring.get())
        throw Error(Err::ParentMismatch, "subset belongs to a different ring");
    for (int x : a.members)
        if (graph.index_of(x) < 0)
            throw Error(Err::NotAVertexSubset, "element " + std::to_string(x) + " is not a vertex");
    DominatingCriterionResult res;
    ElementSubset cra = centralizer(whole_ring_subset(pair.ring), a);
    Bitset allowed = a.mask;
    allowed |= pair.c_r_s.mask;
    res.criterion_holds = cra.mask.is_subset_of(allowed);
    res.is_dominating = is_dominating(graph, a.members);
    res.agree = (res.criterion_holds == res.is_dominating);
    return res;
}

CanonicalDominatingSets canonical_dominating_sets(const RingPair& pair, const NCGraph& graph) {
    if (pair.s_commutative)
        throw Error(Err::NotASubset, "canonical dominating sets need a non-commutative subring");
    CanonicalDominatingSets res;
    const FiniteRing& r = *pair.ring;

    Bitset smz = pair.sub.mask;
    smz.subtract(pair.z_s.mask);
    res.subring_minus_center = smz.to_vector();
    res.subring_minus_center_dominates = is_dominating(graph, res.subring_minus_center);

    Bitset sums(r.n);
    for (int s : pair.sub.members)
        for (int c : pair.c_r_s.members) sums.set(r.plus(s, c));
    sums.subtract(pair.c_r_s.mask);
    res.sumset = sums.to_vector();
    res.sumset_dominates = is_dominating(graph, res.sumset);
    return res;
}

GeneratingDominatingSet generating_dominating_set(const RingPair& pair, const NCGraph& graph,
                                                  const std::vector<int>& gens) {
    RingFacts facts = ring_predicates(*pair.ring);
    if (!facts.unity)
        throw Error(Err::NoUnity, "ring " + pair.ring->name + " has no unity");
    Subring closure = subring_generated(pair.ring, gens);
    if (closure.members != pair.sub.members)
        throw Error(Err::NotAGeneratingSet,
                    join(gens) + " generates " + join(closure.members) + ", not the subring");
    std::vector<int> outer, inner; // outer = non-central generators first
    for (int g : gens) {
        if (pair.c_r_s.contains(g)) inner.push_back(g);
        else outer.push_back(g);
    }
    std::sort(outer.begin(), outer.end());
    std::sort(inner.begin(), inner.end());
    if (outer.empty())
        throw Error(Err::NotAGeneratingSet, "every generator centralizes the subring");
    GeneratingDominatingSet res;
    Bitset k(pair.ring->n);
    for (int g : outer) k.set(g);
    for (int g : inner) k.set(pair.ring->plus(outer[0], g));
    res.k = k.to_vector();
    for (int x : res.k)
        if (graph.index_of(x) < 0)
            throw Error(Err::NotAVertexSubset,
                        "constructed element " + std::to_string(x) + " is not a vertex");
    res.dominates = is_dominating(graph, res.k);
    return res;
}

} // namespace ringlab
