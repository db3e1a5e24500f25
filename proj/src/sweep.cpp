#include "ringlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace ringlab {

using nlohmann::json;

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

struct PairOutcome {
    json record;
    std::vector<std::string> findings;
    int pass = 0, fail = 0, na = 0;
    json conjecture; // null unless proper non-commutative S
};

json bound_to_json(const BoundEntry& b) {
    if (!b.applicable) return json{{"applicable", false}};
    return json{{"applicable", true}, {"holds", b.holds}, {"value", to_fraction_string(b.value)}};
}

// Greedy minimal generating set, ascending element order.
std::vector<int> greedy_generators(const RingPtr& ring, const Subring& sub) {
    std::vector<int> gens;
    Subring closed = subring_generated(ring, gens);
    for (int e : sub.members) {
        if (closed.contains(e)) continue;
        gens.push_back(e);
        closed = subring_generated(ring, gens);
        if (closed.members == sub.members) break;
    }
    return gens;
}

PairOutcome analyze_pair(const CatalogEntry& entry, const VerifyOptions& opts) {
    PairOutcome out;
    RingPair pair = RingPair::make(entry.ring, entry.sub);
    NCGraph graph = build_rncg(pair);
    ProbabilityReport prob = commuting_probability(pair);
    DegreeReport degrees = degree_check(pair, graph);
    TheoremSuiteOptions suite_opts;
    suite_opts.chromatic.timeout_ms = opts.edge_color_timeout_ms;
    TheoremReport suite = theorem_suite(pair, graph, suite_opts);
    BoundsReport bounds = bounds_report(pair, graph);
    bool nc = !pair.s_commutative;

    json checks = json::object();
    auto record_check = [&](const std::string& name, CheckStatus st, const std::string& detail) {
        checks[name] = check_status_name(st);
        switch (st) {
            case CheckStatus::Pass: ++out.pass; break;
            case CheckStatus::NotApplicable: ++out.na; break;
            case CheckStatus::Fail:
                ++out.fail;
                out.findings.push_back(entry.name + ": " + name +
                                       (detail.empty() ? "" : " (" + detail + ")"));
                break;
        }
    };
    auto record_bool = [&](const std::string& name, bool gate, bool ok,
                           const std::string& detail = "") {
        if (!gate) record_check(name, CheckStatus::NotApplicable, "");
        else record_check(name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
    };

    for (const auto& [name, res] : suite.checks) record_check(name, res.status, res.detail);

    record_bool("degree_formula_s_vertices", degrees.applicable, degrees.inner_mismatches == 0,
                std::to_string(degrees.inner_mismatches) + " mismatching vertices");
    record_bool("degree_formula_non_s_vertices", degrees.applicable, degrees.outer_mismatches == 0,
                std::to_string(degrees.outer_mismatches) + " mismatching vertices");

    record_bool("edge_count_identity", true, bounds.formula_matches,
                "formula " + to_fraction_string(bounds.formula_value) + " vs edge count " +
                    std::to_string(bounds.edge_count));

    record_bool("pr_relative_le_pr_subring", true, prob.pr_sr <= prob.pr_s,
                to_fraction_string(prob.pr_sr) + " > " + to_fraction_string(prob.pr_s));
    record_bool("pr_subring_le_5_8", nc, prob.pr_s <= Rational(5, 8),
                to_fraction_string(prob.pr_s) + " > 5/8");

    record_bool("bound_degree_sum_lower", bounds.degree_sum_lower.applicable,
                bounds.degree_sum_lower.holds,
                to_fraction_string(bounds.degree_sum_lower.value) + " > " +
                    std::to_string(bounds.edge_count));
    record_bool("bound_smallest_prime_upper", bounds.smallest_prime_upper.applicable,
                bounds.smallest_prime_upper.holds,
                to_fraction_string(bounds.smallest_prime_upper.value) + " < " +
                    std::to_string(bounds.edge_count));
    record_bool("bound_probability_lower", bounds.probability_lower.applicable,
                bounds.probability_lower.holds,
                to_fraction_string(bounds.probability_lower.value) + " > " +
                    std::to_string(bounds.edge_count));
    record_bool("star_exclusion_inequality", bounds.star_exclusion.applicable,
                bounds.star_exclusion.holds,
                "both sides equal " + to_fraction_string(bounds.star_exclusion.lhs));

    // dominating-set checks
    json dominating = json::object();
    {
        // criterion vs direct domination over vertex subsets
        long long checked = 0, disagreements = 0;
        json examples = json::array();
        auto try_subset = [&](const std::vector<int>& labels) {
            ElementSubset a = ElementSubset::make(pair.ring, labels);
            DominatingCriterionResult r = dominating_criterion(pair, graph, a);
            ++checked;
            if (!r.agree) {
                ++disagreements;
                if (examples.size() < 5) {
                    examples.push_back(json{{"subset", labels},
                                            {"criterion_holds", r.criterion_holds},
                                            {"is_dominating", r.is_dominating}});
                }
            }
        };
        int v = graph.vcount();
        if (v <= opts.dominating_exhaustive_vertex_cap) {
            try_subset({});
            for (int i = 0; i < v; ++i) {
                try_subset({graph.labels[i]});
                for (int j = i + 1; j < v; ++j) {
                    try_subset({graph.labels[i], graph.labels[j]});
                    for (int k = j + 1; k < v; ++k)
                        try_subset({graph.labels[i], graph.labels[j], graph.labels[k]});
                }
            }
        } else {
            SplitMix64 rng(opts.seed ^ fnv1a(entry.name));
            std::vector<int> pool = graph.labels;
            for (int t = 0; t < opts.dominating_random_subsets; ++t) {
                int size = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(v)));
                for (int i = 0; i < size; ++i) {
                    int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(v - i)));
                    std::swap(pool[i], pool[j]);
                }
                try_subset(std::vector<int>(pool.begin(), pool.begin() + size));
            }
        }
        dominating["criterion_subsets_checked"] = checked;
        dominating["criterion_disagreements"] = disagreements;
        dominating["criterion_examples"] = examples;
        record_bool("dominating_criterion_iff", true, disagreements == 0,
                    std::to_string(disagreements) + " of " + std::to_string(checked) +
                        " subsets disagree");
    }
    if (nc) {
        CanonicalDominatingSets canon = canonical_dominating_sets(pair, graph);
        dominating["subring_minus_center"] = canon.subring_minus_center;
        dominating["sumset"] = canon.sumset;
        record_bool("dominating_set_subring_minus_center", true,
                    canon.subring_minus_center_dominates, "S \\ Z(S) does not dominate");
        record_bool("dominating_set_sumset", true, canon.sumset_dominates,
                    "(S + C_R(S)) \\ C_R(S) does not dominate");
        RingFacts facts = ring_predicates(*pair.ring);
        if (facts.unity) {
            std::vector<int> gens = greedy_generators(pair.ring, pair.sub);
            GeneratingDominatingSet k = generating_dominating_set(pair, graph, gens);
            dominating["generators"] = gens;
            dominating["generators_k"] = k.k;
            record_bool("dominating_set_from_generators", true, k.dominates,
                        "K from the generating set does not dominate");
        } else {
            record_check("dominating_set_from_generators", CheckStatus::NotApplicable, "");
        }
    } else {
        record_check("dominating_set_subring_minus_center", CheckStatus::NotApplicable, "");
        record_check("dominating_set_sumset", CheckStatus::NotApplicable, "");
        record_check("dominating_set_from_generators", CheckStatus::NotApplicable, "");
    }

    // conjecture evidence, never a check
    if (nc && pair.s_proper()) {
        out.conjecture = json{{"pair", entry.name},
                              {"class", suite.vizing_class == 0
                                            ? json("indeterminate")
                                            : json(suite.vizing_class)}};
    }

    json degree_json = json::object();
    degree_json["applicable"] = degrees.applicable;
    if (degrees.applicable) {
        json mismatched = json::array();
        for (const DegreeRow& row : degrees.rows)
            if (!row.match)
                mismatched.push_back(json{{"vertex", row.vertex},
                                          {"in_subring", row.in_subring},
                                          {"actual", row.actual},
                                          {"formula", row.formula}});
        degree_json["inner_mismatches"] = degrees.inner_mismatches;
        degree_json["outer_mismatches"] = degrees.outer_mismatches;
        degree_json["mismatched"] = mismatched;
    }

    json edges = json::array();
    for (auto [a, b] : graph.edges()) edges.push_back(json::array({a, b}));

    json cls;
    if (!nc) cls = "na";
    else if (suite.vizing_class == 0) cls = "indeterminate";
    else cls = suite.vizing_class;

    out.record = json{{"bounds",
                       json{{"degree_sum_lower", bound_to_json(bounds.degree_sum_lower)},
                            {"edge_count", bounds.edge_count},
                            {"formula_matches", bounds.formula_matches},
                            {"formula_value", to_fraction_string(bounds.formula_value)},
                            {"probability_lower", bound_to_json(bounds.probability_lower)},
                            {"smallest_prime_upper", bound_to_json(bounds.smallest_prime_upper)},
                            {"star_exclusion",
                             bounds.star_exclusion.applicable
                                 ? json{{"applicable", true},
                                        {"holds", bounds.star_exclusion.holds},
                                        {"lhs", to_fraction_string(bounds.star_exclusion.lhs)},
                                        {"rhs", to_fraction_string(bounds.star_exclusion.rhs)}}
                                 : json{{"applicable", false}}}}},
                      {"checks", checks},
                      {"class", cls},
                      {"degree_formula", degree_json},
                      {"dominating", dominating},
                      {"edges", edges},
                      {"pr_s", to_fraction_string(prob.pr_s)},
                      {"pr_sr", to_fraction_string(prob.pr_sr)},
                      {"ring", entry.ring->name},
                      {"subring", pair.sub.members},
                      {"vertices", graph.labels}};
    return out;
}

} // namespace

VerifyResult run_verify(const std::vector<CatalogEntry>& catalog, const VerifyOptions& opts) {
    std::vector<PairOutcome> outcomes(catalog.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < catalog.size(); ++i) outcomes[i] = analyze_pair(catalog[i], opts);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (size_t i = cursor.fetch_add(1); i < catalog.size(); i = cursor.fetch_add(1))
                        outcomes[i] = analyze_pair(catalog[i], opts);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : workers) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    VerifyResult res;
    json pairs = json::array();
    json conjecture = json::array();
    json rings = json::array();
    {
        std::vector<std::string> seen;
        for (const auto& e : catalog) {
            if (std::find(seen.begin(), seen.end(), e.ring->name) == seen.end()) {
                seen.push_back(e.ring->name);
                rings.push_back(e.ring->name);
            }
        }
    }
    for (auto& o : outcomes) {
        res.pass += o.pass;
        res.fail += o.fail;
        res.na += o.na;
        for (auto& f : o.findings) res.findings.push_back(f);
        pairs.push_back(std::move(o.record));
        if (!o.conjecture.is_null()) conjecture.push_back(std::move(o.conjecture));
    }
    res.report = json{{"checks", json{{"fail", res.fail}, {"na", res.na}, {"pass", res.pass}}},
                      {"conjecture_evidence", conjecture},
                      {"entries", catalog.size()},
                      {"findings", res.findings},
                      {"pairs", pairs},
                      {"rings", rings},
                      {"seed", opts.seed}};
    return res;
}

} // namespace ringlab
