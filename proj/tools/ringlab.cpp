// ringlab: an exact workbench for relative non-commuting graphs of finite
// rings. Builds Gamma_{S,R}, computes commuting probabilities as exact
// rationals, sweeps a catalog of small rings through every structural check
// and decides relative isoclinism by exhaustive witness search.

#include "ringlab/catalog.hpp"
#include "ringlab/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace ringlab;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int max_order = default_max_order();
    uint64_t seed = 1;
    long long edge_color_timeout_ms = 5000;
    bool quiet = false;
};

RingPtr resolve_ring_argument(const std::string& arg, int max_order) {
    if (std::filesystem::exists(arg)) return parse_ring_file(read_text_file(arg), max_order);
    return construct(arg, max_order);
}

Subring resolve_subring(const RingPtr& ring, const std::string& sel) {
    if (sel.empty() || sel == "all") {
        std::vector<int> all(ring->n);
        for (int i = 0; i < ring->n; ++i) all[i] = i;
        return Subring::make(ring, all);
    }
    auto parse_csv = [](const std::string& s) {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::atoi(tok.c_str()));
        return v;
    };
    if (sel.rfind("members:", 0) == 0) return Subring::make(ring, parse_csv(sel.substr(8)));
    if (sel.rfind("gens:", 0) == 0) return subring_generated(ring, parse_csv(sel.substr(5)));
    throw Error(Err::ParseError, "subring selector must be all, members:..., or gens:...");
}

void emit(const std::string& target, const std::string& text) {
    if (target == "-") {
        std::cout << text;
        return;
    }
    write_text_file_atomic(target, text);
}

int cmd_ring_show(const GlobalOpts& g, const std::string& arg, const std::string& json_out) {
    RingPtr ring = resolve_ring_argument(arg, g.max_order);
    RingFacts facts = ring_predicates(*ring);
    ElementSubset z = center(ring);
    std::cout << "ring " << ring->name << "\n"
              << "  order:          " << ring->n << "\n"
              << "  commutative:    " << (facts.commutative ? "yes" : "no") << "\n"
              << "  unity:          " << (facts.unity ? std::to_string(*facts.unity) : "none") << "\n"
              << "  smallest prime: " << facts.smallest_prime << "\n"
              << "  center:         " << json(z.members).dump() << "\n";
    if (!json_out.empty()) emit(json_out, serialize_ring(*ring));
    return 0;
}

int cmd_ring_subrings(const GlobalOpts& g, const std::string& arg) {
    RingPtr ring = resolve_ring_argument(arg, g.max_order);
    auto subs = enumerate_subrings(ring);
    std::cout << subs.size() << " subrings of " << ring->name << "\n";
    for (const Subring& s : subs) std::cout << "  " << json(s.members).dump() << "\n";
    return 0;
}

int cmd_graph_build(const GlobalOpts& g, const std::string& arg, const std::string& sel,
                    const std::string& dot_out, const std::string& json_out) {
    RingPtr ring = resolve_ring_argument(arg, g.max_order);
    RingPair pair = RingPair::make(ring, resolve_subring(ring, sel));
    NCGraph graph = build_rncg(pair);
    if (!g.quiet)
        std::cout << "graph on " << graph.vcount() << " vertices, " << graph.ecount()
                  << " edges\n";
    if (!dot_out.empty()) emit(dot_out, to_dot(graph));
    if (!json_out.empty()) {
        json edges = json::array();
        for (auto [a, b] : graph.edges()) edges.push_back(json::array({a, b}));
        emit(json_out, json{{"edges", edges}, {"vertices", graph.labels}}.dump() + "\n");
    }
    return 0;
}

int cmd_prob(const GlobalOpts& g, const std::string& arg, const std::string& sel) {
    RingPtr ring = resolve_ring_argument(arg, g.max_order);
    RingPair pair = RingPair::make(ring, resolve_subring(ring, sel));
    ProbabilityReport p = commuting_probability(pair);
    std::cout << "pr(S,R) = " << to_fraction_string(p.pr_sr) << "\n"
              << "pr(S)   = " << to_fraction_string(p.pr_s) << "\n"
              << "commuting pairs in S x R: " << p.commuting_pair_count << "\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& config_path, const std::string& report_out,
               int jobs) {
    std::vector<CatalogEntry> catalog;
    if (config_path.empty() || config_path == "default" ||
        (config_path == "default.cfg" && !std::filesystem::exists(config_path))) {
        catalog = default_catalog(g.max_order);
    } else {
        catalog = build_catalog(CatalogConfig::from_text(read_text_file(config_path)), g.max_order);
    }
    VerifyOptions opts;
    opts.seed = g.seed;
    opts.jobs = jobs;
    opts.edge_color_timeout_ms = g.edge_color_timeout_ms;
    VerifyResult result = run_verify(catalog, opts);
    if (!g.quiet) {
        std::cout << "pair                                       |V| |E|  pr(S,R)  class  pass fail  na\n";
        const json& pairs = result.report["pairs"];
        for (size_t i = 0; i < pairs.size(); ++i) {
            const json& p = pairs[i];
            int pass = 0, fail = 0, na = 0;
            for (const auto& [k, v] : p["checks"].items()) {
                std::string s = v.get<std::string>();
                if (s == "pass") ++pass;
                else if (s == "fail") ++fail;
                else ++na;
            }
            std::ostringstream name;
            name << catalog[i].name;
            std::string cls = p["class"].is_number() ? std::to_string(p["class"].get<int>())
                                                     : p["class"].get<std::string>();
            printf("%-42s %3d %3d  %-8s %-6s %4d %4d %3d\n", name.str().c_str(),
                   static_cast<int>(p["vertices"].size()), static_cast<int>(p["edges"].size()),
                   p["pr_sr"].get<std::string>().c_str(), cls.c_str(), pass, fail, na);
        }
        std::cout << "\nchecks: " << result.pass << " pass, " << result.fail << " fail, "
                  << result.na << " not applicable\n";
        if (!result.findings.empty()) {
            std::cout << "findings:\n";
            for (const auto& f : result.findings) std::cout << "  " << f << "\n";
        }
    }
    if (!report_out.empty()) write_report(result.report, report_out);
    return result.ok() ? 0 : 1;
}

int cmd_iso_check(const GlobalOpts& g, const std::string& arg1, const std::string& arg2,
                  const std::string& witness_out) {
    PairFile p1 = resolve_pair_argument(arg1, g.max_order);
    PairFile p2 = resolve_pair_argument(arg2, g.max_order);
    RingPair pair1 = RingPair::make(p1.ring, p1.sub);
    RingPair pair2 = RingPair::make(p2.ring, p2.sub);
    QuotientGroup q1 = quotient_group(pair1.ring, pair1.z_r_cap_s);
    QuotientGroup q2 = quotient_group(pair2.ring, pair2.z_r_cap_s);
    auto witness = find_isoclinism(pair1, pair2);
    if (witness) {
        std::cout << "isoclinic: witness found (phi over " << q1.q << " cosets, psi over "
                  << witness->psi.size() << " elements)\n";
        if (!witness_out.empty()) emit(witness_out, witness_to_json(*witness).dump(2) + "\n");
    } else {
        std::cout << "not isoclinic";
        if (q1.q != q2.q)
            std::cout << ": quotient orders " << q1.q << " != " << q2.q;
        std::cout << "\n";
    }
    return 0;
}

int cmd_iso_graphs(const GlobalOpts& g, const std::string& arg1, const std::string& arg2) {
    PairFile p1 = resolve_pair_argument(arg1, g.max_order);
    PairFile p2 = resolve_pair_argument(arg2, g.max_order);
    RingPair pair1 = RingPair::make(p1.ring, p1.sub);
    RingPair pair2 = RingPair::make(p2.ring, p2.sub);
    IsoGraphReport rep = isoclinic_graph_report(pair1, pair2);
    std::cout << "isoclinic:            " << (rep.isoclinic ? "yes" : "no") << "\n"
              << "|Z(R) n S| equal:     " << (rep.z_cap_s_equal ? "yes" : "no") << "\n"
              << "|Z(R)| equal:         " << (rep.z_equal ? "yes" : "no") << "\n";
    if (!rep.applicable) {
        std::cout << "conclusion:           not applicable (" << rep.detail << ")\n";
        return 0;
    }
    std::cout << "graphs isomorphic:    " << (rep.graphs_isomorphic ? "yes" : "no") << "\n";
    if (rep.status == CheckStatus::Fail) {
        std::cout << "VIOLATION: " << rep.detail << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for relative non-commuting graphs of finite rings"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--max-order", g.max_order, "order cap for ring construction");
    app.add_option("--seed", g.seed, "seed for randomized check corpora");
    app.add_option("--edge-color-timeout-ms", g.edge_color_timeout_ms,
                   "wall-clock budget for the edge-coloring search");
    app.add_flag("--quiet", g.quiet, "suppress tables");

    auto* ring = app.add_subcommand("ring", "inspect rings");
    std::string ring_arg, ring_json;
    auto* show = ring->add_subcommand("show", "print ring facts");
    show->add_option("ring", ring_arg, "ring file or constructor spec")->required();
    show->add_option("--json", ring_json, "write canonical ring JSON ('-' for stdout)");
    auto* subrings = ring->add_subcommand("subrings", "enumerate all subrings");
    std::string subrings_arg;
    subrings->add_option("ring", subrings_arg, "ring file or constructor spec")->required();

    auto* graph = app.add_subcommand("graph", "graph construction");
    auto* gbuild = graph->add_subcommand("build", "build the relative non-commuting graph");
    std::string gb_ring, gb_sub = "all", gb_dot, gb_json;
    gbuild->add_option("ring", gb_ring, "ring file or constructor spec")->required();
    gbuild->add_option("--subring", gb_sub, "all | members:a,b,... | gens:a,b,...");
    gbuild->add_option("--dot", gb_dot, "write DOT ('-' for stdout)");
    gbuild->add_option("--json", gb_json, "write graph JSON ('-' for stdout)");

    auto* prob = app.add_subcommand("prob", "exact commuting probabilities");
    std::string pr_ring, pr_sub = "all";
    prob->add_option("ring", pr_ring, "ring file or constructor spec")->required();
    prob->add_option("--subring", pr_sub, "all | members:a,b,... | gens:a,b,...");

    auto* verify = app.add_subcommand("verify", "run the conformance sweep over a catalog");
    std::string v_config, v_report;
    int v_jobs = 1;
    verify->add_option("config", v_config, "catalog config (omit or 'default' for the desk catalog)");
    verify->add_option("--report", v_report, "write the report JSON here");
    verify->add_option("--jobs", v_jobs, "parallel workers (output stays deterministic)");

    auto* iso = app.add_subcommand("iso", "relative isoclinism");
    auto* icheck = iso->add_subcommand("check", "search for an isoclinism witness");
    std::string i_a, i_b, i_witness;
    icheck->add_option("pair1", i_a, "pair file or '<spec>[@members]'")->required();
    icheck->add_option("pair2", i_b, "pair file or '<spec>[@members]'")->required();
    icheck->add_option("--witness", i_witness, "write the witness JSON here");
    auto* ithm = iso->add_subcommand(
        "thm51", "check that isoclinic pairs with matching center cardinalities have isomorphic graphs");
    std::string t_a, t_b;
    ithm->add_option("pair1", t_a, "pair file or '<spec>[@members]'")->required();
    ithm->add_option("pair2", t_b, "pair file or '<spec>[@members]'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed()) return cmd_ring_show(g, ring_arg, ring_json);
        if (subrings->parsed()) return cmd_ring_subrings(g, subrings_arg);
        if (gbuild->parsed()) return cmd_graph_build(g, gb_ring, gb_sub, gb_dot, gb_json);
        if (prob->parsed()) return cmd_prob(g, pr_ring, pr_sub);
        if (verify->parsed()) return cmd_verify(g, v_config, v_report, v_jobs);
        if (icheck->parsed()) return cmd_iso_check(g, i_a, i_b, i_witness);
        if (ithm->parsed()) return cmd_iso_graphs(g, t_a, t_b);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
