#pragma once

#include "ringlab/graph.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

// A ring with a distinguished subring plus the cached derived subsets every
// check needs: C_R(S), Z(R), Z(S) and Z(R) n S.
struct RingPair {
    RingPtr ring;
    Subring sub;
    ElementSubset c_r_s;       // C_R(S)
    ElementSubset z_r;         // Z(R)
    ElementSubset z_s;         // Z(S) = S n C_R(S)
    ElementSubset z_r_cap_s;   // Z(R) n S
    bool s_commutative = false;

    bool s_proper() const { return sub.size() < ring->n; }
    static RingPair make(RingPtr ring, Subring sub);
};

// vertices R \ C_R(S); edge {a,b} iff (a in S or b in S) and ab != ba.
// Both endpoints must be vertices.
NCGraph build_rncg(const RingPair& pair);

struct ProbabilityReport {
    Rational pr_sr;                 // Pr(S,R)
    Rational pr_s;                  // Pr(S) = Pr(S,S)
    long long commuting_pair_count; // |{(s,r) in S x R : sr = rs}|
};

ProbabilityReport commuting_probability(const RingPair& pair);

// |S||R|(1 - Pr(S,R)) - |S|^2/2 (1 - Pr(S)) in exact rationals.
Rational edge_count_via_formula(const RingPair& pair);

struct DegreeRow {
    int vertex;
    bool in_subring;
    int actual;
    long long formula;
    bool match;
};

struct DegreeReport {
    bool applicable = false; // S non-commutative
    std::vector<DegreeRow> rows;
    int inner_mismatches = 0; // vertices in S
    int outer_mismatches = 0; // vertices outside S
};

DegreeReport degree_check(const RingPair& pair, const NCGraph& graph);

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* check_status_name(CheckStatus s);

struct CheckResult {
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

// Tri-state conformance record over the structural claims; a gated-out case
// is NotApplicable, never a pass. Key order is fixed for reporting.
struct TheoremReport {
    std::vector<std::pair<std::string, CheckResult>> checks;
    // Vizing class of the graph: 1, 2, 0 = indeterminate, -1 = not computed
    int vizing_class = -1;
    std::string vizing_note;
    bool complete_graph_corner = false; // S = R and the graph is complete

    const CheckResult* find(const std::string& name) const;
};

struct TheoremSuiteOptions {
    ChromaticOptions chromatic;
};

TheoremReport theorem_suite(const RingPair& pair, const NCGraph& graph,
                            const TheoremSuiteOptions& opts = {});

struct BoundEntry {
    bool applicable = false;
    Rational value;
    bool holds = false;
};

struct InequalityEntry {
    bool applicable = false;
    Rational lhs, rhs;
    bool holds = false; // lhs != rhs
};

struct BoundsReport {
    long long edge_count = 0;
    Rational formula_value;
    bool formula_matches = false;
    BoundEntry degree_sum_lower;     // from halved centralizer sums
    BoundEntry smallest_prime_upper; // uses the smallest prime dividing |R|
    BoundEntry probability_lower;    // from Pr <= 5/8
    InequalityEntry star_exclusion;  // gated on |C_R(S)| = 1
};

BoundsReport bounds_report(const RingPair& pair, const NCGraph& graph);

struct DominatingCriterionResult {
    bool criterion_holds = false; // C_R(A) subset of A u C_R(S)
    bool is_dominating = false;
    bool agree = false;
};

// A must be a subset of the vertex set; throws NotAVertexSubset.
DominatingCriterionResult dominating_criterion(const RingPair& pair, const NCGraph& graph,
                                               const ElementSubset& a);

struct CanonicalDominatingSets {
    std::vector<int> subring_minus_center; // S \ Z(S)
    bool subring_minus_center_dominates = false;
    std::vector<int> sumset;               // (S + C_R(S)) \ C_R(S)
    bool sumset_dominates = false;
};

// Requires S non-commutative.
CanonicalDominatingSets canonical_dominating_sets(const RingPair& pair, const NCGraph& graph);

struct GeneratingDominatingSet {
    std::vector<int> k; // the constructed set, sorted
    bool dominates = false;
};

// K = (L \ C_R(S)) u {s1 + s : s in L n C_R(S)} with s1 the smallest
// non-central generator. Requires R with unity and closure(L) = S; throws
// NoUnity / NotAGeneratingSet.
GeneratingDominatingSet generating_dominating_set(const RingPair& pair, const NCGraph& graph,
                                                  const std::vector<int>& gens);

} // namespace ringlab
