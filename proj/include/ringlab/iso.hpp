#pragma once

#include "ringlab/rncg.hpp"
#include "ringlab/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ringlab {

// Invariant-factor decomposition of a finite abelian group given as an
// additive subgroup of a ring. factors are ascending (d_i divides d_{i+1});
// generators realize the decomposition and independently span the group.
struct AbelianStructure {
    long long order = 1;
    std::vector<int> factors;
    std::vector<int> generators;
};

// members must be closed under + and additive inverse; throws NotASubgroup.
AbelianStructure abelian_structure(const RingPtr& parent, const std::vector<int>& members);

// Additive quotient R/N. Cosets are canonical sorted member lists ordered by
// smallest member, so coset 0 is N itself.
struct QuotientGroup {
    RingPtr ring;
    std::vector<int> subgroup;            // N, sorted
    std::vector<std::vector<int>> cosets; // member lists
    std::vector<int> coset_of;            // ring element -> coset index
    std::vector<uint16_t> add;            // coset addition, q x q
    int q = 0;                            // number of cosets

    int plus(int a, int b) const { return add[size_t(a) * q + b]; }
    // order of a coset under repeated addition
    int order_of(int c) const;
};

QuotientGroup quotient_group(const RingPtr& ring, const ElementSubset& n);

// Relative isoclinism witness: phi is a coset bijection between the two
// quotients R/(Z(R) n S), psi an element bijection [S1,R1] -> [S2,R2].
struct IsoWitness {
    std::vector<std::vector<int>> cosets1, cosets2;
    std::vector<int> phi;                      // coset index -> coset index
    std::vector<std::pair<int, int>> psi;      // element -> element, sorted
};

struct IsoSearchOptions {
    int quotient_cap = 64;
    int commutator_cap = 64;
};

// Exhaustive backtracking over additive generator images for phi, with the
// forced psi derived and checked per candidate. Returns the first witness in
// deterministic search order, or nullopt after exhaustion.
std::optional<IsoWitness> find_isoclinism(const RingPair& pair1, const RingPair& pair2,
                                          const IsoSearchOptions& opts = {});

// Re-checks every witness invariant from scratch, independent of the search
// path. On failure *why names the first offending constraint.
bool verify_witness(const RingPair& pair1, const RingPair& pair2, const IsoWitness& w,
                    std::string* why = nullptr);

// The graph-isomorphism consequence: when the pairs are isoclinic and both
// cardinality hypotheses hold, the two graphs must be isomorphic.
struct IsoGraphReport {
    bool isoclinic = false;
    std::optional<IsoWitness> witness;
    bool z_cap_s_equal = false;
    bool z_equal = false;
    bool applicable = false; // all hypotheses hold
    bool graphs_isomorphic = false;
    std::optional<std::vector<std::pair<int, int>>> bijection;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

IsoGraphReport isoclinic_graph_report(const RingPair& pair1, const RingPair& pair2,
                                      const IsoSearchOptions& opts = {});

} // namespace ringlab
