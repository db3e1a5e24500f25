#pragma once

#include "ringlab/bitset.hpp"
#include "ringlab/errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

// Exact finite ring given by its Cayley tables. Elements are indices
// 0..n-1 and index 0 is the additive identity. Values are immutable after
// construction; everything downstream shares them by const pointer.
class FiniteRing {
public:
    std::string name;
    int n = 0;
    std::vector<uint16_t> add, mul;   // n*n, row-major
    std::vector<uint16_t> addT, mulT; // transposes, kernel feeds
    std::vector<uint16_t> neg;        // additive inverse per element

    int plus(int a, int b) const { return add[size_t(a) * n + b]; }
    int times(int a, int b) const { return mul[size_t(a) * n + b]; }
    int minus(int a, int b) const { return plus(a, neg[b]); }
    const uint16_t* mul_row(int a) const { return mul.data() + size_t(a) * n; }
    const uint16_t* mulT_row(int a) const { return mulT.data() + size_t(a) * n; }
    const uint16_t* add_row(int a) const { return add.data() + size_t(a) * n; }
    const uint16_t* addT_row(int a) const { return addT.data() + size_t(a) * n; }

    bool commutes(int a, int b) const { return times(a, b) == times(b, a); }
    // Bit b set iff a and b commute multiplicatively.
    Bitset commute_mask(int a) const;

    // Validates every ring axiom (see verify_tables) and fills the derived
    // tables. Throws NotAGroup / NotAssociative / NotDistributive with the
    // first witness found.
    static std::shared_ptr<const FiniteRing> from_tables(std::string name,
                                                         std::vector<std::vector<int>> add,
                                                         std::vector<std::vector<int>> mul);
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// A subset of a ring's elements, not necessarily closed. Members are sorted
// and duplicate-free.
struct ElementSubset {
    RingPtr parent;
    std::vector<int> members;
    Bitset mask;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const { return mask.test(x); }

    static ElementSubset make(RingPtr parent, std::vector<int> members);
    static ElementSubset from_mask(RingPtr parent, const Bitset& mask);
};

// A validated subring: 0 present, closed under +, additive inverse and *.
struct Subring {
    RingPtr parent;
    std::vector<int> members;
    Bitset mask;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const { return mask.test(x); }
    bool is_whole_ring() const { return size() == parent->n; }
    ElementSubset as_subset() const { return ElementSubset{parent, members, mask}; }

    // Throws NotASubring naming the violated closure.
    static Subring make(RingPtr parent, std::vector<int> members);
};

struct RingFacts {
    bool commutative = false;
    std::optional<int> unity;       // two-sided multiplicative identity
    long long smallest_prime = 0;   // smallest prime dividing n; 0 for n = 1
};

// ---- table verification ----

// Exhaustive axiom scan. Small orders use the direct O(n^3) triple scan;
// larger ones use the generator-reduced scan (provably equivalent, witnesses
// are still genuine axiom triples). `naive_cap` picks the crossover.
void verify_tables(int n, const std::vector<uint16_t>& add, const std::vector<uint16_t>& mul,
                   int naive_cap = 256);

// ---- constructors ----

struct ConstructSpec;
using ConstructSpecPtr = std::shared_ptr<const ConstructSpec>;

// zn(n); product(a,b); matrix(base,k); upper_triangular(base,k);
// strictly_upper(base,k); row_ring(base).
struct ConstructSpec {
    enum class Kind { Zn, Product, Matrix, UpperTriangular, StrictlyUpper, RowRing };
    Kind kind;
    int n = 0; // Zn modulus or matrix dimension k
    ConstructSpecPtr a, b;

    std::string to_string() const;
    // Shorthand grammar: z<k> | zn:<k> | prod:(<spec>,<spec>) | mat<k>:<spec>
    //   | ut<k>:<spec> | su<k>:<spec> | row_ring:<spec>
    static ConstructSpecPtr parse(const std::string& text);
};

RingPtr construct(const ConstructSpec& spec, int max_order = 4096);
RingPtr construct(const std::string& shorthand, int max_order = 4096);

// Reads RINGLAB_MAX_ORDER if set, else returns fallback.
int default_max_order(int fallback = 4096);

// ---- interrogation ----

// {x in scope : xt = tx for every t in targets}. Throws ParentMismatch.
ElementSubset centralizer(const ElementSubset& scope, const ElementSubset& targets);
ElementSubset whole_ring_subset(const RingPtr& ring);
ElementSubset center(const RingPtr& ring); // Z(R)

// Fixed-point closure of gens under +, additive inverse and *.
Subring subring_generated(const RingPtr& ring, const std::vector<int>& gens);

// All subrings, by breadth-first closure over incremental generator sets.
// Includes {0} and R. Throws OrderLimitExceeded above the cap.
std::vector<Subring> enumerate_subrings(const RingPtr& ring, int order_cap = 64);

RingFacts ring_predicates(const FiniteRing& ring);

// [S,R]: the additive subgroup generated by {sr - rs : s in S, r in R}.
ElementSubset commutator_subgroup(const Subring& s);

// Additive subgroup closure of seed (plus 0) under + and inverse.
std::vector<int> additive_closure(const FiniteRing& ring, const std::vector<int>& seed);

// The subring reindexed as a standalone ring over 0..|S|-1 (members in
// sorted order). Used for Gamma_S-style standalone graphs and isoclinism.
RingPtr subring_as_ring(const Subring& s);

} // namespace ringlab
