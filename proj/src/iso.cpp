#include "ringlab/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

// Additive-only view of a subgroup, reindexed 0..m-1 with 0 the identity.
struct AddGroup {
    int n = 0;
    std::vector<uint16_t> add;
    std::vector<int> order_of;

    int plus(int a, int b) const { return add[size_t(a) * n + b]; }
};

AddGroup add_group_from(const std::vector<int>& members,
                        const std::function<int(int, int)>& plus_outer) {
    AddGroup g;
    g.n = static_cast<int>(members.size());
    std::map<int, int> pos;
    for (int i = 0; i < g.n; ++i) pos[members[i]] = i;
    g.add.resize(size_t(g.n) * g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            int s = plus_outer(members[i], members[j]);
            auto it = pos.find(s);
            if (it == pos.end())
                throw Error(Err::NotASubgroup, std::to_string(members[i]) + " + " +
                                                   std::to_string(members[j]) + " escapes the subset");
            g.add[size_t(i) * g.n + j] = static_cast<uint16_t>(it->second);
        }
    g.order_of.assign(g.n, 0);
    for (int x = 0; x < g.n; ++x) {
        int acc = x, k = 1;
        while (acc != 0) { acc = g.plus(acc, x); ++k; }
        g.order_of[x] = k;
    }
    return g;
}

// subgroup closure inside an AddGroup
std::vector<char> close_subgroup(const AddGroup& g, const std::vector<int>& seed) {
    std::vector<char> in(g.n, 0);
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in[x]) { in[x] = 1; work.push_back(x); }
    };
    push(0);
    for (int s : seed) push(s);
    size_t head = 0;
    while (head < work.size()) {
        int a = work[head++];
        for (size_t i = 0; i < work.size(); ++i) push(g.plus(a, work[i]));
    }
    return in;
}

// Greedy peeling of one p-group: returns (order, generator) pairs with
// non-increasing orders. `component` flags the p-component members.
void peel_p_group(const AddGroup& g, std::vector<char> component,
                  std::vector<std::pair<int, int>>& out) {
    int count = 0;
    for (char c : component) count += c;
    if (count <= 1) return;
    // maximal-order element, smallest index on ties
    int best = -1;
    for (int x = 0; x < g.n; ++x) {
        if (!component[x]) continue;
        if (best < 0 || g.order_of[x] > g.order_of[best]) best = x;
    }
    // cyclic part generated by best
    std::vector<char> cyc(g.n, 0);
    {
        int acc = 0;
        do {
            cyc[acc] = 1;
            acc = g.plus(acc, best);
        } while (acc != 0);
    }
    // greedy complement: maximal subgroup meeting <best> only in 0
    std::vector<char> comp(g.n, 0);
    comp[0] = 1;
    std::vector<int> comp_members{0};
    for (int x = 0; x < g.n; ++x) {
        if (!component[x] || comp[x]) continue;
        std::vector<int> seed = comp_members;
        seed.push_back(x);
        std::vector<char> cand = close_subgroup(g, seed);
        bool clean = true;
        for (int y = 1; y < g.n && clean; ++y)
            if (cand[y] && cyc[y]) clean = false;
        if (clean) {
            comp = cand;
            comp_members.clear();
            for (int y = 0; y < g.n; ++y)
                if (comp[y]) comp_members.push_back(y);
        }
    }
    out.emplace_back(g.order_of[best], best);
    peel_p_group(g, comp, out);
}

AbelianStructure decompose(const AddGroup& g) {
    AbelianStructure s;
    s.order = g.n;
    if (g.n == 1) return s;
    // primary components
    std::vector<long long> primes;
    {
        long long m = g.n;
        for (long long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }
    // per prime, the descending lists
    std::vector<std::vector<std::pair<int, int>>> peeled;
    for (long long p : primes) {
        std::vector<char> comp(g.n, 0);
        for (int x = 0; x < g.n; ++x) {
            int o = g.order_of[x];
            while (o % p == 0) o /= static_cast<int>(p);
            comp[x] = (o == 1);
        }
        std::vector<std::pair<int, int>> list;
        peel_p_group(g, comp, list);
        peeled.push_back(std::move(list));
    }
    size_t k = 0;
    for (const auto& l : peeled) k = std::max(k, l.size());
    // CRT-merge aligned largest-with-largest into descending invariant factors
    std::vector<int> factors_desc(k, 1);
    std::vector<int> gens_desc(k, 0);
    for (const auto& l : peeled)
        for (size_t j = 0; j < l.size(); ++j) {
            factors_desc[j] *= l[j].first;
            gens_desc[j] = g.plus(gens_desc[j], l[j].second);
        }
    s.factors.assign(factors_desc.rbegin(), factors_desc.rend());
    s.generators.assign(gens_desc.rbegin(), gens_desc.rend());

    // exhaustive verification: orders, the divisibility chain, and the span
    long long prod = 1;
    for (int d : s.factors) prod *= d;
    bool ok = (prod == s.order);
    for (size_t i = 0; i + 1 < s.factors.size() && ok; ++i)
        if (s.factors[i + 1] % s.factors[i] != 0) ok = false;
    for (size_t i = 0; i < s.generators.size() && ok; ++i)
        if (g.order_of[s.generators[i]] != s.factors[i]) ok = false;
    if (ok) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> span{0};
        seen[0] = 1;
        for (size_t i = 0; i < s.generators.size(); ++i) {
            std::vector<int> next = span;
            int acc = 0;
            for (int a = 1; a < s.factors[i]; ++a) {
                acc = g.plus(acc, s.generators[i]);
                for (int x : span) {
                    int y = g.plus(x, acc);
                    if (seen[y]) { ok = false; break; }
                    seen[y] = 1;
                    next.push_back(y);
                }
                if (!ok) break;
            }
            span = std::move(next);
        }
        if (ok && static_cast<long long>(span.size()) != s.order) ok = false;
    }
    if (!ok)
        throw Error(Err::NotASubgroup, "invariant-factor decomposition failed verification");
    return s;
}

} // namespace

AbelianStructure abelian_structure(const RingPtr& parent, const std::vector<int>& members) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted[0] != 0)
        throw Error(Err::NotASubgroup, "0 missing from the subset");
    AddGroup g = add_group_from(sorted, [&](int a, int b) { return parent->plus(a, b); });
    return decompose(g);
}

int QuotientGroup::order_of(int c) const {
    int acc = c, k = 1;
    while (acc != 0) { acc = plus(acc, c); ++k; }
    return k;
}

QuotientGroup quotient_group(const RingPtr& ring, const ElementSubset& n) {
    if (n.parent.get() != ring.get())
        throw Error(Err::ParentMismatch, "subgroup belongs to a different ring");
    // subgroup validation
    for (int a : n.members) {
        if (!n.contains(ring->neg[a]))
            throw Error(Err::NotASubgroup, "additive inverse of " + std::to_string(a) + " missing");
        for (int b : n.members)
            if (!n.contains(ring->plus(a, b)))
                throw Error(Err::NotASubgroup, std::to_string(a) + " + " + std::to_string(b) +
                                                   " escapes the subgroup");
    }
    if (!n.contains(0)) throw Error(Err::NotASubgroup, "0 missing");

    QuotientGroup q;
    q.ring = ring;
    q.subgroup = n.members;
    std::vector<int> rep_of(ring->n, -1); // element -> min element of its coset
    for (int x = 0; x < ring->n; ++x) {
        if (rep_of[x] >= 0) continue;
        int m = x;
        std::vector<int> coset;
        for (int z : n.members) coset.push_back(ring->plus(x, z));
        std::sort(coset.begin(), coset.end());
        m = coset.front();
        for (int y : coset) rep_of[y] = m;
        if (m == x) q.cosets.push_back(std::move(coset));
    }
    std::sort(q.cosets.begin(), q.cosets.end());
    q.q = static_cast<int>(q.cosets.size());
    q.coset_of.assign(ring->n, -1);
    for (int i = 0; i < q.q; ++i)
        for (int y : q.cosets[i]) q.coset_of[y] = i;
    q.add.resize(size_t(q.q) * q.q);
    for (int i = 0; i < q.q; ++i)
        for (int j = 0; j < q.q; ++j)
            q.add[size_t(i) * q.q + j] =
                static_cast<uint16_t>(q.coset_of[ring->plus(q.cosets[i][0], q.cosets[j][0])]);
    return q;
}

namespace {

// Everything find_isoclinism needs about one side.
struct PairContext {
    const RingPair* pair;
    QuotientGroup q;
    std::vector<char> coset_in_s;    // per coset: contained in S
    std::vector<int> k_members;      // [S,R], sorted
    std::vector<int> k_pos;          // ring element -> position in k_members, -1 outside
    std::vector<std::vector<int>> bracket; // coset x coset -> k position
    std::vector<int> q_order;        // per coset, additive order
    AbelianStructure q_struct, s_struct, k_struct;
};

PairContext make_context(const RingPair& pair, const IsoSearchOptions& opts) {
    PairContext ctx;
    ctx.pair = &pair;
    const FiniteRing& r = *pair.ring;
    ctx.q = quotient_group(pair.ring, pair.z_r_cap_s);
    if (ctx.q.q > opts.quotient_cap)
        throw Error(Err::SizeLimitExceeded, "quotient order " + std::to_string(ctx.q.q) +
                                                " above cap " + std::to_string(opts.quotient_cap));
    // N is central by construction (Z(R) n S); verify the bracket is
    // coset-independent anyway.
    for (int z : pair.z_r_cap_s.members)
        if (r.commute_mask(z).count() != r.n)
            throw Error(Err::NotASubgroup, "quotient subgroup element " + std::to_string(z) +
                                               " is not central; bracket ill-defined");
    ctx.coset_in_s.resize(ctx.q.q);
    for (int i = 0; i < ctx.q.q; ++i) {
        bool all = true, any = false;
        for (int y : ctx.q.cosets[i]) {
            if (pair.sub.contains(y)) any = true;
            else all = false;
        }
        if (any && !all)
            throw Error(Err::NotASubgroup, "subring is not a union of cosets");
        ctx.coset_in_s[i] = all;
    }
    ElementSubset k = commutator_subgroup(pair.sub);
    ctx.k_members = k.members;
    if (static_cast<int>(ctx.k_members.size()) > opts.commutator_cap)
        throw Error(Err::SizeLimitExceeded, "commutator subgroup order " +
                                                std::to_string(ctx.k_members.size()) + " above cap " +
                                                std::to_string(opts.commutator_cap));
    ctx.k_pos.assign(r.n, -1);
    for (size_t i = 0; i < ctx.k_members.size(); ++i) ctx.k_pos[ctx.k_members[i]] = static_cast<int>(i);
    ctx.bracket.assign(ctx.q.q, std::vector<int>(ctx.q.q, -1));
    for (int a = 0; a < ctx.q.q; ++a)
        for (int b = 0; b < ctx.q.q; ++b) {
            int x = ctx.q.cosets[a][0], y = ctx.q.cosets[b][0];
            int c = r.minus(r.times(x, y), r.times(y, x));
            ctx.bracket[a][b] = ctx.k_pos[c];
            if (ctx.coset_in_s[a] && ctx.bracket[a][b] < 0)
                throw Error(Err::NotASubgroup, "bracket value escapes the commutator subgroup");
        }
    ctx.q_order.resize(ctx.q.q);
    for (int i = 0; i < ctx.q.q; ++i) ctx.q_order[i] = ctx.q.order_of(i);

    auto q_add = [&](int a, int b) { return ctx.q.plus(a, b); };
    {
        std::vector<int> all(ctx.q.q);
        std::iota(all.begin(), all.end(), 0);
        AddGroup qg = add_group_from(all, q_add);
        ctx.q_struct = decompose(qg);
    }
    {
        std::vector<int> simg;
        for (int i = 0; i < ctx.q.q; ++i)
            if (ctx.coset_in_s[i]) simg.push_back(i);
        AddGroup sg = add_group_from(simg, q_add);
        ctx.s_struct = decompose(sg);
    }
    ctx.k_struct = abelian_structure(pair.ring, ctx.k_members);
    return ctx;
}

// Derive the psi forced by phi and check it extends to an additive
// bijection. Returns the element-level map or empty on conflict.
std::vector<std::pair<int, int>> derive_psi(const PairContext& c1, const PairContext& c2,
                                            const std::vector<int>& phi) {
    const FiniteRing& r1 = *c1.pair->ring;
    const FiniteRing& r2 = *c2.pair->ring;
    int k1 = static_cast<int>(c1.k_members.size());
    std::vector<int> psi(k1, -1); // k1 position -> k2 position
    std::vector<char> used(c2.k_members.size(), 0);
    std::vector<int> assigned;
    auto assign = [&](int from, int to) -> bool {
        if (to < 0) return false;
        if (psi[from] >= 0) return psi[from] == to;
        if (used[to]) return false;
        psi[from] = to;
        used[to] = 1;
        assigned.push_back(from);
        return true;
    };
    if (!assign(c1.k_pos[0], c2.k_pos[0])) return {};
    for (int a = 0; a < c1.q.q; ++a) {
        if (!c1.coset_in_s[a]) continue;
        for (int b = 0; b < c1.q.q; ++b) {
            int from = c1.bracket[a][b];
            int to = c2.bracket[phi[a]][phi[b]];
            if (!assign(from, to)) return {};
        }
    }
    // additive closure of the forced assignments
    for (size_t head = 0; head < assigned.size(); ++head) {
        int x = assigned[head];
        for (size_t i = 0; i <= head; ++i) {
            int y = assigned[i];
            int sx = c1.k_pos[r1.plus(c1.k_members[x], c1.k_members[y])];
            int sy = c2.k_pos[r2.plus(c2.k_members[psi[x]], c2.k_members[psi[y]])];
            if (!assign(sx, sy)) return {};
        }
    }
    if (static_cast<int>(assigned.size()) != k1) return {}; // did not span [S1,R1]
    std::vector<std::pair<int, int>> out;
    out.reserve(k1);
    for (int i = 0; i < k1; ++i) out.emplace_back(c1.k_members[i], c2.k_members[psi[i]]);
    return out;
}

struct PhiSearch {
    const PairContext& c1;
    const PairContext& c2;
    std::vector<int> gens;    // Q1 generator cosets, descending order
    std::vector<int> orders;  // matching additive orders
    std::vector<int> phi;     // per Q1 coset, -1 unknown
    std::vector<char> used;   // per Q2 coset
    std::vector<int> span;    // Q1 cosets with phi assigned
    std::optional<IsoWitness> found;

    PhiSearch(const PairContext& a, const PairContext& b) : c1(a), c2(b) {
        gens.assign(c1.q_struct.generators.rbegin(), c1.q_struct.generators.rend());
        orders.assign(c1.q_struct.factors.rbegin(), c1.q_struct.factors.rend());
        phi.assign(c1.q.q, -1);
        used.assign(c2.q.q, 0);
        phi[0] = 0;
        used[0] = 1;
        span.push_back(0);
    }

    bool extend(size_t gi) {
        if (gi == gens.size()) return complete();
        int g = gens[gi];
        int d = orders[gi];
        for (int h = 0; h < c2.q.q; ++h) {
            if (d % c2.q_order[h] != 0) continue; // d*h must be 0
            if (c1.coset_in_s[g] != c2.coset_in_s[h]) continue;
            size_t undo_from = span.size();
            bool ok = true;
            int acc1 = 0, acc2 = 0;
            for (int a = 1; a < d && ok; ++a) {
                acc1 = c1.q.plus(acc1, g);
                acc2 = c2.q.plus(acc2, h);
                for (size_t i = 0; i < undo_from && ok; ++i) {
                    int x = c1.q.plus(span[i], acc1);
                    int y = c2.q.plus(phi[span[i]], acc2);
                    if (used[y] || phi[x] >= 0 || c1.coset_in_s[x] != c2.coset_in_s[y]) {
                        ok = false;
                        break;
                    }
                    phi[x] = y;
                    used[y] = 1;
                    span.push_back(x);
                }
            }
            if (ok && extend(gi + 1)) return true;
            while (span.size() > undo_from) {
                int x = span.back();
                span.pop_back();
                used[phi[x]] = 0;
                phi[x] = -1;
            }
        }
        return false;
    }

    bool complete() {
        if (static_cast<int>(span.size()) != c1.q.q) return false;
        // empty means a forced-value conflict; [S,R] always contains 0, so a
        // successful derivation is never empty
        auto psi = derive_psi(c1, c2, phi);
        if (psi.empty()) return false;
        IsoWitness w;
        w.cosets1 = c1.q.cosets;
        w.cosets2 = c2.q.cosets;
        w.phi = phi;
        w.psi = std::move(psi);
        found = std::move(w);
        return true;
    }
};

} // namespace

std::optional<IsoWitness> find_isoclinism(const RingPair& pair1, const RingPair& pair2,
                                          const IsoSearchOptions& opts) {
    PairContext c1 = make_context(pair1, opts);
    PairContext c2 = make_context(pair2, opts);
    // sound necessary conditions first
    if (c1.q.q != c2.q.q) return std::nullopt;
    if (c1.q_struct.factors != c2.q_struct.factors) return std::nullopt;
    if (c1.s_struct.factors != c2.s_struct.factors) return std::nullopt;
    if (c1.k_struct.factors != c2.k_struct.factors) return std::nullopt;
    PhiSearch search(c1, c2);
    if (!search.extend(0)) return std::nullopt;
    IsoWitness w = *search.found;
    std::string why;
    if (!verify_witness(pair1, pair2, w, &why))
        throw Error(Err::SchemaError, "internal: found witness failed verification: " + why);
    return w;
}

bool verify_witness(const RingPair& pair1, const RingPair& pair2, const IsoWitness& w,
                    std::string* why) {
    auto explain = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    QuotientGroup q1 = quotient_group(pair1.ring, pair1.z_r_cap_s);
    QuotientGroup q2 = quotient_group(pair2.ring, pair2.z_r_cap_s);
    if (w.cosets1 != q1.cosets || w.cosets2 != q2.cosets)
        return explain("witness cosets do not match the quotients");
    if (q1.q != q2.q) return explain("quotient orders differ");
    if (static_cast<int>(w.phi.size()) != q1.q) return explain("phi has the wrong size");
    std::vector<char> hit(q2.q, 0);
    for (int v : w.phi) {
        if (v < 0 || v >= q2.q || hit[v]) return explain("phi is not a bijection");
        hit[v] = 1;
    }
    for (int a = 0; a < q1.q; ++a)
        for (int b = 0; b < q1.q; ++b)
            if (w.phi[q1.plus(a, b)] != q2.plus(w.phi[a], w.phi[b]))
                return explain("phi is not additive at cosets (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    // phi must carry the S1-image onto the S2-image
    for (int a = 0; a < q1.q; ++a) {
        bool in1 = true;
        for (int y : q1.cosets[a]) in1 = in1 && pair1.sub.contains(y);
        bool in2 = true;
        for (int y : q2.cosets[w.phi[a]]) in2 = in2 && pair2.sub.contains(y);
        if (in1 != in2) return explain("phi does not map the subring image onto the subring image");
    }
    // psi: additive bijection [S1,R1] -> [S2,R2]
    ElementSubset k1 = commutator_subgroup(pair1.sub);
    ElementSubset k2 = commutator_subgroup(pair2.sub);
    if (w.psi.size() != k1.members.size() || k1.members.size() != k2.members.size())
        return explain("psi has the wrong domain size");
    std::map<int, int> psi;
    std::vector<char> used(pair2.ring->n, 0);
    for (auto [x, y] : w.psi) {
        if (!k1.contains(x)) return explain("psi domain element " + std::to_string(x) + " outside [S1,R1]");
        if (!k2.contains(y)) return explain("psi image element " + std::to_string(y) + " outside [S2,R2]");
        if (psi.count(x) || used[y]) return explain("psi is not a bijection");
        psi[x] = y;
        used[y] = 1;
    }
    if (psi.size() != k1.members.size()) return explain("psi misses domain elements");
    for (int x : k1.members)
        for (int y : k1.members)
            if (psi[pair1.ring->plus(x, y)] != pair2.ring->plus(psi[x], psi[y]))
                return explain("psi is not additive at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
    // compatibility on every (s, r) and every representative choice
    const FiniteRing& r1 = *pair1.ring;
    const FiniteRing& r2 = *pair2.ring;
    for (int s : pair1.sub.members)
        for (int r = 0; r < r1.n; ++r) {
            int c = r1.minus(r1.times(s, r), r1.times(r, s));
            int want = psi[c];
            const auto& scoset = q2.cosets[w.phi[q1.coset_of[s]]];
            const auto& rcoset = q2.cosets[w.phi[q1.coset_of[r]]];
            for (int s2 : scoset)
                for (int r2e : rcoset) {
                    int c2 = r2.minus(r2.times(s2, r2e), r2.times(r2e, s2));
                    if (c2 != want)
                        return explain("compatibility fails at (s=" + std::to_string(s) + ", r=" +
                                       std::to_string(r) + ", s2=" + std::to_string(s2) + ", r2=" +
                                       std::to_string(r2e) + ")");
                }
        }
    return true;
}

IsoGraphReport isoclinic_graph_report(const RingPair& pair1, const RingPair& pair2,
                                      const IsoSearchOptions& opts) {
    IsoGraphReport rep;
    rep.witness = find_isoclinism(pair1, pair2, opts);
    rep.isoclinic = rep.witness.has_value();
    rep.z_cap_s_equal = pair1.z_r_cap_s.size() == pair2.z_r_cap_s.size();
    rep.z_equal = pair1.z_r.size() == pair2.z_r.size();
    rep.applicable = rep.isoclinic && rep.z_cap_s_equal && rep.z_equal;
    if (!rep.applicable) {
        rep.status = CheckStatus::NotApplicable;
        std::ostringstream os;
        if (!rep.isoclinic)
            os << "not isoclinic";
        else
            os << "cardinality hypotheses fail: |Z n S| " << pair1.z_r_cap_s.size() << " vs "
               << pair2.z_r_cap_s.size() << ", |Z| " << pair1.z_r.size() << " vs "
               << pair2.z_r.size();
        rep.detail = os.str();
        return rep;
    }
    NCGraph g1 = build_rncg(pair1);
    NCGraph g2 = build_rncg(pair2);
    rep.bijection = are_isomorphic(g1, g2);
    rep.graphs_isomorphic = rep.bijection.has_value();
    rep.status = rep.graphs_isomorphic ? CheckStatus::Pass : CheckStatus::Fail;
    if (!rep.graphs_isomorphic) rep.detail = "isoclinic pair with non-isomorphic graphs";
    return rep;
}

} // namespace ringlab
