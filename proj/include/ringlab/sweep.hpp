#pragma once

#include "ringlab/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

// Deterministic splittable RNG so seeded corpora do not depend on the
// standard library's distribution internals.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

struct VerifyOptions {
    uint64_t seed = 1;
    int jobs = 1;
    long long edge_color_timeout_ms = 5000;
    int dominating_exhaustive_vertex_cap = 12; // exhaustive |A| <= 3 below this
    int dominating_random_subsets = 1000;      // seeded subsets above it
};

struct VerifyResult {
    nlohmann::json report;
    int pass = 0, fail = 0, na = 0;
    std::vector<std::string> findings;
    bool ok() const { return fail == 0; }
};

// Runs the full conformance sweep over the catalog: structural no-go checks,
// degree formulas, the edge-count identity, bounds, dominating-set checks
// and the class-1 conjecture evidence table. Output is deterministic for a
// fixed catalog and seed, independent of the job count.
VerifyResult run_verify(const std::vector<CatalogEntry>& catalog, const VerifyOptions& opts = {});

} // namespace ringlab
