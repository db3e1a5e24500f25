#pragma once

#include "ringlab/iso.hpp"
#include "ringlab/rncg.hpp"
#include "ringlab/ring.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ringlab {

// ---- ring files ----
// Either literal tables {"name","order","add","mul"} or a constructor form
// {"construct": {...}, "name"?}. Serialization of canonicalized input is
// byte-stable.

RingPtr ring_from_json(const nlohmann::json& j, int max_order = 4096);
RingPtr parse_ring_file(const std::string& text, int max_order = 4096);
nlohmann::json ring_to_json(const FiniteRing& ring);
std::string serialize_ring(const FiniteRing& ring);

nlohmann::json construct_spec_to_json(const ConstructSpec& spec);
ConstructSpecPtr construct_spec_from_json(const nlohmann::json& j);

// ---- pairs ----
// {"ring": <spec string | ring object | {"file": path}>,
//  "subring": "all" | {"members": [...]} | {"generated": [...]}}
// "subring" defaults to the whole ring.

struct PairFile {
    RingPtr ring;
    Subring sub;
};

PairFile parse_pair_json(const nlohmann::json& j, int max_order = 4096);
// Inline shorthand: "<ringspec>" (S = R) or "<ringspec>@m1,m2,..." (members).
// Falls back to reading the argument as a file path when one exists.
PairFile resolve_pair_argument(const std::string& arg, int max_order = 4096);

// ---- catalogs ----

struct CatalogEntry {
    std::string name; // "<ring>/S{...}"
    RingPtr ring;
    Subring sub;
    std::string provenance; // constructor spec or file path
};

struct CatalogConfig {
    nlohmann::json raw;
    static CatalogConfig from_text(const std::string& text);
};

std::vector<CatalogEntry> build_catalog(const CatalogConfig& config, int max_order = 4096,
                                        int subring_order_cap = 64);
// The desk catalog: E2, T2, M_2(Z_2), E2 x Z_2, strictly-upper 3x3 over Z_2
// and zn(2..8), each with all subrings (orders <= 16).
std::vector<CatalogEntry> default_catalog(int max_order = 4096);
nlohmann::json default_catalog_config();

// ---- reports ----

// Canonical JSON text: sorted keys, rationals as "p/q", two-space indent,
// trailing newline. write_report is whole-file atomic.
std::string canonical_report_text(const nlohmann::json& report);
void write_report(const nlohmann::json& report, const std::string& path);
nlohmann::json read_report(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& text);

// ---- witnesses ----

nlohmann::json witness_to_json(const IsoWitness& w);
IsoWitness witness_from_json(const nlohmann::json& j);

} // namespace ringlab
