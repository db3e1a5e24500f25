#include "ringlab/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ringlab {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Err::ParseError, e.what());
    }
}

std::vector<std::vector<int>> table_from_json(const json& j, const char* which) {
    if (!j.is_array()) throw Error(Err::ParseError, std::string(which) + " table is not an array");
    std::vector<std::vector<int>> t;
    for (size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        if (!row.is_array())
            throw Error(Err::ParseError,
                        std::string(which) + " table row " + std::to_string(i) + " is not an array");
        std::vector<int> r;
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw Error(Err::ParseError, std::string(which) + " table row " + std::to_string(i) +
                                                 " holds a non-integer");
            r.push_back(v.get<int>());
        }
        if (r.size() != j.size())
            throw Error(Err::ParseError, std::string(which) + " table row " + std::to_string(i) +
                                             " has " + std::to_string(r.size()) + " entries, expected " +
                                             std::to_string(j.size()));
        t.push_back(std::move(r));
    }
    return t;
}

} // namespace

json construct_spec_to_json(const ConstructSpec& spec) {
    using Kind = ConstructSpec::Kind;
    json j;
    switch (spec.kind) {
        case Kind::Zn: j["zn"] = spec.n; break;
        case Kind::Product:
            j["product"] = json::array({construct_spec_to_json(*spec.a), construct_spec_to_json(*spec.b)});
            break;
        case Kind::Matrix:
            j["matrix"] = {{"base", construct_spec_to_json(*spec.a)}, {"k", spec.n}};
            break;
        case Kind::UpperTriangular:
            j["upper_triangular"] = {{"base", construct_spec_to_json(*spec.a)}, {"k", spec.n}};
            break;
        case Kind::StrictlyUpper:
            j["strictly_upper"] = {{"base", construct_spec_to_json(*spec.a)}, {"k", spec.n}};
            break;
        case Kind::RowRing: j["row_ring"] = construct_spec_to_json(*spec.a); break;
    }
    return j;
}

ConstructSpecPtr construct_spec_from_json(const json& j) {
    using Kind = ConstructSpec::Kind;
    if (j.is_string()) return ConstructSpec::parse(j.get<std::string>());
    if (!j.is_object() || j.size() != 1)
        throw Error(Err::ParseError, "constructor spec must be a one-key object or a string");
    auto node = std::make_shared<ConstructSpec>();
    const std::string key = j.begin().key();
    const json& v = j.begin().value();
    auto base_and_k = [&](Kind kind) {
        node->kind = kind;
        if (!v.is_object() || !v.contains("base") || !v.contains("k"))
            throw Error(Err::ParseError, key + " needs {\"base\":..., \"k\":...}");
        node->a = construct_spec_from_json(v["base"]);
        node->n = v["k"].get<int>();
    };
    if (key == "zn") {
        node->kind = Kind::Zn;
        node->n = v.get<int>();
    } else if (key == "product") {
        node->kind = Kind::Product;
        if (!v.is_array() || v.size() != 2)
            throw Error(Err::ParseError, "product needs a two-element array");
        node->a = construct_spec_from_json(v[0]);
        node->b = construct_spec_from_json(v[1]);
    } else if (key == "matrix") {
        base_and_k(Kind::Matrix);
    } else if (key == "upper_triangular") {
        base_and_k(Kind::UpperTriangular);
    } else if (key == "strictly_upper") {
        base_and_k(Kind::StrictlyUpper);
    } else if (key == "row_ring") {
        node->kind = Kind::RowRing;
        node->n = 2;
        node->a = construct_spec_from_json(v);
    } else {
        throw Error(Err::ParseError, "unknown constructor \"" + key + "\"");
    }
    return node;
}

RingPtr ring_from_json(const json& j, int max_order) {
    if (!j.is_object()) throw Error(Err::ParseError, "ring document is not an object");
    if (j.contains("construct")) {
        ConstructSpecPtr spec = construct_spec_from_json(j["construct"]);
        RingPtr ring = construct(*spec, max_order);
        if (j.contains("name")) {
            auto named = std::make_shared<FiniteRing>(*ring);
            named->name = j["name"].get<std::string>();
            return named;
        }
        return ring;
    }
    for (const char* key : {"name", "order", "add", "mul"})
        if (!j.contains(key))
            throw Error(Err::ParseError, std::string("ring document misses \"") + key + "\"");
    int order = j["order"].get<int>();
    auto add = table_from_json(j["add"], "add");
    auto mul = table_from_json(j["mul"], "mul");
    if (static_cast<int>(add.size()) != order || static_cast<int>(mul.size()) != order)
        throw Error(Err::ParseError, "tables do not match the declared order");
    if (order > max_order)
        throw Error(Err::OrderLimitExceeded, "order " + std::to_string(order) + " above cap " +
                                                 std::to_string(max_order));
    return FiniteRing::from_tables(j["name"].get<std::string>(), add, mul);
}

RingPtr parse_ring_file(const std::string& text, int max_order) {
    return ring_from_json(parse_json(text), max_order);
}

json ring_to_json(const FiniteRing& ring) {
    json add = json::array(), mul = json::array();
    for (int i = 0; i < ring.n; ++i) {
        json ra = json::array(), rm = json::array();
        for (int k = 0; k < ring.n; ++k) {
            ra.push_back(ring.plus(i, k));
            rm.push_back(ring.times(i, k));
        }
        add.push_back(std::move(ra));
        mul.push_back(std::move(rm));
    }
    return json{{"add", add}, {"mul", mul}, {"name", ring.name}, {"order", ring.n}};
}

std::string serialize_ring(const FiniteRing& ring) { return ring_to_json(ring).dump() + "\n"; }

PairFile parse_pair_json(const json& j, int max_order) {
    if (!j.is_object() || !j.contains("ring"))
        throw Error(Err::ParseError, "pair document needs a \"ring\"");
    RingPtr ring;
    const json& rj = j["ring"];
    if (rj.is_string()) {
        ring = construct(rj.get<std::string>(), max_order);
    } else if (rj.is_object() && rj.contains("file")) {
        ring = parse_ring_file(read_text_file(rj["file"].get<std::string>()), max_order);
    } else {
        ring = ring_from_json(rj, max_order);
    }
    Subring sub = Subring::make(ring, [&]() -> std::vector<int> {
        if (!j.contains("subring")) {
            std::vector<int> all(ring->n);
            for (int i = 0; i < ring->n; ++i) all[i] = i;
            return all;
        }
        const json& sj = j["subring"];
        if (sj.is_string() && sj.get<std::string>() == "all") {
            std::vector<int> all(ring->n);
            for (int i = 0; i < ring->n; ++i) all[i] = i;
            return all;
        }
        if (sj.is_object() && sj.contains("members")) return sj["members"].get<std::vector<int>>();
        if (sj.is_object() && sj.contains("generated"))
            return subring_generated(ring, sj["generated"].get<std::vector<int>>()).members;
        throw Error(Err::ParseError, "subring selector must be \"all\", {\"members\":[...]} or {\"generated\":[...]}");
    }());
    return PairFile{std::move(ring), std::move(sub)};
}

PairFile resolve_pair_argument(const std::string& arg, int max_order) {
    if (std::filesystem::exists(arg)) return parse_pair_json(parse_json(read_text_file(arg)), max_order);
    auto at = arg.find('@');
    std::string spec = arg.substr(0, at == std::string::npos ? arg.size() : at);
    RingPtr ring = construct(spec, max_order);
    std::vector<int> members;
    if (at == std::string::npos) {
        for (int i = 0; i < ring->n; ++i) members.push_back(i);
    } else {
        std::stringstream ss(arg.substr(at + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) members.push_back(std::atoi(tok.c_str()));
    }
    return PairFile{ring, Subring::make(ring, members)};
}

CatalogConfig CatalogConfig::from_text(const std::string& text) {
    return CatalogConfig{parse_json(text)};
}

namespace {

std::string subring_tag(const std::vector<int>& members) {
    std::ostringstream os;
    os << "S{";
    for (size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
    os << "}";
    return os.str();
}

} // namespace

std::vector<CatalogEntry> build_catalog(const CatalogConfig& config, int max_order,
                                        int subring_order_cap) {
    const json& j = config.raw;
    if (!j.is_object() || !j.contains("entries"))
        throw Error(Err::SchemaError, "catalog config needs \"entries\"");
    if (j.contains("subring_order_cap")) subring_order_cap = j["subring_order_cap"].get<int>();
    std::vector<CatalogEntry> out;
    for (const json& e : j["entries"]) {
        if (!e.is_object() || !e.contains("ring"))
            throw Error(Err::SchemaError, "catalog entry needs a \"ring\"");
        RingPtr ring;
        std::string provenance;
        const json& rj = e["ring"];
        if (rj.is_string()) {
            provenance = rj.get<std::string>();
            ring = construct(provenance, max_order);
        } else if (rj.is_object() && rj.contains("file")) {
            provenance = rj["file"].get<std::string>();
            ring = parse_ring_file(read_text_file(provenance), max_order);
        } else {
            ring = ring_from_json(rj, max_order);
            provenance = "inline:" + ring->name;
        }
        std::vector<std::vector<int>> member_lists;
        const json sel = e.contains("subrings") ? e["subrings"] : json("all");
        if (sel.is_string() && sel.get<std::string>() == "all") {
            if (ring->n <= subring_order_cap) {
                for (const Subring& s : enumerate_subrings(ring, subring_order_cap))
                    member_lists.push_back(s.members);
            } else {
                std::vector<int> all(ring->n);
                for (int i = 0; i < ring->n; ++i) all[i] = i;
                member_lists.push_back(std::move(all));
            }
        } else if (sel.is_string() && sel.get<std::string>() == "whole") {
            std::vector<int> all(ring->n);
            for (int i = 0; i < ring->n; ++i) all[i] = i;
            member_lists.push_back(std::move(all));
        } else if (sel.is_object() && sel.contains("members")) {
            for (const json& m : sel["members"]) member_lists.push_back(m.get<std::vector<int>>());
        } else if (sel.is_object() && sel.contains("generated")) {
            for (const json& g : sel["generated"])
                member_lists.push_back(subring_generated(ring, g.get<std::vector<int>>()).members);
        } else {
            throw Error(Err::SchemaError, "bad subring selector in catalog entry");
        }
        std::sort(member_lists.begin(), member_lists.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        member_lists.erase(std::unique(member_lists.begin(), member_lists.end()), member_lists.end());
        for (auto& members : member_lists) {
            CatalogEntry entry;
            entry.ring = ring;
            entry.sub = Subring::make(ring, members);
            entry.name = ring->name + "/" + subring_tag(entry.sub.members);
            entry.provenance = provenance;
            out.push_back(std::move(entry));
        }
    }
    // names must be unique
    {
        std::vector<std::string> names;
        for (const auto& e : out) names.push_back(e.name);
        std::sort(names.begin(), names.end());
        auto dup = std::adjacent_find(names.begin(), names.end());
        if (dup != names.end())
            throw Error(Err::SchemaError, "duplicate catalog entry \"" + *dup + "\"");
    }
    return out;
}

json default_catalog_config() {
    json entries = json::array();
    for (const char* spec :
         {"row_ring:z2", "ut2:z2", "mat2:z2", "prod:(row_ring:z2,z2)", "su3:z2"})
        entries.push_back(json{{"ring", spec}, {"subrings", "all"}});
    for (int k = 2; k <= 8; ++k)
        entries.push_back(json{{"ring", "zn:" + std::to_string(k)}, {"subrings", "all"}});
    return json{{"entries", entries}, {"subring_order_cap", 16}};
}

std::vector<CatalogEntry> default_catalog(int max_order) {
    return build_catalog(CatalogConfig{default_catalog_config()}, max_order, 16);
}

std::string canonical_report_text(const json& report) {
    return report.dump(2) + "\n";
}

void write_report(const json& report, const std::string& path) {
    write_text_file_atomic(path, canonical_report_text(report));
}

json read_report(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error(Err::SchemaError, std::string("report does not parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw Error(Err::SchemaError, "report misses the \"pairs\" array");
    for (const json& p : j["pairs"]) {
        for (const char* key : {"ring", "subring", "vertices", "edges", "pr_sr", "pr_s", "checks"})
            if (!p.contains(key))
                throw Error(Err::SchemaError, std::string("report pair misses \"") + key + "\"");
        parse_fraction(p["pr_sr"].get<std::string>());
        parse_fraction(p["pr_s"].get<std::string>());
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Err::IoError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Err::IoError, "cannot open " + tmp);
        out << text;
        if (!out.good()) throw Error(Err::IoError, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(Err::IoError, "rename to " + path + " failed: " + ec.message());
}

json witness_to_json(const IsoWitness& w) {
    json psi = json::array();
    for (auto [x, y] : w.psi) psi.push_back(json::array({x, y}));
    return json{{"cosets1", w.cosets1}, {"cosets2", w.cosets2}, {"phi", w.phi}, {"psi", psi}};
}

IsoWitness witness_from_json(const json& j) {
    IsoWitness w;
    try {
        w.cosets1 = j.at("cosets1").get<std::vector<std::vector<int>>>();
        w.cosets2 = j.at("cosets2").get<std::vector<std::vector<int>>>();
        w.phi = j.at("phi").get<std::vector<int>>();
        for (const json& p : j.at("psi")) w.psi.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    } catch (const json::exception& e) {
        throw Error(Err::SchemaError, std::string("bad witness document: ") + e.what());
    }
    return w;
}

} // namespace ringlab
