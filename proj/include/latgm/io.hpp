#pragma once

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latgm/ci.hpp"
#include "latgm/errors.hpp"
#include "latgm/factorize.hpp"
#include "latgm/graph.hpp"
#include "latgm/lattice.hpp"
#include "latgm/poset.hpp"
#include "latgm/rational.hpp"
#include "latgm/report.hpp"
#include "latgm/subset.hpp"

// Instance file formats. Subsets are encoded as comma-separated ascending
// 1-based indices with "" for the empty set; rationals as "num/den" or plain
// integer strings. Unknown keys are rejected. All emitters write keys in the
// canonical (cardinality, value) order so output is deterministic and
// re-parses to an equal value.

namespace latgm::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline void expect_keys(const json& j, const std::vector<std::string>& keys,
                        const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ParseError(what + ": unknown key '" + key + "'");
    }
    for (const auto& key : keys)
        if (!j.contains(key)) throw ParseError(what + ": missing key '" + key + "'");
}

inline int get_m(const json& j, const std::string& what) {
    if (!j.at("m").is_number_integer()) throw ParseError(what + ": field 'm' must be an integer");
    const int m = j.at("m").get<int>();
    if (m < 1 || m > kMaxGroundSet)
        throw ParseError(what + ": field 'm' must be in [1," + std::to_string(kMaxGroundSet) + "]");
    return m;
}

inline std::vector<std::pair<int, int>> get_pairs(const json& j, const std::string& field,
                                                  const std::string& what) {
    if (!j.at(field).is_array()) throw ParseError(what + ": field '" + field + "' must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j.at(field)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(what + ": field '" + field + "' entries must be integer pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

inline SubsetMask get_subset(const json& v, int m, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + ": subsets must be strings");
    try {
        return parse_subset_key(v.get<std::string>(), m);
    } catch (const std::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

} // namespace detail

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(text);
}

// poset: {"m": 4, "covers": [[2,1],[2,3],[4,3]]}
inline Poset parse_poset(const json& j) {
    detail::expect_keys(j, {"m", "covers"}, "poset");
    const int m = detail::get_m(j, "poset");
    try {
        return Poset(m, detail::get_pairs(j, "covers", "poset"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("poset: ") + e.what());
    }
}

inline json to_json(const Poset& p) {
    json covers = json::array();
    for (auto [i, j] : p.covers()) covers.push_back({i, j});
    return json{{"m", p.m()}, {"covers", covers}};
}

// graph: {"m": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]}
inline Graph parse_graph(const json& j) {
    detail::expect_keys(j, {"m", "edges"}, "graph");
    const int m = detail::get_m(j, "graph");
    try {
        return Graph(m, detail::get_pairs(j, "edges", "graph"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return json{{"m", g.m()}, {"edges", edges}};
}

// set family / lattice: {"m": 4, "sets": ["", "1", "3", "1,3"]}
struct SetFamily {
    int m;
    std::vector<SubsetMask> sets;
};

inline SetFamily parse_set_family(const json& j) {
    detail::expect_keys(j, {"m", "sets"}, "lattice");
    const int m = detail::get_m(j, "lattice");
    if (!j.at("sets").is_array()) throw ParseError("lattice: field 'sets' must be an array");
    std::vector<SubsetMask> sets;
    for (const auto& v : j.at("sets")) sets.push_back(detail::get_subset(v, m, "lattice: field 'sets'"));
    return {m, std::move(sets)};
}

inline DistributiveLattice parse_lattice(const json& j) {
    auto family = parse_set_family(j);
    try {
        return DistributiveLattice::from_sets(family.m, std::move(family.sets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("lattice: ") + e.what());
    }
}

inline json sets_to_json(int m, const std::vector<SubsetMask>& sets) {
    std::vector<SubsetMask> sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    json arr = json::array();
    for (SubsetMask s : sorted) arr.push_back(s.to_key());
    return json{{"m", m}, {"sets", arr}};
}

inline json to_json(const DistributiveLattice& l) { return sets_to_json(l.m(), l.elements()); }

// distribution: {"m": 4, "probs": {"": "1/4", "1": "1/8", ...}}
inline Distribution parse_distribution(const json& j) {
    detail::expect_keys(j, {"m", "probs"}, "distribution");
    const int m = detail::get_m(j, "distribution");
    if (!j.at("probs").is_object()) throw ParseError("distribution: field 'probs' must be an object");
    std::map<SubsetMask, Rat> values;
    for (const auto& [key, v] : j.at("probs").items()) {
        SubsetMask s;
        try {
            s = parse_subset_key(key, m);
        } catch (const std::exception& e) {
            throw ParseError(std::string("distribution: field 'probs': ") + e.what());
        }
        if (values.count(s)) throw ParseError("distribution: duplicate key '" + key + "'");
        if (!v.is_string()) throw ParseError("distribution: values must be rational strings");
        Rat r;
        try {
            r = parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("distribution: field 'probs': ") + e.what());
        }
        if (r < 0) throw ParseError("distribution: negative value at '" + key + "'");
        values[s] = r;
    }
    return Distribution(m, std::move(values));
}

inline json to_json(const Distribution& d) {
    json probs = json::object();
    for (const auto& [s, v] : d.values()) probs[s.to_key()] = format_rational(v);
    return json{{"m", d.m()}, {"probs", probs}};
}

// certificate: {"schema_version": 1, "clique_params": {...},
//               "dependent_trace": [{"set": "1,2,3,4", "i": 2, "j": 4}]}
inline json to_json(const FactorizationCertificate& cert) {
    json params = json::object();
    for (const auto& [s, v] : cert.clique_params) params[s.to_key()] = format_rational(v);
    json trace = json::array();
    for (const auto& step : cert.dependent_trace)
        trace.push_back(json{{"set", step.set.to_key()}, {"i", step.i}, {"j", step.j}});
    return json{{"schema_version", kSchemaVersion}, {"clique_params", params}, {"dependent_trace", trace}};
}

inline FactorizationCertificate parse_certificate(const json& j, int m) {
    detail::expect_keys(j, {"schema_version", "clique_params", "dependent_trace"}, "certificate");
    if (!j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != kSchemaVersion)
        throw ParseError("certificate: unsupported schema_version");
    FactorizationCertificate cert;
    if (!j.at("clique_params").is_object())
        throw ParseError("certificate: field 'clique_params' must be an object");
    for (const auto& [key, v] : j.at("clique_params").items()) {
        SubsetMask s;
        try {
            s = parse_subset_key(key, m);
        } catch (const std::exception& e) {
            throw ParseError(std::string("certificate: field 'clique_params': ") + e.what());
        }
        if (!v.is_string()) throw ParseError("certificate: parameter values must be rational strings");
        cert.clique_params[s] = parse_rational(v.get<std::string>());
    }
    if (!j.at("dependent_trace").is_array())
        throw ParseError("certificate: field 'dependent_trace' must be an array");
    for (const auto& e : j.at("dependent_trace")) {
        detail::expect_keys(e, {"set", "i", "j"}, "certificate: dependent_trace entry");
        FactorizationCertificate::DependentStep step;
        step.set = detail::get_subset(e.at("set"), m, "certificate: dependent_trace");
        if (!e.at("i").is_number_integer() || !e.at("j").is_number_integer())
            throw ParseError("certificate: dependent_trace i/j must be integers");
        step.i = e.at("i").get<int>();
        step.j = e.at("j").get<int>();
        cert.dependent_trace.push_back(step);
    }
    return cert;
}

inline json to_json(const Report& r) {
    json failures = json::array(), notes = json::array();
    for (const auto& e : r.failures) failures.push_back(json{{"check", e.check}, {"detail", e.detail}});
    for (const auto& e : r.notes) notes.push_back(json{{"check", e.check}, {"detail", e.detail}});
    return json{{"schema_version", kSchemaVersion},
                {"ok", r.ok()},
                {"failures", failures},
                {"notes", notes}};
}

} // namespace latgm::io
