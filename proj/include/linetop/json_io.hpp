#pragma once

#include <fstream>

#include <json.hpp>

#include "generators.hpp"

namespace linetop {

using Json = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                                const char* where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) fail(Errc::BadParams, std::string("unknown key \"") + key + "\" in " + where);
    }
}

inline void require_version(const Json& j, const char* where) {
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
        fail(Errc::BadParams, std::string(where) + " must carry \"version\": 1");
}

}  // namespace detail

inline Json space_to_json(const Space& s) {
    Json j;
    j["version"] = 1;
    j["points"] = s.point_count();
    Json edges = Json::array();
    for (auto [u, v] : s.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    Json basis;
    const BasisSpec& spec = s.basis_spec();
    switch (spec.kind) {
        case BasisSpec::Kind::Balls:
            basis["kind"] = "balls";
            basis["radii"] = spec.radii;
            break;
        case BasisSpec::Kind::ShortIntervals:
            basis["kind"] = "short_intervals";
            basis["window"] = spec.window;
            break;
        case BasisSpec::Kind::Explicit: {
            basis["kind"] = "explicit";
            Json sets = Json::array();
            for (const auto& b : s.basis()) sets.push_back(b.ids());
            basis["sets"] = std::move(sets);
            break;
        }
    }
    j["basis"] = std::move(basis);
    return j;
}

inline Space space_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::BadParams, "space file must hold a JSON object");
    detail::reject_unknown_keys(j, {"version", "points", "edges", "basis"}, "space file");
    detail::require_version(j, "space file");
    if (!j.contains("points") || !j["points"].is_number_integer())
        fail(Errc::BadParams, "space file needs an integer \"points\"");
    if (!j.contains("edges") || !j["edges"].is_array())
        fail(Errc::BadParams, "space file needs an \"edges\" array");
    if (!j.contains("basis") || !j["basis"].is_object())
        fail(Errc::BadParams, "space file needs a \"basis\" object");

    int points = j["points"].get<int>();
    std::vector<std::pair<PointId, PointId>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(Errc::BadParams, "each edge must be a pair of integers");
        edges.emplace_back(e[0].get<PointId>(), e[1].get<PointId>());
    }

    const Json& basis = j["basis"];
    if (!basis.contains("kind") || !basis["kind"].is_string())
        fail(Errc::BadParams, "basis needs a \"kind\" string");
    std::string kind = basis["kind"].get<std::string>();
    BasisSpec spec;
    if (kind == "balls") {
        detail::reject_unknown_keys(basis, {"kind", "radii"}, "basis");
        if (!basis.contains("radii") || !basis["radii"].is_array())
            fail(Errc::BadParams, "ball basis needs a \"radii\" array");
        spec = BasisSpec::balls(basis["radii"].get<std::vector<int>>());
    } else if (kind == "short_intervals") {
        detail::reject_unknown_keys(basis, {"kind", "window"}, "basis");
        if (!basis.contains("window") || !basis["window"].is_number_integer())
            fail(Errc::BadParams, "short-interval basis needs an integer \"window\"");
        spec = BasisSpec::short_intervals(basis["window"].get<int>());
    } else if (kind == "explicit") {
        detail::reject_unknown_keys(basis, {"kind", "sets"}, "basis");
        if (!basis.contains("sets") || !basis["sets"].is_array())
            fail(Errc::BadParams, "explicit basis needs a \"sets\" array");
        std::vector<VertexSet> sets;
        for (const auto& raw : basis["sets"]) {
            if (!raw.is_array()) fail(Errc::BadParams, "each basis set must be an array");
            sets.emplace_back(raw.get<std::vector<PointId>>());
        }
        spec = BasisSpec::explicit_sets(std::move(sets));
    } else {
        fail(Errc::BadParams, "unknown basis kind: " + kind);
    }
    return build_space(points, edges, spec);
}

inline Json betweenness_to_json(const BetweennessRelation& rel) {
    Json j;
    j["version"] = 1;
    j["points"] = rel.points();
    Json triples = Json::array();
    for (const auto& t : rel.triples()) triples.push_back(Json::array({t[0], t[1], t[2]}));
    j["triples"] = std::move(triples);
    return j;
}

inline BetweennessRelation betweenness_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::BadParams, "betweenness file must hold a JSON object");
    detail::reject_unknown_keys(j, {"version", "points", "triples"}, "betweenness file");
    detail::require_version(j, "betweenness file");
    if (!j.contains("points") || !j["points"].is_number_integer())
        fail(Errc::BadParams, "betweenness file needs an integer \"points\"");
    if (!j.contains("triples") || !j["triples"].is_array())
        fail(Errc::BadParams, "betweenness file needs a \"triples\" array");
    std::vector<std::array<PointId, 3>> triples;
    for (const auto& t : j["triples"]) {
        if (!t.is_array() || t.size() != 3)
            fail(Errc::BadParams, "each triple must be an array of three integers");
        triples.push_back({t[0].get<PointId>(), t[1].get<PointId>(), t[2].get<PointId>()});
    }
    return BetweennessRelation(j["points"].get<int>(), triples);
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadParams, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(Errc::BadParams, "invalid JSON in " + path);
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::BadParams, "cannot write " + path);
    out << text;
}

}  // namespace linetop
