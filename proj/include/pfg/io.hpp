#pragma once

// JSON graph documents, report serializers, and DOT export.
//
// Document layout:
//   {"format_version": 1,
//    "vertices": [{"id": "a", "mu": 0.5, "nu": 0.7}, ...],
//    "edges":    [{"u": "a", "v": "b", "mu": 0.4, "nu": 0.7}, ...]}

#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pfg/classify.hpp"
#include "pfg/core.hpp"
#include "pfg/morph.hpp"
#include "pfg/self_complement.hpp"

namespace pfg {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct ParseResult {
    Graph graph;
    std::vector<std::string> warnings;
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) {
    throw Error(ErrorKind::MalformedDocument, what);
}

inline const Json& member(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) malformed(where + ": missing field '" + key + "'");
    return *it;
}

inline std::string string_member(const Json& obj, const char* key, const std::string& where) {
    const Json& v = member(obj, key, where);
    if (!v.is_string()) malformed(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline double number_member(const Json& obj, const char* key, const std::string& where) {
    const Json& v = member(obj, key, where);
    if (!v.is_number()) malformed(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

inline const Json& array_member(const Json& obj, const char* key) {
    const Json& v = member(obj, key, "document");
    if (!v.is_array()) malformed(std::string("document: field '") + key + "' must be an array");
    return v;
}

inline ParseResult parse_document(std::string_view text, bool strict) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) malformed("document must be a JSON object");
    const Json& version = member(doc, "format_version", "document");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        malformed("unsupported format_version; expected " + std::to_string(kFormatVersion));
    }

    ParseResult result;
    GraphBuilder builder;
    ValidationReport ranges;

    const Json& vertices = array_member(doc, "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const Json& item = vertices[i];
        if (!item.is_object()) malformed(where + " must be an object");
        VertexId id = string_member(item, "id", where);
        const Degree d{number_member(item, "mu", where), number_member(item, "nu", where)};
        if (id.empty()) malformed(where + ": id must be non-empty");
        if (!in_unit_range(d.mu) || !in_unit_range(d.nu)) check_degree(d, "vertex " + id, ranges);
        builder.vertex(std::move(id), d);
    }
    const Graph vertex_only = builder.build();
    std::set<PairKey> seen;
    const Json& edges = array_member(doc, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const Json& item = edges[i];
        if (!item.is_object()) malformed(where + " must be an object");
        const VertexId u = string_member(item, "u", where);
        const VertexId v = string_member(item, "v", where);
        const Degree d{number_member(item, "mu", where), number_member(item, "nu", where)};
        if (u == v) throw Error(ErrorKind::SelfLoop, where + ": self-loop on '" + u + "'");
        PairKey key(u, v);
        if (!seen.insert(key).second) {
            throw Error(ErrorKind::DuplicateEdge, where + ": duplicate edge " + key.str());
        }
        if (strict && (!vertex_only.has_vertex(u) || !vertex_only.has_vertex(v))) {
            throw Error(ErrorKind::DanglingEdge, where + ": endpoint '" +
                                                     (vertex_only.has_vertex(u) ? v : u) +
                                                     "' is not a declared vertex");
        }
        if (!in_unit_range(d.mu) || !in_unit_range(d.nu)) {
            check_degree(d, "edge " + key.str(), ranges);
        } else if (is_null(d)) {
            result.warnings.push_back(where + ": edge " + key.str() +
                                      " has degree (0,0) and was dropped");
            continue;
        }
        builder.edge(u, v, d);
    }
    result.graph = std::move(builder).build();

    if (strict) {
        if (!ranges.valid()) {
            std::string what = "degree outside [0,1]: " + ranges.violations.front().subject;
            throw InvalidGraphError(std::move(what), std::move(ranges));
        }
        require_valid(result.graph, "document");
    }
    return result;
}

inline std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline bool plain_dot_id(const std::string& id) {
    if (id.empty() || std::isdigit(static_cast<unsigned char>(id[0]))) return false;
    for (char c : id) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string dot_id(const std::string& id) {
    return plain_dot_id(id) ? id : "\"" + dot_escape(id) + "\"";
}

}  // namespace detail

/// Parses and validates a graph document. (0,0) edges are dropped with a
/// warning.
inline ParseResult parse_with_warnings(std::string_view text) {
    return detail::parse_document(text, true);
}

inline Graph parse(std::string_view text) { return parse_with_warnings(text).graph; }

/// Structural parse only: the graph may violate PFG constraints, including
/// dangling edges. Used to report on candidate documents.
inline ParseResult parse_candidate(std::string_view text) {
    return detail::parse_document(text, false);
}

inline Json to_json(const Graph& g) {
    Json doc;
    doc["format_version"] = kFormatVersion;
    Json vertices = Json::array();
    for (const auto& [id, d] : g.vertices()) {
        vertices.push_back({{"id", id}, {"mu", d.mu}, {"nu", d.nu}});
    }
    Json edges = Json::array();
    for (const auto& [key, d] : g.edges()) {
        edges.push_back({{"u", key.lo()}, {"v", key.hi()}, {"mu", d.mu}, {"nu", d.nu}});
    }
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc;
}

/// Deterministic document text: vertices by id, edges by key, shortest
/// round-trip numbers.
inline std::string render(const Graph& g) { return to_json(g).dump(2) + "\n"; }

inline std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (const auto& [id, d] : g.vertices()) {
        out += "  " + detail::dot_id(id) + " [label=\"" + detail::dot_escape(id) + " (" +
               detail::shortest(d.mu) + ", " + detail::shortest(d.nu) + ")\"];\n";
    }
    for (const auto& [key, d] : g.edges()) {
        out += "  " + detail::dot_id(key.lo()) + " -- " + detail::dot_id(key.hi()) + " [label=\"(" +
               detail::shortest(d.mu) + ", " + detail::shortest(d.nu) + ")\"];\n";
    }
    out += "}\n";
    return out;
}

// Report serializers --------------------------------------------------------

inline Json to_json(const ValidationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"kind", to_string(v.kind)}, {"subject", v.subject}, {"detail", v.detail}});
    }
    return {{"valid", r.valid()}, {"violations", std::move(violations)}};
}

inline Json to_json(const Classification& c) {
    auto witness = [](const std::optional<PairKey>& k) -> Json {
        return k ? Json(k->str()) : Json(nullptr);
    };
    return {{"is_mu_strong", c.is_mu_strong},
            {"is_nu_strong", c.is_nu_strong},
            {"is_strong", c.is_strong},
            {"is_complete", c.is_complete},
            {"is_complete_mu_strong", c.is_complete_mu_strong},
            {"is_complete_nu_strong", c.is_complete_nu_strong},
            {"witnesses",
             {{"mu_strong", witness(c.mu_strong_witness)},
              {"nu_strong", witness(c.nu_strong_witness)},
              {"strong", witness(c.strong_witness)},
              {"complete", witness(c.complete_witness)},
              {"complete_mu_strong", witness(c.complete_mu_strong_witness)},
              {"complete_nu_strong", witness(c.complete_nu_strong_witness)}}}};
}

inline Json to_json(const SumIdentityReport& r) {
    return {{"lhs_mu", r.lhs_mu}, {"rhs_mu", r.rhs_mu},     {"lhs_nu", r.lhs_nu},
            {"rhs_nu", r.rhs_nu}, {"holds_mu", r.holds_mu}, {"holds_nu", r.holds_nu},
            {"holds", r.holds()}};
}

inline Json to_json(const std::optional<Mapping>& m) {
    if (!m) return nullptr;
    Json out = Json::object();
    for (const auto& [src, dst] : *m) out[src] = dst;
    return out;
}

inline Json to_json(const MorphismReport& r) {
    return {{"kind", to_string(r.kind)},
            {"found", r.found},
            {"witness", to_json(r.witness)},
            {"search_space", r.search_space}};
}

inline Json to_json(const SelfComplementReport& r) {
    return {{"variant", to_string(r.variant)},
            {"self_complementary", r.self_complementary},
            {"witness", to_json(r.witness)},
            {"search_space", r.search_space}};
}

inline Json error_json(const Error& e) {
    Json out = {{"error", to_string(e.kind())}, {"message", e.what()}};
    if (auto* invalid = dynamic_cast<const InvalidGraphError*>(&e)) {
        out["violations"] = to_json(invalid->report())["violations"];
    }
    return out;
}

}  // namespace pfg
