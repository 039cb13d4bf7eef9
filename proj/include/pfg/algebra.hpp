#pragma once

// Binary and unary operations on Pythagorean fuzzy graphs. Every operation is
// a pure function: inputs are checked, never mutated, and a new graph is
// returned.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pfg/classify.hpp"
#include "pfg/core.hpp"

namespace pfg {

/// Label of a product vertex: "(left,right)".
inline VertexId product_label(const VertexId& left, const VertexId& right) {
    return "(" + left + "," + right + ")";
}

namespace detail {

inline void require_composable_labels(const Graph& g, const char* role) {
    for (const auto& [id, _] : g.vertices()) {
        if (id.find_first_of("(),") != std::string::npos) {
            throw Error(ErrorKind::LabelClash, std::string(role) + " vertex '" + id +
                                                   "' contains '(', ')' or ','; product labels "
                                                   "would be ambiguous");
        }
    }
}

// Vertices and the edges shared by the Cartesian product and the composition.
inline GraphBuilder product_base(const Graph& g1, const Graph& g2) {
    require_valid(g1, "left graph");
    require_valid(g2, "right graph");
    require_composable_labels(g1, "left graph");
    require_composable_labels(g2, "right graph");

    GraphBuilder out;
    for (const auto& [u1, d1] : g1.vertices()) {
        for (const auto& [u2, d2] : g2.vertices()) {
            out.vertex(product_label(u1, u2), degree_min_max(d1, d2));
        }
    }
    // (u,u2)(u,v2) for u in V1, u2v2 in E2
    for (const auto& [u, du] : g1.vertices()) {
        for (const auto& [key, e2] : g2.edges()) {
            out.edge(product_label(u, key.lo()), product_label(u, key.hi()),
                     degree_min_max(du, e2));
        }
    }
    // (u1,w)(v1,w) for w in V2, u1v1 in E1
    for (const auto& [key, e1] : g1.edges()) {
        for (const auto& [w, dw] : g2.vertices()) {
            out.edge(product_label(key.lo(), w), product_label(key.hi(), w),
                     degree_min_max(e1, dw));
        }
    }
    return out;
}

// bound - q, clamped at 0 when the difference is floating-point residue.
inline double complement_component(double bound, double q) {
    if (approx_zero(q)) return bound;
    const double r = bound - q;
    if (r < -tolerance()) {
        throw std::logic_error("edge component exceeds its bound; input was not a PFG");
    }
    return approx_zero(r) ? 0.0 : r;
}

}  // namespace detail

/// Cartesian product G1 x G2.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    return detail::product_base(g1, g2).build();
}

/// Composition G1[G2]: the Cartesian product plus (u1,u2)(v1,v2) for every
/// u1v1 in E1 and u2 != v2.
inline Graph composition(const Graph& g1, const Graph& g2) {
    GraphBuilder out = detail::product_base(g1, g2);
    for (const auto& [key, e1] : g1.edges()) {
        for (const auto& [u2, d_u2] : g2.vertices()) {
            for (const auto& [v2, d_v2] : g2.vertices()) {
                if (u2 == v2) continue;
                const Degree d{std::min({d_u2.mu, d_v2.mu, e1.mu}),
                               std::max({d_u2.nu, d_v2.nu, e1.nu})};
                out.edge(product_label(key.lo(), u2), product_label(key.hi(), v2), d);
            }
        }
    }
    return std::move(out).build();
}

/// Union. Shared vertices and shared edges combine as (max mu, min nu);
/// everything else is copied.
inline Graph graph_union(const Graph& g1, const Graph& g2) {
    require_valid(g1, "left graph");
    require_valid(g2, "right graph");
    GraphBuilder out;
    for (const auto& [id, d1] : g1.vertices()) {
        auto it = g2.vertices().find(id);
        out.vertex(id, it != g2.vertices().end() ? degree_max_min(d1, it->second) : d1);
    }
    for (const auto& [id, d2] : g2.vertices()) {
        if (!g1.has_vertex(id)) out.vertex(id, d2);
    }
    for (const auto& [key, e1] : g1.edges()) {
        auto it = g2.edges().find(key);
        out.edge(key.lo(), key.hi(), it != g2.edges().end() ? degree_max_min(e1, it->second) : e1);
    }
    for (const auto& [key, e2] : g2.edges()) {
        if (g1.edges().count(key) == 0) out.edge(key.lo(), key.hi(), e2);
    }
    return std::move(out).build();
}

/// Join G1 + G2 of vertex-disjoint graphs: the union plus an edge
/// (min mu, max nu) between every u in V1 and v in V2.
inline Graph join(const Graph& g1, const Graph& g2) {
    require_valid(g1, "left graph");
    require_valid(g2, "right graph");
    for (const auto& [id, _] : g1.vertices()) {
        if (g2.has_vertex(id)) {
            throw Error(ErrorKind::JoinOverlap,
                        "join requires disjoint vertex sets; '" + id + "' is in both graphs");
        }
    }
    GraphBuilder out(graph_union(g1, g2));
    for (const auto& [u, du] : g1.vertices()) {
        for (const auto& [v, dv] : g2.vertices()) out.edge(u, v, degree_min_max(du, dv));
    }
    return std::move(out).build();
}

/// Complement. Vertex degrees are kept; every unordered pair gets
/// (min mu - mu_Q, max nu - nu_Q), absent edges reading as (0,0). Pairs that
/// come out (0,0) are not edges.
inline Graph complement(const Graph& g) {
    require_valid(g);
    GraphBuilder out;
    for (const auto& [id, d] : g.vertices()) out.vertex(id, d);
    for_each_pair(g, [&](const VertexId& u, const VertexId& v) {
        const Degree b = g.bound(u, v);
        const Degree q = g.edge(u, v);
        out.edge(u, v, {detail::complement_component(b.mu, q.mu),
                        detail::complement_component(b.nu, q.nu)});
    });
    return std::move(out).build();
}

namespace detail {

// Zero where the component is positive, the full bound where it is zero.
inline Graph swap_complement(const Graph& g) {
    GraphBuilder out;
    for (const auto& [id, d] : g.vertices()) out.vertex(id, d);
    for_each_pair(g, [&](const VertexId& u, const VertexId& v) {
        const Degree b = g.bound(u, v);
        const Degree q = g.edge(u, v);
        out.edge(u, v, {approx_zero(q.mu) ? b.mu : 0.0, approx_zero(q.nu) ? b.nu : 0.0});
    });
    return std::move(out).build();
}

}  // namespace detail

/// Complement of a strong PFG. Throws NotStrong unless `force` is set.
inline Graph strong_complement(const Graph& g, bool force = false) {
    require_valid(g);
    if (!force && !is_strong(g)) {
        throw Error(ErrorKind::NotStrong, "strong complement requires a strong PFG");
    }
    return detail::swap_complement(g);
}

/// Complement of a complete PFG. Throws NotComplete unless `force` is set.
inline Graph complete_complement(const Graph& g, bool force = false) {
    require_valid(g);
    if (!force && !is_complete(g)) {
        throw Error(ErrorKind::NotComplete, "complete complement requires a complete PFG");
    }
    return detail::swap_complement(g);
}

}  // namespace pfg
