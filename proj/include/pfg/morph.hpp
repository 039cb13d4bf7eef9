#pragma once

// Homomorphisms, isomorphisms, weak and co-weak isomorphisms between PFGs.
//
// Edge conditions are total: they range over every unordered pair of source
// vertices, with absent edges (and the image of a pair collapsed onto a single
// vertex) reading as (0,0).
//
//   kind          bijective  vertex condition        pair condition
//   homomorphism  no         mu1 <= mu2, nu1 >= nu2  mu1 <= mu2, nu1 >= nu2
//   isomorphism   yes        equal                   equal
//   weak          yes        equal                   mu1 <= mu2, nu1 >= nu2
//   co-weak       yes        mu1 <= mu2, nu1 >= nu2  equal

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfg/core.hpp"

namespace pfg {

enum class MorphismKind { Homomorphism, Isomorphism, WeakIsomorphism, CoweakIsomorphism };

inline const char* to_string(MorphismKind kind) {
    switch (kind) {
        case MorphismKind::Homomorphism: return "homomorphism";
        case MorphismKind::Isomorphism: return "isomorphism";
        case MorphismKind::WeakIsomorphism: return "weak_isomorphism";
        case MorphismKind::CoweakIsomorphism: return "coweak_isomorphism";
    }
    return "unknown";
}

inline bool is_bijective_kind(MorphismKind kind) { return kind != MorphismKind::Homomorphism; }

using Mapping = std::map<VertexId, VertexId>;

struct MorphismReport {
    MorphismKind kind = MorphismKind::Isomorphism;
    bool found = false;
    std::optional<Mapping> witness;
    /// Search-tree nodes visited (partial assignments, including the root).
    std::uint64_t search_space = 0;
};

struct SearchOptions {
    /// Largest source graph the search accepts.
    std::size_t max_vertices = 9;
};

struct MorphismViolation {
    std::string subject;    // "vertex a1" or "pair a1-a2"
    std::string condition;  // which relation failed
};

struct VerifyResult {
    std::vector<MorphismViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

namespace detail {

inline bool vertex_condition(MorphismKind kind, const Degree& a, const Degree& b) {
    switch (kind) {
        case MorphismKind::Isomorphism:
        case MorphismKind::WeakIsomorphism:
            return approx_eq(a, b);
        case MorphismKind::Homomorphism:
        case MorphismKind::CoweakIsomorphism:
            return approx_le(a.mu, b.mu) && approx_le(b.nu, a.nu);
    }
    return false;
}

inline bool pair_condition(MorphismKind kind, const Degree& a, const Degree& b) {
    switch (kind) {
        case MorphismKind::Isomorphism:
        case MorphismKind::CoweakIsomorphism:
            return approx_eq(a, b);
        case MorphismKind::Homomorphism:
        case MorphismKind::WeakIsomorphism:
            return approx_le(a.mu, b.mu) && approx_le(b.nu, a.nu);
    }
    return false;
}

inline const char* vertex_condition_text(MorphismKind kind) {
    return (kind == MorphismKind::Isomorphism || kind == MorphismKind::WeakIsomorphism)
               ? "vertex degrees must be equal"
               : "vertex mu must not decrease and vertex nu must not increase";
}

inline const char* pair_condition_text(MorphismKind kind) {
    return (kind == MorphismKind::Isomorphism || kind == MorphismKind::CoweakIsomorphism)
               ? "edge degrees must be equal"
               : "edge mu must not decrease and edge nu must not increase";
}

// Index-addressed copy of a graph for the search loops.
struct DenseGraph {
    std::vector<VertexId> ids;
    std::vector<Degree> vertex;
    std::vector<Degree> pair;  // n*n, diagonal (0,0)

    explicit DenseGraph(const Graph& g) : ids(g.vertex_ids()) {
        const std::size_t n = ids.size();
        vertex.reserve(n);
        for (const auto& id : ids) vertex.push_back(g.vertex(id));
        pair.assign(n * n, Degree{});
        std::map<VertexId, std::size_t> index;
        for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;
        for (const auto& [key, d] : g.edges()) {
            const std::size_t a = index.at(key.lo());
            const std::size_t b = index.at(key.hi());
            pair[a * n + b] = d;
            pair[b * n + a] = d;
        }
    }

    std::size_t size() const noexcept { return ids.size(); }
    const Degree& edge(std::size_t a, std::size_t b) const { return pair[a * ids.size() + b]; }
};

// Kuhn's augmenting-path matching on the vertex-compatibility relation.
inline bool has_perfect_matching(const std::vector<std::vector<char>>& compat, std::size_t n) {
    std::vector<int> match_of_target(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        auto augment = [&](auto&& self, std::size_t src) -> bool {
            for (std::size_t t = 0; t < n; ++t) {
                if (!compat[src][t] || seen[t]) continue;
                seen[t] = 1;
                if (match_of_target[t] < 0 ||
                    self(self, static_cast<std::size_t>(match_of_target[t]))) {
                    match_of_target[t] = static_cast<int>(src);
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, s)) return false;
    }
    return true;
}

class MorphismSearch {
public:
    MorphismSearch(const DenseGraph& g1, const DenseGraph& g2, MorphismKind kind)
        : g1_(g1), g2_(g2), kind_(kind), bijective_(is_bijective_kind(kind)),
          assign_(g1.size(), 0), used_(g2.size(), 0),
          compat_(g1.size(), std::vector<char>(g2.size(), 0)) {
        for (std::size_t i = 0; i < g1.size(); ++i) {
            for (std::size_t j = 0; j < g2.size(); ++j) {
                compat_[i][j] = vertex_condition(kind, g1.vertex[i], g2.vertex[j]) ? 1 : 0;
            }
        }
    }

    bool run() {
        if (!globally_feasible()) return false;
        return extend(0);
    }

    const std::vector<std::size_t>& assignment() const noexcept { return assign_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool globally_feasible() const {
        if (bijective_) return has_perfect_matching(compat_, g1_.size());
        for (std::size_t i = 0; i < g1_.size(); ++i) {
            bool any = false;
            for (std::size_t j = 0; j < g2_.size() && !any; ++j) any = compat_[i][j] != 0;
            if (!any) return false;
        }
        return true;
    }

    // Every unplaced source vertex still has an unused compatible target.
    bool remaining_feasible(std::size_t next) const {
        for (std::size_t r = next; r < g1_.size(); ++r) {
            bool any = false;
            for (std::size_t j = 0; j < g2_.size() && !any; ++j) {
                any = compat_[r][j] && !used_[j];
            }
            if (!any) return false;
        }
        return true;
    }

    bool consistent(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < i; ++k) {
            const std::size_t jk = assign_[k];
            const Degree target = (jk == j) ? Degree{} : g2_.edge(jk, j);
            if (!pair_condition(kind_, g1_.edge(k, i), target)) return false;
        }
        return true;
    }

    bool extend(std::size_t i) {
        ++nodes_;
        if (i == g1_.size()) return true;
        for (std::size_t j = 0; j < g2_.size(); ++j) {
            if (bijective_ && used_[j]) continue;
            if (!compat_[i][j] || !consistent(i, j)) continue;
            assign_[i] = j;
            used_[j] = 1;
            const bool viable = !bijective_ || remaining_feasible(i + 1);
            if (viable && extend(i + 1)) return true;
            used_[j] = 0;
        }
        return false;
    }

    const DenseGraph& g1_;
    const DenseGraph& g2_;
    MorphismKind kind_;
    bool bijective_;
    std::vector<std::size_t> assign_;
    std::vector<char> used_;
    std::vector<std::vector<char>> compat_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Searches for a morphism of the given kind from g1 to g2.
///
/// Backtracking assigns source vertices in label order and tries targets in
/// label order, so the witness returned is the lexicographically least one.
/// Subtrees are cut when a vertex or pair condition fails or when some
/// remaining source vertex has no compatible target left.
inline MorphismReport find_morphism(const Graph& g1, const Graph& g2, MorphismKind kind,
                                    const SearchOptions& options = {}) {
    require_valid(g1, "source graph");
    require_valid(g2, "target graph");
    MorphismReport report;
    report.kind = kind;
    if (is_bijective_kind(kind) && g1.order() != g2.order()) return report;
    if (g1.order() > options.max_vertices) {
        throw Error(ErrorKind::SearchCapExceeded,
                    "source graph has " + std::to_string(g1.order()) +
                        " vertices; the search cap is " + std::to_string(options.max_vertices));
    }
    const detail::DenseGraph d1(g1);
    const detail::DenseGraph d2(g2);
    detail::MorphismSearch search(d1, d2, kind);
    report.found = search.run();
    report.search_space = search.nodes();
    if (report.found) {
        Mapping witness;
        for (std::size_t i = 0; i < d1.size(); ++i) {
            witness.emplace(d1.ids[i], d2.ids[search.assignment()[i]]);
        }
        report.witness = std::move(witness);
    }
    return report;
}

/// Checks a concrete mapping against the conditions of `kind`.
inline VerifyResult verify_morphism(const Graph& g1, const Graph& g2, MorphismKind kind,
                                    const Mapping& map) {
    for (const auto& [src, dst] : map) {
        if (!g1.has_vertex(src)) {
            throw Error(ErrorKind::UnknownVertex, "mapping source '" + src + "' is not in the source graph");
        }
        if (!g2.has_vertex(dst)) {
            throw Error(ErrorKind::UnknownVertex, "mapping target '" + dst + "' is not in the target graph");
        }
    }
    VerifyResult result;
    for (const auto& [id, _] : g1.vertices()) {
        if (map.count(id) == 0) result.violations.push_back({"vertex " + id, "vertex is not mapped"});
    }
    if (!result.ok()) return result;

    if (is_bijective_kind(kind)) {
        if (g1.order() != g2.order()) {
            result.violations.push_back({"graph", "vertex counts differ, no bijection exists"});
        }
        std::map<VertexId, VertexId> preimage;
        for (const auto& [src, dst] : map) {
            auto [it, inserted] = preimage.emplace(dst, src);
            if (!inserted) {
                result.violations.push_back({"vertex " + src, "shares image '" + dst +
                                                                  "' with vertex " + it->second});
            }
        }
    }
    for (const auto& [id, d] : g1.vertices()) {
        if (!detail::vertex_condition(kind, d, g2.vertex(map.at(id)))) {
            result.violations.push_back({"vertex " + id, detail::vertex_condition_text(kind)});
        }
    }
    for_each_pair(g1, [&](const VertexId& u, const VertexId& v) {
        const VertexId& gu = map.at(u);
        const VertexId& gv = map.at(v);
        if (!detail::pair_condition(kind, g1.edge(u, v), g2.edge(gu, gv))) {
            result.violations.push_back({"pair " + PairKey(u, v).str(), detail::pair_condition_text(kind)});
        }
    });
    return result;
}

/// The inverse of a bijective mapping.
inline Mapping invert(const Mapping& map) {
    Mapping inverse;
    for (const auto& [src, dst] : map) inverse.emplace(dst, src);
    return inverse;
}

/// second after first.
inline Mapping compose(const Mapping& first, const Mapping& second) {
    Mapping out;
    for (const auto& [src, mid] : first) out.emplace(src, second.at(mid));
    return out;
}

}  // namespace pfg
