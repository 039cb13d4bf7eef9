#pragma once

// Strength and completeness predicates, and the degree-sum identities that
// every self-complementary graph satisfies.

#include <map>
#include <optional>

#include "pfg/core.hpp"

namespace pfg {

/// Strength/completeness profile. Each witness names one pair that breaks the
/// corresponding flag and is empty when the flag holds.
struct Classification {
    bool is_mu_strong = true;
    bool is_nu_strong = true;
    bool is_strong = true;
    bool is_complete = true;
    bool is_complete_mu_strong = true;
    bool is_complete_nu_strong = true;

    std::optional<PairKey> mu_strong_witness;
    std::optional<PairKey> nu_strong_witness;
    std::optional<PairKey> strong_witness;
    std::optional<PairKey> complete_witness;
    std::optional<PairKey> complete_mu_strong_witness;
    std::optional<PairKey> complete_nu_strong_witness;
};

namespace detail {

inline void mark(bool& flag, std::optional<PairKey>& witness, bool ok, const PairKey& key) {
    if (!ok && flag) {
        flag = false;
        witness = key;
    }
}

}  // namespace detail

inline Classification classify(const Graph& g) {
    require_valid(g);
    Classification c;
    for (const auto& [key, q] : g.edges()) {
        const Degree b = g.bound(key.lo(), key.hi());
        const bool mu_eq = approx_eq(q.mu, b.mu);
        const bool nu_eq = approx_eq(q.nu, b.nu);
        detail::mark(c.is_mu_strong, c.mu_strong_witness, mu_eq, key);
        detail::mark(c.is_nu_strong, c.nu_strong_witness, nu_eq, key);
        detail::mark(c.is_strong, c.strong_witness, mu_eq && nu_eq, key);
    }
    // Completeness quantifies over every pair; absent pairs read as (0,0).
    for_each_pair(g, [&](const VertexId& u, const VertexId& v) {
        const PairKey key(u, v);
        const Degree b = g.bound(u, v);
        const Degree q = g.edge(u, v);
        const bool mu_eq = approx_eq(q.mu, b.mu);
        const bool nu_eq = approx_eq(q.nu, b.nu);
        detail::mark(c.is_complete, c.complete_witness, mu_eq && nu_eq, key);
        detail::mark(c.is_complete_mu_strong, c.complete_mu_strong_witness,
                     mu_eq && strictly_less(q.nu, b.nu), key);
        detail::mark(c.is_complete_nu_strong, c.complete_nu_strong_witness,
                     strictly_less(q.mu, b.mu) && nu_eq, key);
    });
    return c;
}

inline bool is_strong(const Graph& g) { return classify(g).is_strong; }
inline bool is_complete(const Graph& g) { return classify(g).is_complete; }

/// Both sides of the degree-sum identities, compared at the global tolerance.
struct SumIdentityReport {
    double lhs_mu = 0.0;
    double rhs_mu = 0.0;
    double lhs_nu = 0.0;
    double rhs_nu = 0.0;
    bool holds_mu = true;
    bool holds_nu = true;

    bool holds() const noexcept { return holds_mu && holds_nu; }
};

namespace detail {

inline SumIdentityReport sum_identity_scaled(const Graph& g, double rhs_scale) {
    require_valid(g);
    SumIdentityReport r;
    for_each_pair(g, [&](const VertexId& u, const VertexId& v) {
        const Degree q = g.edge(u, v);
        const Degree b = g.bound(u, v);
        r.lhs_mu += q.mu;
        r.lhs_nu += q.nu;
        r.rhs_mu += b.mu;
        r.rhs_nu += b.nu;
    });
    r.rhs_mu *= rhs_scale;
    r.rhs_nu *= rhs_scale;
    r.holds_mu = approx_eq(r.lhs_mu, r.rhs_mu);
    r.holds_nu = approx_eq(r.lhs_nu, r.rhs_nu);
    return r;
}

}  // namespace detail

/// Sum over pairs of edge mu (nu) against half the sum over pairs of the
/// min endpoint mu (max endpoint nu). Necessary for self-complementarity.
inline SumIdentityReport sum_identity(const Graph& g) { return detail::sum_identity_scaled(g, 0.5); }

/// Same sums without the halving, the form stated for strong graphs.
inline SumIdentityReport strong_sum_identity(const Graph& g) {
    return detail::sum_identity_scaled(g, 1.0);
}

/// The graph on all pairs with edge degree (min mu / 2, max nu / 2). Such a
/// graph is self-complementary under the identity map.
inline Graph half_strong_construction(const std::map<VertexId, Degree>& vertices) {
    GraphBuilder out;
    for (const auto& [id, d] : vertices) {
        if (!is_valid(d)) {
            throw Error(ErrorKind::ConstraintViolation,
                        "vertex '" + id + "' does not carry a valid Pythagorean degree");
        }
        out.vertex(id, d);
    }
    for (auto i = vertices.begin(); i != vertices.end(); ++i) {
        for (auto j = std::next(i); j != vertices.end(); ++j) {
            const Degree b = degree_min_max(i->second, j->second);
            out.edge(i->first, j->first, {b.mu / 2.0, b.nu / 2.0});
        }
    }
    return std::move(out).build();
}

}  // namespace pfg
