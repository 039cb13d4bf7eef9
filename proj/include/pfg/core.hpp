#pragma once

// Pythagorean fuzzy degrees and graphs.
//
// A degree is a (mu, nu) pair of membership and non-membership values with
// mu^2 + nu^2 <= 1. A graph assigns a degree to every vertex and to every
// edge; edges are stored under a canonical unordered key, so the relation is
// symmetric by construction.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfg {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
    ConstraintViolation,
    LabelClash,
    JoinOverlap,
    NotStrong,
    NotComplete,
    SearchCapExceeded,
    UnknownVertex,
    MalformedDocument,
    DuplicateVertex,
    DuplicateEdge,
    DanglingEdge,
    InvalidLabel,
    SelfLoop,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::LabelClash: return "LabelClash";
        case ErrorKind::JoinOverlap: return "JoinOverlap";
        case ErrorKind::NotStrong: return "NotStrong";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::MalformedDocument: return "MalformedDocument";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::DanglingEdge: return "DanglingEdge";
        case ErrorKind::InvalidLabel: return "InvalidLabel";
        case ErrorKind::SelfLoop: return "SelfLoop";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Tolerance
// ---------------------------------------------------------------------------

inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {
inline std::atomic<double>& tolerance_slot() {
    static std::atomic<double> slot{kDefaultTolerance};
    return slot;
}
}  // namespace detail

/// Absolute tolerance used by every comparison in predicates and invariants.
inline double tolerance() { return detail::tolerance_slot().load(std::memory_order_relaxed); }

inline void set_tolerance(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("tolerance must be a finite non-negative number");
    }
    detail::tolerance_slot().store(eps, std::memory_order_relaxed);
}

inline bool approx_eq(double a, double b) { return std::abs(a - b) <= tolerance(); }
inline bool approx_le(double a, double b) { return a <= b + tolerance(); }
inline bool approx_zero(double a) { return std::abs(a) <= tolerance(); }
/// Strict inequality that requires a gap wider than the tolerance.
inline bool strictly_less(double a, double b) { return a < b - tolerance(); }

// ---------------------------------------------------------------------------
// Degrees
// ---------------------------------------------------------------------------

struct Degree {
    double mu = 0.0;
    double nu = 0.0;

    friend bool operator==(const Degree&, const Degree&) = default;
};

inline bool in_unit_range(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

inline bool is_pythagorean(const Degree& d) {
    return approx_le(d.mu * d.mu + d.nu * d.nu, 1.0);
}

inline bool is_valid(const Degree& d) {
    return in_unit_range(d.mu) && in_unit_range(d.nu) && is_pythagorean(d);
}

inline bool approx_eq(const Degree& a, const Degree& b) {
    return approx_eq(a.mu, b.mu) && approx_eq(a.nu, b.nu);
}

/// (0,0) on an edge means "no edge".
inline bool is_null(const Degree& d) { return approx_zero(d.mu) && approx_zero(d.nu); }

/// Hesitation degree sqrt(1 - mu^2 - nu^2).
inline double hesitation(const Degree& d) {
    const double radicand = 1.0 - d.mu * d.mu - d.nu * d.nu;
    if (radicand < -tolerance()) {
        throw Error(ErrorKind::ConstraintViolation,
                    "mu^2 + nu^2 exceeds 1 for degree (" + std::to_string(d.mu) + ", " +
                        std::to_string(d.nu) + ")");
    }
    if (radicand <= tolerance()) return 0.0;
    return std::sqrt(radicand);
}

/// Intersection-style combine: (min mu, max nu).
inline Degree degree_min_max(const Degree& a, const Degree& b) {
    return {std::min(a.mu, b.mu), std::max(a.nu, b.nu)};
}

/// Union-style combine: (max mu, min nu).
inline Degree degree_max_min(const Degree& a, const Degree& b) {
    return {std::max(a.mu, b.mu), std::min(a.nu, b.nu)};
}

// ---------------------------------------------------------------------------
// Vertex ids and pair keys
// ---------------------------------------------------------------------------

using VertexId = std::string;

/// Canonical unordered vertex pair, lo < hi.
class PairKey {
public:
    PairKey(VertexId u, VertexId v) {
        if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop on vertex '" + u + "'");
        if (v < u) std::swap(u, v);
        lo_ = std::move(u);
        hi_ = std::move(v);
    }

    const VertexId& lo() const noexcept { return lo_; }
    const VertexId& hi() const noexcept { return hi_; }

    bool contains(const VertexId& x) const { return x == lo_ || x == hi_; }

    std::string str() const { return lo_ + "-" + hi_; }

    friend auto operator<=>(const PairKey&, const PairKey&) = default;

private:
    VertexId lo_;
    VertexId hi_;
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

class GraphBuilder;

/// Immutable Pythagorean fuzzy graph. Build one with GraphBuilder.
///
/// The container accepts arbitrary candidate data (out-of-range degrees,
/// dangling edges); validate() decides whether it is a PFG.
class Graph {
public:
    using VertexMap = std::map<VertexId, Degree>;
    using EdgeMap = std::map<PairKey, Degree>;

    Graph() = default;

    const VertexMap& vertices() const noexcept { return vertices_; }
    const EdgeMap& edges() const noexcept { return edges_; }

    std::size_t order() const noexcept { return vertices_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    bool has_vertex(const VertexId& v) const { return vertices_.count(v) != 0; }

    const Degree& vertex(const VertexId& v) const {
        auto it = vertices_.find(v);
        if (it == vertices_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'");
        return it->second;
    }

    bool has_edge(const VertexId& u, const VertexId& v) const {
        return u != v && edges_.count(PairKey(u, v)) != 0;
    }

    /// Edge degree; absent pairs (and u == v) read as (0,0).
    Degree edge(const VertexId& u, const VertexId& v) const {
        if (u == v) return {};
        auto it = edges_.find(PairKey(u, v));
        return it == edges_.end() ? Degree{} : it->second;
    }

    /// The Eq.-(20) bound of a pair: (min of endpoint mu, max of endpoint nu).
    Degree bound(const VertexId& u, const VertexId& v) const {
        return degree_min_max(vertex(u), vertex(v));
    }

    std::vector<VertexId> vertex_ids() const {
        std::vector<VertexId> ids;
        ids.reserve(vertices_.size());
        for (const auto& [id, _] : vertices_) ids.push_back(id);
        return ids;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    VertexMap vertices_;
    EdgeMap edges_;
};

class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(Graph seed) : graph_(std::move(seed)) {}

    GraphBuilder& vertex(VertexId id, Degree d) {
        if (id.empty()) throw Error(ErrorKind::InvalidLabel, "vertex id must be non-empty");
        auto [it, inserted] = graph_.vertices_.emplace(std::move(id), d);
        if (!inserted) throw Error(ErrorKind::DuplicateVertex, "duplicate vertex '" + it->first + "'");
        return *this;
    }

    /// Adds an edge. A (0,0) degree means "no edge" and is dropped.
    GraphBuilder& edge(VertexId u, VertexId v, Degree d) {
        PairKey key(std::move(u), std::move(v));
        if (graph_.edges_.count(key) != 0) {
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + key.str());
        }
        if (!is_null(d)) graph_.edges_.emplace(std::move(key), d);
        return *this;
    }

    /// Inserts or overwrites; (0,0) erases.
    GraphBuilder& set_edge(VertexId u, VertexId v, Degree d) {
        PairKey key(std::move(u), std::move(v));
        if (is_null(d)) {
            graph_.edges_.erase(key);
        } else {
            graph_.edges_.insert_or_assign(std::move(key), d);
        }
        return *this;
    }

    Graph build() const& { return graph_; }
    Graph build() && { return std::move(graph_); }

private:
    Graph graph_;
};

/// Degreewise comparison of two graphs within the tolerance; absent edges read as (0,0).
inline bool approx_equal(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    for (const auto& [id, d] : a.vertices()) {
        if (!b.has_vertex(id) || !approx_eq(d, b.vertex(id))) return false;
    }
    for (const auto& [key, d] : a.edges()) {
        if (!approx_eq(d, b.edge(key.lo(), key.hi()))) return false;
    }
    for (const auto& [key, d] : b.edges()) {
        if (!approx_eq(d, a.edge(key.lo(), key.hi()))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ViolationKind {
    OutOfRange,        // a component outside [0,1] or non-finite
    NotPythagorean,    // mu^2 + nu^2 > 1
    DanglingEdge,      // endpoint not a vertex
    EdgeMuAboveBound,  // mu_Q(uv) > min(mu_P(u), mu_P(v))
    EdgeNuAboveBound,  // nu_Q(uv) > max(nu_P(u), nu_P(v))
};

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::OutOfRange: return "OutOfRange";
        case ViolationKind::NotPythagorean: return "NotPythagorean";
        case ViolationKind::DanglingEdge: return "DanglingEdge";
        case ViolationKind::EdgeMuAboveBound: return "EdgeMuAboveBound";
        case ViolationKind::EdgeNuAboveBound: return "EdgeNuAboveBound";
    }
    return "Unknown";
}

struct Violation {
    ViolationKind kind;
    std::string subject;  // "vertex a" or "edge a-b"
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void check_degree(const Degree& d, const std::string& subject, ValidationReport& report) {
    if (!in_unit_range(d.mu) || !in_unit_range(d.nu)) {
        report.violations.push_back({ViolationKind::OutOfRange, subject,
                                     "degree (" + fmt(d.mu) + ", " + fmt(d.nu) +
                                         ") has a component outside [0,1]"});
        return;
    }
    if (!is_pythagorean(d)) {
        report.violations.push_back({ViolationKind::NotPythagorean, subject,
                                     "mu^2 + nu^2 = " + fmt(d.mu * d.mu + d.nu * d.nu) +
                                         " exceeds 1"});
    }
}

}  // namespace detail

/// Lists every violated PFG constraint. An empty report means g is a PFG.
inline ValidationReport validate(const Graph& g) {
    ValidationReport report;
    for (const auto& [id, d] : g.vertices()) detail::check_degree(d, "vertex " + id, report);
    for (const auto& [key, d] : g.edges()) {
        const std::string subject = "edge " + key.str();
        detail::check_degree(d, subject, report);
        const bool has_lo = g.has_vertex(key.lo());
        const bool has_hi = g.has_vertex(key.hi());
        if (!has_lo || !has_hi) {
            report.violations.push_back({ViolationKind::DanglingEdge, subject,
                                         "endpoint '" + (has_lo ? key.hi() : key.lo()) +
                                             "' is not a vertex"});
            continue;
        }
        const Degree b = g.bound(key.lo(), key.hi());
        if (!approx_le(d.mu, b.mu)) {
            report.violations.push_back({ViolationKind::EdgeMuAboveBound, subject,
                                         "edge mu " + detail::fmt(d.mu) + " > min endpoint mu " +
                                             detail::fmt(b.mu)});
        }
        if (!approx_le(d.nu, b.nu)) {
            report.violations.push_back({ViolationKind::EdgeNuAboveBound, subject,
                                         "edge nu " + detail::fmt(d.nu) + " > max endpoint nu " +
                                             detail::fmt(b.nu)});
        }
    }
    return report;
}

inline bool is_pfg(const Graph& g) { return validate(g).valid(); }

/// Raised when an operation receives a graph that is not a PFG.
class InvalidGraphError : public Error {
public:
    InvalidGraphError(const std::string& what, ValidationReport report)
        : Error(ErrorKind::ConstraintViolation, what), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

inline void require_valid(const Graph& g, const char* role = "input graph") {
    auto report = validate(g);
    if (!report.valid()) {
        const auto& first = report.violations.front();
        std::string what = std::string(role) + " is not a Pythagorean fuzzy graph: " + first.subject + ": " + first.detail;
        throw InvalidGraphError(what, std::move(report));
    }
}

/// Calls fn(u, v) for every unordered pair of distinct vertices, in key order.
template <class Fn>
void for_each_pair(const Graph& g, Fn&& fn) {
    for (auto i = g.vertices().begin(); i != g.vertices().end(); ++i) {
        for (auto j = std::next(i); j != g.vertices().end(); ++j) fn(i->first, j->first);
    }
}

}  // namespace pfg
