#pragma once

// Seeded random PFGs for property suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfg/classify.hpp"
#include "pfg/core.hpp"

namespace pfg {

enum class Family { General, Strong, Complete, HalfStrong };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::General: return "general";
        case Family::Strong: return "strong";
        case Family::Complete: return "complete";
        case Family::HalfStrong: return "half_strong";
    }
    return "unknown";
}

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n_vertices = 1;
    double edge_probability = 0.5;
    Family family = Family::General;
    /// Round degrees to this many decimals.
    std::optional<int> quantize;
    /// Vertices are named prefix + index.
    std::string label_prefix = "v";
};

namespace detail {

// Uniform in [0,1) from the top 53 bits; identical on every platform, unlike
// std::uniform_real_distribution.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double round_to(double x, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(x * scale) / scale;
}

inline Degree draw_vertex(std::mt19937_64& rng, const std::optional<int>& quantize) {
    for (;;) {
        const double mu = u01(rng);
        const double nu = u01(rng) * std::sqrt(std::max(0.0, 1.0 - mu * mu));
        Degree d{mu, nu};
        if (quantize) d = {round_to(mu, *quantize), round_to(nu, *quantize)};
        if (is_valid(d)) return d;
    }
}

}  // namespace detail

/// Deterministic in cfg.
inline Graph generate(const GenConfig& cfg) {
    if (!(cfg.edge_probability >= 0.0 && cfg.edge_probability <= 1.0)) {
        throw std::invalid_argument("edge_probability must lie in [0,1]");
    }
    if (cfg.quantize && *cfg.quantize < 0) throw std::invalid_argument("quantize must be >= 0");

    std::mt19937_64 rng(cfg.seed);
    std::map<VertexId, Degree> vertices;
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < cfg.n_vertices; ++i) {
        ids.push_back(cfg.label_prefix + std::to_string(i));
        vertices.emplace(ids.back(), detail::draw_vertex(rng, cfg.quantize));
    }
    if (cfg.family == Family::HalfStrong) return half_strong_construction(vertices);

    GraphBuilder out;
    for (const auto& [id, d] : vertices) out.vertex(id, d);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const Degree b = degree_min_max(vertices.at(ids[i]), vertices.at(ids[j]));
            switch (cfg.family) {
                case Family::Complete:
                    out.edge(ids[i], ids[j], b);
                    break;
                case Family::Strong:
                    if (detail::u01(rng) < cfg.edge_probability) out.edge(ids[i], ids[j], b);
                    break;
                case Family::General: {
                    if (detail::u01(rng) >= cfg.edge_probability) break;
                    Degree e{detail::u01(rng) * b.mu, detail::u01(rng) * b.nu};
                    if (cfg.quantize) {
                        e = {detail::round_to(e.mu, *cfg.quantize),
                             detail::round_to(e.nu, *cfg.quantize)};
                    }
                    out.edge(ids[i], ids[j], e);
                    break;
                }
                case Family::HalfStrong:
                    break;
            }
        }
    }
    return std::move(out).build();
}

}  // namespace pfg
