#pragma once

// Self-complementarity: g is isomorphic to one of its complements.

#include <cstdint>
#include <optional>
#include <string>

#include "pfg/algebra.hpp"
#include "pfg/morph.hpp"

namespace pfg {

enum class ComplementVariant { General, Strong, Complete };

inline const char* to_string(ComplementVariant variant) {
    switch (variant) {
        case ComplementVariant::General: return "general";
        case ComplementVariant::Strong: return "strong";
        case ComplementVariant::Complete: return "complete";
    }
    return "unknown";
}

/// The complement selected by `variant`. Strong and complete variants throw
/// NotStrong / NotComplete on inputs outside their class.
inline Graph complement_of(const Graph& g, ComplementVariant variant) {
    switch (variant) {
        case ComplementVariant::General: return complement(g);
        case ComplementVariant::Strong: return strong_complement(g);
        case ComplementVariant::Complete: return complete_complement(g);
    }
    return complement(g);
}

struct SelfComplementReport {
    ComplementVariant variant = ComplementVariant::General;
    bool self_complementary = false;
    /// g -> complement(g), when one exists.
    std::optional<Mapping> witness;
    std::uint64_t search_space = 0;
};

inline SelfComplementReport is_self_complementary(const Graph& g, ComplementVariant variant,
                                                  const SearchOptions& options = {}) {
    const Graph comp = complement_of(g, variant);
    SelfComplementReport out;
    out.variant = variant;
    // Cheap necessary condition before the search.
    if (comp.size() != g.size()) return out;
    auto found = find_morphism(g, comp, MorphismKind::Isomorphism, options);
    out.self_complementary = found.found;
    out.witness = std::move(found.witness);
    out.search_space = found.search_space;
    return out;
}

}  // namespace pfg
