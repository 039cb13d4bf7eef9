#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracle.hpp"
#include "pfg/algebra.hpp"
#include "pfg/gen.hpp"
#include "pfg/morph.hpp"

using namespace pfg;

namespace {

constexpr MorphismKind kAllKinds[] = {MorphismKind::Homomorphism, MorphismKind::Isomorphism,
                                      MorphismKind::WeakIsomorphism, MorphismKind::CoweakIsomorphism};

// g with its vertices renamed through a seeded permutation.
Graph relabel(const Graph& g, const std::string& prefix, std::uint64_t seed, Mapping* map_out) {
    auto ids = g.vertex_ids();
    std::vector<std::size_t> perm(ids.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mapping m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = prefix + std::to_string(perm[i]);
    GraphBuilder b;
    for (const auto& [id, d] : g.vertices()) b.vertex(m.at(id), d);
    for (const auto& [key, d] : g.edges()) b.edge(m.at(key.lo()), m.at(key.hi()), d);
    if (map_out) *map_out = m;
    return std::move(b).build();
}

}  // namespace

TEST(Isomorphism, WorkedExampleWitness) {
    const auto r = find_morphism(corpus::iso_source(), corpus::iso_target(), MorphismKind::Isomorphism);
    ASSERT_TRUE(r.found);
    const Mapping expected = {{"a1", "b3"}, {"a2", "b1"}, {"a3", "b2"}, {"a4", "b4"}};
    EXPECT_EQ(*r.witness, expected);
    EXPECT_GT(r.search_space, 0u);
}

TEST(Isomorphism, WorkedExampleWitnessIsUnique) {
    std::vector<std::string> targets = {"b1", "b2", "b3", "b4"};
    int count = 0;
    do {
        const Mapping m = {{"a1", targets[0]}, {"a2", targets[1]}, {"a3", targets[2]}, {"a4", targets[3]}};
        if (verify_morphism(corpus::iso_source(), corpus::iso_target(), MorphismKind::Isomorphism, m)) ++count;
    } while (std::next_permutation(targets.begin(), targets.end()));
    EXPECT_EQ(count, 1);
}

TEST(Isomorphism, SizeMismatchIsNotFound) {
    const auto r = find_morphism(corpus::cycle4(), corpus::strong_path(), MorphismKind::Isomorphism);
    EXPECT_FALSE(r.found);
    EXPECT_EQ(r.search_space, 0u);
}

TEST(Isomorphism, EmptyGraphs) {
    const auto r = find_morphism(Graph{}, Graph{}, MorphismKind::Isomorphism);
    EXPECT_TRUE(r.found);
    EXPECT_TRUE(r.witness->empty());
}

TEST(Search, CapIsEnforced) {
    GenConfig cfg{1, 10, 0.3, Family::General, std::nullopt};
    const Graph g = generate(cfg);
    try {
        find_morphism(g, g, MorphismKind::Isomorphism);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SearchCapExceeded);
    }
    EXPECT_TRUE(find_morphism(g, g, MorphismKind::Isomorphism, {10}).found);
}

TEST(Search, InvalidInputsAreRejected) {
    const Graph bad = corpus::make({{"a", .6, .6}, {"b", .6, .6}}, {{"a", "b", .7, .1}});
    EXPECT_THROW(find_morphism(bad, bad, MorphismKind::Isomorphism), InvalidGraphError);
}

TEST(Verify, PublishedWeakAndCoweakMapsFailTheDefinitions) {
    const Mapping weak = {{"a1", "b2"}, {"a2", "b1"}};
    const auto w = verify_morphism(corpus::weak_claim_source(), corpus::weak_claim_target(),
                                   MorphismKind::WeakIsomorphism, weak);
    ASSERT_EQ(w.violations.size(), 1u);
    EXPECT_EQ(w.violations[0].subject, "pair a1-a2");

    const Mapping coweak = {{"a1", "b1"}, {"a2", "b2"}};
    const auto c = verify_morphism(corpus::coweak_claim_source(), corpus::coweak_claim_target(),
                                   MorphismKind::CoweakIsomorphism, coweak);
    ASSERT_EQ(c.violations.size(), 1u);
    EXPECT_EQ(c.violations[0].subject, "vertex a1");
}

TEST(Verify, UnknownVerticesThrow) {
    EXPECT_THROW(verify_morphism(corpus::weak_claim_source(), corpus::weak_claim_target(),
                                 MorphismKind::Homomorphism, {{"a1", "zz"}, {"a2", "b1"}}),
                 Error);
}

TEST(Verify, NonInjectiveMapIsNoBijection) {
    const Graph g = corpus::make({{"a", .5, .5}, {"b", .5, .5}}, {});
    const Mapping m = {{"a", "a"}, {"b", "a"}};
    EXPECT_TRUE(verify_morphism(g, g, MorphismKind::Homomorphism, m).ok());
    EXPECT_FALSE(verify_morphism(g, g, MorphismKind::Isomorphism, m).ok());
}

TEST(Homomorphism, CollapsedPairReadsZero) {
    // Mapping both endpoints of an edge to one vertex loses the edge, which a
    // homomorphism cannot do.
    const Graph g = corpus::make({{"a", .5, .5}, {"b", .5, .5}}, {{"a", "b", .2, .2}});
    const Mapping collapse = {{"a", "a"}, {"b", "a"}};
    EXPECT_FALSE(verify_morphism(g, g, MorphismKind::Homomorphism, collapse).ok());
}

TEST(Homomorphism, EmptyTarget) {
    EXPECT_FALSE(find_morphism(corpus::strong_path(), Graph{}, MorphismKind::Homomorphism).found);
    EXPECT_TRUE(find_morphism(Graph{}, corpus::strong_path(), MorphismKind::Homomorphism).found);
}

TEST(Search, AgreesWithExhaustiveSearchOnRandomQuantizedGraphs) {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n1 = 1 + seed % 4;
        const std::size_t n2 = (seed % 3 == 0) ? n1 : 1 + (seed / 3) % 4;
        GenConfig c1{seed, n1, 0.6, static_cast<Family>(seed % 3), 1};
        GenConfig c2{seed * 7 + 3, n2, 0.6, static_cast<Family>((seed / 3) % 3), 1};
        const Graph g1 = generate(c1);
        Graph g2 = generate(c2);
        // Make positive instances common by testing against a relabel too.
        if (seed % 2 == 0) g2 = relabel(g1, "w", seed, nullptr);
        for (MorphismKind kind : kAllKinds) {
            const auto fast = find_morphism(g1, g2, kind);
            const auto slow = oracle::exhaustive(g1, g2, kind);
            ASSERT_EQ(fast.found, slow.witness.has_value()) << seed << " " << to_string(kind);
            if (fast.found) { EXPECT_EQ(*fast.witness, *slow.witness) << seed << " " << to_string(kind); }
        }
    }
}

TEST(Search, FoundWitnessesVerify) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g1 = generate({seed, 5, 0.5, Family::General, 1});
        Mapping m;
        const Graph g2 = relabel(g1, "u", seed + 11, &m);
        for (MorphismKind kind : kAllKinds) {
            const auto r = find_morphism(g1, g2, kind);
            ASSERT_TRUE(r.found);
            EXPECT_TRUE(verify_morphism(g1, g2, kind, *r.witness).ok());
            EXPECT_TRUE(oracle::satisfies(g1, g2, kind, *r.witness));
        }
        EXPECT_TRUE(verify_morphism(g1, g2, MorphismKind::Isomorphism, m).ok());
    }
}

TEST(Search, PruningShrinksTheTree) {
    // Nine vertices with distinct degrees: only one candidate per vertex.
    GenConfig cfg{5, 9, 0.4, Family::General, std::nullopt};
    const Graph g = generate(cfg);
    const Graph h = relabel(g, "w", 3, nullptr);
    const auto r = find_morphism(g, h, MorphismKind::Isomorphism);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.search_space, 10u);
}

TEST(WeakIsomorphism, InBothDirectionsImpliesIsomorphism) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = generate({seed, 4, 0.6, Family::General, 1});
        const Graph h = relabel(g, "w", seed, nullptr);
        const bool forward = find_morphism(g, h, MorphismKind::WeakIsomorphism).found;
        const bool backward = find_morphism(h, g, MorphismKind::WeakIsomorphism).found;
        if (forward && backward) { EXPECT_TRUE(find_morphism(g, h, MorphismKind::Isomorphism).found); }
    }
}

TEST(Morphism, Composition) {
    const Mapping f = {{"a", "x"}, {"b", "y"}};
    const Mapping g = {{"x", "p"}, {"y", "q"}};
    EXPECT_EQ(compose(f, g), (Mapping{{"a", "p"}, {"b", "q"}}));
    EXPECT_EQ(invert(f), (Mapping{{"x", "a"}, {"y", "b"}}));
}
