#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "pfg/algebra.hpp"
#include "pfg/classify.hpp"
#include "pfg/gen.hpp"

using namespace pfg;

namespace {

void expect_degree(const Degree& d, double mu, double nu) {
    EXPECT_NEAR(d.mu, mu, 1e-9);
    EXPECT_NEAR(d.nu, nu, 1e-9);
}

Graph random_graph(std::uint64_t seed, std::size_t n, Family f, const std::string& prefix = "v") {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_vertices = n;
    cfg.edge_probability = 0.5;
    cfg.family = f;
    cfg.label_prefix = prefix;
    return generate(cfg);
}

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::MalformedDocument;  // sentinel: nothing thrown
}

}  // namespace

TEST(Cartesian, WorkedExampleDegrees) {
    const Graph p = cartesian_product(corpus::product_left(), corpus::product_right());
    EXPECT_EQ(p.order(), 4u);
    EXPECT_EQ(p.size(), 4u);
    expect_degree(p.vertex("(a,c)"), 0.6, 0.5);
    expect_degree(p.edge("(a,c)", "(a,d)"), 0.4, 0.65);
    expect_degree(p.edge("(a,c)", "(b,c)"), 0.5, 0.7);
    EXPECT_FALSE(p.has_edge("(a,c)", "(b,d)"));
    EXPECT_TRUE(validate(p).valid());
}

TEST(Cartesian, EmptyOperandGivesEmptyProduct) {
    EXPECT_TRUE(cartesian_product(Graph{}, corpus::product_right()).empty());
}

TEST(Cartesian, RejectsAmbiguousLabels) {
    const Graph g = corpus::make({{"(x", .5, .5}}, {});
    EXPECT_EQ(kind_of([&] { cartesian_product(g, g); }), ErrorKind::LabelClash);
}

TEST(Composition, AddsCrossEdges) {
    const Graph c = composition(corpus::product_left(), corpus::product_right());
    EXPECT_EQ(c.size(), 6u);
    expect_degree(c.edge("(a,c)", "(b,d)"), 0.5, 0.8);
    EXPECT_TRUE(validate(c).valid());
}

TEST(Composition, IsNotCommutative) {
    const Graph forward = composition(corpus::product_left(), corpus::product_right());
    const Graph backward = composition(corpus::product_right(), corpus::product_left());
    expect_degree(forward.edge("(a,c)", "(b,d)"), 0.5, 0.8);
    expect_degree(backward.edge("(c,a)", "(d,b)"), 0.4, 0.7);
}

TEST(Composition, ContainsTheCartesianProduct) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g1 = random_graph(seed, 3, Family::General, "x");
        const Graph g2 = random_graph(seed + 1000, 3, Family::General, "y");
        const Graph prod = cartesian_product(g1, g2);
        const Graph comp = composition(g1, g2);
        for (const auto& [key, d] : prod.edges()) {
            EXPECT_TRUE(approx_eq(d, comp.edge(key.lo(), key.hi())));
        }
    }
}

TEST(Union, WorkedExampleDegrees) {
    const Graph u = graph_union(corpus::union_left(), corpus::union_right());
    expect_degree(u.vertex("a"), 0.7, 0.1);
    expect_degree(u.edge("a", "b"), 0.4, 0.6);
    EXPECT_EQ(u.order(), 6u);
}

TEST(Union, OverlappingVerticesCanBreakTheEdgeBound) {
    // Edge a-d exists only on the left, at (0.2, 0.8). The union lowers the nu
    // of both endpoints to 0.1 and 0.2, so 0.8 exceeds the new bound.
    const Graph u = graph_union(corpus::union_left(), corpus::union_right());
    expect_degree(u.edge("a", "d"), 0.2, 0.8);
    const auto report = validate(u);
    ASSERT_FALSE(report.valid());
    EXPECT_EQ(report.violations.front().subject, "edge a-d");
    EXPECT_EQ(report.violations.front().kind, ViolationKind::EdgeNuAboveBound);
}

TEST(Union, DisjointOperandsStayValid) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = graph_union(random_graph(seed, 4, Family::General, "x"),
                                    random_graph(seed + 7, 4, Family::General, "y"));
        EXPECT_TRUE(oracle::is_pfg(g)) << seed;
    }
}

TEST(Union, IsCommutative) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g1 = random_graph(seed, 4, Family::General);
        const Graph g2 = random_graph(seed + 99, 4, Family::General);
        EXPECT_TRUE(approx_equal(graph_union(g1, g2), graph_union(g2, g1)));
    }
}

TEST(Join, WorkedExampleDegrees) {
    const Graph j = join(corpus::join_left(), corpus::join_right());
    EXPECT_EQ(j.order(), 5u);
    EXPECT_EQ(j.size(), 3u + 6u);
    expect_degree(j.edge("a", "c"), 0.6, 0.5);
    EXPECT_TRUE(validate(j).valid());
}

TEST(Join, OverlapIsRejected) {
    const Graph g = corpus::make({{"a", .5, .5}}, {});
    EXPECT_EQ(kind_of([&] { join(g, g); }), ErrorKind::JoinOverlap);
}

TEST(Operations, RejectInvalidInputs) {
    const Graph bad = corpus::make({{"a", .6, .6}, {"b", .6, .6}}, {{"a", "b", .7, .1}});
    const Graph ok = corpus::join_right();
    EXPECT_EQ(kind_of([&] { cartesian_product(bad, ok); }), ErrorKind::ConstraintViolation);
    EXPECT_EQ(kind_of([&] { composition(ok, bad); }), ErrorKind::ConstraintViolation);
    EXPECT_EQ(kind_of([&] { graph_union(bad, ok); }), ErrorKind::ConstraintViolation);
    EXPECT_EQ(kind_of([&] { complement(bad); }), ErrorKind::ConstraintViolation);
}

TEST(Complement, WorkedExampleDegrees) {
    const Graph c = complement(corpus::complement_sample());
    EXPECT_EQ(c.size(), 5u);
    expect_degree(c.edge("a", "b"), 0.3, 0.6);
    expect_degree(c.edge("a", "c"), 0.7, 0.5);
    expect_degree(c.edge("a", "d"), 0.0, 0.1);
    expect_degree(c.edge("b", "d"), 0.3, 0.6);
    expect_degree(c.edge("c", "d"), 0.1, 0.0);
    EXPECT_FALSE(c.has_edge("b", "c"));
    EXPECT_TRUE(approx_equal(complement(c), corpus::complement_sample()));
}

TEST(Complement, MatchesPairFormula) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(seed, 5, Family::General);
        const Graph c = complement(g);
        const auto ids = g.vertex_ids();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                EXPECT_TRUE(oracle::close(c.edge(ids[i], ids[j]), oracle::complement_pair(g, ids[i], ids[j])));
            }
        }
    }
}

TEST(Complement, EmptyAndSingleVertex) {
    EXPECT_TRUE(complement(Graph{}).empty());
    const Graph one = corpus::make({{"a", .3, .3}}, {});
    EXPECT_EQ(complement(one), one);
}

TEST(StrongComplement, WorkedExample) {
    const Graph c = strong_complement(corpus::strong_path());
    EXPECT_EQ(c.size(), 1u);
    expect_degree(c.edge("a", "c"), 0.2, 0.6);
}

TEST(StrongComplement, PreconditionAndForce) {
    EXPECT_EQ(kind_of([] { strong_complement(corpus::cycle4()); }), ErrorKind::NotStrong);
    EXPECT_NO_THROW(strong_complement(corpus::cycle4(), true));
}

TEST(StrongComplement, IsAnInvolutionOnStrongGraphs) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = random_graph(seed, 5, Family::Strong);
        EXPECT_TRUE(oracle::same_graph(strong_complement(strong_complement(g)), g)) << seed;
    }
}

TEST(CompleteComplement, IsEdgeless) {
    const Graph c = complete_complement(corpus::complete_triangle());
    EXPECT_EQ(c.size(), 0u);
    EXPECT_EQ(c.order(), 3u);
    EXPECT_EQ(kind_of([] { complete_complement(corpus::strong_path()); }), ErrorKind::NotComplete);
}

TEST(Cartesian, NonStrongFactorsCanGiveAStrongProduct) {
    // Each factor misses strength on a different side; the product picks up
    // the strong side of each.
    const Graph l = corpus::nonstrong_left();
    const Graph r = corpus::nonstrong_right();
    ASSERT_FALSE(is_strong(l));
    ASSERT_FALSE(is_strong(r));
    EXPECT_TRUE(is_strong(cartesian_product(l, r)));
}
