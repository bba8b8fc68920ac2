#include "oracles.hpp"

#include "toric/error.hpp"
#include "toric/gallery.hpp"
#include "toric/io.hpp"
#include "toric/toric_sets.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

const Configuration cubic(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});

std::set<oracle::Vec> parse_set(const std::vector<std::string>& v, const Configuration& a) {
    std::vector<LatticeBinomial> out;
    for (const auto& t : v) out.push_back(parse_binomial(t, a.labels()));
    return oracle::as_set(out);
}

oracle::Mat rows(const Configuration& a) {
    oracle::Mat m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i].push_back(a.matrix()(i, j).get_si());
    return m;
}

TEST(Circuits, TwistedCubic) {
    auto cs = circuits(cubic);
    EXPECT_EQ(oracle::as_set(cs.binomials()),
              parse_set({"x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"}, cubic));
    EXPECT_EQ(cs.max_degree(), 3);
    for (const auto& c : cs.elements) {
        EXPECT_EQ(c.support.size(), 3u);
        EXPECT_EQ(c.true_degree, c.index * c.degree);
    }
}

TEST(Circuits, MatchBruteForceOnGallery) {
    for (const char* spec : {"scroll", "octahedron", "ex26:5", "segre:1,2", "nine_vectors", "uniform_matroid:2,4"}) {
        Configuration a = make_config(spec);
        EXPECT_EQ(oracle::as_set(circuits(a).binomials()), oracle::circuits(rows(a))) << spec;
    }
}

TEST(Circuits, SortedByDegree) {
    auto cs = circuits(make_config("ex47"));
    for (std::size_t i = 1; i < cs.elements.size(); ++i) EXPECT_LE(cs.elements[i - 1].degree, cs.elements[i].degree);
}

TEST(Circuits, SubsetCapIsReported) {
    try {
        circuits(make_config("birkhoff:4"), 10);
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    }
}

TEST(TrueDegree, RejectsNonCircuits) {
    try {
        true_degree(parse_binomial("x1*x4 - x2*x3", cubic.labels()), cubic);
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_a_circuit);
    }
}

TEST(TrueDegree, IndexTwoCircuitInLawrenceLifting) {
    Configuration a = make_config("ex47");
    auto t = true_degree(parse_binomial("x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10", a.labels()), a);
    EXPECT_EQ(t.degree, 15);
    EXPECT_EQ(t.index, 2);
    EXPECT_EQ(t.true_degree, 30);
}

TEST(Lawrence, ShapeAndKernel) {
    Configuration l = lawrence(cubic);
    EXPECT_EQ(l.dim(), 6u);
    EXPECT_EQ(l.size(), 8u);
    EXPECT_TRUE(grading(l).has_value());
    EXPECT_EQ(kernel_lattice(l).rank(), kernel_lattice(cubic).rank());
    EXPECT_EQ(l.labels().at(4), "y1");
}

TEST(Graver, TwistedCubicIsCircuitsPlusOne) {
    auto g = oracle::as_set(graver(cubic));
    auto want = oracle::as_set(circuits(cubic).binomials());
    want.insert(oracle::sign_normalized({1, -1, -1, 1}));
    EXPECT_EQ(g, want);
    EXPECT_TRUE(satisfies_graver_axiom(graver(cubic)));
}

TEST(Graver, AxiomRejectsConformalMultiple) {
    std::vector<LatticeBinomial> v{LatticeBinomial(ExpVector{1, -2, 1, 0}), LatticeBinomial(ExpVector{2, -4, 2, 0})};
    EXPECT_FALSE(satisfies_graver_axiom(v));
}

TEST(Graver, EmptyKernel) { EXPECT_TRUE(graver(Configuration(IntMatrix{{1, 0}, {0, 1}})).empty()); }

TEST(Graver, MatchesCompletionOnGallery) {
    for (const char* spec : {"scroll", "ex26:4", "segre:1,2", "ex23"}) {
        Configuration a = make_config(spec);
        auto k = kernel_lattice(a);
        std::vector<oracle::Vec> basis;
        for (std::size_t i = 0; i < k.rank(); ++i) {
            oracle::Vec b;
            for (const auto& x : k.basis().row_vector(i)) b.push_back(x.get_si());
            basis.push_back(b);
        }
        EXPECT_EQ(oracle::as_set(graver(a)), oracle::completion_graver(basis)) << spec;
    }
}

TEST(UniversalGB, ExhaustiveBetweenCircuitsAndGraver) {
    for (const char* spec : {"twisted_cubic", "scroll", "ex26:4", "octahedron"}) {
        Configuration a = make_config(spec);
        auto u = universal_gb(a);
        EXPECT_TRUE(u.exhaustive);
        auto us = oracle::as_set(u.elements);
        for (const auto& c : oracle::as_set(circuits(a).binomials())) EXPECT_TRUE(us.count(c)) << spec;
        auto g = oracle::as_set(graver(a));
        for (const auto& x : us) EXPECT_TRUE(g.count(x)) << spec;
    }
}

TEST(UniversalGB, SampledIsSubsetOfExhaustive) {
    Configuration a = make_config("ex26:5");
    UgbOptions s;
    s.exhaustive = false;
    s.samples = 5;
    auto sampled = universal_gb(a, s);
    EXPECT_FALSE(sampled.exhaustive);
    auto full = oracle::as_set(universal_gb(a).elements);
    for (const auto& x : oracle::as_set(sampled.elements)) EXPECT_TRUE(full.count(x));
}

TEST(UniversalGB, KeptBasesAreDistinct) {
    UgbOptions o;
    o.keep_bases = true;
    auto u = universal_gb(cubic, o);
    ASSERT_EQ(u.bases.size(), u.num_bases);
    for (std::size_t i = 0; i < u.bases.size(); ++i)
        for (std::size_t j = i + 1; j < u.bases.size(); ++j) {
            auto a = u.bases[i].leading_monomials(), b = u.bases[j].leading_monomials();
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_NE(a, b);
        }
}

TEST(UniversalGB, RequiresPointed) {
    try {
        universal_gb(Configuration(IntMatrix{{1, -1, 0}, {0, 0, 1}}));
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_pointed);
    }
}

}  // namespace
