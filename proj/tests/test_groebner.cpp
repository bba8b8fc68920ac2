#include "oracles.hpp"

#include "toric/error.hpp"
#include "toric/binomial_gb.hpp"
#include "toric/gallery.hpp"
#include "toric/io.hpp"
#include "toric/polynomial.hpp"
#include "toric/toric_ideal.hpp"
#include "toric/toric_sets.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

const Configuration cubic(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
const std::vector<std::string> labels{"x1", "x2", "x3", "x4"};

std::vector<std::string> texts(const BinomialBasis& gb) {
    std::vector<std::string> out;
    for (const auto& b : gb.elements) out.push_back(binomial_to_string(b.head, b.tail));
    return out;
}

TEST(TermOrder, GrevlexAndLexDisagree) {
    auto lex = TermOrder::lex(3), grev = TermOrder::grevlex(3);
    ExpVector a{1, 0, 2}, b{0, 2, 1};
    EXPECT_GT(lex.compare(a, b), 0);
    EXPECT_LT(grev.compare(a, b), 0);
    EXPECT_EQ(lex.compare(a, a), 0);
}

TEST(TermOrder, TieBreakPermutesPriority) {
    auto lex = TermOrder::lex(2, {1, 0});
    EXPECT_GT(lex.compare(ExpVector{0, 1}, ExpVector{5, 0}), 0);
}

TEST(TermOrder, WeightFirstThenTieBreak) {
    auto w = TermOrder::weight({1, 3});
    EXPECT_GT(w.compare(ExpVector{0, 1}, ExpVector{2, 0}), 0);
    EXPECT_NE(w.describe().find("weight"), std::string::npos);
}

TEST(ToricIdeal, TwistedCubicGrevlexIsThreeQuadrics) {
    auto gb = toric_ideal(cubic, TermOrder::grevlex(4));
    EXPECT_TRUE(gb.reduced);
    EXPECT_EQ(gb.max_degree(), 2);
    auto t = texts(gb);
    std::sort(t.begin(), t.end());
    // grevlex prefers the monomial with the smaller last exponent
    EXPECT_EQ(t, (std::vector<std::string>{"x2*x3 - x1*x4", "x2^2 - x1*x3", "x3^2 - x2*x4"}));
}

TEST(ToricIdeal, TwistedCubicSomeOrderNeedsACubic) {
    UgbOptions o;
    o.keep_bases = true;
    auto u = universal_gb(cubic, o);
    long lo = 100, hi = 0;
    for (const auto& gb : u.bases) {
        lo = std::min(lo, gb.max_degree());
        hi = std::max(hi, gb.max_degree());
        for (const auto& v : gb.lattice_vectors()) EXPECT_TRUE(v.in_kernel_of(cubic));
    }
    EXPECT_EQ(lo, 2);
    EXPECT_EQ(hi, 3);
}

TEST(ToricIdeal, EmptyKernelGivesEmptyBasis) {
    Configuration a(IntMatrix{{1, 0}, {0, 1}});
    EXPECT_EQ(toric_ideal(a, TermOrder::grevlex(2)).size(), 0u);
    EXPECT_TRUE(minimal_generators(Configuration(IntMatrix{{1, 1}, {0, 1}})).empty());
}

TEST(ToricIdeal, NonPointedStillSaturates) {
    Configuration a(IntMatrix{{1, -1, 0}, {0, 0, 1}});
    auto gb = toric_ideal(a, TermOrder::grevlex(3));
    ASSERT_EQ(gb.size(), 1u);
    EXPECT_EQ(texts(gb)[0], "x1*x2 - 1");
}

TEST(ToricIdeal, CriteriaDoNotChangeTheReducedBasis) {
    for (const char* spec : {"scroll", "veronese:3,2", "segre:2,2", "ex26:5"}) {
        Configuration a = make_config(spec);
        auto basis = lattice_basis_binomials(kernel_lattice(a));
        auto order = TermOrder::grevlex(a.size());
        auto with = buchberger(basis, order, true);
        auto without = buchberger(basis, order, false);
        EXPECT_EQ(with.elements, without.elements) << spec;
    }
}

TEST(ToricIdeal, ReducedBasisIsReduced) {
    Configuration a = make_config("ex26:5");
    auto gb = toric_ideal(a, TermOrder::lex(4));
    for (std::size_t i = 0; i < gb.size(); ++i) {
        BinomialBasis others = gb;
        others.elements.erase(others.elements.begin() + static_cast<std::ptrdiff_t>(i));
        const auto& b = gb.elements[i];
        EXPECT_EQ(others.reduce(b.tail), b.tail) << "tail reducible";
        EXPECT_EQ(others.reduce(b.head), b.head) << "head reducible";
    }
}

TEST(EliminationOracle, AgreesOnSmallGalleryEntries) {
    for (const auto& spec : gallery_specs()) {
        GalleryEntry e = make_entry(spec);
        if (e.heavy || e.config.size() > 10) continue;
        auto order = TermOrder::grevlex(e.config.size());
        auto gb = toric_ideal(e.config, order);
        auto elim = toric_ideal_elimination_oracle(e.config);
        auto back = buchberger(elim.lattice_vectors(), order);
        EXPECT_EQ(back.elements, gb.elements) << spec;
    }
}

TEST(MinimalGenerators, DegreeCountsForCurves) {
    for (long r = 4; r <= 7; ++r) {
        std::map<long, int> degs;
        for (const auto& u : minimal_generators(make_config("ex26:" + std::to_string(r)))) ++degs[u.degree()];
        std::map<long, int> want{{2, 1}};
        want[r - 1] += static_cast<int>(r - 1);
        EXPECT_EQ(degs, want) << r;
    }
}

TEST(MinimalGenerators, NeverExceedGroebnerDegree) {
    for (const char* spec : {"scroll", "octahedron", "ex26:5", "segre:2,2", "hexagon:1,2,3"}) {
        Configuration a = make_config(spec);
        long mg = 0;
        for (const auto& u : minimal_generators(a)) mg = std::max(mg, u.degree());
        EXPECT_LE(mg, toric_ideal(a, TermOrder::lex(a.size())).max_degree()) << spec;
        EXPECT_LE(mg, toric_ideal(a, TermOrder::grevlex(a.size())).max_degree()) << spec;
    }
}

TEST(MinimalGenerators, UngradedIsRejected) {
    try {
        minimal_generators(Configuration(IntMatrix{{1, 2, 3}}));
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_homogeneous);
    }
}

TEST(Hilbert, FunctionMatchesSumsetCounts) {
    for (const char* spec : {"twisted_cubic", "scroll", "ex26:4", "octahedron", "nine_vectors", "hexagon:1,2,4"}) {
        Configuration a = make_config(spec);
        oracle::Mat m(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) m[i].push_back(a.matrix()(i, j).get_si());
        auto hf = hilbert_function(a, 5);
        auto sums = oracle::sumset_counts(m, 5);
        for (std::size_t s = 0; s <= 5; ++s) EXPECT_EQ(hf[s], static_cast<long>(sums[s])) << spec << " s=" << s;
    }
}

TEST(Hilbert, PolynomialOfTwistedCubic) {
    auto p = hilbert_polynomial(cubic);
    EXPECT_EQ(p, RationalPolynomial(RatVector{1, 3}));
}

TEST(Hilbert, FunctionAndPolynomialDifferForMissingPoints) {
    Configuration a = make_config("ex26:4");
    auto p = hilbert_polynomial(a);
    auto hf = hilbert_function(a, 1);
    EXPECT_EQ(hf[1], 4);
    EXPECT_EQ(p(Rational(1)), 5);
}

TEST(NormalForm, BinomialPowerReducesToZeroInItsIdeal) {
    auto gb = toric_ideal(cubic, TermOrder::grevlex(4));
    auto u = parse_binomial("x1*x4 - x2*x3", labels);
    auto f = SparsePolynomial::binomial_power(u, 3, gb.order);
    EXPECT_TRUE(normal_form(f, gb).is_zero());
    auto g = SparsePolynomial::from_binomial(LatticeBinomial(ExpVector{1, -1, 0, 0}), gb.order);
    EXPECT_FALSE(normal_form(g, gb).is_zero());
}

TEST(RadicalMembership, TwistedCubicNeedsASquare) {
    auto c = circuits(cubic).binomials();
    auto r = radical_membership_bounded(parse_binomial("x1*x4 - x2*x3", labels), c, 6);
    EXPECT_TRUE(r.member);
    EXPECT_GE(r.power, 2u);
    EXPECT_LE(r.power, 6u);
}

TEST(QuadraticSearch, FindsCoherentWeightWhenOneExists) {
    for (const char* spec : {"twisted_cubic", "veronese:3,2"}) {
        Configuration a = make_config(spec);
        auto s = quadratic_groebner_search(a);
        ASSERT_EQ(s.verdict, QuadraticGbVerdict::exists) << spec;
        ASSERT_TRUE(s.weight.has_value());
        EXPECT_EQ(toric_ideal(a, TermOrder::weight(*s.weight)).max_degree(), 2) << spec;
    }
}

TEST(Interpolation, RecoversCubic) {
    std::vector<Rational> xs{0, 1, 2, 3}, ys;
    for (const auto& x : xs) ys.push_back(x * x * x - 2 * x + 1);
    auto p = interpolate(xs, ys);
    EXPECT_EQ(p, RationalPolynomial(RatVector{1, -2, 0, 1}));
    EXPECT_EQ(binomial_coefficient(8, 4), 70);
}

}  // namespace
