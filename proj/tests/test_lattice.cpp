#include "toric/error.hpp"
#include "toric/lattice.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

TEST(Hermite, TransformReproducesForm) {
    IntMatrix m{{2, 4, 6}, {3, 5, 7}, {5, 9, 13}};
    auto h = hermite_normal_form(m);
    EXPECT_EQ(h.rank, 2u);
    EXPECT_EQ(product(h.transform, m), h.hnf);
    EXPECT_EQ(abs_value(determinant(h.transform)), 1);
    for (std::size_t i = h.rank; i < h.hnf.rows(); ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(h.hnf(i, j), 0);
}

TEST(Smith, InvariantsDivideAndMultiplyToIndex) {
    auto d = smith_invariants(IntMatrix{{2, 4}, {6, 8}});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 4);
    auto e = smith_invariants(IntMatrix{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[0], 1);
    EXPECT_EQ(e[1], 30);
    EXPECT_EQ(e[2], 30);
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
}

TEST(Sublattice, MembershipSaturationAndIndex) {
    Sublattice l(2, IntMatrix{{2, 0}, {0, 2}});
    EXPECT_TRUE(l.contains(IntVector{4, -2}));
    EXPECT_FALSE(l.contains(IntVector{1, 0}));
    auto s = l.saturation();
    EXPECT_TRUE(s.contains(IntVector{1, 0}));
    auto idx = lattice_index(l, s);
    ASSERT_TRUE(idx.has_value());
    EXPECT_EQ(*idx, 4);
    try {
        lattice_index(s, l);
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_a_sublattice);
    }
}

TEST(Kernel, TwistedCubicIsSaturatedRankTwo) {
    Configuration a(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    auto k = kernel_lattice(a);
    EXPECT_EQ(k.rank(), 2u);
    EXPECT_EQ(k, k.saturation());
    for (const auto& u : lattice_basis_binomials(k)) EXPECT_TRUE(u.in_kernel_of(a));
}

TEST(Kernel, FullRankSquareMatrixHasZeroKernel) {
    Configuration a(IntMatrix{{1, 1}, {0, 1}});
    EXPECT_EQ(kernel_lattice(a).rank(), 0u);
}

TEST(Configuration, GradingAndPointedness) {
    Configuration cubic(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    EXPECT_TRUE(grading(cubic).has_value());
    EXPECT_TRUE(cubic.is_pointed());
    Configuration ungraded(IntMatrix{{1, 2}});
    EXPECT_FALSE(grading(ungraded).has_value());
    EXPECT_TRUE(ungraded.is_pointed());
    EXPECT_FALSE(Configuration(IntMatrix{{1, -1}}).is_pointed());
    EXPECT_FALSE(Configuration(IntMatrix{{1, 0}, {0, 0}}).is_pointed());
}

TEST(Configuration, PositiveFunctionalIsPositiveOnColumns) {
    Configuration a(IntMatrix{{1, 0, -1}, {1, 1, 1}});
    ASSERT_TRUE(a.is_pointed());
    const auto& c = *a.positive_functional();
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_GT(dot(c, a.column(j)), 0);
}

TEST(Configuration, ColumnLatticeIndex) {
    Configuration a(IntMatrix{{2, 0}, {0, 2}});
    auto za = column_lattice(a);
    EXPECT_TRUE(za.contains(IntVector{2, 2}));
    EXPECT_FALSE(za.contains(IntVector{1, 1}));
}

TEST(LatticeBinomial, PartsDegreeAndSign) {
    LatticeBinomial u(ExpVector{-1, 2, 0, -1});
    EXPECT_EQ(u.positive_part(), (ExpVector{0, 2, 0, 0}));
    EXPECT_EQ(u.negative_part(), (ExpVector{1, 0, 0, 1}));
    EXPECT_EQ(u.degree(), 2);
    EXPECT_EQ(u.sign_normalized().vector(), (ExpVector{1, -2, 0, 1}));
    EXPECT_EQ(u.support(), (std::vector<std::size_t>{0, 1, 3}));
    Configuration a(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    EXPECT_TRUE(LatticeBinomial(ExpVector{1, -2, 1, 0}).in_kernel_of(a));
    EXPECT_FALSE(u.in_kernel_of(a));
}

}  // namespace
