#include "toric/error.hpp"
#include "toric/gallery.hpp"
#include "toric/hull.hpp"
#include "toric/polyhedral.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

// homogenized points (1, x, y)
Configuration polygon(const std::vector<std::pair<long, long>>& pts) {
    IntMatrix m(3, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        m(0, j) = 1;
        m(1, j) = pts[j].first;
        m(2, j) = pts[j].second;
    }
    return Configuration(m);
}

TEST(Hull, UnitCube) {
    std::vector<IntVector> pts;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) pts.push_back({x, y, z});
    pts.push_back({0, 1, 1});  // duplicate
    Hull h = full_dimensional_hull(pts);
    EXPECT_EQ(h.facets.size(), 6u);
    for (const auto& f : h.facets) EXPECT_GE(f.points.size(), 4u);
    EXPECT_EQ(affine_dimension(pts), 3);
}

TEST(Polytope, OctahedronFaces) {
    Polytope p = convex_hull(make_config("octahedron"));
    EXPECT_EQ(p.dim, 3u);
    EXPECT_EQ(p.vertices.size(), 6u);
    EXPECT_EQ(p.facets.size(), 8u);
    auto f = face_poset(p).f_vector();
    ASSERT_GE(f.size(), 3u);
    // counts include the empty face and the polytope itself
    EXPECT_EQ(f, (std::vector<std::size_t>{1, 6, 12, 8, 1}));
}

TEST(Polytope, InteriorPointIsNotAVertex) {
    Configuration a = polygon({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {2, 2}, {1, 0}});
    EXPECT_EQ(vertices_of(a), (std::vector<std::size_t>{0, 1, 2, 4}));
}

TEST(Polytope, LowerDimensionalSegment) {
    Polytope p = convex_hull(make_config("twisted_cubic"));
    EXPECT_EQ(p.dim, 1u);
    EXPECT_EQ(p.vertices.size(), 2u);
}

TEST(Cone, RaysAndFacets) {
    Configuration a(IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    Cone c = positive_hull(a);
    EXPECT_TRUE(c.pointed);
    EXPECT_EQ(c.rays.size(), 4u);
    EXPECT_EQ(c.facets.size(), 4u);
    for (const auto& f : c.facets)
        for (std::size_t j = 0; j < a.size(); ++j) EXPECT_GE(dot(f, a.column(j)), 0);
}

TEST(NormalFan, SquaresAndRectanglesShareOneFan) {
    Polytope square = convex_hull(polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    Polytope big = convex_hull(polygon({{0, 0}, {3, 0}, {0, 3}, {3, 3}}));
    Polytope rect = convex_hull(polygon({{0, 0}, {2, 0}, {0, 1}, {2, 1}}));
    Polytope tri = convex_hull(polygon({{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_TRUE(normal_fan_equal(square, big));
    EXPECT_TRUE(normal_fan_equal(square, rect));
    EXPECT_FALSE(normal_fan_equal(square, tri));
}

TEST(Volume, PolygonsAndSimplices) {
    EXPECT_EQ(normalized_volume(polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 2);
    EXPECT_EQ(normalized_volume(polygon({{0, 0}, {3, 0}, {0, 2}, {1, 0}, {0, 1}})), 6);
    // three vertices alone generate an index-6 lattice
    EXPECT_EQ(normalized_volume(polygon({{0, 0}, {3, 0}, {0, 2}})), 1);
    // volume measured in the affine lattice of the points, not Z^2
    EXPECT_EQ(normalized_volume(polygon({{0, 0}, {2, 0}, {0, 2}})), 1);
    EXPECT_EQ(normalized_volume(make_config("veronese:3,2")), 4);
}

TEST(Volume, UngradedIsRejected) {
    try {
        normalized_volume(Configuration(IntMatrix{{1, 2}}));
        FAIL() << "no error";
    } catch (const ToricError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_homogeneous);
    }
}

TEST(Triangulation, CoversThePolytope) {
    Configuration a = make_config("hexagon:1,2,4");
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5; ++k) {
        std::vector<Integer> w;
        for (std::size_t j = 0; j < a.size(); ++j) w.push_back(static_cast<long>(rng() % 1000));
        Triangulation t = regular_triangulation(a, w);
        EXPECT_EQ(t.total_volume(), normalized_volume(a));
        for (const auto& s : t.simplices) EXPECT_EQ(s.size(), 3u);
    }
}

TEST(Triangulation, DegenerateHeightsArePerturbed) {
    Configuration a = polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    Triangulation t = regular_triangulation(a, std::vector<Integer>(4, 0));
    EXPECT_TRUE(t.perturbed);
    EXPECT_EQ(t.simplices.size(), 2u);
    EXPECT_TRUE(t.unimodular());
}

TEST(Triangulation, AffinelyIndependentPoints) {
    Configuration a(IntMatrix{{1, 1}, {0, 1}});
    Triangulation t = regular_triangulation(a, {0, 0});
    ASSERT_EQ(t.simplices.size(), 1u);
    EXPECT_EQ(t.total_volume(), 1);
}

long count_in_triangle(long s) {
    // s * conv{(0,0),(3,0),(0,2)}: 2x + 3y <= 6s
    long n = 0;
    for (long x = 0; x <= 3 * s; ++x)
        for (long y = 0; y <= 2 * s; ++y) n += 2 * x + 3 * y <= 6 * s;
    return n;
}

TEST(Ehrhart, TriangleMatchesBoxCount) {
    Configuration a = polygon({{0, 0}, {3, 0}, {0, 2}, {1, 1}, {1, 0}, {2, 0}, {0, 1}});
    auto e = ehrhart_polynomial(a, 6);
    for (long s = 0; s <= 6; ++s) EXPECT_EQ(e.ambient_counts[s], count_in_triangle(s)) << s;
    for (long s = 7; s <= 10; ++s) EXPECT_EQ(e.ambient_polynomial(Rational(s)), count_in_triangle(s)) << s;
    EXPECT_EQ(e.lattice_polynomial, e.ambient_polynomial);
}

TEST(Ehrhart, SublatticeCountsDiffer) {
    Configuration a = polygon({{0, 0}, {2, 0}, {0, 2}});
    auto e = ehrhart_polynomial(a, 4);
    EXPECT_EQ(e.lattice_counts[1], 3);
    EXPECT_EQ(e.ambient_counts[1], 6);
    EXPECT_FALSE(e.lattice_polynomial == e.ambient_polynomial);
}

}  // namespace
