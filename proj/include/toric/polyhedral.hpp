#pragma once

#include "toric/hull.hpp"
#include "toric/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

/// Coordinates of a point configuration in its affine lattice: the points
/// are origin + y_i · basis with y_i integral. With `saturated` the basis
/// spans (aff-span ∩ Z^d) - origin instead of the lattice the points
/// generate.
struct AffineFrame {
    IntVector origin;
    IntMatrix basis;                // k x d, Hermite form
    std::vector<IntVector> coords;  // one per point, length k

    std::size_t dim() const noexcept { return basis.rows(); }
};

AffineFrame affine_frame(const IntMatrix& columns, bool saturated = false);

struct Facet {
    IntVector normal;  // in frame coordinates, primitive, inward
    Integer offset;
    std::vector<std::size_t> points;  // column indices on the facet
};

struct Polytope {
    IntMatrix points;  // d x n, columns are the points
    AffineFrame frame;
    std::size_t dim = 0;
    std::vector<std::size_t> vertices;  // smallest column index per vertex
    std::vector<Facet> facets;
};

/// conv of the columns. Works for any point set; for a graded
/// configuration it is the polytope of the projective toric variety.
Polytope convex_hull(const IntMatrix& columns);
Polytope convex_hull(const Configuration& a);

/// Indices of columns that are vertices of conv(A).
std::vector<std::size_t> vertices_of(const Configuration& a);

struct Cone {
    std::vector<IntVector> rays;        // primitive extreme rays
    std::vector<std::size_t> ray_columns;  // a column index for each ray
    std::vector<IntVector> facets;      // inward normals in Z^d (modulo span^perp)
    bool pointed = true;
    Polytope section;                   // cross-section polytope
};

/// pos(A) for a pointed configuration, via the cross-section {c·x = const}.
Cone positive_hull(const Configuration& a);

struct Face {
    std::vector<std::size_t> vertices;  // column indices, sorted
    long dim = -1;
};

struct FacePoset {
    std::vector<Face> faces;  // sorted by (dim, vertices)
    /// f_{-1}, f_0, ..., f_dim
    std::vector<std::size_t> f_vector() const;
    /// Number of faces of each dimension excluding the improper ones.
    std::vector<std::size_t> proper_counts() const;
    bool is_face_of(std::size_t lower, std::size_t upper) const;
};

FacePoset face_poset(const Polytope& p);
/// Faces of a cone: the apex plus the cone over every face of the section;
/// dimensions shift up by one.
FacePoset face_poset(const Cone& c);

/// Equal normal fans. Throws dimension_mismatch for different ambient
/// spaces; polytopes with different affine spans never have equal fans.
bool normal_fan_equal(const Polytope& p, const Polytope& q);

struct Triangulation {
    std::vector<std::vector<std::size_t>> simplices;  // sorted column indices
    std::vector<Integer> volumes;                     // normalised, in L
    std::vector<Integer> heights;                     // lifting actually used
    bool perturbed = false;

    Integer total_volume() const;
    bool unimodular() const;
};

/// Lower-hull triangulation of the lifted points (a_i, w_i). Non-generic
/// heights are replaced by K·w_i + (i+1)·M^i with K, M grown until the
/// lower hull is simplicial and refines the subdivision induced by w.
Triangulation regular_triangulation(const Configuration& a, const std::vector<Integer>& w);

/// Sum of simplex volumes of a regular triangulation (needs a grading).
/// Computed twice from independent seeded heights; disagreement is an
/// internal error.
Integer normalized_volume(const Configuration& a, std::uint64_t seed = 1);

struct EhrhartResult {
    RationalPolynomial lattice_polynomial;   // counts in ZA (affine lattice)
    RationalPolynomial ambient_polynomial;   // counts in Z^d
    std::vector<Integer> lattice_counts;     // s = 0..s_max
    std::vector<Integer> ambient_counts;
};

/// Counts lattice points of s·conv(A) by bounding-box scan for s = 0..s_max
/// and interpolates. Needs s_max >= dim + 2 (instability otherwise).
EhrhartResult ehrhart_polynomial(const Configuration& a, long s_max,
                                 std::uint64_t candidate_cap = 50'000'000);

/// Lattice points of s·P in frame coordinates (brute force over a box).
std::vector<IntVector> lattice_points(const Polytope& p, long s, std::uint64_t candidate_cap);

}  // namespace toric
