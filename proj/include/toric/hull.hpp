#pragma once

#include "toric/lattice.hpp"

#include <vector>

namespace toric {

/// normal · x >= offset, with `normal` primitive and pointing inward.
struct HullFacet {
    IntVector normal;
    Integer offset;
    std::vector<std::size_t> points;  // every input point on the hyperplane
};

struct Hull {
    std::size_t dim = 0;
    std::vector<HullFacet> facets;
    /// Simplicial boundary complex built during insertion (k vertices each).
    std::vector<std::vector<std::size_t>> boundary;
};

/// Convex hull of integer points spanning R^k affinely (k = point length,
/// k >= 1), by beneath-beyond insertion in exact arithmetic. Fails with
/// `degenerate` when the points are not full-dimensional.
Hull full_dimensional_hull(const std::vector<IntVector>& points);

/// Primitive normal of the hyperplane through k affinely independent points
/// of Z^k (generalised cross product); sign unspecified.
IntVector hyperplane_normal(const std::vector<IntVector>& points);

/// Affine dimension of a point set (-1 when empty).
long affine_dimension(const std::vector<IntVector>& points);

}  // namespace toric
