#include "toric/hull.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <map>

namespace toric {

long affine_dimension(const std::vector<IntVector>& points) {
    if (points.empty()) return -1;
    const std::size_t k = points[0].size();
    IntMatrix diff(points.size() - 1, k);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) diff(i - 1, j) = points[i][j] - points[0][j];
    return static_cast<long>(rank(diff));
}

IntVector hyperplane_normal(const std::vector<IntVector>& points) {
    const std::size_t k = points[0].size();
    if (points.size() != k) fail(ErrorKind::internal, "hyperplane needs exactly k points");
    IntVector normal(k);
    for (std::size_t c = 0; c < k; ++c) {
        IntMatrix minor(k - 1, k - 1);
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0, jj = 0; j < k; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = points[i][j] - points[0][j];
            }
        Integer det = determinant(minor);
        normal[c] = (c % 2) ? Integer(-det) : det;
    }
    return make_primitive(std::move(normal));
}

namespace {

struct Simplex {
    std::vector<std::size_t> vertices;  // sorted
    IntVector normal;
    Integer offset;
    bool alive = true;
};

/// Inward-oriented facet through the given vertices; `interior` is (k+1)
/// times an interior point, scaled to stay integral.
Simplex make_simplex(std::vector<std::size_t> verts, const std::vector<IntVector>& pts,
                     const IntVector& interior, const Integer& scale) {
    std::sort(verts.begin(), verts.end());
    std::vector<IntVector> vp;
    for (auto v : verts) vp.push_back(pts[v]);
    Simplex s;
    s.normal = hyperplane_normal(vp);
    s.offset = dot(s.normal, pts[verts[0]]);
    if (dot(s.normal, interior) < s.offset * scale) {
        for (auto& x : s.normal) x = -x;
        s.offset = -s.offset;
    }
    s.vertices = std::move(verts);
    return s;
}

}  // namespace

Hull full_dimensional_hull(const std::vector<IntVector>& pts) {
    if (pts.empty()) fail(ErrorKind::degenerate, "hull of an empty point set");
    const std::size_t k = pts[0].size();
    if (k == 0) fail(ErrorKind::degenerate, "hull in dimension 0");

    // Initial simplex: greedily add points that raise the affine rank.
    std::vector<std::size_t> init{0};
    {
        IntMatrix diff(0, k);
        for (std::size_t i = 1; i < pts.size() && init.size() < k + 1; ++i) {
            IntMatrix trial = diff;
            IntVector d(k);
            for (std::size_t j = 0; j < k; ++j) d[j] = pts[i][j] - pts[0][j];
            trial.append_row(d);
            if (rank(trial) == trial.rows()) {
                diff = std::move(trial);
                init.push_back(i);
            }
        }
    }
    if (init.size() != k + 1) fail(ErrorKind::degenerate, "points are not full-dimensional");

    IntVector interior(k, Integer(0));
    for (auto i : init)
        for (std::size_t j = 0; j < k; ++j) interior[j] += pts[i][j];
    const Integer scale = static_cast<long>(k + 1);

    std::vector<Simplex> simplices;
    for (std::size_t skip = 0; skip <= k; ++skip) {
        std::vector<std::size_t> verts;
        for (std::size_t t = 0; t <= k; ++t)
            if (t != skip) verts.push_back(init[t]);
        simplices.push_back(make_simplex(std::move(verts), pts, interior, scale));
    }

    std::vector<bool> used(pts.size(), false);
    for (auto i : init) used[i] = true;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (used[p]) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < simplices.size(); ++f)
            if (simplices[f].alive && dot(simplices[f].normal, pts[p]) < simplices[f].offset)
                visible.push_back(f);
        if (visible.empty()) continue;
        used[p] = true;
        // Horizon ridges occur in exactly one visible simplex.
        std::map<std::vector<std::size_t>, int> ridges;
        for (auto f : visible) {
            const auto& v = simplices[f].vertices;
            for (std::size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<std::size_t> r;
                for (std::size_t t = 0; t < v.size(); ++t)
                    if (t != drop) r.push_back(v[t]);
                ++ridges[r];
            }
            simplices[f].alive = false;
        }
        for (auto& [r, count] : ridges) {
            if (count != 1) continue;
            std::vector<std::size_t> verts = r;
            verts.push_back(p);
            simplices.push_back(make_simplex(std::move(verts), pts, interior, scale));
        }
        // Compact occasionally.
        if (simplices.size() > 4096) {
            std::erase_if(simplices, [](const Simplex& s) { return !s.alive; });
        }
    }

    Hull hull;
    hull.dim = k;
    std::map<std::pair<IntVector, Integer>, std::size_t> by_plane;
    for (const auto& s : simplices) {
        if (!s.alive) continue;
        hull.boundary.push_back(s.vertices);
        auto key = std::make_pair(s.normal, s.offset);
        if (by_plane.count(key)) continue;
        by_plane.emplace(key, hull.facets.size());
        HullFacet f;
        f.normal = s.normal;
        f.offset = s.offset;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(f.normal, pts[i]) == f.offset) f.points.push_back(i);
        hull.facets.push_back(std::move(f));
    }
    std::sort(hull.facets.begin(), hull.facets.end(),
              [](const HullFacet& a, const HullFacet& b) { return a.points < b.points; });
    return hull;
}

}  // namespace toric
