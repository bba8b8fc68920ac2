#include "toric/polyhedral.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace toric {

AffineFrame affine_frame(const IntMatrix& columns, bool saturated) {
    const std::size_t d = columns.rows();
    const std::size_t n = columns.cols();
    if (n == 0) fail(ErrorKind::input, "empty point set");
    AffineFrame f;
    f.origin = columns.column(0);
    IntMatrix diffs(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) diffs(i, j) = columns(j, i) - f.origin[j];
    Sublattice lat(d, diffs);
    if (saturated) lat = lat.saturation();
    f.basis = lat.basis();
    for (std::size_t i = 0; i < n; ++i) {
        auto c = lat.coordinates(diffs.row(i));
        if (!c) fail(ErrorKind::internal, "point outside its own affine lattice");
        f.coords.push_back(std::move(*c));
    }
    return f;
}

namespace {

Polytope hull_in_frame(const IntMatrix& columns, AffineFrame frame) {
    Polytope p;
    p.points = columns;
    p.dim = frame.dim();
    p.frame = std::move(frame);
    const std::size_t n = columns.cols();
    if (p.dim == 0) {
        p.vertices = {0};
        return p;
    }
    Hull h = full_dimensional_hull(p.frame.coords);
    for (auto& f : h.facets) p.facets.push_back(Facet{std::move(f.normal), std::move(f.offset), std::move(f.points)});
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix active(0, p.dim);
        for (const auto& f : p.facets)
            if (std::binary_search(f.points.begin(), f.points.end(), i)) active.append_row(f.normal);
        if (active.rows() < p.dim || rank(active) != p.dim) continue;
        if (seen.insert(p.frame.coords[i]).second) p.vertices.push_back(i);
    }
    return p;
}

std::vector<IntVector> frame_points(const AffineFrame& f, const std::vector<std::size_t>& idx) {
    std::vector<IntVector> out;
    for (auto i : idx) out.push_back(f.coords[i]);
    return out;
}

}  // namespace

Polytope convex_hull(const IntMatrix& columns) { return hull_in_frame(columns, affine_frame(columns)); }

Polytope convex_hull(const Configuration& a) { return convex_hull(a.matrix()); }

std::vector<std::size_t> vertices_of(const Configuration& a) { return convex_hull(a).vertices; }

Cone positive_hull(const Configuration& a) {
    if (!a.is_pointed()) fail(ErrorKind::not_pointed, "pos(A) contains a line");
    const auto& c = *a.positive_functional();
    const std::size_t n = a.size();
    const std::size_t d = a.dim();
    std::vector<Integer> level(n);
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) {
        level[j] = dot(c, a.column(j));
        l = lcm(l, level[j]);
    }
    IntMatrix section(d, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) section(i, j) = a.matrix()(i, j) * (l / level[j]);
    Cone cone;
    cone.section = convex_hull(section);
    for (auto j : cone.section.vertices) {
        cone.rays.push_back(make_primitive(a.column(j)));
        cone.ray_columns.push_back(j);
    }
    for (const auto& f : cone.section.facets) {
        IntMatrix rows(0, d);
        for (auto j : f.points) rows.append_row(a.matrix().transposed().row(j));
        Sublattice ker = integer_kernel(rows);
        for (std::size_t r = 0; r < ker.rank(); ++r) {
            IntVector y = ker.basis().row_vector(r);
            int sign = 0;
            for (std::size_t j = 0; j < n && sign == 0; ++j) {
                Integer v = dot(y, a.column(j));
                if (v != 0) sign = v > 0 ? 1 : -1;
            }
            if (sign == 0) continue;
            if (sign < 0)
                for (auto& x : y) x = -x;
            cone.facets.push_back(std::move(y));
            break;
        }
    }
    return cone;
}

// ---------------------------------------------------------------------------
// Face posets
// ---------------------------------------------------------------------------

std::vector<std::size_t> FacePoset::f_vector() const {
    long top = -1;
    for (const auto& f : faces) top = std::max(top, f.dim);
    std::vector<std::size_t> out(static_cast<std::size_t>(top + 2), 0);
    for (const auto& f : faces) ++out[static_cast<std::size_t>(f.dim + 1)];
    return out;
}

std::vector<std::size_t> FacePoset::proper_counts() const {
    auto f = f_vector();
    if (f.size() <= 2) return {};
    return std::vector<std::size_t>(f.begin() + 1, f.end() - 1);
}

bool FacePoset::is_face_of(std::size_t lower, std::size_t upper) const {
    const auto& a = faces.at(lower).vertices;
    const auto& b = faces.at(upper).vertices;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FacePoset face_poset(const Polytope& p) {
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> facet_sets;
    const std::set<std::size_t> verts(p.vertices.begin(), p.vertices.end());
    for (const auto& f : p.facets) {
        std::vector<std::size_t> s;
        for (auto i : f.points)
            if (verts.count(i)) s.push_back(i);
        facet_sets.push_back(s);
    }
    std::vector<std::vector<std::size_t>> queue(facet_sets.begin(), facet_sets.end());
    for (const auto& f : facet_sets) found.insert(f);
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& f : facet_sets) {
            std::vector<std::size_t> meet;
            std::set_intersection(cur.begin(), cur.end(), f.begin(), f.end(), std::back_inserter(meet));
            if (found.insert(meet).second) queue.push_back(std::move(meet));
        }
    }
    found.insert({});
    found.insert(p.vertices);

    FacePoset poset;
    for (const auto& s : found) {
        Face face;
        face.vertices = s;
        face.dim = affine_dimension(frame_points(p.frame, s));
        poset.faces.push_back(std::move(face));
    }
    std::sort(poset.faces.begin(), poset.faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    return poset;
}

FacePoset face_poset(const Cone& c) {
    FacePoset poset = face_poset(c.section);
    for (auto& f : poset.faces) ++f.dim;
    return poset;
}

// ---------------------------------------------------------------------------
// Normal fans
// ---------------------------------------------------------------------------

namespace {

/// Reduced row echelon basis of the row space, as a canonical name for the
/// linear span.
RatMatrix rref_basis(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    RatMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

using Fan = std::set<std::vector<IntVector>>;

Fan canonical_fan(const Polytope& p, const RatMatrix& span) {
    // Frame coordinates of each canonical basis vector of the span.
    RatMatrix bt = to_rational(p.frame.basis.transposed());
    std::vector<RatVector> ys;
    for (std::size_t t = 0; t < span.rows(); ++t) {
        auto y = solve_rational(bt, span.row(t));
        if (!y) fail(ErrorKind::internal, "span basis outside the frame");
        ys.push_back(std::move(*y));
    }
    std::vector<IntVector> normals;
    for (const auto& f : p.facets) {
        RatVector v;
        for (const auto& y : ys) {
            Rational s = 0;
            for (std::size_t j = 0; j < y.size(); ++j) s += y[j] * f.normal[j];
            v.push_back(s);
        }
        normals.push_back(clear_denominators(v));
    }
    Fan fan;
    for (auto v : p.vertices) {
        std::vector<IntVector> cone;
        for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
            if (std::binary_search(p.facets[fi].points.begin(), p.facets[fi].points.end(), v))
                cone.push_back(normals[fi]);
        std::sort(cone.begin(), cone.end());
        fan.insert(std::move(cone));
    }
    return fan;
}

}  // namespace

bool normal_fan_equal(const Polytope& p, const Polytope& q) {
    if (p.points.rows() != q.points.rows())
        fail(ErrorKind::dimension_mismatch, "polytopes live in different ambient spaces");
    if (p.dim != q.dim) return false;
    RatMatrix sp = rref_basis(p.frame.basis);
    RatMatrix sq = rref_basis(q.frame.basis);
    if (!(sp == sq)) return false;
    return canonical_fan(p, sp) == canonical_fan(q, sp);
}

// ---------------------------------------------------------------------------
// Regular triangulations and volume
// ---------------------------------------------------------------------------

Integer Triangulation::total_volume() const {
    Integer s = 0;
    for (const auto& v : volumes) s += v;
    return s;
}

bool Triangulation::unimodular() const {
    return std::all_of(volumes.begin(), volumes.end(), [](const Integer& v) { return v == 1; });
}

namespace {

Integer simplex_volume(const AffineFrame& f, const std::vector<std::size_t>& s) {
    const std::size_t k = f.dim();
    IntMatrix m(k, k);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i - 1, j) = f.coords[s[i]][j] - f.coords[s[0]][j];
    return abs_value(determinant(m));
}

/// Simplices of the lower hull when it is simplicial, else nullopt.
std::optional<std::vector<std::vector<std::size_t>>> lower_simplices(const AffineFrame& f,
                                                                     const std::vector<Integer>& h) {
    const std::size_t k = f.dim();
    std::vector<IntVector> lifted;
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
        IntVector p = f.coords[i];
        p.push_back(h[i]);
        lifted.push_back(std::move(p));
    }
    if (affine_dimension(lifted) != static_cast<long>(k + 1)) {
        // k+1 affinely independent points: the only triangulation.
        if (lifted.size() != k + 1) return std::nullopt;
        std::vector<std::size_t> all(k + 1);
        for (std::size_t i = 0; i <= k; ++i) all[i] = i;
        return std::vector<std::vector<std::size_t>>{all};
    }
    Hull hull = full_dimensional_hull(lifted);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& fc : hull.facets) {
        if (fc.normal[k] <= 0) continue;
        if (fc.points.size() != k + 1) return std::nullopt;
        out.push_back(fc.points);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every simplex lies in a lower face of the lift by w.
bool refines(const AffineFrame& f, const std::vector<std::vector<std::size_t>>& simplices,
             const std::vector<Integer>& w) {
    const std::size_t k = f.dim();
    for (const auto& s : simplices) {
        RatMatrix m(k + 1, k + 1);
        RatVector rhs(k + 1);
        for (std::size_t r = 0; r <= k; ++r) {
            for (std::size_t j = 0; j < k; ++j) m(r, j) = f.coords[s[r]][j];
            m(r, k) = 1;
            rhs[r] = w[s[r]];
        }
        auto sol = solve_rational(m, rhs);
        if (!sol) return false;
        for (std::size_t i = 0; i < f.coords.size(); ++i) {
            Rational v = (*sol)[k];
            for (std::size_t j = 0; j < k; ++j) v += (*sol)[j] * f.coords[i][j];
            if (v > Rational(w[i])) return false;
        }
    }
    return true;
}

}  // namespace

Triangulation regular_triangulation(const Configuration& a, const std::vector<Integer>& w) {
    const std::size_t n = a.size();
    if (w.size() != n) fail(ErrorKind::dimension_mismatch, "one height per column is needed");
    AffineFrame f = affine_frame(a.matrix());
    Triangulation t;
    if (f.dim() == 0) {
        t.simplices = {{0}};
        t.volumes = {1};
        t.heights = w;
        return t;
    }
    std::optional<std::vector<std::vector<std::size_t>>> simplices = lower_simplices(f, w);
    std::vector<Integer> used = w;
    if (!simplices) {
        t.perturbed = true;
        Integer m = static_cast<long>(n) + 2;
        for (const auto& c : f.coords)
            for (const auto& x : c) m = std::max(m, Integer(abs_value(x) + 2));
        for (const auto& x : w) m = std::max(m, Integer(abs_value(x) + 2));
        for (int attempt = 0; attempt < 12 && !simplices; ++attempt, m *= 4) {
            Integer big;
            mpz_pow_ui(big.get_mpz_t(), m.get_mpz_t(), n + 1);
            Integer power = 1;
            for (std::size_t i = 0; i < n; ++i) {
                used[i] = big * w[i] + static_cast<long>(i + 1) * power;
                power *= m;
            }
            simplices = lower_simplices(f, used);
            if (simplices && !refines(f, *simplices, w)) simplices.reset();
        }
        if (!simplices) fail(ErrorKind::internal, "deterministic perturbation did not give a triangulation");
    }
    t.simplices = std::move(*simplices);
    t.heights = std::move(used);
    for (const auto& s : t.simplices) t.volumes.push_back(simplex_volume(f, s));
    return t;
}

Integer normalized_volume(const Configuration& a, std::uint64_t seed) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "degree needs a grading w·a_i = 1");
    AffineFrame f = affine_frame(a.matrix());
    if (f.dim() == 0) return 1;
    auto random_heights = [&](std::uint64_t s) {
        std::mt19937_64 rng(s);
        std::uniform_int_distribution<long> dist(0, 1L << 20);
        std::vector<Integer> h(a.size());
        for (auto& x : h) x = dist(rng);
        return h;
    };
    Integer v1 = regular_triangulation(a, random_heights(seed)).total_volume();
    Integer v2 = regular_triangulation(a, random_heights(seed * 0x9e3779b97f4a7c15ULL + 7)).total_volume();
    if (v1 != v2)
        fail(ErrorKind::internal, "triangulations disagree on volume: " + v1.get_str() + " vs " + v2.get_str());
    return v1;
}

// ---------------------------------------------------------------------------
// Ehrhart
// ---------------------------------------------------------------------------

std::vector<IntVector> lattice_points(const Polytope& p, long s, std::uint64_t candidate_cap) {
    const std::size_t k = p.dim;
    if (k == 0) return {IntVector{}};
    IntVector lo(k), hi(k);
    for (std::size_t j = 0; j < k; ++j) {
        lo[j] = hi[j] = p.frame.coords[0][j];
        for (const auto& c : p.frame.coords) {
            lo[j] = std::min(lo[j], c[j]);
            hi[j] = std::max(hi[j], c[j]);
        }
        lo[j] *= s;
        hi[j] *= s;
    }
    Integer total = 1;
    for (std::size_t j = 0; j < k; ++j) total *= hi[j] - lo[j] + 1;
    if (total > Integer(std::to_string(candidate_cap)))
        fail(ErrorKind::cap_exceeded, "lattice point scan needs " + total.get_str() + " candidates");
    std::vector<IntVector> out;
    IntVector x = lo;
    for (;;) {
        bool inside = true;
        for (const auto& f : p.facets)
            if (dot(f.normal, x) < f.offset * s) {
                inside = false;
                break;
            }
        if (inside) out.push_back(x);
        std::size_t j = 0;
        while (j < k && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == k) break;
        ++x[j];
    }
    return out;
}

EhrhartResult ehrhart_polynomial(const Configuration& a, long s_max, std::uint64_t candidate_cap) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "Ehrhart polynomial needs a grading w·a_i = 1");
    Polytope pl = hull_in_frame(a.matrix(), affine_frame(a.matrix(), false));
    Polytope pa = hull_in_frame(a.matrix(), affine_frame(a.matrix(), true));
    const long k = static_cast<long>(pl.dim);
    if (s_max < k + 2)
        fail(ErrorKind::instability, "s_max = " + std::to_string(s_max) + " is below dim + 2 = " +
                                         std::to_string(k + 2));
    EhrhartResult r;
    for (long s = 0; s <= s_max; ++s) {
        r.lattice_counts.emplace_back(static_cast<unsigned long>(lattice_points(pl, s, candidate_cap).size()));
        r.ambient_counts.emplace_back(static_cast<unsigned long>(lattice_points(pa, s, candidate_cap).size()));
    }
    auto fit = [&](const std::vector<Integer>& counts) {
        RatVector xs, ys;
        for (long s = 0; s <= k; ++s) {
            xs.emplace_back(s);
            ys.emplace_back(counts[static_cast<std::size_t>(s)]);
        }
        RationalPolynomial poly = interpolate(xs, ys);
        for (long s = k + 1; s <= s_max; ++s)
            if (poly(s) != Rational(counts[static_cast<std::size_t>(s)]))
                fail(ErrorKind::instability, "lattice counts are not polynomial up to s_max");
        return poly;
    };
    r.lattice_polynomial = fit(r.lattice_counts);
    r.ambient_polynomial = fit(r.ambient_counts);
    return r;
}

}  // namespace toric
