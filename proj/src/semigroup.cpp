#include "toric/semigroup.hpp"

#include "toric/error.hpp"
#include "toric/polyhedral.hpp"
#include "toric/term_order.hpp"
#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace toric {

namespace {

/// Distinct nonzero columns.
std::vector<IntVector> generators_of(const Configuration& a) {
    std::set<IntVector> seen;
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        IntVector v = a.column(j);
        if (!is_zero(v) && seen.insert(v).second) out.push_back(std::move(v));
    }
    return out;
}

/// pos(A) as inequalities on span(A); the positive functional is included
/// so that one-dimensional cones (no facets) still exclude the negative ray.
struct ConeTest {
    std::vector<IntVector> normals;

    explicit ConeTest(const Configuration& a) {
        normals.push_back(*a.positive_functional());
        if (a.rank() > 1) {
            Cone cone = positive_hull(a);
            for (auto& f : cone.facets) normals.push_back(std::move(f));
        }
    }
    bool contains(std::span<const Integer> v) const {
        return std::all_of(normals.begin(), normals.end(), [&](const IntVector& y) { return dot(y, v) >= 0; });
    }
};

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

class MembershipSearch {
public:
    MembershipSearch(const Configuration& a, const ConeTest& cone, std::uint64_t cap)
        : gens_(generators_of(a)), cone_(cone), za_(column_lattice(a)), cap_(cap) {}

    bool member(const IntVector& v) {
        if (!za_.contains(v) || !cone_.contains(v)) return false;
        return search(v);
    }

private:
    bool search(const IntVector& v) {
        if (is_zero(v)) return true;
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
        if (memo_.size() >= cap_)
            fail(ErrorKind::cap_exceeded, "semigroup membership search exceeded " + std::to_string(cap_) + " states");
        memo_[v] = false;
        bool found = false;
        for (const auto& g : gens_) {
            IntVector rest = subtract(v, g);
            if (cone_.contains(rest) && search(rest)) {
                found = true;
                break;
            }
        }
        memo_[v] = found;
        return found;
    }

    std::vector<IntVector> gens_;
    const ConeTest& cone_;
    Sublattice za_;
    std::uint64_t cap_;
    std::map<IntVector, bool> memo_;
};

/// Adjugate of a square integer matrix, adj(V)·V = det(V)·I.
IntMatrix adjugate(const IntMatrix& v) {
    const std::size_t r = v.rows();
    IntMatrix adj(r, r, Integer(0));
    if (r == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            IntMatrix minor(r - 1, r - 1);
            for (std::size_t p = 0, mp = 0; p < r; ++p) {
                if (p == i) continue;
                for (std::size_t q = 0, mq = 0; q < r; ++q) {
                    if (q == j) continue;
                    minor(mp, mq++) = v(p, q);
                }
                ++mp;
            }
            Integer c = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? c : Integer(-c);
        }
    return adj;
}

/// Lattice points x = λ·V with 0 <= λ < 1 for a full-rank square V whose
/// rows generate the simplicial cone.
void parallelepiped_points(const IntMatrix& v, std::set<IntVector>& out, std::uint64_t cap) {
    const std::size_t r = v.rows();
    const Integer det = determinant(v);
    const Integer vol = abs_value(det);
    if (vol == 1) return;
    if (out.size() + vol > Integer(std::to_string(cap)))
        fail(ErrorKind::cap_exceeded, "Hilbert basis candidates exceed " + std::to_string(cap));
    const IntMatrix adj = adjugate(v);
    const IntMatrix h = hermite_basis(v);
    // Coset representatives of Z^r / rowspace(V): 0 <= y_j < h_jj.
    IntVector y(r, Integer(0));
    for (;;) {
        // λ = y·V^{-1} = (y·adj)/det.
        IntVector mu(r);
        for (std::size_t j = 0; j < r; ++j) {
            Integer num = 0;
            for (std::size_t i = 0; i < r; ++i) num += y[i] * adj(i, j);
            if (det < 0) num = -num;
            mu[j] = num - floor_div(num, vol) * vol;
        }
        IntVector x(r, Integer(0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) x[k] += mu[j] * v(j, k);
        for (auto& e : x) e /= vol;
        if (!is_zero(x)) out.insert(std::move(x));

        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++y[i] < h(i, i)) break;
            y[i] = 0;
        }
        if (i == r) break;
    }
}

bool vector_less(const IntVector& x, const IntVector& y, const IntVector& c) {
    Integer dx = dot(c, x), dy = dot(c, y);
    if (dx != dy) return dx < dy;
    return x < y;
}

void sort_vectors(std::vector<IntVector>& v, const IntVector& c) {
    std::sort(v.begin(), v.end(), [&](const IntVector& x, const IntVector& y) { return vector_less(x, y, c); });
}

}  // namespace

std::vector<IntVector> hilbert_basis(const Configuration& a, const SemigroupLimits& limits) {
    if (!a.is_pointed()) fail(ErrorKind::not_pointed, "the Hilbert basis needs a pointed cone");
    const IntVector& c = *a.positive_functional();
    const std::vector<IntVector> gens = generators_of(a);
    if (gens.empty()) return {};
    const Sublattice za = column_lattice(a);
    const std::size_t r = za.rank();
    if (r > limits.rank_cap)
        fail(ErrorKind::cap_exceeded, "Hilbert basis enumeration is capped at rank " +
                                          std::to_string(limits.rank_cap) + " (rank " + std::to_string(r) + ")");

    // Primitive ray generators in ZA coordinates.
    std::vector<IntVector> coords;
    {
        std::set<IntVector> seen;
        for (const auto& g : gens) {
            IntVector y = make_primitive(*za.coordinates(g));
            if (seen.insert(y).second) coords.push_back(std::move(y));
        }
    }
    std::set<IntVector> candidates(coords.begin(), coords.end());

    if (r > 1) {
        // Triangulate the cone through a cross-section {c'·y = L}.
        IntVector cc(r, Integer(0));
        for (std::size_t i = 0; i < r; ++i) cc[i] = dot(c, za.basis().row(i));
        Integer l = 1;
        std::vector<Integer> level(coords.size());
        for (std::size_t j = 0; j < coords.size(); ++j) {
            level[j] = dot(cc, coords[j]);
            l = lcm(l, level[j]);
        }
        IntMatrix section(r, coords.size());
        for (std::size_t j = 0; j < coords.size(); ++j)
            for (std::size_t i = 0; i < r; ++i) section(i, j) = coords[j][i] * (l / level[j]);
        std::mt19937_64 rng(0x4b1d);
        std::uniform_int_distribution<long> dist(0, 1L << 20);
        std::vector<Integer> heights(coords.size());
        for (auto& x : heights) x = dist(rng);
        Triangulation t = regular_triangulation(Configuration(section), heights);
        for (const auto& s : t.simplices) {
            IntMatrix v(r, r);
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t i = 0; i < r; ++i) v(k, i) = coords[s[k]][i];
            parallelepiped_points(v, candidates, limits.candidate_cap);
        }
    }

    // Back to Z^d, then keep the irreducible candidates.
    std::vector<IntVector> ambient;
    for (const auto& y : candidates) {
        IntVector x(a.dim(), Integer(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < a.dim(); ++k) x[k] += y[i] * za.basis()(i, k);
        ambient.push_back(std::move(x));
    }
    sort_vectors(ambient, c);
    const ConeTest cone(a);
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
        const Integer di = dot(c, ambient[i]);
        bool reducible = false;
        for (std::size_t j = 0; j < i && !reducible; ++j) {
            if (dot(c, ambient[j]) >= di) break;
            reducible = cone.contains(subtract(ambient[i], ambient[j]));
        }
        if (!reducible) basis.push_back(ambient[i]);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

bool in_semigroup(const Configuration& a, std::span<const Integer> v, const SemigroupLimits& limits) {
    if (v.size() != a.dim()) fail(ErrorKind::dimension_mismatch, "vector length differs from d");
    if (!a.is_pointed()) fail(ErrorKind::not_pointed, "membership search needs a pointed cone");
    const ConeTest cone(a);
    MembershipSearch search(a, cone, limits.membership_cap);
    return search.member(IntVector(v.begin(), v.end()));
}

SemigroupReport is_normal(const Configuration& a, const SemigroupLimits& limits) {
    SemigroupReport report;
    report.pointed = a.is_pointed();
    if (!report.pointed) fail(ErrorKind::not_pointed, "normality test needs a pointed cone");
    report.hilbert_basis = hilbert_basis(a, limits);
    const ConeTest cone(a);
    MembershipSearch search(a, cone, limits.membership_cap);
    std::vector<IntVector> ordered = report.hilbert_basis;
    sort_vectors(ordered, *a.positive_functional());
    for (const auto& h : ordered)
        if (!search.member(h)) {
            report.witness = h;
            break;
        }
    report.normal = !report.witness;
    if (!report.normal) report.normalization_generators = report.hilbert_basis;
    if (report.normal) {
        const Sublattice za = column_lattice(a);
        if (report.hilbert_basis.size() == za.rank()) {
            IntMatrix rows(0, a.dim());
            for (const auto& h : report.hilbert_basis) rows.append_row(h);
            report.smooth = lattice_index(Sublattice(a.dim(), rows), za) == Integer(1);
        }
    }
    return report;
}

bool is_smooth(const Configuration& a, const SemigroupLimits& limits) {
    return is_normal(a, limits).smooth;
}

ProjectiveReport is_normal_projective(const Configuration& a, const SemigroupLimits& limits) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "projective tests need a grading w·a_i = 1");
    ProjectiveReport out;
    for (std::size_t v : vertices_of(a)) {
        const IntVector base = a.column(v);
        std::vector<IntVector> cols;
        std::vector<std::string> labels;
        std::set<IntVector> seen;
        for (std::size_t j = 0; j < a.size(); ++j) {
            IntVector diff = subtract(a.column(j), base);
            if (is_zero(diff) || !seen.insert(diff).second) continue;
            cols.push_back(std::move(diff));
            labels.push_back(a.labels()[j]);
        }
        ChartReport chart;
        chart.vertex = v;
        if (cols.empty()) {
            chart.report.normal = chart.report.smooth = true;
        } else {
            chart.chart = Configuration(IntMatrix::from_columns(cols, a.dim()), labels);
            chart.report = is_normal(chart.chart, limits);
        }
        out.normal = out.normal && chart.report.normal;
        out.smooth = out.smooth && chart.report.smooth;
        out.charts.push_back(std::move(chart));
    }
    return out;
}

bool is_smooth_projective(const Configuration& a, const SemigroupLimits& limits) {
    return is_normal_projective(a, limits).smooth;
}

UnimodularReport is_unimodular(const Configuration& a, std::uint64_t seed) {
    UnimodularReport out;
    const CircuitSet cs = circuits(a);
    out.unimodular = true;
    for (const auto& c : cs.elements) {
        bool small = std::all_of(c.circuit.vector().begin(), c.circuit.vector().end(),
                                 [](Exponent x) { return x >= -1 && x <= 1; });
        if (!small) {
            out.unimodular = false;
            out.violating_circuit = c.circuit;
            break;
        }
    }
    if (a.size() > 8) return out;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 1000);
    constexpr int kSamples = 4;
    if (grading(a)) {
        for (int s = 0; s < kSamples; ++s) {
            std::vector<Integer> h(a.size());
            for (auto& x : h) x = dist(rng);
            Triangulation t = regular_triangulation(a, h);
            ++out.triangulations_checked;
            if (out.unimodular && !t.unimodular())
                fail(ErrorKind::internal, "circuits are squarefree but a regular triangulation is not unimodular");
        }
    }
    if (kernel_lattice(a).rank() > 0) {
        for (int s = 0; s < kSamples; ++s) {
            std::vector<std::int64_t> w(a.size());
            for (auto& x : w) x = dist(rng);
            BinomialBasis gb = toric_ideal(a, TermOrder::weight(w));
            ++out.initial_ideals_checked;
            for (const auto& m : gb.leading_monomials())
                if (out.unimodular && std::any_of(m.begin(), m.end(), [](Exponent x) { return x > 1; }))
                    fail(ErrorKind::internal, "circuits are squarefree but an initial ideal is not radical");
        }
    }
    return out;
}

HereditaryReport is_hereditarily_normal(const Configuration& a, const SemigroupLimits& limits) {
    HereditaryReport out;
    const CircuitSet cs = circuits(a);
    out.hereditarily_normal = true;
    bool unimodular = true;
    for (const auto& c : cs.elements) {
        if (!c.positive_squarefree || !c.negative_squarefree) unimodular = false;
        if (!c.positive_squarefree && !c.negative_squarefree && out.hereditarily_normal) {
            out.hereditarily_normal = false;
            out.violating_circuit = c.circuit;
        }
    }
    if (unimodular && !out.hereditarily_normal)
        fail(ErrorKind::internal, "unimodular but not hereditarily normal");
    if (a.is_pointed()) {
        try {
            out.normal = is_normal(a, limits).normal;
        } catch (const ToricError& e) {
            if (e.kind() != ErrorKind::cap_exceeded) throw;
        }
        if (out.hereditarily_normal && out.normal == false)
            fail(ErrorKind::internal, "hereditarily normal configuration is not normal");
    }
    return out;
}

}  // namespace toric
