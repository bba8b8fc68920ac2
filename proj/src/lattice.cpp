#include "toric/lattice.hpp"

#include "toric/error.hpp"
#include "toric/linear_program.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

std::size_t rank(const IntMatrix& m) {
    // Fraction-free row reduction.
    IntMatrix a = m;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

Integer determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

HermiteResult hermite_normal_form(const IntMatrix& rows) {
    HermiteResult res;
    IntMatrix& h = res.hnf;
    IntMatrix& u = res.transform;
    h = rows;
    u = IntMatrix::identity(rows.rows());
    const std::size_t nr = h.rows();
    const std::size_t nc = h.cols();

    auto add_multiple = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < nc; ++j)
            if (h(src, j) != 0) h(dst, j) -= q * h(src, j);
        for (std::size_t j = 0; j < nr; ++j)
            if (u(src, j) != 0) u(dst, j) -= q * u(src, j);
    };
    auto swap_both = [&](std::size_t a, std::size_t b) {
        h.swap_rows(a, b);
        u.swap_rows(a, b);
    };

    std::size_t p = 0;
    for (std::size_t c = 0; c < nc && p < nr; ++c) {
        // Euclid on column c over rows p..nr-1.
        for (;;) {
            std::size_t best = nr;
            for (std::size_t i = p; i < nr; ++i)
                if (h(i, c) != 0 && (best == nr || abs_value(h(i, c)) < abs_value(h(best, c))))
                    best = i;
            if (best == nr) break;
            swap_both(p, best);
            bool clean = true;
            for (std::size_t i = p + 1; i < nr; ++i) {
                if (h(i, c) == 0) continue;
                add_multiple(i, p, floor_div(h(i, c), h(p, c)));
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(p, c) == 0) continue;
        if (h(p, c) < 0) {
            for (std::size_t j = 0; j < nc; ++j) h(p, j) = -h(p, j);
            for (std::size_t j = 0; j < nr; ++j) u(p, j) = -u(p, j);
        }
        for (std::size_t i = 0; i < p; ++i) add_multiple(i, p, floor_div(h(i, c), h(p, c)));
        ++p;
    }
    res.rank = p;
    return res;
}

IntMatrix hermite_basis(const IntMatrix& rows) {
    auto res = hermite_normal_form(rows);
    IntMatrix out(res.rank, rows.cols());
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) out(i, j) = res.hnf(i, j);
    return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
    IntMatrix a = hermite_basis(m);
    for (;;) {
        bool diagonal = true;
        for (std::size_t i = 0; i < a.rows() && diagonal; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (i != j && a(i, j) != 0) {
                    diagonal = false;
                    break;
                }
        if (diagonal) break;
        a = hermite_basis(a.transposed());
    }
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (a(i, i) != 0) d.push_back(abs_value(a(i, i)));
    // Enforce the divisibility chain.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return d;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

std::optional<RatVector> solve_rational(const RatMatrix& m, std::span<const Rational> b) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    RatMatrix a(nr, nc + 1);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a(i, j) = m(i, j);
        a(i, nc) = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a(p, c) == 0) ++p;
        if (p == nr) continue;
        a.swap_rows(p, r);
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j <= nc; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j <= nc; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (a(i, nc) != 0) return std::nullopt;
    RatVector x(nc, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = a(i, nc);
    return x;
}

// ---------------------------------------------------------------------------
// Sublattice
// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_dim, const IntMatrix& generators)
    : ambient_dim_(ambient_dim) {
    if (generators.rows() > 0 && generators.cols() != ambient_dim)
        fail(ErrorKind::dimension_mismatch, "generator length differs from ambient dimension");
    basis_ = generators.rows() ? hermite_basis(generators) : IntMatrix(0, ambient_dim);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t c = 0;
        while (basis_(i, c) == 0) ++c;
        pivots_.push_back(c);
    }
}

std::optional<IntVector> Sublattice::coordinates(std::span<const Integer> v) const {
    IntVector r(v.begin(), v.end());
    IntVector x(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        const Integer& piv = basis_(i, pivots_[i]);
        if (!mpz_divisible_p(r[pivots_[i]].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
        x[i] = r[pivots_[i]] / piv;
        if (x[i] != 0)
            for (std::size_t j = 0; j < ambient_dim_; ++j) r[j] -= x[i] * basis_(i, j);
    }
    if (!is_zero(r)) return std::nullopt;
    return x;
}

Sublattice Sublattice::saturation() const {
    if (rank() == 0) return *this;
    // (span L) ∩ Z^n = ker(ker(B)^T).
    Sublattice perp = integer_kernel(basis_);
    if (perp.rank() == 0) return Sublattice(ambient_dim_, IntMatrix::identity(ambient_dim_));
    return integer_kernel(perp.basis());
}

Sublattice integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return Sublattice(n, IntMatrix::identity(n));
    auto res = hermite_normal_form(m.transposed());
    IntMatrix k(n - res.rank, n);
    for (std::size_t i = res.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - res.rank, j) = res.transform(i, j);
    return Sublattice(n, k);
}

std::optional<Integer> lattice_index(const Sublattice& sub, const Sublattice& ambient) {
    if (sub.ambient_dim() != ambient.ambient_dim())
        fail(ErrorKind::dimension_mismatch, "lattices live in different ambient spaces");
    IntMatrix coords(sub.rank(), ambient.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = ambient.coordinates(sub.basis().row(i));
        if (!c) fail(ErrorKind::not_a_sublattice, "basis vector " + to_string(sub.basis().row(i)) +
                                                      " is not in the ambient lattice");
        for (std::size_t j = 0; j < ambient.rank(); ++j) coords(i, j) = (*c)[j];
    }
    if (sub.rank() != ambient.rank()) return std::nullopt;
    Integer idx = 1;
    for (const auto& d : smith_invariants(coords)) idx *= d;
    return idx;
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

namespace {

std::optional<IntVector> find_positive_functional(const IntMatrix& a) {
    const std::size_t d = a.rows();
    const std::size_t n = a.cols();
    // A grading w·a_i = 1 is the common case and needs no LP.
    {
        RatMatrix at = to_rational(a.transposed());
        RatVector ones(n, Rational(1));
        if (auto w = solve_rational(at, ones)) return clear_denominators(*w);
    }
    std::vector<LinearConstraint> cons;
    cons.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        LinearConstraint c;
        c.coefficients.resize(d);
        for (std::size_t i = 0; i < d; ++i) c.coefficients[i] = a(i, j);
        c.relation = Relation::greater_equal;
        c.rhs = 1;
        cons.push_back(std::move(c));
    }
    auto x = find_feasible_point(d, cons);
    if (!x) return std::nullopt;
    return clear_denominators(*x);
}

}  // namespace

Configuration::Configuration(IntMatrix entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
    if (entries_.rows() == 0 || entries_.cols() == 0)
        fail(ErrorKind::input, "a configuration needs d >= 1 and n >= 1");
    if (labels_.empty()) {
        for (std::size_t j = 0; j < entries_.cols(); ++j) labels_.push_back("x" + std::to_string(j + 1));
    } else if (labels_.size() != entries_.cols()) {
        fail(ErrorKind::input, "label count differs from column count");
    }
    positive_functional_ = find_positive_functional(entries_);
}

std::optional<std::vector<std::int64_t>> Configuration::variable_weights() const {
    if (!positive_functional_) return std::nullopt;
    std::vector<std::int64_t> w(size());
    for (std::size_t j = 0; j < size(); ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < dim(); ++i) s += (*positive_functional_)[i] * entries_(i, j);
        w[j] = to_int64(s);
    }
    return w;
}

std::size_t Configuration::rank() const { return toric::rank(entries_); }

Configuration Configuration::select_columns(std::span<const std::size_t> indices) const {
    IntMatrix m(dim(), indices.size());
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        for (std::size_t i = 0; i < dim(); ++i) m(i, k) = entries_(i, indices[k]);
        labels.push_back(labels_[indices[k]]);
    }
    return Configuration(std::move(m), std::move(labels));
}

// ---------------------------------------------------------------------------
// LatticeBinomial
// ---------------------------------------------------------------------------

ExpVector LatticeBinomial::positive_part() const {
    ExpVector p(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) p[i] = u_[i] > 0 ? u_[i] : 0;
    return p;
}

ExpVector LatticeBinomial::negative_part() const {
    ExpVector p(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) p[i] = u_[i] < 0 ? -u_[i] : 0;
    return p;
}

std::vector<std::size_t> LatticeBinomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < u_.size(); ++i)
        if (u_[i] != 0) s.push_back(i);
    return s;
}

bool LatticeBinomial::is_zero() const {
    return std::all_of(u_.begin(), u_.end(), [](Exponent x) { return x == 0; });
}

long LatticeBinomial::degree() const {
    long pos = 0, neg = 0;
    for (auto x : u_) (x > 0 ? pos : neg) += std::labs(x);
    return std::max(pos, neg);
}

LatticeBinomial LatticeBinomial::sign_normalized() const {
    for (auto x : u_) {
        if (x > 0) return *this;
        if (x < 0) return -*this;
    }
    return *this;
}

LatticeBinomial LatticeBinomial::operator-() const {
    ExpVector v(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i) v[i] = -u_[i];
    return LatticeBinomial(std::move(v));
}

bool LatticeBinomial::in_kernel_of(const Configuration& a) const {
    if (u_.size() != a.size()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (u_[j] != 0) s += a.matrix()(i, j) * static_cast<long>(u_[j]);
        if (s != 0) return false;
    }
    return true;
}

bool degree_lex_less(const LatticeBinomial& a, const LatticeBinomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.vector() > b.vector();
}

Sublattice kernel_lattice(const Configuration& a) { return integer_kernel(a.matrix()); }

std::optional<RatVector> grading(const Configuration& a) {
    RatMatrix at = to_rational(a.matrix().transposed());
    RatVector ones(a.size(), Rational(1));
    return solve_rational(at, ones);
}

Sublattice column_lattice(const Configuration& a) {
    return Sublattice(a.dim(), a.matrix().transposed());
}

std::vector<LatticeBinomial> lattice_basis_binomials(const Sublattice& kernel) {
    std::vector<LatticeBinomial> out;
    for (std::size_t i = 0; i < kernel.rank(); ++i)
        out.emplace_back(to_exponents(kernel.basis().row(i)));
    return out;
}

}  // namespace toric
