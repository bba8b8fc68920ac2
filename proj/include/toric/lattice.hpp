#pragma once

#include "toric/arith.hpp"
#include "toric/matrix.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// Exact integer linear algebra
// ---------------------------------------------------------------------------

std::size_t rank(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

struct HermiteResult {
    IntMatrix hnf;        // row-style Hermite normal form, zero rows last
    IntMatrix transform;  // unimodular U with U * input == hnf
    std::size_t rank = 0;
};

/// Row-style Hermite normal form: leading entries positive, entries above
/// each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& rows);

/// The nonzero rows of the Hermite normal form of the row lattice.
IntMatrix hermite_basis(const IntMatrix& rows);

/// Invariant factors d_1 | d_2 | ... of the row lattice (nonzero ones only).
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Some rational solution of m * x = b (free variables set to zero).
std::optional<RatVector> solve_rational(const RatMatrix& m, std::span<const Rational> b);

RatMatrix to_rational(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Sublattices in canonical form
// ---------------------------------------------------------------------------

/// A sublattice of Z^ambient stored by its Hermite basis, so equality of
/// lattices is equality of the stored matrices.
class Sublattice {
public:
    Sublattice() = default;
    /// Rows of `generators` span the lattice; they need not be independent.
    Sublattice(std::size_t ambient_dim, const IntMatrix& generators);

    const IntMatrix& basis() const noexcept { return basis_; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }

    /// Integer coordinates of v in the stored basis, nullopt if v is not in
    /// the lattice.
    std::optional<IntVector> coordinates(std::span<const Integer> v) const;
    bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

    /// The lattice (span_R L) ∩ Z^ambient.
    Sublattice saturation() const;

    friend bool operator==(const Sublattice&, const Sublattice&) = default;

private:
    std::size_t ambient_dim_ = 0;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Saturated basis of {u in Z^n : m u = 0}, in Hermite form.
Sublattice integer_kernel(const IntMatrix& m);

/// [ambient : sub], or nullopt standing for infinity when the ranks differ.
/// Throws not_a_sublattice when sub is not contained in ambient.
std::optional<Integer> lattice_index(const Sublattice& sub, const Sublattice& ambient);

// ---------------------------------------------------------------------------
// Configurations and lattice binomials
// ---------------------------------------------------------------------------

/// An integer d x n matrix whose columns are the exponent vectors a_1..a_n.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(IntMatrix entries, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return entries_.rows(); }
    std::size_t size() const noexcept { return entries_.cols(); }
    const IntMatrix& matrix() const noexcept { return entries_; }
    IntVector column(std::size_t j) const { return entries_.column(j); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// NA ∩ -NA = {0} in the strong form: some integer c has c·a_i > 0 for
    /// every column. Decided by exact LP on construction.
    bool is_pointed() const noexcept { return positive_functional_.has_value(); }
    /// Integer row vector c with c·a_i >= 1 for all i, when pointed.
    const std::optional<IntVector>& positive_functional() const noexcept {
        return positive_functional_;
    }
    /// The positive integer grading deg(x_i) = c·a_i making every lattice
    /// ideal of this configuration homogeneous.
    std::optional<std::vector<std::int64_t>> variable_weights() const;

    std::size_t rank() const;

    Configuration select_columns(std::span<const std::size_t> indices) const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.entries_ == b.entries_ && a.labels_ == b.labels_;
    }

private:
    IntMatrix entries_;
    std::vector<std::string> labels_;
    std::optional<IntVector> positive_functional_;
};

/// The lattice vector u = u+ - u- standing for the binomial x^{u+} - x^{u-}.
class LatticeBinomial {
public:
    LatticeBinomial() = default;
    explicit LatticeBinomial(ExpVector u) : u_(std::move(u)) {}

    const ExpVector& vector() const noexcept { return u_; }
    std::size_t size() const noexcept { return u_.size(); }
    ExpVector positive_part() const;
    ExpVector negative_part() const;
    std::vector<std::size_t> support() const;
    bool is_zero() const;

    /// max(|u+|, |u-|) in the standard grading.
    long degree() const;

    /// Flip so that the first nonzero coordinate is positive.
    LatticeBinomial sign_normalized() const;
    LatticeBinomial operator-() const;

    bool in_kernel_of(const Configuration& a) const;

    friend bool operator==(const LatticeBinomial&, const LatticeBinomial&) = default;
    friend auto operator<=>(const LatticeBinomial& a, const LatticeBinomial& b) {
        return a.u_ <=> b.u_;
    }

private:
    ExpVector u_;
};

/// Sort key used for every emitted set: (degree, exponent vector lex).
bool degree_lex_less(const LatticeBinomial& a, const LatticeBinomial& b);

Sublattice kernel_lattice(const Configuration& a);

/// Some rational w with w·a_i = 1 for all i, if one exists.
std::optional<RatVector> grading(const Configuration& a);

/// The lattice ZA spanned by the columns.
Sublattice column_lattice(const Configuration& a);

/// Binomials from the rows of a kernel lattice basis.
std::vector<LatticeBinomial> lattice_basis_binomials(const Sublattice& kernel);

}  // namespace toric
