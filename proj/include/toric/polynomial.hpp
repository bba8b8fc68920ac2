#pragma once

#include "toric/binomial_gb.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// Multivariate polynomial with integer coefficients, terms kept in
/// decreasing order under an attached term order. No zero coefficients.
class SparsePolynomial {
public:
    struct Term {
        Integer coefficient;
        ExpVector exponent;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SparsePolynomial() = default;
    SparsePolynomial(const std::map<ExpVector, Integer>& terms, TermOrder order);

    static SparsePolynomial from_binomial(const LatticeBinomial& u, TermOrder order);
    /// (x^{u+} - x^{u-})^k expanded.
    static SparsePolynomial binomial_power(const LatticeBinomial& u, unsigned k, TermOrder order);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const TermOrder& order() const noexcept { return order_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::string to_string(const std::vector<std::string>& labels = {}) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermOrder order_;
    std::vector<Term> terms_;
};

/// Remainder of f on division by the binomial heads of G. Each monomial is
/// rewritten to a standard monomial independently, which is legitimate
/// because binomial reduction never changes coefficients.
SparsePolynomial normal_form(const SparsePolynomial& f, const BinomialBasis& g);

struct RadicalVerdict {
    bool member = false;  // false means inconclusive up to k_max
    unsigned power = 0;
};

/// Least k <= k_max with b^k in <G>.
RadicalVerdict radical_membership_bounded(const LatticeBinomial& b,
                                          std::span<const LatticeBinomial> g, unsigned k_max);

/// Univariate polynomial with rational coefficients, constant term first.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(RatVector coefficients);

    const RatVector& coefficients() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator()(const Rational& s) const;
    std::string to_string(char var = 's') const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    RatVector c_;
};

/// The unique polynomial of degree < xs.size() through the points.
RationalPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

Integer binomial_coefficient(long n, long k);

}  // namespace toric
