#include "toric/polynomial.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

SparsePolynomial::SparsePolynomial(const std::map<ExpVector, Integer>& terms, TermOrder order)
    : order_(std::move(order)) {
    for (const auto& [e, c] : terms)
        if (c != 0) terms_.push_back(Term{c, e});
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.exponent, b.exponent) > 0; });
}

SparsePolynomial SparsePolynomial::from_binomial(const LatticeBinomial& u, TermOrder order) {
    return binomial_power(u, 1, std::move(order));
}

SparsePolynomial SparsePolynomial::binomial_power(const LatticeBinomial& u, unsigned k, TermOrder order) {
    const ExpVector p = u.positive_part();
    const ExpVector q = u.negative_part();
    std::map<ExpVector, Integer> terms;
    for (unsigned j = 0; j <= k; ++j) {
        ExpVector e(u.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<Exponent>((k - j) * p[i] + j * q[i]);
        Integer c = binomial_coefficient(k, j);
        if (j % 2) c = -c;
        terms[e] += c;
    }
    return SparsePolynomial(terms, std::move(order));
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        const auto& [c, e] = terms_[t];
        std::string mono = monomial_to_string(e, labels);
        Integer a = abs_value(c);
        if (t == 0)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono == "1")
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

SparsePolynomial normal_form(const SparsePolynomial& f, const BinomialBasis& g) {
    std::map<ExpVector, Integer> acc;
    for (const auto& t : f.terms()) acc[g.reduce(t.exponent)] += t.coefficient;
    return SparsePolynomial(acc, g.order);
}

RadicalVerdict radical_membership_bounded(const LatticeBinomial& b,
                                          std::span<const LatticeBinomial> g, unsigned k_max) {
    const std::size_t n = b.size();
    for (const auto& u : g)
        if (u.size() != n) fail(ErrorKind::dimension_mismatch, "binomials differ in length");
    auto order = TermOrder::grevlex(n);
    BinomialBasis gb = buchberger(g, order);
    for (unsigned k = 1; k <= k_max; ++k) {
        auto power = SparsePolynomial::binomial_power(b, k, order);
        if (normal_form(power, gb).is_zero()) return {true, k};
    }
    return {false, 0};
}

// ---------------------------------------------------------------------------
// Univariate
// ---------------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(RatVector coefficients) : c_(std::move(coefficients)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& s) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * s + *it;
    return v;
}

std::string RationalPolynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string coef = toric::to_string(a);
        if (k == 0)
            out += coef;
        else {
            if (a != 1) out += coef + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RationalPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    const std::size_t m = xs.size();
    if (ys.size() != m) fail(ErrorKind::dimension_mismatch, "interpolation data lengths differ");
    RatVector result(m, Rational(0));
    // Lagrange: accumulate y_i * prod_{j != i} (s - x_j) / (x_i - x_j).
    for (std::size_t i = 0; i < m; ++i) {
        RatVector basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            RatVector next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        if (denom == 0) fail(ErrorKind::input, "interpolation nodes are not distinct");
        Rational f = ys[i] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) result[k] += f * basis[k];
    }
    return RationalPolynomial(std::move(result));
}

Integer binomial_coefficient(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace toric
