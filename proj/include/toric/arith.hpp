#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Exponent type for monomials and lattice binomials. Kernel vectors are
/// computed in arbitrary precision and narrowed on conversion (checked).
using Exponent = std::int32_t;
using ExpVector = std::vector<Exponent>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector make_primitive(IntVector v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing in the same direction.
IntVector clear_denominators(std::span<const Rational> v);

IntVector to_integers(std::span<const Exponent> v);
IntVector to_integers(std::span<const std::int64_t> v);

/// Throws ToricError(kind::overflow) when an entry does not fit.
ExpVector to_exponents(std::span<const Integer> v);
std::int64_t to_int64(const Integer& x);

std::string to_string(std::span<const Integer> v);
std::string to_string(const Rational& q);

}  // namespace toric
