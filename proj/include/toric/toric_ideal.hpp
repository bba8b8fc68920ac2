#pragma once

#include "toric/binomial_gb.hpp"
#include "toric/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

/// Reduced Gröbner basis of I_A under `order`, from a lattice basis of
/// ker(A) saturated one variable at a time.
BinomialBasis toric_ideal(const Configuration& a, const TermOrder& order);

/// Generators of I_A obtained by eliminating the torus variables from
/// <x_i t^{a_i-} - t^{a_i+}> (plus s*t_1...t_d - 1 when A has negative
/// entries). Independent of the saturation code path; used as an oracle.
BinomialBasis toric_ideal_elimination_oracle(const Configuration& a);

/// A minimal generating set, by increasing degree. Needs a grading.
/// The set itself depends on the grevlex basis it is extracted from; its
/// size and degree multiset do not.
std::vector<LatticeBinomial> minimal_generators(const Configuration& a);

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/M for a monomial
/// ideal M in n variables of degree 1. Coefficients, constant first.
std::vector<Integer> hilbert_series_numerator(std::vector<ExpVector> generators, std::size_t n);

/// dim_k C[A]_s for s = 0..s_max (needs a grading).
std::vector<Integer> hilbert_function(const Configuration& a, long s_max);

/// Hilbert polynomial of C[A] (needs a grading). Fails with instability
/// when it cannot be certified below s_cap.
RationalPolynomial hilbert_polynomial(const Configuration& a, long s_cap = 256);

enum class QuadraticGbVerdict { exists, none };

struct QuadraticGbSearch {
    QuadraticGbVerdict verdict = QuadraticGbVerdict::none;
    /// A weight whose refinements give a quadratic reduced basis.
    std::optional<std::vector<std::int64_t>> weight;
    std::uint64_t choices = 0;       // standard-monomial choices enumerated
    std::uint64_t hilbert_matches = 0;
};

/// Decides whether some term order gives a reduced Gröbner basis of degree
/// <= 2. Every order picks one standard monomial per degree-two fiber; the
/// quadrics then generate in(I) iff the monomial ideal of the remaining
/// monomials has the Hilbert series of I_A, and a matching choice counts
/// only if an LP finds a weight realising it. Needs a grading; throws
/// cap_exceeded past `cap` choices.
QuadraticGbSearch quadratic_groebner_search(const Configuration& a, std::uint64_t cap = 5'000'000);

}  // namespace toric
