#pragma once

#include "toric/binomial_gb.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

struct CircuitInfo {
    LatticeBinomial circuit;  // primitive, sign-normalised
    std::vector<std::size_t> support;
    long degree = 0;
    Integer index = 1;  // [R(supp) ∩ ZA : Z(supp)]
    Integer true_degree = 0;
    bool positive_squarefree = false;
    bool negative_squarefree = false;
};

struct CircuitSet {
    std::vector<CircuitInfo> elements;  // sorted by (degree, lex)

    std::vector<LatticeBinomial> binomials() const;
    long max_degree() const;
};

/// All circuits of A, one (rank+1)-subset of columns at a time. Fails with
/// cap_exceeded when there are more than `subset_cap` subsets to examine.
CircuitSet circuits(const Configuration& a, std::uint64_t subset_cap = 5'000'000);

struct TrueDegree {
    long degree = 0;
    Integer index = 1;
    Integer true_degree = 0;
};

/// degree(C) * [R(supp C) ∩ ZA : Z(supp C)]. Throws not_a_circuit.
TrueDegree true_degree(const LatticeBinomial& c, const Configuration& a);

/// Λ(A) = [[A, 0], [I, I]] with labels x1..xn, y1..yn.
Configuration lawrence(const Configuration& a);

/// Graver basis from the minimal generators of I_{Λ(A)} with y set to 1;
/// sign-normalised and sorted by (degree, lex). Checks that no element
/// conformally dominates another.
std::vector<LatticeBinomial> graver(const Configuration& a);

/// True iff no element is conformal to (the positive or negative of)
/// another element of the set.
bool satisfies_graver_axiom(const std::vector<LatticeBinomial>& set);

struct UniversalGB {
    std::vector<LatticeBinomial> elements;  // sign-normalised, sorted
    std::size_t num_bases = 0;              // distinct reduced GBs visited
    bool exhaustive = false;                // false: a lower bound only
    std::vector<BinomialBasis> bases;
};

struct UgbOptions {
    bool exhaustive = true;
    std::size_t samples = 20;     // sampled mode
    std::size_t var_cap = 10;     // exhaustive mode
    std::size_t basis_cap = 200'000;
    std::uint64_t seed = 0x5eed;
    bool keep_bases = false;
};

/// Union of reduced Gröbner bases, either over the whole Gröbner fan
/// (breadth-first facet flips) or over random weights.
UniversalGB universal_gb(const Configuration& a, const UgbOptions& options = {});

}  // namespace toric
