#pragma once

#include "toric/lattice.hpp"
#include "toric/toric_sets.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

struct SemigroupLimits {
    std::size_t rank_cap = 6;              // Hilbert basis enumeration
    std::uint64_t candidate_cap = 2'000'000;
    std::uint64_t membership_cap = 2'000'000;  // states in NA-membership search
};

/// Minimal generating set of the monoid pos(A) ∩ ZA, sorted. Enumerates
/// parallelepiped points of a simplicial subdivision of the cone in
/// coordinates of ZA, then discards every candidate that is another
/// candidate plus a monoid element.
std::vector<IntVector> hilbert_basis(const Configuration& a, const SemigroupLimits& limits = {});

/// Exact membership of v in NA.
bool in_semigroup(const Configuration& a, std::span<const Integer> v, const SemigroupLimits& limits = {});

struct SemigroupReport {
    bool pointed = true;
    bool normal = false;
    bool smooth = false;
    std::vector<IntVector> hilbert_basis;
    std::optional<IntVector> witness;  // in pos(A) ∩ ZA but not in NA
    /// The Hilbert basis B when A is not normal (N B is the normalisation).
    std::vector<IntVector> normalization_generators;
};

/// Normality of A (equivalently of the affine variety X_A).
SemigroupReport is_normal(const Configuration& a, const SemigroupLimits& limits = {});

struct ChartReport {
    std::size_t vertex = 0;  // column index of the vertex
    Configuration chart;     // nonzero columns of A - a_vertex
    SemigroupReport report;
};

struct ProjectiveReport {
    bool normal = true;
    bool smooth = true;
    std::vector<ChartReport> charts;
};

/// Normality and smoothness of Y_A from the affine charts at the vertices
/// of conv(A). Needs a grading.
ProjectiveReport is_normal_projective(const Configuration& a, const SemigroupLimits& limits = {});

/// Free-semigroup test: normal, |Hilbert basis| = rank ZA, and the basis
/// generates ZA.
bool is_smooth(const Configuration& a, const SemigroupLimits& limits = {});
bool is_smooth_projective(const Configuration& a, const SemigroupLimits& limits = {});

struct UnimodularReport {
    bool unimodular = false;
    std::optional<LatticeBinomial> violating_circuit;
    std::size_t triangulations_checked = 0;
    std::size_t initial_ideals_checked = 0;
};

/// All circuits have entries in {-1, 0, 1}. For n <= 8 sampled regular
/// triangulations and initial ideals are checked against the verdict;
/// a disagreement throws internal.
UnimodularReport is_unimodular(const Configuration& a, std::uint64_t seed = 7);

struct HereditaryReport {
    bool hereditarily_normal = false;
    std::optional<LatticeBinomial> violating_circuit;
    /// Normality of A when it could be decided (pointed and within caps).
    std::optional<bool> normal;
};

/// Every circuit has a squarefree side. Cross-checks unimodular ⇒
/// hereditarily normal ⇒ normal and throws internal on a violation.
HereditaryReport is_hereditarily_normal(const Configuration& a, const SemigroupLimits& limits = {});

}  // namespace toric
