#pragma once

#include "toric/lattice.hpp"
#include "toric/term_order.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// x^head - x^tail with head > tail in the attached order. Unlike a
/// LatticeBinomial the two sides may share variables; lattice-basis ideals
/// and their S-polynomials need that.
struct Binomial {
    ExpVector head;
    ExpVector tail;

    LatticeBinomial difference() const;
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orients x^a - x^b under `order`; nullopt when a == b.
std::optional<Binomial> orient(const ExpVector& a, const ExpVector& b, const TermOrder& order);
std::optional<Binomial> orient(const LatticeBinomial& u, const TermOrder& order);

/// A set of binomials oriented under one term order.
struct BinomialBasis {
    TermOrder order;
    std::vector<Binomial> elements;
    bool reduced = false;

    std::size_t size() const noexcept { return elements.size(); }
    /// Sign-normalised lattice vectors head - tail.
    std::vector<LatticeBinomial> lattice_vectors() const;
    std::vector<ExpVector> leading_monomials() const;
    /// Largest degree max(|head|, |tail|); 0 when empty.
    long max_degree() const;
    /// Fully reduces a monomial by the heads; the result is a standard
    /// monomial when the set is a Gröbner basis.
    ExpVector reduce(ExpVector m) const;
    /// Both sides reduced to the same standard monomial.
    bool reduces_to_zero(const ExpVector& a, const ExpVector& b) const;
    bool contains(const LatticeBinomial& u) const;
};

/// Sorts by (total degree of head, head exponent vector descending).
void sort_canonically(std::vector<Binomial>& v);

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped = 0;
    std::size_t reductions_to_zero = 0;
};

/// Buchberger's algorithm for pure difference binomials. S-polynomials and
/// remainders of such binomials are again such binomials, so every object
/// here is a pair of monomials.
///
/// Supports incremental insertion and degree-truncated runs, which is what
/// minimal-generator extraction needs.
class BinomialGroebner {
public:
    explicit BinomialGroebner(TermOrder order, bool use_criteria = true);

    const TermOrder& order() const noexcept { return order_; }

    /// Reduces and inserts one generator; returns false if it reduced to 0.
    bool add(const ExpVector& a, const ExpVector& b);
    bool add(const LatticeBinomial& u) { return add(u.positive_part(), u.negative_part()); }

    /// Processes pending S-pairs whose lcm degree is at most max_degree (all
    /// of them when absent).
    void run(std::optional<std::int64_t> max_degree = std::nullopt);
    bool has_pending_pairs() const noexcept { return !pairs_.empty(); }

    ExpVector reduce(ExpVector m) const;
    /// Remainder of x^a - x^b, nullopt when it is zero.
    std::optional<Binomial> reduce(const ExpVector& a, const ExpVector& b) const;

    /// Reduced Gröbner basis; call after run() has emptied the queue.
    BinomialBasis reduced_basis() const;

    const BuchbergerStats& stats() const noexcept { return stats_; }

private:
    struct Element {
        Binomial b;
        std::uint64_t head_mask = 0;
        bool active = true;
    };
    struct Pair {
        std::int64_t degree;
        ExpVector lcm;
        std::uint32_t i, j;
        bool operator<(const Pair& o) const;
    };

    int find_divisor(const ExpVector& m, std::uint64_t mask) const;
    void insert(Binomial b);

    TermOrder order_;
    bool use_criteria_;
    std::vector<Element> elements_;
    std::vector<std::uint32_t> active_;
    std::set<Pair> pairs_;
    BuchbergerStats stats_;
};

/// Reduced Gröbner basis of the ideal generated by `gens`.
BinomialBasis buchberger(std::span<const LatticeBinomial> gens, const TermOrder& order,
                         bool use_criteria = true);
BinomialBasis buchberger(std::span<const Binomial> gens, const TermOrder& order,
                         bool use_criteria = true);

/// "x1^2*x4 - x2^3"; labels default to x1..xn.
std::string monomial_to_string(const ExpVector& m, const std::vector<std::string>& labels = {});
std::string binomial_to_string(const ExpVector& head, const ExpVector& tail,
                               const std::vector<std::string>& labels = {});
std::string binomial_to_string(const LatticeBinomial& u, const std::vector<std::string>& labels = {});

}  // namespace toric
