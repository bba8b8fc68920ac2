#pragma once

#include "toric/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

enum class OrderFlavor { lex, grevlex, weight_lex, elimination };

/// A monomial order given as a matrix order: rows of integer weights compared
/// in turn, then a lexicographic tie-break over a variable permutation.
/// Graded reverse lexicographic orders are handled natively.
///
/// The first weight row must be strictly positive for the order to be a
/// well-order on all monomials; constructors enforce this.
class TermOrder {
public:
    TermOrder() = default;

    /// x_{perm[0]} > x_{perm[1]} > ... ; identity when perm is empty.
    static TermOrder lex(std::size_t n, std::vector<std::size_t> perm = {});
    static TermOrder grevlex(std::size_t n, std::vector<std::size_t> perm = {});
    /// Weight-then-lex. Weights must be non-negative; zero entries are
    /// refined by total degree before the tie-break.
    static TermOrder weight(std::vector<std::int64_t> w, std::vector<std::size_t> perm = {});
    /// Every monomial involving a variable in `block` beats every monomial
    /// free of them; grevlex inside each block.
    static TermOrder elimination(std::size_t n, const std::vector<std::size_t>& block);
    /// General matrix order. Either rows[0] is strictly positive or every
    /// row is non-negative; otherwise the order is not a well-order.
    static TermOrder matrix(std::vector<std::vector<std::int64_t>> rows,
                            std::vector<std::size_t> perm = {},
                            OrderFlavor flavor = OrderFlavor::weight_lex);

    std::size_t num_vars() const noexcept { return n_; }
    OrderFlavor flavor() const noexcept { return flavor_; }
    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& tie_break() const noexcept { return perm_; }

    /// Sign of a - b in the order.
    int compare(const ExpVector& a, const ExpVector& b) const;
    bool less(const ExpVector& a, const ExpVector& b) const { return compare(a, b) < 0; }

    /// Value of the first weight row when it is strictly positive, else the
    /// total degree. Drives pair selection only.
    std::int64_t degree(const ExpVector& a) const;

    std::string describe() const;

private:
    OrderFlavor flavor_ = OrderFlavor::lex;
    std::size_t n_ = 0;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::size_t> perm_;
    bool revlex_ = false;  // break ties by reverse lex (grevlex)
    bool positive_first_row_ = false;
};

/// Dot product with overflow check.
std::int64_t weight_of(const std::vector<std::int64_t>& w, const ExpVector& a);

}  // namespace toric
