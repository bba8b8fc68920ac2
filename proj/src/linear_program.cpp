#include "toric/linear_program.hpp"

#include <vector>

namespace toric {

namespace {

// Dense tableau for min sum(artificials) subject to T x = b, x >= 0.
struct Tableau {
    std::vector<RatVector> rows;  // last entry is the right-hand side
    std::vector<std::size_t> basis;
    std::size_t num_cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        auto& pr = rows[r];
        Rational inv = 1 / pr[c];
        for (auto& x : pr) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            auto& row = rows[i];
            if (row[c] == 0) continue;
            Rational f = row[c];
            for (std::size_t j = 0; j <= num_cols; ++j)
                if (pr[j] != 0) row[j] -= f * pr[j];
        }
        basis[r] = c;
    }
};

}  // namespace

std::optional<RatVector> find_feasible_point(std::size_t num_vars,
                                             std::span<const LinearConstraint> constraints) {
    const std::size_t m = constraints.size();
    if (m == 0) return RatVector(num_vars, Rational(0));

    std::size_t num_slack = 0;
    for (const auto& c : constraints)
        if (c.relation != Relation::equal) ++num_slack;

    // Columns: p_1..p_n, q_1..q_n (x = p - q), slacks, artificials.
    const std::size_t slack0 = 2 * num_vars;
    const std::size_t art0 = slack0 + num_slack;
    Tableau t;
    t.num_cols = art0 + m;
    t.rows.assign(m, RatVector(t.num_cols + 1, Rational(0)));
    t.basis.resize(m);

    std::size_t slack = slack0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < num_vars; ++j) {
            row[j] = c.coefficients[j];
            row[num_vars + j] = -c.coefficients[j];
        }
        if (c.relation == Relation::less_equal) row[slack++] = 1;
        else if (c.relation == Relation::greater_equal) row[slack++] = -1;
        row[t.num_cols] = c.rhs;
        if (c.rhs < 0)
            for (auto& x : row) x = -x;
        row[art0 + i] = 1;
        t.basis[i] = art0 + i;
    }

    // Phase one: reduced costs of min sum(artificials).
    RatVector cost(t.num_cols + 1, Rational(0));
    auto recompute_costs = [&] {
        for (std::size_t j = 0; j <= t.num_cols; ++j) {
            Rational s = (j >= art0 && j < t.num_cols) ? Rational(1) : Rational(0);
            for (std::size_t i = 0; i < m; ++i)
                if (t.basis[i] >= art0) s -= t.rows[i][j];
            cost[j] = s;
        }
    };
    recompute_costs();

    for (;;) {
        std::size_t enter = t.num_cols;
        for (std::size_t j = 0; j < t.num_cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == t.num_cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.rows[i][enter] <= 0) continue;
            Rational ratio = t.rows[i][t.num_cols] / t.rows[i][enter];
            if (leave == m || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one
        t.pivot(leave, enter);
        // Update cost row by the same elimination.
        Rational f = cost[enter];
        for (std::size_t j = 0; j <= t.num_cols; ++j)
            if (t.rows[leave][j] != 0) cost[j] -= f * t.rows[leave][j];
    }

    // Objective value is -cost[rhs].
    if (cost[t.num_cols] != 0) return std::nullopt;

    RatVector x(num_vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = t.basis[i];
        const Rational& v = t.rows[i][t.num_cols];
        if (b < num_vars) x[b] += v;
        else if (b < 2 * num_vars) x[b - num_vars] -= v;
    }
    return x;
}

}  // namespace toric
