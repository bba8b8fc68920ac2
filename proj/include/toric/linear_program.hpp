#pragma once

#include "toric/arith.hpp"

#include <optional>
#include <span>

namespace toric {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
    RatVector coefficients;
    Relation relation = Relation::greater_equal;
    Rational rhs = 0;
};

/// Exact feasibility over the rationals for a system of linear constraints in
/// free (sign-unrestricted) variables. Phase-one simplex with Bland's rule, so
/// it always terminates. Returns some feasible point or nullopt.
std::optional<RatVector> find_feasible_point(std::size_t num_vars,
                                             std::span<const LinearConstraint> constraints);

}  // namespace toric
