#pragma once

#include "toric/lattice.hpp"
#include "toric/toric_sets.hpp"

#include <optional>
#include <string>

namespace toric {

enum class BoundStatus { pass, fail, conjecture_violated };

std::string_view bound_status_name(BoundStatus s);

struct DegreeBoundReport {
    long maxdeg_circuits = 0;
    std::optional<long> maxdeg_ugb;  // absent when the fan walk is over its cap
    long maxdeg_graver = 0;
    Integer degree = 0;              // normalized volume of conv(A)
    std::size_t codim = 0;           // n - rank(A)
    Integer max_true_degree = 0;
    BoundStatus eq44 = BoundStatus::pass;    // maxdeg C <= degree
    BoundStatus eq45 = BoundStatus::pass;    // maxdeg Gr <= codim * maxdeg C
    BoundStatus lemma46 = BoundStatus::pass; // maxdeg Gr <= degree * codim
    BoundStatus conj48 = BoundStatus::pass;  // maxdeg Gr <= max true degree
    /// Every circuit has true degree <= degree; a failure is a finding, not
    /// a proof obligation.
    bool true_degree_bounded = true;
};

/// Compares the degree maxima of circuits, universal Gröbner basis and
/// Graver basis with degree and codimension. Needs a grading.
DegreeBoundReport degree_bound_report(const Configuration& a, const UgbOptions& ugb = {});

}  // namespace toric
