#include "toric/bounds.hpp"

#include "toric/error.hpp"
#include "toric/polyhedral.hpp"

#include <algorithm>

namespace toric {

std::string_view bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::pass: return "pass";
        case BoundStatus::fail: return "fail";
        case BoundStatus::conjecture_violated: return "conjecture-violated";
    }
    return "?";
}

DegreeBoundReport degree_bound_report(const Configuration& a, const UgbOptions& ugb) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "degree bounds need a grading w·a_i = 1");
    DegreeBoundReport r;
    r.degree = normalized_volume(a);
    r.codim = a.size() - a.rank();

    const CircuitSet cs = circuits(a);
    r.maxdeg_circuits = cs.max_degree();
    for (const auto& c : cs.elements) {
        r.max_true_degree = std::max(r.max_true_degree, c.true_degree);
        if (c.true_degree > r.degree) r.true_degree_bounded = false;
    }

    for (const auto& g : graver(a)) r.maxdeg_graver = std::max(r.maxdeg_graver, g.degree());

    try {
        long m = 0;
        for (const auto& u : universal_gb(a, ugb).elements) m = std::max(m, u.degree());
        r.maxdeg_ugb = m;
    } catch (const ToricError& e) {
        if (e.kind() != ErrorKind::cap_exceeded) throw;
    }

    const Integer codim = static_cast<long>(r.codim);
    auto check = [](bool ok) { return ok ? BoundStatus::pass : BoundStatus::fail; };
    r.eq44 = check(Integer(r.maxdeg_circuits) <= r.degree);
    r.eq45 = check(Integer(r.maxdeg_graver) <= codim * r.maxdeg_circuits);
    r.lemma46 = check(Integer(r.maxdeg_graver) <= r.degree * codim);
    r.conj48 = Integer(r.maxdeg_graver) <= r.max_true_degree || r.codim == 0 ? BoundStatus::pass
                                                                             : BoundStatus::conjecture_violated;
    return r;
}

}  // namespace toric
