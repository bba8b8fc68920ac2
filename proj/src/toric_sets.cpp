#include "toric/toric_sets.hpp"

#include "toric/error.hpp"
#include "toric/linear_program.hpp"
#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace toric {

namespace {

bool squarefree(const ExpVector& m) {
    return std::all_of(m.begin(), m.end(), [](Exponent x) { return x <= 1; });
}

IntMatrix submatrix_columns(const IntMatrix& m, const std::vector<std::size_t>& cols) {
    IntMatrix s(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = m(i, cols[k]);
    return s;
}

/// Advances a k-subset of {0..n-1} in lex order; false at the end.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<LatticeBinomial> CircuitSet::binomials() const {
    std::vector<LatticeBinomial> out;
    for (const auto& c : elements) out.push_back(c.circuit);
    return out;
}

long CircuitSet::max_degree() const {
    long d = 0;
    for (const auto& c : elements) d = std::max(d, c.degree);
    return d;
}

TrueDegree true_degree(const LatticeBinomial& c, const Configuration& a) {
    if (c.size() != a.size()) fail(ErrorKind::dimension_mismatch, "binomial length differs from n");
    if (c.is_zero() || !c.in_kernel_of(a)) fail(ErrorKind::not_a_circuit, "not a nonzero kernel vector");
    const auto supp = c.support();
    const IntMatrix cols = submatrix_columns(a.matrix(), supp);
    if (rank(cols) + 1 != supp.size())
        fail(ErrorKind::not_a_circuit, "support of " + binomial_to_string(c) + " is not minimal");
    {
        IntVector v(c.vector().begin(), c.vector().end());
        if (content(v) != 1) fail(ErrorKind::not_a_circuit, "circuit vectors must be primitive");
    }

    // Z(supp) and ZA ∩ span(supp), both as sublattices of Z^d.
    Sublattice inner(a.dim(), cols.transposed());
    Sublattice za = column_lattice(a);
    Sublattice perp = integer_kernel(cols.transposed());  // y with y·a_j = 0 on supp
    Sublattice slice;
    if (perp.rank() == 0) {
        slice = za;
    } else {
        // c·B lies in span(supp) iff P (c·B)^T = 0.
        const IntMatrix& b = za.basis();
        IntMatrix pb(perp.rank(), b.rows());
        for (std::size_t i = 0; i < perp.rank(); ++i)
            for (std::size_t k = 0; k < b.rows(); ++k) pb(i, k) = dot(perp.basis().row(i), b.row(k));
        Sublattice coeffs = integer_kernel(pb);
        IntMatrix gens(coeffs.rank(), a.dim());
        for (std::size_t r = 0; r < coeffs.rank(); ++r)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t j = 0; j < a.dim(); ++j) gens(r, j) += coeffs.basis()(r, k) * b(k, j);
        slice = Sublattice(a.dim(), gens);
    }
    auto idx = lattice_index(inner, slice);
    if (!idx) fail(ErrorKind::internal, "circuit support lattice has the wrong rank");
    TrueDegree t;
    t.degree = c.degree();
    t.index = *idx;
    t.true_degree = t.index * t.degree;
    return t;
}

CircuitSet circuits(const Configuration& a, std::uint64_t subset_cap) {
    const std::size_t n = a.size();
    const std::size_t r = a.rank();
    CircuitSet out;
    if (r == n) return out;
    Integer count = binomial_coefficient(static_cast<long>(n), static_cast<long>(r + 1));
    if (count > Integer(std::to_string(subset_cap)))
        fail(ErrorKind::cap_exceeded, "circuit enumeration would examine " + count.get_str() + " subsets");

    std::set<LatticeBinomial> found;
    std::vector<std::size_t> s(r + 1);
    for (std::size_t i = 0; i <= r; ++i) s[i] = i;
    do {
        IntMatrix cols = submatrix_columns(a.matrix(), s);
        Sublattice k = integer_kernel(cols);
        if (k.rank() != 1) continue;
        ExpVector u(n, 0);
        auto small = to_exponents(k.basis().row(0));
        for (std::size_t i = 0; i < s.size(); ++i) u[s[i]] = small[i];
        found.insert(LatticeBinomial(std::move(u)).sign_normalized());
    } while (next_subset(s, n));

    for (const auto& c : found) {
        CircuitInfo info;
        info.circuit = c;
        info.support = c.support();
        auto t = true_degree(c, a);
        info.degree = t.degree;
        info.index = t.index;
        info.true_degree = t.true_degree;
        info.positive_squarefree = squarefree(c.positive_part());
        info.negative_squarefree = squarefree(c.negative_part());
        out.elements.push_back(std::move(info));
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const CircuitInfo& x, const CircuitInfo& y) { return degree_lex_less(x.circuit, y.circuit); });
    return out;
}

Configuration lawrence(const Configuration& a) {
    const std::size_t n = a.size();
    const std::size_t d = a.dim();
    IntMatrix m(d + n, 2 * n, Integer(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a.matrix()(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        m(d + j, j) = 1;
        m(d + j, n + j) = 1;
    }
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n; ++j) labels.push_back("x" + std::to_string(j + 1));
    for (std::size_t j = 0; j < n; ++j) labels.push_back("y" + std::to_string(j + 1));
    return Configuration(std::move(m), std::move(labels));
}

namespace {

bool conformal(const LatticeBinomial& h, const LatticeBinomial& g) {
    const auto& x = h.vector();
    const auto& y = g.vector();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        if ((x[i] > 0) != (y[i] > 0) || std::abs(x[i]) > std::abs(y[i])) return false;
    }
    return true;
}

}  // namespace

bool satisfies_graver_axiom(const std::vector<LatticeBinomial>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            if (conformal(set[j], set[i]) || conformal(-set[j], set[i])) return false;
        }
    return true;
}

std::vector<LatticeBinomial> graver(const Configuration& a) {
    const std::size_t n = a.size();
    if (kernel_lattice(a).rank() == 0) return {};
    std::vector<LatticeBinomial> out;
    for (const auto& g : minimal_generators(lawrence(a))) {
        ExpVector u(g.vector().begin(), g.vector().begin() + static_cast<std::ptrdiff_t>(n));
        out.push_back(LatticeBinomial(std::move(u)).sign_normalized());
    }
    std::sort(out.begin(), out.end(), degree_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& u : out)
        if (!u.in_kernel_of(a)) fail(ErrorKind::internal, "Graver element outside the kernel");
    if (!satisfies_graver_axiom(out)) fail(ErrorKind::internal, "Graver set has a conformal pair");
    return out;
}

// ---------------------------------------------------------------------------
// Gröbner fan traversal
// ---------------------------------------------------------------------------

namespace {

struct FanContext {
    const Configuration& a;
    Sublattice kernel;             // rows K, rank m
    std::vector<std::int64_t> w0;  // strictly positive, constant on fibres
    std::size_t n;
};

/// Integer x-space weight w with K w = z (up to a positive factor), made
/// strictly positive by adding a multiple of w0 when `positive` is set.
std::vector<std::int64_t> lift_weight(const FanContext& ctx, const RatVector& z, bool positive) {
    RatMatrix k = to_rational(ctx.kernel.basis());
    auto w = solve_rational(k, z);
    if (!w) fail(ErrorKind::internal, "kernel basis does not have full row rank");
    Integer den = 1;
    for (const auto& q : *w) den = lcm(den, Integer(q.get_den()));
    IntVector wi(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i) wi[i] = Integer((*w)[i] * den);
    if (positive) {
        Integer shift = 0;
        for (std::size_t i = 0; i < ctx.n; ++i) {
            // need wi + shift * w0 >= 1
            Integer need = ceil_div(Integer(1) - wi[i], Integer(ctx.w0[i]));
            shift = std::max(shift, need);
        }
        for (std::size_t i = 0; i < ctx.n; ++i) wi[i] += shift * ctx.w0[i];
    }
    std::vector<std::int64_t> out(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i) out[i] = to_int64(wi[i]);
    return out;
}

RatVector kernel_coordinates(const FanContext& ctx, const Binomial& b) {
    auto u = b.difference();
    IntVector v(u.vector().begin(), u.vector().end());
    auto c = ctx.kernel.coordinates(v);
    if (!c) fail(ErrorKind::internal, "basis element outside the kernel lattice");
    RatVector r;
    for (const auto& x : *c) r.emplace_back(x);
    return r;
}

using BasisKey = std::vector<std::pair<ExpVector, ExpVector>>;

BasisKey key_of(const BinomialBasis& g) {
    BasisKey k;
    for (const auto& b : g.elements) k.emplace_back(b.head, b.tail);
    std::sort(k.begin(), k.end());
    return k;
}

/// Reduced Gröbner bases of the cones adjacent to the cone of `g`.
std::vector<BinomialBasis> flip_neighbours(const FanContext& ctx, const BinomialBasis& g) {
    const std::size_t m = ctx.kernel.rank();
    std::vector<RatVector> normals;
    for (const auto& b : g.elements) normals.push_back(kernel_coordinates(ctx, b));

    // Group proportional inequality normals; each group is one candidate facet.
    std::vector<IntVector> primitive;
    for (const auto& c : normals) primitive.push_back(clear_denominators(c));
    std::vector<std::size_t> seen_group;
    std::vector<BinomialBasis> out;
    for (std::size_t gi = 0; gi < normals.size(); ++gi) {
        bool dup = false;
        for (auto s : seen_group)
            if (primitive[s] == primitive[gi]) dup = true;
        if (dup) continue;
        seen_group.push_back(gi);

        std::vector<LinearConstraint> cons;
        cons.push_back(LinearConstraint{normals[gi], Relation::equal, 0});
        for (std::size_t h = 0; h < normals.size(); ++h) {
            if (primitive[h] == primitive[gi]) continue;
            cons.push_back(LinearConstraint{normals[h], Relation::greater_equal, 1});
        }
        auto omega = find_feasible_point(m, cons);
        if (!omega) continue;  // not a facet

        RatVector away(m);
        for (std::size_t i = 0; i < m; ++i) away[i] = -normals[gi][i];
        auto row1 = lift_weight(ctx, *omega, true);
        auto row2 = lift_weight(ctx, away, false);
        auto order = TermOrder::matrix({row1, row2}, {}, OrderFlavor::weight_lex);
        out.push_back(buchberger(std::span<const Binomial>(g.elements), order));
    }
    return out;
}

void add_union(std::set<LatticeBinomial>& acc, const BinomialBasis& g) {
    for (const auto& u : g.lattice_vectors()) acc.insert(u);
}

}  // namespace

UniversalGB universal_gb(const Configuration& a, const UgbOptions& options) {
    const std::size_t n = a.size();
    UniversalGB out;
    out.exhaustive = options.exhaustive;
    auto w0 = a.variable_weights();
    if (!w0) fail(ErrorKind::not_pointed, "term orders on I_A need a pointed configuration");
    if (options.exhaustive && n > options.var_cap)
        fail(ErrorKind::cap_exceeded, "exhaustive universal Gröbner basis is capped at n <= " +
                                          std::to_string(options.var_cap));
    FanContext ctx{a, kernel_lattice(a), *w0, n};
    if (ctx.kernel.rank() == 0) {
        out.num_bases = 1;
        return out;
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
    auto random_order = [&] {
        std::vector<std::int64_t> w(n);
        for (auto& x : w) x = dist(rng);
        return TermOrder::weight(w);
    };
    BinomialBasis start = toric_ideal(a, random_order());

    std::set<LatticeBinomial> acc;
    std::set<BasisKey> visited;
    auto record = [&](const BinomialBasis& g) {
        add_union(acc, g);
        if (options.keep_bases) out.bases.push_back(g);
    };

    if (options.exhaustive) {
        std::deque<BinomialBasis> queue;
        visited.insert(key_of(start));
        record(start);
        queue.push_back(std::move(start));
        while (!queue.empty()) {
            BinomialBasis g = std::move(queue.front());
            queue.pop_front();
            for (auto& nb : flip_neighbours(ctx, g)) {
                if (!visited.insert(key_of(nb)).second) continue;
                if (visited.size() > options.basis_cap)
                    fail(ErrorKind::cap_exceeded, "Gröbner fan has more than " +
                                                      std::to_string(options.basis_cap) + " cones");
                record(nb);
                queue.push_back(std::move(nb));
            }
        }
    } else {
        visited.insert(key_of(start));
        record(start);
        for (std::size_t s = 1; s < options.samples; ++s) {
            BinomialBasis g = buchberger(std::span<const Binomial>(start.elements), random_order());
            if (visited.insert(key_of(g)).second) record(g);
        }
    }
    out.num_bases = visited.size();
    out.elements.assign(acc.begin(), acc.end());
    std::sort(out.elements.begin(), out.elements.end(), degree_lex_less);
    return out;
}

}  // namespace toric
