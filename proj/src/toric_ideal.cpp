#include "toric/toric_ideal.hpp"

#include "toric/error.hpp"
#include "toric/linear_program.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toric {

namespace {

/// I : (x_1 ... x_n)^inf for a lattice-basis ideal homogeneous under the
/// strictly positive weights `w`.
std::vector<Binomial> saturate_graded(std::vector<Binomial> gens, const std::vector<std::int64_t>& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        // With equal w-degree broken in favour of low x_i powers, x_i^k
        // divides the leading term only if it divides the whole binomial.
        std::vector<std::int64_t> neg(n, 0);
        neg[i] = -1;
        auto order = TermOrder::matrix({w, neg});
        BinomialBasis gb = buchberger(std::span<const Binomial>(gens), order);
        gens.clear();
        for (auto b : gb.elements) {
            Exponent k = std::min(b.head[i], b.tail[i]);
            b.head[i] -= k;
            b.tail[i] -= k;
            gens.push_back(std::move(b));
        }
    }
    return gens;
}

/// Saturation with an auxiliary variable: (I + <t x_1...x_n - 1>) ∩ k[x].
std::vector<Binomial> saturate_by_elimination(const std::vector<Binomial>& gens, std::size_t n) {
    std::vector<Binomial> ext;
    for (const auto& b : gens) {
        Binomial e{b.head, b.tail};
        e.head.push_back(0);
        e.tail.push_back(0);
        ext.push_back(std::move(e));
    }
    ExpVector all(n + 1, 1), one(n + 1, 0);
    ext.push_back(Binomial{all, one});
    auto order = TermOrder::elimination(n + 1, {n});
    BinomialBasis gb = buchberger(std::span<const Binomial>(ext), order);
    std::vector<Binomial> out;
    for (const auto& b : gb.elements) {
        if (b.head[n] != 0 || b.tail[n] != 0) continue;
        out.push_back(Binomial{ExpVector(b.head.begin(), b.head.end() - 1),
                               ExpVector(b.tail.begin(), b.tail.end() - 1)});
    }
    return out;
}

}  // namespace

BinomialBasis toric_ideal(const Configuration& a, const TermOrder& order) {
    const std::size_t n = a.size();
    if (order.num_vars() != n) fail(ErrorKind::dimension_mismatch, "order and configuration sizes differ");
    std::vector<Binomial> gens;
    for (const auto& u : lattice_basis_binomials(kernel_lattice(a)))
        gens.push_back(Binomial{u.positive_part(), u.negative_part()});
    if (gens.empty()) {
        BinomialBasis empty;
        empty.order = order;
        empty.reduced = true;
        return empty;
    }
    if (auto w = a.variable_weights())
        gens = saturate_graded(std::move(gens), *w);
    else
        gens = saturate_by_elimination(gens, n);
    return buchberger(std::span<const Binomial>(gens), order);
}

BinomialBasis toric_ideal_elimination_oracle(const Configuration& a) {
    const std::size_t n = a.size();
    const std::size_t d = a.dim();
    bool negative = false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.matrix()(i, j) < 0) negative = true;
    const std::size_t total = n + d + (negative ? 1 : 0);
    std::vector<Binomial> gens;
    for (std::size_t j = 0; j < n; ++j) {
        ExpVector lhs(total, 0), rhs(total, 0);
        lhs[j] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            auto e = to_exponents(std::vector<Integer>{a.matrix()(i, j)})[0];
            if (e > 0)
                rhs[n + i] = e;
            else
                lhs[n + i] = -e;
        }
        gens.push_back(Binomial{lhs, rhs});
    }
    if (negative) {
        ExpVector lhs(total, 0), one(total, 0);
        for (std::size_t i = n; i < total; ++i) lhs[i] = 1;
        gens.push_back(Binomial{lhs, one});
    }
    std::vector<std::size_t> block(total - n);
    std::iota(block.begin(), block.end(), n);
    auto order = TermOrder::elimination(total, block);
    BinomialBasis gb = buchberger(std::span<const Binomial>(gens), order);

    BinomialBasis out;
    out.order = TermOrder::elimination(n, {});
    out.reduced = false;
    for (const auto& b : gb.elements) {
        bool torus_free = true;
        for (std::size_t i = n; i < total; ++i)
            if (b.head[i] != 0 || b.tail[i] != 0) torus_free = false;
        if (!torus_free) continue;
        auto r = orient(ExpVector(b.head.begin(), b.head.begin() + static_cast<std::ptrdiff_t>(n)),
                        ExpVector(b.tail.begin(), b.tail.begin() + static_cast<std::ptrdiff_t>(n)), out.order);
        if (r) out.elements.push_back(std::move(*r));
    }
    sort_canonically(out.elements);
    return out;
}

std::vector<LatticeBinomial> minimal_generators(const Configuration& a) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "minimal generators need a grading w·a_i = 1");
    auto order = TermOrder::grevlex(a.size());
    BinomialBasis gb = toric_ideal(a, order);
    // gb is sorted by degree already.
    BinomialGroebner kept(order);
    std::vector<LatticeBinomial> out;
    for (const auto& b : gb.elements) {
        std::int64_t deg = order.degree(b.head);
        kept.run(deg);
        if (!kept.reduce(b.head, b.tail)) continue;
        kept.add(b.head, b.tail);
        out.push_back(b.difference().sign_normalized());
    }
    std::sort(out.begin(), out.end(), degree_lex_less);
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial ideals
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Integer>;

void minimalize(std::vector<ExpVector>& gens) {
    std::sort(gens.begin(), gens.end(), [](const ExpVector& x, const ExpVector& y) {
        long sx = std::accumulate(x.begin(), x.end(), 0L), sy = std::accumulate(y.begin(), y.end(), 0L);
        if (sx != sy) return sx < sy;
        return x < y;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpVector> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out) {
            bool div = true;
            for (std::size_t i = 0; i < g.size() && div; ++i)
                if (h[i] > g[i]) div = false;
            if (div) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(std::move(g));
    }
    gens = std::move(out);
}

void add_into(Poly& acc, const Poly& p, std::size_t shift, int sign) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, Integer(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (sign > 0)
            acc[k + shift] += p[k];
        else
            acc[k + shift] -= p[k];
    }
}

Poly numerator(std::vector<ExpVector> gens) {
    minimalize(gens);
    if (gens.empty()) return Poly{1};
    const std::size_t n = gens[0].size();
    // Base case: pairwise coprime generators.
    std::vector<int> count(n, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) ++count[i];
    auto best = std::max_element(count.begin(), count.end());
    if (*best <= 1) {
        Poly p{1};
        for (const auto& g : gens) {
            long deg = std::accumulate(g.begin(), g.end(), 0L);
            Poly next(p.size() + static_cast<std::size_t>(deg), Integer(0));
            add_into(next, p, 0, 1);
            add_into(next, p, static_cast<std::size_t>(deg), -1);
            p = std::move(next);
        }
        return p;
    }
    // Pivot x_j^e with x_j the most frequent variable and e its least
    // positive exponent: then x_j^e is not in M and M : x_j^e is larger.
    const std::size_t j = static_cast<std::size_t>(best - count.begin());
    Exponent e = 0;
    for (const auto& g : gens)
        if (g[j] && (e == 0 || g[j] < e)) e = g[j];
    std::vector<ExpVector> sum = gens;
    ExpVector pivot(n, 0);
    pivot[j] = e;
    sum.push_back(pivot);
    std::vector<ExpVector> colon = gens;
    for (auto& g : colon) g[j] = std::max<Exponent>(0, g[j] - e);
    Poly out = numerator(std::move(sum));
    add_into(out, numerator(std::move(colon)), static_cast<std::size_t>(e), 1);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::vector<Integer> hilbert_series_numerator(std::vector<ExpVector> generators, std::size_t n) {
    for (const auto& g : generators)
        if (g.size() != n) fail(ErrorKind::dimension_mismatch, "monomial length differs from n");
    return numerator(std::move(generators));
}

namespace {

struct HilbertData {
    Poly numerator;
    std::size_t n;
};

HilbertData hilbert_data(const Configuration& a) {
    if (!grading(a)) fail(ErrorKind::not_homogeneous, "Hilbert function needs a grading w·a_i = 1");
    BinomialBasis gb = toric_ideal(a, TermOrder::grevlex(a.size()));
    return {hilbert_series_numerator(gb.leading_monomials(), a.size()), a.size()};
}

Integer evaluate_function(const HilbertData& h, long s) {
    Integer v = 0;
    const long n = static_cast<long>(h.n);
    for (std::size_t k = 0; k < h.numerator.size(); ++k) {
        long m = s - static_cast<long>(k);
        if (m < 0) break;
        v += h.numerator[k] * binomial_coefficient(m + n - 1, n - 1);
    }
    return v;
}

}  // namespace

std::vector<Integer> hilbert_function(const Configuration& a, long s_max) {
    HilbertData h = hilbert_data(a);
    std::vector<Integer> out;
    for (long s = 0; s <= s_max; ++s) out.push_back(evaluate_function(h, s));
    return out;
}

RationalPolynomial hilbert_polynomial(const Configuration& a, long s_cap) {
    HilbertData h = hilbert_data(a);
    const long dim = static_cast<long>(a.rank()) - 1;
    // HF agrees with HP from deg K - n + 1 on; the window starts past that.
    const long settled = std::max(0L, static_cast<long>(h.numerator.size()) - static_cast<long>(h.n));
    for (long s_max = dim + 2; s_max <= s_cap; s_max *= 2) {
        const long lo = s_max - dim;
        if (lo - 2 < settled) continue;
        RatVector xs, ys;
        for (long s = lo; s <= s_max; ++s) {
            xs.emplace_back(s);
            ys.emplace_back(evaluate_function(h, s));
        }
        RationalPolynomial p = interpolate(xs, ys);
        if (p(lo - 1) == Rational(evaluate_function(h, lo - 1)) &&
            p(lo - 2) == Rational(evaluate_function(h, lo - 2)))
            return p;
    }
    fail(ErrorKind::instability, "Hilbert polynomial not certified below s = " + std::to_string(s_cap));
}

namespace {

std::vector<Integer> trimmed(std::vector<Integer> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool divides(const ExpVector& g, const ExpVector& m) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > m[i]) return false;
    return true;
}

void monomials_of_degree(std::size_t n, long deg, ExpVector& cur, std::size_t i, std::vector<ExpVector>& out) {
    if (i + 1 == n) {
        cur[i] = static_cast<Exponent>(deg);
        out.push_back(cur);
        return;
    }
    for (long e = deg; e >= 0; --e) {
        cur[i] = static_cast<Exponent>(e);
        monomials_of_degree(n, deg - e, cur, i + 1, out);
    }
    cur[i] = 0;
}

}  // namespace

QuadraticGbSearch quadratic_groebner_search(const Configuration& a, std::uint64_t cap) {
    HilbertData h = hilbert_data(a);
    const std::vector<Integer> target = trimmed(h.numerator);
    const std::size_t n = a.size();

    // Degree-two monomials grouped by their A-degree.
    std::map<IntVector, std::vector<ExpVector>> by_degree;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            IntVector b(a.dim());
            for (std::size_t r = 0; r < a.dim(); ++r) b[r] = a.matrix()(r, i) + a.matrix()(r, j);
            ExpVector m(n, 0);
            ++m[i];
            ++m[j];
            by_degree[b].push_back(m);
        }
    std::vector<std::vector<ExpVector>> fibers;
    Integer total = 1;
    for (auto& [b, f] : by_degree)
        if (f.size() > 1) {
            total *= static_cast<long>(f.size());
            fibers.push_back(std::move(f));
        }
    if (total > Integer(std::to_string(cap)))
        fail(ErrorKind::cap_exceeded, "quadratic basis search has " + total.get_str() + " choices");

    std::vector<ExpVector> cubics;
    {
        ExpVector cur(n, 0);
        monomials_of_degree(n, 3, cur, 0, cubics);
    }
    const Integer hf3 = evaluate_function(h, 3);

    QuadraticGbSearch out;
    std::vector<std::size_t> choice(fibers.size(), 0);
    for (;;) {
        ++out.choices;
        std::vector<ExpVector> gens;
        for (std::size_t f = 0; f < fibers.size(); ++f)
            for (std::size_t k = 0; k < fibers[f].size(); ++k)
                if (k != choice[f]) gens.push_back(fibers[f][k]);
        // Cheap filter: standard monomials in degree three.
        long standard = 0;
        for (const auto& m : cubics)
            if (std::none_of(gens.begin(), gens.end(), [&](const ExpVector& g) { return divides(g, m); })) ++standard;
        if (Integer(standard) == hf3 && trimmed(hilbert_series_numerator(gens, n)) == target) {
            ++out.hilbert_matches;
            // w·(m - m_min) >= 1 for every non-standard m in each fiber.
            std::vector<LinearConstraint> rows;
            for (std::size_t f = 0; f < fibers.size(); ++f) {
                const ExpVector& low = fibers[f][choice[f]];
                for (std::size_t k = 0; k < fibers[f].size(); ++k) {
                    if (k == choice[f]) continue;
                    LinearConstraint c;
                    c.coefficients.resize(n);
                    for (std::size_t i = 0; i < n; ++i) c.coefficients[i] = fibers[f][k][i] - low[i];
                    c.rhs = 1;
                    rows.push_back(std::move(c));
                }
            }
            // Positive weights keep the order a term order on all of S.
            for (std::size_t i = 0; i < n; ++i) {
                LinearConstraint c;
                c.coefficients.assign(n, Rational(0));
                c.coefficients[i] = 1;
                c.rhs = 1;
                rows.push_back(std::move(c));
            }
            if (auto w = find_feasible_point(n, rows)) {
                IntVector wi = clear_denominators(*w);
                std::vector<std::int64_t> weight;
                for (const auto& x : wi) weight.push_back(to_int64(x));
                out.verdict = QuadraticGbVerdict::exists;
                out.weight = std::move(weight);
                return out;
            }
        }
        std::size_t f = 0;
        for (; f < fibers.size(); ++f) {
            if (++choice[f] < fibers[f].size()) break;
            choice[f] = 0;
        }
        if (f == fibers.size()) break;
    }
    return out;
}

}  // namespace toric
