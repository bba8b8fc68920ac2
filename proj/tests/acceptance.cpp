// Acceptance runner: one PASS/FAIL line per criterion. Values are exact;
// each criterion also has a wall-clock budget in seconds.

#include "properties.hpp"

#include "toric/bounds.hpp"
#include "toric/gallery.hpp"
#include "toric/io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

namespace {

using namespace toric;

struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::set<oracle::Vec> parse_set(const std::vector<std::string>& text, const Configuration& a) {
    std::set<oracle::Vec> out;
    for (const auto& t : text) out.insert(oracle::sign_normalized(oracle::to_vec(parse_binomial(t, a.labels()))));
    return out;
}

std::set<oracle::Vec> as_set(const std::vector<Binomial>& v) {
    std::set<oracle::Vec> out;
    for (const auto& b : v) out.insert(oracle::sign_normalized(oracle::to_vec(b.difference())));
    return out;
}

// 1: twisted cubic
void twisted_cubic(Check& c) {
    Configuration a(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    auto quadrics = parse_set({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, a);
    auto circ = parse_set({"x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"}, a);
    auto graver = circ;
    graver.insert(oracle::sign_normalized(oracle::to_vec(parse_binomial("x1*x4 - x2*x3", a.labels()))));
    c.expect(as_set(toric_ideal(a, TermOrder::grevlex(4)).elements) == quadrics, "ideal is not the three quadrics");
    c.expect(oracle::as_set(circuits(a).binomials()) == circ, "circuits differ from the four listed");
    c.expect(oracle::as_set(toric::graver(a)) == graver, "Graver differs from circuits plus x1*x4 - x2*x3");
    UgbOptions ex;
    ex.exhaustive = true;
    auto u = universal_gb(a, ex);
    c.expect(u.exhaustive && oracle::as_set(u.elements) == graver, "exhaustive UGB differs from circuits plus x1*x4 - x2*x3");
    c.expect(normalized_volume(a) == 3, "degree is not 3");
}

// 2: Birkhoff polytopes
void birkhoff(Check& c) {
    Configuration b3 = make_config("birkhoff:3");
    auto gb = toric_ideal(b3, TermOrder::grevlex(b3.size()));
    c.expect(as_set(gb.elements) == parse_set({"x123*x231*x312 - x132*x213*x321"}, b3),
             "p=3 ideal is not the single cubic");
    c.expect(normalized_volume(b3) == 3, "p=3 degree is not 3");
    c.expect(convex_hull(b3).dim == 4, "p=3 dimension is not 4");
    Configuration b4 = make_config("birkhoff:4");
    c.expect(b4.size() == 24 && b4.dim() == 16, "p=4 configuration is not 24 points in Z^16");
    c.expect(convex_hull(b4).dim == 9, "p=4 dimension is not 9");
    Integer v = normalized_volume(b4);
    c.expect(v == 352, "p=4 degree is " + v.get_str() + ", not 352");
}

// 3: the smallest "looks like Segre" configuration
void triple(Check& c) {
    Configuration a = make_config("triple:2,2,2");
    auto quartic = parse_set({"x111*x122*x212*x221 - x112*x121*x211*x222"}, a);
    c.expect(a.size() == 8 && a.dim() == 12, "configuration is not 8 points in Z^12");
    c.expect(as_set(toric_ideal(a, TermOrder::grevlex(8)).elements) == quartic, "grevlex ideal is not the quartic");
    c.expect(as_set(toric_ideal(a, TermOrder::lex(8)).elements) == quartic, "lex ideal is not the quartic");
}

// 4: Lawrence lifting with Graver degree above circuit degree
void graver_beats_circuits(Check& c) {
    Configuration a = make_config("ex47");
    const std::vector<std::string> printed = {
        "x2*y1^3 - x1^3*y2",
        "x3*y1^4 - x1^4*y3",
        "x3^3*y2^4 - x2^4*y3^3",
        "x4*x5^5*y2^2 - x2^2*y4*y5^5",
        "x4*x5^5*y1^6 - x1^6*y4*y5^5",
        "x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10",
        "x4*x5^5*y1^2*y3 - x1^2*x3*y4*y5^5",
        "x4*x5^5*y1^3*y2 - x1^3*x2*y4*y5^5",
        "x3*y1*y2 - x1*x2*y3",
        "x1*x4*x5^5*y2*y3 - x2*x3*y1*y4*y5^5",
        "x2^2*x4*x5^5*y3^3 - x3^3*y2^2*y4*y5^5",
        "x1*x3^2*y2^3 - x2^3*y1*y3^2",
        "x1^2*x3*y2^2 - x2^2*y1^2*y3",
        "x2*x4*x5^5*y1*y3^2 - x1*x3^2*y2*y4*y5^5",
        "x1^2*x4*x5^5*y3^2 - x3^2*y1^2*y4*y5^5",
        "x4^2*x5^10*y1*y2*y3^2 - x1*x2*x3^2*y4^2*y5^10",
    };
    auto gr = toric::graver(a);
    c.expect(gr.size() == 16, "Graver has " + std::to_string(gr.size()) + " elements, not 16");
    c.expect(oracle::as_set(gr) == parse_set(printed, a), "Graver differs from the printed list");
    long gmax = 0;
    for (const auto& u : gr) gmax = std::max(gmax, u.degree());
    c.expect(gmax == 16, "maxdeg Graver is " + std::to_string(gmax));
    auto cs = circuits(a);
    c.expect(oracle::as_set(cs.binomials()) == parse_set({printed.begin(), printed.begin() + 6}, a),
             "circuits are not the first six printed binomials");
    c.expect(cs.max_degree() == 15, "maxdeg circuits is " + std::to_string(cs.max_degree()));
    auto td = true_degree(parse_binomial(printed[5], a.labels()), a);
    c.expect(td.index == 2 && td.true_degree == 30,
             "underlined circuit has index " + td.index.get_str() + ", true degree " + td.true_degree.get_str());
    UgbOptions u;
    u.basis_cap = 2000;
    auto r = degree_bound_report(a, u);
    c.expect(r.degree == 54, "degree is " + r.degree.get_str());
    c.expect(r.codim == 3, "codim is " + std::to_string(r.codim));
    c.expect(r.maxdeg_graver > r.maxdeg_circuits, "maxdeg Graver does not exceed maxdeg circuits");
    c.expect(r.conj48 == BoundStatus::pass, "true-degree bound check does not pass");
}

// brute force: is v a sum of exactly k columns?
bool sum_of_columns(const Configuration& a, const IntVector& v, long k, std::size_t from = 0) {
    if (k == 0) return is_zero(v);
    for (std::size_t j = from; j < a.size(); ++j) {
        IntVector w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= a.column(j)[i];
        if (sum_of_columns(a, w, k - 1, j)) return true;
    }
    return false;
}

// 5: curves that are normal but not projectively normal
void normal_not_projectively_normal(Check& c) {
    for (long r = 4; r <= 6; ++r) {
        const std::string tag = "r=" + std::to_string(r) + ": ";
        Configuration a(IntMatrix{{r, r - 1, 1, 0}, {0, 1, r - 1, r}});
        auto p = is_normal_projective(a);
        c.expect(p.normal && p.smooth, tag + "Y_A is not smooth and normal");
        auto s = is_normal(a);
        c.expect(!s.normal && s.witness.has_value(), tag + "A reported projectively normal");
        if (s.witness) {
            const IntVector& w = *s.witness;
            Integer total = w[0] + w[1];
            bool in_cone = w[0] >= 0 && w[1] >= 0 && total % r == 0;
            long k = total.get_si() / r;
            c.expect(in_cone && column_lattice(a).contains(w) && !sum_of_columns(a, w, k),
                     tag + "witness " + to_string(w) + " is not in (pos A ∩ ZA) minus NA");
        }
        std::map<long, std::size_t> degs;
        for (const auto& g : minimal_generators(a)) ++degs[g.degree()];
        std::map<long, std::size_t> want{{2, 1}};
        want[r - 1] += static_cast<std::size_t>(r - 1);
        c.expect(degs == want, tag + "minimal generators are not one quadric and r-1 of degree r-1");
        auto hp = hilbert_polynomial(a);
        auto e = ehrhart_polynomial(a, 6);
        c.expect(hp == e.ambient_polynomial && hp == e.lattice_polynomial, tag + "Hilbert polynomial differs from Ehrhart");
        auto hf = hilbert_function(a, 1);
        c.expect(hf.at(1) == 4 && e.ambient_counts.at(1) == r + 1,
                 tag + "HF(1)=" + hf.at(1).get_str() + ", E(1)=" + e.ambient_counts.at(1).get_str());
    }
}

// 6: degree equals normalized volume
void degree_table(Check& c, double& worst) {
    auto timed = [&](const Configuration& a) {
        auto t0 = std::chrono::steady_clock::now();
        Integer v = normalized_volume(a);
        worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return v;
    };
    c.expect(timed(Configuration(IntMatrix{{2, 1, 1, 0, 0}, {0, 1, 0, 2, 1}, {0, 0, 1, 0, 1}})) == 3, "scroll degree is not 3");
    c.expect(timed(make_config("scroll")) == 3, "gallery scroll degree is not 3");
    for (long r = 1; r <= 7; ++r)
        for (long s = 1; r + s <= 8; ++s) {
            Integer v = timed(make_config("segre:" + std::to_string(r) + "," + std::to_string(s)));
            Integer want = binomial_coefficient(r + s, r);
            c.expect(v == want, "Segre(" + std::to_string(r) + "," + std::to_string(s) + ") degree " + v.get_str() +
                                    ", expected " + want.get_str());
        }
    c.expect(timed(make_config("octahedron")) == 4, "octahedron degree is not 4");
    c.expect(worst < 10.0, "a single degree took longer than 10 s");
}

constexpr std::uint64_t kSeed = 20260;

// 7: randomized property suite
void property_suite(Check& c) {
    auto inst = oracle::random_instances(200, kSeed);
    std::mt19937_64 rng(kSeed + 1);
    std::size_t compared = 0, squarefree = 0;
    for (const auto& m : inst) {
        for (auto* f : {&props::toric_sets, &props::elimination_oracle, &props::volume_and_hilbert})
            for (const auto& v : (*f)(m)) c.expect(false, v);
        for (const auto& v : props::squarefree_vs_triangulation(m, rng, compared, squarefree)) c.expect(false, v);
        for (const auto& v : props::unimodular_chain(m, rng)) c.expect(false, v);
    }
    c.expect(compared > 150 && squarefree > 10 && squarefree + 10 < compared,
             "too few generic weights compared (" + std::to_string(compared) + ")");
}

// 8: circuits cut out X_A set-theoretically
void circuits_cut_out(Check& c) {
    std::size_t used = 0, inconclusive = 0;
    for (const auto& m : oracle::random_instances(200, kSeed)) {
        auto a = oracle::to_config(m);
        if (!grading(a) || kernel_lattice(a).rank() == 0) continue;
        for (const auto& v : props::circuits_cut_out(m, 6, inconclusive)) c.expect(false, v);
        if (++used == 10) break;
    }
    c.expect(used == 10, "fewer than 10 instances");
    c.expect(inconclusive == 0, std::to_string(inconclusive) + " inconclusive verdicts");
}

// 9: Graver via Lawrence lifting equals the completion procedure
void graver_oracle(Check& c) {
    std::size_t checked = 0;
    for (const auto& m : oracle::random_instances(200, kSeed)) {
        bool done = false;
        for (const auto& v : props::graver_oracle(m, done)) c.expect(false, v);
        checked += done;
    }
    c.expect(checked > 50, "only " + std::to_string(checked) + " instances with kernel rank <= 3");
}

// 10: lattice hexagons
void hexagons(Check& c) {
    const Polytope base = convex_hull(hexagon(1, 2, 3));
    for (auto [i, j, k] : {std::tuple{1L, 2L, 3L}, {1L, 2L, 4L}, {2L, 3L, 5L}}) {
        const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "): ";
        Configuration a = hexagon(i, j, k);
        Polytope p = convex_hull(a);
        c.expect(p.vertices.size() == 6 && p.dim == 2, tag + "conv A is not a hexagon");
        c.expect(normal_fan_equal(p, base), tag + "normal fan differs from (1,2,3)");
        c.expect(is_normal_projective(a).normal && is_normal(a).normal, tag + "not normal");
        auto perm = find_lex_order_with_degree(a, 2);
        c.expect(perm.has_value(), tag + "no quadratic lexicographic Groebner basis found");
        if (perm) c.expect(toric_ideal(a, TermOrder::lex(a.size(), *perm)).max_degree() <= 2, tag + "reported order is not quadratic");
    }
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    double worst_degree = 0;
    const std::vector<Criterion> criteria = {
        {1, "twisted cubic: ideal, circuits, Graver, exhaustive UGB, degree", 1, twisted_cubic},
        {2, "Birkhoff p=3 ideal/degree/dim and p=4 degree 352", 600, birkhoff},
        {3, "r=s=t=2 product configuration: single quartic", 5, triple},
        {4, "Lawrence lifting: 16 Graver elements, 6 circuits, index 2, degree 54, codim 3, bounds", 300,
         graver_beats_circuits},
        {5, "r=4..6 curves: smooth normal Y_A, A not normal with witness, generators, Hilbert vs Ehrhart", 10,
         normal_not_projectively_normal},
        {6, "degree table: scroll 3, Segre binomial(r+s,r) for r+s<=8, octahedron 4", 1e9,
         [&](Check& c) { degree_table(c, worst_degree); }},
        {7, "property suite on 200 seeded configurations", 900, property_suite},
        {8, "circuits cut out X_A: powers <= 6 in the circuit ideal on 10 configurations", 1e9, circuits_cut_out},
        {9, "Lawrence Graver equals completion Graver (kernel rank <= 3)", 1e9, graver_oracle},
        {10, "hexagons: equal normal fans, normal, quadratic lex Groebner basis", 120, hexagons},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds)
            c.problems.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
        const bool ok = c.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << cr.id << "] " << cr.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)" << std::endl;
        for (std::size_t i = 0; i < c.problems.size() && i < 20; ++i) std::cout << "       " << c.problems[i] << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
