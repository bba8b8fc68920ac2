#include "toric/gallery.hpp"

#include "toric/bounds.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/polyhedral.hpp"
#include "toric/semigroup.hpp"
#include "toric/term_order.hpp"
#include "toric/toric_ideal.hpp"
#include "toric/toric_sets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

// ---------------------------------------------------------------------------
// Observers: each runs one operation and renders its result canonically.
// ---------------------------------------------------------------------------

std::string canonical(std::vector<LatticeBinomial> v, const std::vector<std::string>& labels) {
    for (auto& u : v) u = u.sign_normalized();
    std::sort(v.begin(), v.end(), degree_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + binomial_to_string(v[i], labels);
    return out + "}";
}

std::string canonical_text(const std::vector<std::string>& binomials, const std::vector<std::string>& labels) {
    std::vector<LatticeBinomial> v;
    for (const auto& b : binomials) v.push_back(parse_binomial(b, labels));
    return canonical(std::move(v), labels);
}

std::string degree_counts(const std::vector<LatticeBinomial>& v) {
    std::map<long, std::size_t> counts;
    for (const auto& u : v) ++counts[u.degree()];
    std::string out;
    for (const auto& [d, c] : counts) out += (out.empty() ? "" : " ") + std::to_string(c) + "x deg " + std::to_string(d);
    return out.empty() ? "none" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Same multiset of columns.
bool same_columns(const Configuration& a, const Configuration& b) {
    std::vector<IntVector> x, y;
    for (std::size_t j = 0; j < a.size(); ++j) x.push_back(a.column(j));
    for (std::size_t j = 0; j < b.size(); ++j) y.push_back(b.column(j));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

std::vector<LatticeBinomial> ugb_elements(const Configuration& a) { return universal_gb(a).elements; }

GalleryFact fact(std::string statement, std::string op, std::string expected,
                 std::function<std::string(const Configuration&)> observe) {
    GalleryFact f;
    f.statement = std::move(statement);
    f.operation = std::move(op);
    f.check = [expected = std::move(expected), observe = std::move(observe)](const Configuration& a) {
        FactOutcome o;
        o.expected = expected;
        o.observed = observe(a);
        o.ok = o.observed == o.expected;
        return o;
    };
    return f;
}

GalleryFact set_fact(std::string statement, std::string op, const std::vector<std::string>& expected,
                     const std::vector<std::string>& labels,
                     std::function<std::vector<LatticeBinomial>(const Configuration&)> compute) {
    return fact(std::move(statement), std::move(op), canonical_text(expected, labels),
                [compute = std::move(compute)](const Configuration& a) { return canonical(compute(a), a.labels()); });
}

GalleryFact degree_fact(const std::string& expected) {
    return fact("degree (normalized volume of conv A) is " + expected, "degree", expected,
                [](const Configuration& a) { return normalized_volume(a).get_str(); });
}

GalleryFact mingen_count_fact(const std::string& statement, const std::string& expected) {
    return fact(statement, "mingen", expected, [](const Configuration& a) { return degree_counts(minimal_generators(a)); });
}

GalleryFact projectively_normal_fact(bool expected) {
    return fact(std::string("A is ") + (expected ? "" : "not ") + "normal (Y_A projectively normal)", "normal",
                yes_no(expected), [](const Configuration& a) { return yes_no(is_normal(a).normal); });
}

GalleryFact chart_normal_fact(bool expected) {
    return fact(std::string("all vertex charts normal (Y_A ") + (expected ? "" : "not ") + "normal)", "normal",
                yes_no(expected), [](const Configuration& a) { return yes_no(is_normal_projective(a).normal); });
}

GalleryFact hilbert_equals_ehrhart_fact() {
    return fact("Hilbert polynomial equals the Ehrhart polynomial counted in ZA", "hilbert", "yes",
                [](const Configuration& a) {
                    return yes_no(hilbert_polynomial(a) ==
                                  ehrhart_polynomial(a, static_cast<long>(a.rank()) + 3).lattice_polynomial);
                });
}

GalleryFact unimodular_fact(bool expected) {
    return fact(std::string("A is ") + (expected ? "" : "not ") + "unimodular", "unimodular", yes_no(expected),
                [](const Configuration& a) { return yes_no(is_unimodular(a).unimodular); });
}

GalleryFact hereditary_fact(bool expected) {
    return fact(std::string("A is ") + (expected ? "" : "not ") + "hereditarily normal", "hereditary",
                yes_no(expected), [](const Configuration& a) { return yes_no(is_hereditarily_normal(a).hereditarily_normal); });
}

GalleryFact quadric_generated_fact() {
    return fact("I_A is generated by quadrics", "mingen", "yes", [](const Configuration& a) {
        auto g = minimal_generators(a);
        return yes_no(std::all_of(g.begin(), g.end(), [](const LatticeBinomial& u) { return u.degree() == 2; }));
    });
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::input, msg); }

void need(bool ok, const std::string& msg) {
    if (!ok) bad(msg);
}

std::string index_label(std::initializer_list<long> idx) {
    bool small = std::all_of(idx.begin(), idx.end(), [](long v) { return v >= 0 && v <= 9; });
    std::string s = "x";
    bool first = true;
    for (long v : idx) {
        if (!small && !first) s += "_";
        s += std::to_string(v);
        first = false;
    }
    return s;
}

Configuration from_columns(const std::vector<IntVector>& cols, std::size_t d, std::vector<std::string> labels = {}) {
    return Configuration(IntMatrix::from_columns(cols, d), std::move(labels));
}

Configuration birkhoff(long p) {
    need(p >= 2 && p <= 7, "birkhoff(p) needs 2 <= p <= 7");
    const auto up = static_cast<std::size_t>(p);
    std::vector<std::size_t> sigma(up);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    do {
        IntVector v(up * up, Integer(0));
        std::string label = "x";
        for (std::size_t i = 0; i < up; ++i) {
            v[i * up + sigma[i]] = 1;
            label += std::to_string(sigma[i] + 1);
        }
        cols.push_back(std::move(v));
        labels.push_back(std::move(label));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return from_columns(cols, up * up, std::move(labels));
}

Configuration veronese(long n, long r) {
    need(n >= 1 && r >= 1, "veronese(n, r) needs n, r >= 1");
    std::vector<IntVector> cols;
    IntVector cur(static_cast<std::size_t>(n), Integer(0));
    // Exponent vectors summing to r, in decreasing lex order.
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            cols.push_back(cur);
            return;
        }
        for (long e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, r);
    return from_columns(cols, static_cast<std::size_t>(n));
}

Configuration segre(long r, long s) {
    need(r >= 1 && s >= 1, "segre(r, s) needs r, s >= 1");
    const auto d = static_cast<std::size_t>(r + s + 2);
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    for (long i = 0; i <= r; ++i)
        for (long j = 0; j <= s; ++j) {
            IntVector v(d, Integer(0));
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(r + 1 + j)] = 1;
            cols.push_back(std::move(v));
            labels.push_back(index_label({i + 1, j + 1}));
        }
    return from_columns(cols, d, std::move(labels));
}

Configuration triple(long r, long s, long t) {
    need(1 <= r && r <= s && s <= t, "triple(r, s, t) needs 1 <= r <= s <= t");
    const auto d = static_cast<std::size_t>(r * s + r * t + s * t);
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < s; ++j)
            for (long k = 0; k < t; ++k) {
                IntVector v(d, Integer(0));
                v[static_cast<std::size_t>(i * s + j)] = 1;
                v[static_cast<std::size_t>(r * s + i * t + k)] = 1;
                v[static_cast<std::size_t>(r * s + r * t + j * t + k)] = 1;
                cols.push_back(std::move(v));
                labels.push_back(index_label({i + 1, j + 1, k + 1}));
            }
    return from_columns(cols, d, std::move(labels));
}

Configuration graph(const std::vector<std::pair<long, long>>& edges) {
    need(!edges.empty(), "graph needs at least one edge");
    long d = 0;
    for (auto [i, j] : edges) {
        need(i >= 1 && j >= 1 && i != j, "graph edges are i-j with distinct vertices >= 1");
        d = std::max({d, i, j});
    }
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    for (auto [i, j] : edges) {
        IntVector v(static_cast<std::size_t>(d), Integer(0));
        v[static_cast<std::size_t>(i - 1)] = 1;
        v[static_cast<std::size_t>(j - 1)] = -1;
        cols.push_back(std::move(v));
        labels.push_back(index_label({i, j}));
    }
    return from_columns(cols, static_cast<std::size_t>(d), std::move(labels));
}

std::vector<std::pair<long, long>> bipartite_edges(long r, long s) {
    std::vector<std::pair<long, long>> e;
    for (long i = 1; i <= r; ++i)
        for (long j = 1; j <= s; ++j) e.emplace_back(i, r + j);
    return e;
}

Configuration bipartite(long r, long s) {
    need(r >= 1 && s >= 1, "bipartite(r, s) needs r, s >= 1");
    Configuration g = graph(bipartite_edges(r, s));
    std::vector<std::string> labels;
    for (long i = 1; i <= r; ++i)
        for (long j = 1; j <= s; ++j) labels.push_back(index_label({i, j}));
    return Configuration(g.matrix(), std::move(labels));
}

Configuration complete_digraph(long m) {
    need(m >= 2, "complete_digraph(m) needs m >= 2");
    std::vector<std::pair<long, long>> e;
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= m; ++j)
            if (i != j) e.emplace_back(i, j);
    return graph(e);
}

Configuration matroid(long ground, const std::vector<std::vector<long>>& bases) {
    need(ground >= 1 && !bases.empty(), "matroid needs a ground set size and at least one basis");
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    const std::size_t rank = bases.front().size();
    for (const auto& b : bases) {
        need(b.size() == rank, "all matroid bases must have the same size");
        IntVector v(static_cast<std::size_t>(ground), Integer(0));
        std::string label = "x";
        for (long e : b) {
            need(e >= 1 && e <= ground, "basis element out of range");
            need(v[static_cast<std::size_t>(e - 1)] == 0, "repeated basis element");
            v[static_cast<std::size_t>(e - 1)] = 1;
            label += (ground > 9 && label.size() > 1 ? "_" : "") + std::to_string(e);
        }
        cols.push_back(std::move(v));
        labels.push_back(std::move(label));
    }
    return from_columns(cols, static_cast<std::size_t>(ground), std::move(labels));
}

std::vector<std::vector<long>> uniform_bases(long r, long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long next) {
        if (static_cast<long>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (long e = next; e <= n; ++e) {
            cur.push_back(e);
            rec(e + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Configuration ex26(long r) {
    need(r >= 4, "ex26(r) needs r >= 4");
    return Configuration(IntMatrix{{r, r - 1, 1, 0}, {0, 1, r - 1, r}});
}

Configuration ex44(long d) {
    need(d >= 3, "ex44(d) needs d >= 3");
    return Configuration(IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, d}});
}

Configuration ex47() { return lawrence(Configuration(IntMatrix{{1, 3, 4, 6, 0}, {0, 0, 0, -5, 1}})); }

// ---------------------------------------------------------------------------
// Spec parsing
// ---------------------------------------------------------------------------

struct Spec {
    std::string name;
    std::string args;
};

Spec split_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) return {std::string(spec), ""};
    return {std::string(spec.substr(0, colon)), std::string(spec.substr(colon + 1))};
}

std::vector<long> ints(const Spec& s, std::size_t count, std::vector<long> defaults) {
    std::vector<long> v = s.args.empty() ? std::move(defaults) : parse_int_list(s.args);
    if (v.size() != count)
        bad(s.name + " takes " + std::to_string(count) + " integer parameter" + (count == 1 ? "" : "s"));
    return v;
}

std::vector<std::pair<long, long>> parse_edges(const std::string& args) {
    std::vector<std::pair<long, long>> e;
    std::stringstream in(args);
    for (std::string tok; std::getline(in, tok, ',');) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) bad("graph edge '" + tok + "' is not of the form i-j");
        auto a = parse_int_list(tok.substr(0, dash));
        auto b = parse_int_list(tok.substr(dash + 1));
        if (a.size() != 1 || b.size() != 1) bad("graph edge '" + tok + "' is not of the form i-j");
        e.emplace_back(a[0], b[0]);
    }
    return e;
}

std::pair<long, std::vector<std::vector<long>>> parse_matroid(const std::string& args) {
    auto colon = args.find(':');
    if (colon == std::string::npos) bad("matroid spec is matroid:<ground>:<b1>,<b2>,... with bases like 1.2");
    auto g = parse_int_list(args.substr(0, colon));
    if (g.size() != 1) bad("matroid ground set size must be one integer");
    std::vector<std::vector<long>> bases;
    std::stringstream in(args.substr(colon + 1));
    for (std::string tok; std::getline(in, tok, ',');) {
        std::replace(tok.begin(), tok.end(), '.', ' ');
        bases.push_back(parse_int_list(tok));
    }
    return {g[0], bases};
}

Configuration build(const Spec& s, std::vector<long>& params) {
    auto take = [&](std::size_t count, std::vector<long> defaults) {
        params = ints(s, count, std::move(defaults));
        return params;
    };
    const std::string& n = s.name;
    if (n == "twisted_cubic") return Configuration(IntMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}});
    if (n == "scroll") return Configuration(IntMatrix{{2, 1, 1, 0, 0}, {0, 1, 0, 2, 1}, {0, 0, 1, 0, 1}});
    if (n == "octahedron")
        return Configuration(IntMatrix{{1, 1, 1, 0, 0, 0}, {1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
    if (n == "ex23") return Configuration(IntMatrix{{2, 1, 0}, {0, 1, 2}});
    if (n == "nine_vectors")
        return Configuration(IntMatrix{{3, 0, 0, 2, 1, 2, 1, 0, 0}, {0, 3, 0, 1, 2, 0, 0, 2, 1}, {0, 0, 3, 0, 0, 1, 2, 1, 2}});
    if (n == "ex47") return ex47();
    if (n == "birkhoff") return birkhoff(take(1, {3})[0]);
    if (n == "veronese") {
        auto v = take(2, {3, 2});
        return veronese(v[0], v[1]);
    }
    if (n == "segre") {
        auto v = take(2, {2, 2});
        return segre(v[0], v[1]);
    }
    if (n == "triple") {
        auto v = take(3, {2, 2, 2});
        return triple(v[0], v[1], v[2]);
    }
    if (n == "hexagon") {
        auto v = take(3, {1, 2, 3});
        return hexagon(v[0], v[1], v[2]);
    }
    if (n == "ex26") return ex26(take(1, {4})[0]);
    if (n == "ex44") return ex44(take(1, {3})[0]);
    if (n == "bipartite") {
        auto v = take(2, {2, 3});
        return bipartite(v[0], v[1]);
    }
    if (n == "complete_digraph") return complete_digraph(take(1, {4})[0]);
    if (n == "uniform_matroid") {
        auto v = take(2, {2, 4});
        need(1 <= v[0] && v[0] <= v[1], "uniform_matroid(r, n) needs 1 <= r <= n");
        return matroid(v[1], uniform_bases(v[0], v[1]));
    }
    if (n == "graph") {
        if (s.args.empty()) bad("graph needs an edge list, e.g. graph:1-2,2-3,3-1");
        return graph(parse_edges(s.args));
    }
    if (n == "matroid") {
        auto [g, b] = parse_matroid(s.args);
        return matroid(g, b);
    }
    bad("unknown gallery entry '" + n + "'");
}

// ---------------------------------------------------------------------------
// Facts per family
// ---------------------------------------------------------------------------

void add_facts(GalleryEntry& e) {
    const auto& labels = e.config.labels();
    auto& f = e.facts;
    const auto& p = e.params;
    const std::string& n = e.name;

    if (n == "twisted_cubic") {
        e.description = "twisted cubic curve in P^3";
        const std::vector<std::string> circ = {"x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"};
        std::vector<std::string> gr = circ;
        gr.push_back("x1*x4 - x2*x3");
        f.push_back(set_fact("I_A is generated by three quadrics", "mingen",
                             {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, labels, minimal_generators));
        f.push_back(set_fact("the circuits are the four listed binomials", "circuits", circ, labels,
                             [](const Configuration& a) { return circuits(a).binomials(); }));
        f.push_back(set_fact("Graver basis = circuits plus x1*x4 - x2*x3", "graver", gr, labels, graver));
        f.push_back(set_fact("universal Groebner basis = Graver basis", "ugb", gr, labels, ugb_elements));
        f.push_back(fact("the circuits do not generate I_A: x1*x4 - x2*x3 first enters at power 2", "radical", "2",
                         [](const Configuration& a) {
                             auto c = circuits(a).binomials();
                             auto v = radical_membership_bounded(parse_binomial("x1*x4 - x2*x3", a.labels()), c, 6);
                             return v.member ? std::to_string(v.power) : "inconclusive";
                         }));
        f.push_back(degree_fact("3"));
        f.push_back(fact("conv A is a segment with 2 vertices", "faces", "2",
                         [](const Configuration& a) { return std::to_string(vertices_of(a).size()); }));
        f.push_back(projectively_normal_fact(true));
        f.push_back(chart_normal_fact(true));
        f.push_back(hilbert_equals_ehrhart_fact());
        f.push_back(unimodular_fact(false));
        f.push_back(hereditary_fact(false));
        f.push_back(fact("the Lawrence lifting is minimally generated by five binomials", "lawrence",
                         canonical_text({"x1*x3*y2^2 - x2^2*y1*y3", "x1*x4*y2*y3 - x2*x3*y1*y4", "x2*x4*y3^2 - x3^2*y2*y4",
                                         "x1^2*x4*y2^3 - x2^3*y1^2*y4", "x1*x4^2*y3^3 - x3^3*y1*y4^2"},
                                        lawrence(e.config).labels()),
                         [](const Configuration& a) {
                             Configuration l = lawrence(a);
                             return canonical(minimal_generators(l), l.labels());
                         }));
        f.push_back(fact("degree bounds: maxdeg C = maxdeg Gr = degree = 3, codim 2, all checks pass", "bounds",
                         "3 3 3 2 pass pass pass pass", [](const Configuration& a) {
                             auto r = degree_bound_report(a);
                             return std::to_string(r.maxdeg_circuits) + " " + std::to_string(r.maxdeg_graver) + " " +
                                    r.degree.get_str() + " " + std::to_string(r.codim) + " " +
                                    std::string(bound_status_name(r.eq44)) + " " +
                                    std::string(bound_status_name(r.eq45)) + " " +
                                    std::string(bound_status_name(r.lemma46)) + " " +
                                    std::string(bound_status_name(r.conj48));
                         }));
    } else if (n == "veronese") {
        e.description = "Veronese embedding of P^" + std::to_string(p[0] - 1) + " by forms of degree " +
                        std::to_string(p[1]);
        f.push_back(quadric_generated_fact());
        f.push_back(projectively_normal_fact(true));
        if (p[0] == 3 && p[1] == 2) {
            f.push_back(fact("circuits = universal Groebner basis", "ugb", "yes", [](const Configuration& a) {
                return yes_no(canonical(circuits(a).binomials(), a.labels()) == canonical(ugb_elements(a), a.labels()));
            }));
            f.push_back(fact("the Graver basis properly contains the universal Groebner basis", "graver", "yes",
                             [](const Configuration& a) {
                                 auto u = ugb_elements(a);
                                 auto g = graver(a);
                                 std::set<LatticeBinomial> gs;
                                 for (auto& x : g) gs.insert(x.sign_normalized());
                                 bool sub = std::all_of(u.begin(), u.end(), [&](const LatticeBinomial& x) {
                                     return gs.count(x.sign_normalized()) > 0;
                                 });
                                 return yes_no(sub && gs.size() > u.size());
                             }));
        }
    } else if (n == "scroll") {
        e.description = "cubic scroll S(2,1) in P^4";
        f.push_back(degree_fact("3"));
        f.push_back(fact("conv A is a quadrangle", "faces", "4 4", [](const Configuration& a) {
            auto c = face_poset(convex_hull(a)).proper_counts();
            return std::to_string(c.at(0)) + " " + std::to_string(c.at(1));
        }));
        f.push_back(quadric_generated_fact());
        f.push_back(projectively_normal_fact(true));
        f.push_back(fact("adding the column (0,0,2) gives the quadratic Veronese surface", "kernel", "yes",
                         [](const Configuration& a) {
                             IntMatrix m(a.dim(), a.size() + 1, Integer(0));
                             for (std::size_t i = 0; i < a.dim(); ++i)
                                 for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.matrix()(i, j);
                             m(2, a.size()) = 2;
                             return yes_no(same_columns(Configuration(m), veronese(3, 2)));
                         }));
    } else if (n == "segre") {
        e.description = "Segre embedding of P^" + std::to_string(p[0]) + " x P^" + std::to_string(p[1]);
        const long r = p[0], s = p[1];
        f.push_back(degree_fact(binomial_coefficient(r + s, r).get_str()));
        f.push_back(fact("A has (r+1)(s+1) columns, the vertices of the product of simplices", "faces",
                         std::to_string((r + 1) * (s + 1)),
                         [](const Configuration& a) { return std::to_string(vertices_of(a).size()); }));
        f.push_back(mingen_count_fact("I_A is generated by the 2x2 minors",
                                      Integer(binomial_coefficient(r + 1, 2) * binomial_coefficient(s + 1, 2)).get_str() +
                                          "x deg 2"));
        f.push_back(projectively_normal_fact(true));
    } else if (n == "octahedron") {
        e.description = "generic torus orbit in the Grassmannian of lines in P^3";
        f.push_back(degree_fact("4"));
        f.push_back(fact("conv A is an octahedron: f-vector 6 12 8", "faces", "6 12 8", [](const Configuration& a) {
            auto c = face_poset(convex_hull(a)).proper_counts();
            return std::to_string(c.at(0)) + " " + std::to_string(c.at(1)) + " " + std::to_string(c.at(2));
        }));
        f.push_back(fact("a regular triangulation into four unimodular tetrahedra exists", "degree", "4 yes",
                         [](const Configuration& a) {
                             auto t = regular_triangulation(a, std::vector<Integer>(a.size(), Integer(0)));
                             return std::to_string(t.simplices.size()) + " " + yes_no(t.unimodular());
                         }));
        f.push_back(quadric_generated_fact());
        f.push_back(projectively_normal_fact(true));
        f.push_back(fact("A equals the bases of the uniform matroid of rank 2 on 4 elements", "kernel", "yes",
                         [](const Configuration& a) { return yes_no(same_columns(a, matroid(4, uniform_bases(2, 4)))); }));
    } else if (n == "birkhoff") {
        const long q = p[0];
        e.description = "permutation matrices of size " + std::to_string(q) + " (Birkhoff polytope)";
        f.push_back(fact("dim conv A = (p-1)^2", "faces", std::to_string((q - 1) * (q - 1)),
                         [](const Configuration& a) { return std::to_string(convex_hull(a).dim); }));
        if (q == 3) {
            f.push_back(set_fact("I_A is the single cubic x123*x231*x312 - x132*x213*x321", "mingen",
                                 {"x123*x231*x312 - x132*x213*x321"}, labels, minimal_generators));
            f.push_back(degree_fact("3"));
        }
        if (q == 4) {
            e.heavy = true;
            f.push_back(degree_fact("352"));
            f.push_back(fact("minimal generators have degree at most p", "mingen", "yes", [](const Configuration& a) {
                auto g = minimal_generators(a);
                return yes_no(std::all_of(g.begin(), g.end(), [](const LatticeBinomial& u) { return u.degree() <= 4; }));
            }));
        }
        if (q == 2) f.push_back(degree_fact("1"));
        if (q >= 5) {
            e.heavy = true;
            e.notes.push_back("published degrees for p >= 5 (4718075, ...) are beyond desk-scale volume computation");
        }
        e.notes.push_back("'generated by forms of degree p' is checked as 'degree at most p' and only for p <= 4");
    } else if (n == "triple") {
        e.description = "products u_ij * v_ik * w_jk";
        if (p == std::vector<long>{2, 2, 2})
            f.push_back(set_fact("I_A is the single quartic x111*x122*x212*x221 - x112*x121*x211*x222", "mingen",
                                 {"x111*x122*x212*x221 - x112*x121*x211*x222"}, labels, minimal_generators));
        e.notes.push_back("faces, degree and generators for r, s, t >= 3 are open problems");
    } else if (n == "ex23") {
        e.description = "cone over a smooth conic";
        f.push_back(fact("Hilbert basis of pos(A) ∩ ZA is A itself", "normal", "[(0,2), (1,1), (2,0)]",
                         [](const Configuration& a) {
                             std::string s = "[";
                             auto hb = hilbert_basis(a);
                             for (std::size_t i = 0; i < hb.size(); ++i) s += (i ? ", " : "") + to_string(hb[i]);
                             return s + "]";
                         }));
        f.push_back(projectively_normal_fact(true));
        f.push_back(fact("X_A is not smooth", "smooth", "no", [](const Configuration& a) { return yes_no(is_smooth(a)); }));
    } else if (n == "ex26") {
        const long r = p[0];
        e.description = "rational curve of degree " + std::to_string(r) + " missing two interior points";
        f.push_back(chart_normal_fact(true));
        f.push_back(fact("Y_A is smooth (all vertex charts free)", "smooth", "yes",
                         [](const Configuration& a) { return yes_no(is_smooth_projective(a)); }));
        f.push_back(fact("A is not normal; the witness is a lattice point of conv A that is not a column", "normal",
                         "no, witness on the segment outside A", [r](const Configuration& a) {
                             auto rep = is_normal(a);
                             std::string s = yes_no(rep.normal);
                             if (!rep.witness) return s + ", no witness";
                             const IntVector& w = *rep.witness;
                             bool on_segment = w[0] >= 0 && w[1] >= 0 && w[0] + w[1] == r;
                             bool column = false;
                             for (std::size_t j = 0; j < a.size(); ++j) column = column || a.column(j) == w;
                             return s + (on_segment && !column ? ", witness on the segment outside A"
                                                               : ", unexpected witness " + to_string(w));
                         }));
        f.push_back(mingen_count_fact("one quadric and r-1 binomials of degree r-1",
                                      "1x deg 2 " + std::to_string(r - 1) + "x deg " + std::to_string(r - 1)));
        f.push_back(hilbert_equals_ehrhart_fact());
        f.push_back(fact("Hilbert function at 1 is 4 while the Ehrhart count is r+1", "ehrhart",
                         "4 " + std::to_string(r + 1), [](const Configuration& a) {
                             auto h = hilbert_function(a, 1);
                             auto e2 = ehrhart_polynomial(a, static_cast<long>(a.rank()) + 3);
                             return h.at(1).get_str() + " " + e2.lattice_counts.at(1).get_str();
                         }));
        e.notes.push_back("X_A is not Cohen-Macaulay (not checked)");
    } else if (n == "nine_vectors") {
        e.description = "nine monomials of degree 3 in three variables (all but x*y*z)";
        f.push_back(quadric_generated_fact());
        f.push_back(fact("A is not normal: the omitted point (1,1,1) lies in ZA and witnesses it", "normal", "no (1,1,1)",
                         [](const Configuration& a) {
                             auto rep = is_normal(a);
                             return yes_no(rep.normal) + (rep.witness ? " " + to_string(*rep.witness) : "");
                         }));
        f.push_back(fact("no term order gives a quadratic Groebner basis", "ideal", "no", [](const Configuration& a) {
            return yes_no(quadratic_groebner_search(a).verdict == QuadraticGbVerdict::exists);
        }));
        e.notes.push_back("often quoted with d=3, n=8, yet nine vectors are listed; all nine are used");
        e.notes.push_back("Koszulness of C[A] is open (not checked)");
    } else if (n == "hexagon") {
        e.description = "lattice points of the permutohedron of (" + std::to_string(p[0]) + "," +
                        std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
        f.push_back(chart_normal_fact(true));
        f.push_back(projectively_normal_fact(true));
        f.push_back(fact("conv A is a hexagon", "faces", "6",
                         [](const Configuration& a) { return std::to_string(vertices_of(a).size()); }));
        f.push_back(fact("normal fan equals that of hexagon(1,2,3)", "normalfan-eq", "yes", [](const Configuration& a) {
            return yes_no(normal_fan_equal(convex_hull(a), convex_hull(hexagon(1, 2, 3))));
        }));
        f.push_back(fact("some lexicographic order gives a quadratic Groebner basis", "ideal", "yes",
                         [](const Configuration& a) { return yes_no(find_lex_order_with_degree(a, 2).has_value()); }));
        e.notes.push_back("Y_A is P^2 blown up at three points (not checked)");
    } else if (n == "graph") {
        e.description = "directed graph configuration e_i - e_j";
        f.push_back(unimodular_fact(true));
        f.push_back(hereditary_fact(true));
        // The three five-edge examples have a single circuit each.
        static const std::map<std::string, std::string> known = {
            {"1-2,2-3,3-4,4-5,5-1", "x12*x23*x34*x45*x51 - 1"},
            {"1-2,2-3,4-3,4-5,5-1", "x12*x23*x45*x51 - x43"},
            {"1-2,2-3,4-3,4-5,1-5", "x12*x23*x45 - x15*x43"},
        };
        for (const auto& [edges, circ] : known) {
            if (e.config == graph(parse_edges(edges))) {
                f.push_back(set_fact("the only circuit is " + circ, "circuits", {circ}, labels,
                                     [](const Configuration& a) { return circuits(a).binomials(); }));
            }
        }
    } else if (n == "bipartite") {
        const long r = p[0], s = p[1];
        e.description = "complete bipartite digraph K_" + std::to_string(r) + "," + std::to_string(s) + " (Segre)";
        f.push_back(unimodular_fact(true));
        f.push_back(fact("circuit degrees range over 2..min(r,s)", "circuits",
                         "2.." + std::to_string(std::min(r, s)), [](const Configuration& a) {
                             auto c = circuits(a);
                             long lo = 1000000, hi = 0;
                             for (const auto& x : c.elements) {
                                 lo = std::min(lo, x.degree);
                                 hi = std::max(hi, x.degree);
                             }
                             return c.elements.empty() ? std::string("none") : std::to_string(lo) + ".." + std::to_string(hi);
                         }));
        f.push_back(mingen_count_fact("I_A is the ideal of 2x2 minors",
                                      (binomial_coefficient(r, 2) * binomial_coefficient(s, 2)) == 0
                                          ? "none"
                                          : Integer(binomial_coefficient(r, 2) * binomial_coefficient(s, 2)).get_str() + "x deg 2"));
        e.notes.push_back("the circuit degree range is sometimes quoted as 2..max{r,s}; the largest circuit of K_{r,s} "
                          "is a 2m-cycle with m <= min{r,s}");
    } else if (n == "complete_digraph") {
        e.description = "complete digraph on " + std::to_string(p[0]) + " nodes (root system A_" +
                        std::to_string(p[0] - 1) + ")";
        f.push_back(hereditary_fact(true));
        f.push_back(unimodular_fact(true));
    } else if (n == "ex44") {
        const long d = p[0];
        e.description = "toric surface in P^4 with a generator of degree d";
        f.push_back(mingen_count_fact("one quadric and d forms of degree d",
                                      "1x deg 2 " + std::to_string(d) + "x deg " + std::to_string(d)));
        f.push_back(degree_fact(std::to_string(d + 1)));
        e.notes.push_back("Y_A is not arithmetically Cohen-Macaulay (not checked)");
    } else if (n == "uniform_matroid" || n == "matroid") {
        e.description = "incidence vectors of matroid bases";
        f.push_back(projectively_normal_fact(true));
        if (n == "uniform_matroid" && p == std::vector<long>{2, 4}) f.push_back(degree_fact("4"));
        f.push_back(quadric_generated_fact());
        e.notes.push_back("quadric generation is conjectural for matroids in general; checked per instance");
    } else if (n == "ex47") {
        e.description = "Lawrence lifting of B = [[1,3,4,6,0],[0,0,0,-5,1]]";
        e.heavy = true;
        const std::vector<std::string> circ = {
            "x2*y1^3 - x1^3*y2",           "x3*y1^4 - x1^4*y3",           "x3^3*y2^4 - x2^4*y3^3",
            "x4*x5^5*y2^2 - x2^2*y4*y5^5", "x4*x5^5*y1^6 - x1^6*y4*y5^5", "x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10"};
        std::vector<std::string> gr = circ;
        for (const char* g : {"x4*x5^5*y1^2*y3 - x1^2*x3*y4*y5^5", "x4*x5^5*y1^3*y2 - x1^3*x2*y4*y5^5",
                              "x3*y1*y2 - x1*x2*y3", "x1*x4*x5^5*y2*y3 - x2*x3*y1*y4*y5^5",
                              "x2^2*x4*x5^5*y3^3 - x3^3*y2^2*y4*y5^5", "x1*x3^2*y2^3 - x2^3*y1*y3^2",
                              "x1^2*x3*y2^2 - x2^2*y1^2*y3", "x2*x4*x5^5*y1*y3^2 - x1*x3^2*y2*y4*y5^5",
                              "x1^2*x4*x5^5*y3^2 - x3^2*y1^2*y4*y5^5",
                              "x4^2*x5^10*y1*y2*y3^2 - x1*x2*x3^2*y4^2*y5^10"})
            gr.emplace_back(g);
        f.push_back(set_fact("the Graver basis is the listed 16 binomials", "graver", gr, labels, graver));
        f.push_back(set_fact("I_A is minimally generated by the same 16 binomials", "mingen", gr, labels,
                             minimal_generators));
        f.push_back(set_fact("the circuits are the first six", "circuits", circ, labels,
                             [](const Configuration& a) { return circuits(a).binomials(); }));
        f.push_back(fact("maxdeg Graver 16 > maxdeg circuits 15", "bounds", "16 15", [](const Configuration& a) {
            auto g = graver(a);
            long mg = 0;
            for (const auto& u : g) mg = std::max(mg, u.degree());
            return std::to_string(mg) + " " + std::to_string(circuits(a).max_degree());
        }));
        f.push_back(fact("x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10 has index 2 and true degree 30", "circuits", "15 2 30",
                         [](const Configuration& a) {
                             auto t = true_degree(parse_binomial("x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10", a.labels()), a);
                             return std::to_string(t.degree) + " " + t.index.get_str() + " " + t.true_degree.get_str();
                         }));
        f.push_back(degree_fact("54"));
        f.push_back(fact("codim Y_A = 3", "kernel", "3",
                         [](const Configuration& a) { return std::to_string(a.size() - a.rank()); }));
        f.push_back(fact("bounds: Lemma bound degree*codim holds, conjectured true-degree bound holds", "bounds",
                         "pass pass", [](const Configuration& a) {
                             UgbOptions o;
                             o.basis_cap = 5000;
                             auto r = degree_bound_report(a, o);
                             return std::string(bound_status_name(r.lemma46)) + " " +
                                    std::string(bound_status_name(r.conj48));
                         }));
        e.notes.push_back("reg(Y_A) = 17 is not checked (regularity is out of scope)");
    }
}

}  // namespace

Configuration hexagon(long i, long j, long k) {
    need(0 < i && i < j && j < k, "hexagon(i, j, k) needs 0 < i < j < k");
    std::vector<long> v{i, j, k};
    IntMatrix pts(3, 6);
    std::size_t c = 0;
    do {
        for (std::size_t r = 0; r < 3; ++r) pts(r, c) = v[r];
        ++c;
    } while (std::next_permutation(v.begin(), v.end()));
    Polytope poly = convex_hull(pts);
    std::vector<IntVector> cols;
    for (const auto& y : lattice_points(poly, 1, 10'000'000)) {
        IntVector x = poly.frame.origin;
        for (std::size_t r = 0; r < y.size(); ++r)
            for (std::size_t q = 0; q < 3; ++q) x[q] += y[r] * poly.frame.basis(r, q);
        cols.push_back(std::move(x));
    }
    std::sort(cols.begin(), cols.end());
    return from_columns(cols, 3);
}

Configuration make_config(std::string_view spec) {
    std::vector<long> params;
    return build(split_spec(spec), params);
}

GalleryEntry make_entry(std::string_view spec) {
    GalleryEntry e;
    Spec s = split_spec(spec);
    e.name = s.name;
    e.config = build(s, e.params);
    add_facts(e);
    return e;
}

std::vector<std::string> gallery_specs() {
    return {"twisted_cubic",
            "veronese:3,2",
            "scroll",
            "segre:1,1",
            "segre:2,2",
            "segre:2,3",
            "octahedron",
            "birkhoff:3",
            "birkhoff:4",
            "triple:2,2,2",
            "ex23",
            "ex26:4",
            "ex26:5",
            "ex26:6",
            "nine_vectors",
            "hexagon:1,2,3",
            "hexagon:1,2,4",
            "hexagon:2,3,5",
            "graph:1-2,2-3,3-4,4-5,5-1",
            "graph:1-2,2-3,4-3,4-5,5-1",
            "graph:1-2,2-3,4-3,4-5,1-5",
            "bipartite:2,3",
            "bipartite:3,3",
            "complete_digraph:4",
            "ex44:3",
            "ex44:4",
            "uniform_matroid:2,4",
            "uniform_matroid:2,5",
            "ex47"};
}

std::optional<std::vector<std::size_t>> find_lex_order_with_degree(const Configuration& a, long max_degree,
                                                                   std::size_t max_tries) {
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t tries = 0;
    do {
        if (toric_ideal(a, TermOrder::lex(a.size(), perm)).max_degree() <= max_degree) return perm;
    } while (++tries < max_tries && std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace toric
