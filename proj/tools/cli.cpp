#include "cli.hpp"

#include "toric/bounds.hpp"
#include "toric/error.hpp"
#include "toric/gallery.hpp"
#include "toric/io.hpp"
#include "toric/polyhedral.hpp"
#include "toric/semigroup.hpp"
#include "toric/term_order.hpp"
#include "toric/toric_ideal.hpp"
#include "toric/toric_sets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

namespace toric::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<std::string> order{"grevlex"};
    std::string tiebreak;
    std::string ugb = "exhaustive";
    std::string heights;
    std::string binomial;
    bool json = false;
    long smax = -1;
    unsigned kmax = 6;
};

Configuration load(const std::string& what) {
    if (std::filesystem::is_regular_file(what)) return read_configuration(what);
    try {
        return make_config(what);
    } catch (const ToricError& e) {
        fail(ErrorKind::input, "'" + what + "' is neither a matrix file nor a gallery entry: " + e.what());
    }
}

std::vector<std::size_t> parse_perm(const std::string& text, std::size_t n) {
    if (text.empty()) return {};
    std::vector<std::size_t> perm;
    for (long v : parse_int_list(text)) {
        if (v < 1 || v > static_cast<long>(n)) fail(ErrorKind::input, "--tiebreak entries are variable numbers 1..n");
        perm.push_back(static_cast<std::size_t>(v - 1));
    }
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted.size() != n || sorted[i] != i) fail(ErrorKind::input, "--tiebreak must be a permutation of 1..n");
    return perm;
}

TermOrder parse_order(const Options& o, std::size_t n) {
    auto perm = parse_perm(o.tiebreak, n);
    const std::string& kind = o.order.at(0);
    if (kind == "lex" && o.order.size() == 1) return TermOrder::lex(n, perm);
    if (kind == "grevlex" && o.order.size() == 1) return TermOrder::grevlex(n, perm);
    if (kind == "weight" && o.order.size() == 2) {
        std::vector<std::int64_t> w;
        for (long x : parse_int_list(o.order[1])) w.push_back(x);
        if (w.size() != n) fail(ErrorKind::input, "--order weight needs one weight per variable");
        return TermOrder::weight(w, perm);
    }
    fail(ErrorKind::input, "--order is lex, grevlex or weight <w1,...,wn>");
}

UgbOptions parse_ugb(const std::string& text) {
    UgbOptions u;
    if (text == "exhaustive") return u;
    if (text.rfind("sampled:", 0) == 0) {
        auto k = parse_int_list(text.substr(8));
        if (k.size() != 1 || k[0] < 1) fail(ErrorKind::input, "--ugb sampled:K needs K >= 1");
        u.exhaustive = false;
        u.samples = static_cast<std::size_t>(k[0]);
        return u;
    }
    fail(ErrorKind::input, "--ugb is exhaustive or sampled:K");
}

Json binomial_list(std::vector<LatticeBinomial> v, const std::vector<std::string>& labels) {
    for (auto& u : v) u = u.sign_normalized();
    std::sort(v.begin(), v.end(), degree_lex_less);
    Json out = Json::array();
    for (const auto& u : v) out.push_back(binomial_to_string(u, labels));
    return out;
}

long max_degree(const std::vector<LatticeBinomial>& v) {
    long m = 0;
    for (const auto& u : v) m = std::max(m, u.degree());
    return m;
}

Json vector_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

Json polynomial_json(const RationalPolynomial& p) {
    Json c = Json::array();
    for (const auto& q : p.coefficients()) c.push_back(to_string(q));
    return {{"coefficients", c}, {"text", p.to_string()}};
}

Json integers_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json set_report(const std::vector<LatticeBinomial>& v, const Configuration& a) {
    return {{"count", v.size()}, {"maxdeg", max_degree(v)}, {"elements", binomial_list(v, a.labels())}};
}

std::string render_list(const Json& list) {
    std::string s;
    for (const auto& x : list) s += "  " + x.get<std::string>() + "\n";
    return s;
}

std::string circuit_text(const std::optional<LatticeBinomial>& c, const Configuration& a) {
    return c ? binomial_to_string(*c, a.labels()) : "none";
}

Json semigroup_json(const SemigroupReport& r) {
    Json hb = Json::array();
    for (const auto& h : r.hilbert_basis) hb.push_back(vector_json(h));
    return {{"normal", r.normal},
            {"smooth", r.smooth},
            {"hilbert_basis", hb},
            {"witness", r.witness ? vector_json(*r.witness) : Json(nullptr)}};
}

/// The shared normality report. For graded A, "normal" is normality of Y_A
/// (vertex charts) and "projectively_normal" is normality of A itself; for
/// ungraded A only the affine notions apply.
Json normality_report(const Configuration& a) {
    Json j;
    j["pointed"] = a.is_pointed();
    const bool graded = grading(a).has_value();
    const UnimodularReport u = is_unimodular(a);
    const HereditaryReport h = is_hereditarily_normal(a);
    if (!a.is_pointed()) {
        j["normal"] = nullptr;
        j["projectively_normal"] = nullptr;
        j["smooth"] = nullptr;
        j["hilbert_basis"] = nullptr;
        j["witness"] = nullptr;
    } else {
        SemigroupReport s = is_normal(a);
        Json hb = Json::array();
        for (const auto& x : s.hilbert_basis) hb.push_back(vector_json(x));
        if (graded) {
            ProjectiveReport p = is_normal_projective(a);
            j["normal"] = p.normal;
            j["projectively_normal"] = s.normal;
            j["smooth"] = p.smooth;
        } else {
            j["normal"] = s.normal;
            j["projectively_normal"] = nullptr;
            j["smooth"] = s.smooth;
        }
        j["hilbert_basis"] = hb;
        j["witness"] = s.witness ? vector_json(*s.witness) : Json(nullptr);
    }
    j["unimodular"] = u.unimodular;
    j["hereditarily_normal"] = h.hereditarily_normal;
    j["graded"] = graded;
    j["violating_circuit"] = h.violating_circuit ? Json(binomial_to_string(*h.violating_circuit, a.labels()))
                                                 : (u.violating_circuit ? Json(binomial_to_string(*u.violating_circuit, a.labels()))
                                                                        : Json(nullptr));
    return j;
}

std::string yes_no(const Json& b) {
    if (b.is_null()) return "n/a";
    return b.get<bool>() ? "yes" : "no";
}

struct Result {
    Json json;
    std::string text;
    int code = ok;
};

Result run_verify(const std::vector<std::string>& specs) {
    Result r;
    r.json["entries"] = Json::array();
    std::size_t failures = 0, total = 0;
    for (const auto& spec : specs) {
        GalleryEntry e = make_entry(spec);
        Json entry{{"spec", spec}, {"description", e.description}, {"facts", Json::array()}, {"notes", e.notes}};
        for (const auto& f : e.facts) {
            ++total;
            FactOutcome o;
            try {
                o = f.check(e.config);
            } catch (const ToricError& err) {
                o.ok = false;
                o.observed = std::string("error: ") + err.what();
            }
            if (!o.ok) ++failures;
            entry["facts"].push_back({{"statement", f.statement},
                                      {"operation", f.operation},
                                      {"ok", o.ok},
                                      {"expected", o.expected},
                                      {"observed", o.observed}});
            r.text += std::string(o.ok ? "PASS " : "FAIL ") + spec + " [" + f.operation + "] " + f.statement;
            if (!o.ok) r.text += "\n     expected: " + o.expected + "\n     observed: " + o.observed;
            r.text += "\n";
        }
        for (const auto& n : e.notes) r.text += "NOTE " + spec + ": " + n + "\n";
        r.json["entries"].push_back(entry);
    }
    r.json["facts"] = total;
    r.json["failures"] = failures;
    r.text += std::to_string(total - failures) + "/" + std::to_string(total) + " facts pass\n";
    if (failures) r.code = fact_mismatch;
    return r;
}

Result dispatch(const Options& o) {
    const std::string& cmd = o.command;
    Result r;
    auto need_inputs = [&](std::size_t k) {
        if (o.inputs.size() != k)
            fail(ErrorKind::input, cmd + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };

    if (cmd == "gallery") {
        need_inputs(0);
        r.json = Json::array();
        for (const auto& spec : gallery_specs()) {
            GalleryEntry e = make_entry(spec);
            r.json.push_back({{"spec", spec}, {"description", e.description}, {"facts", e.facts.size()}, {"heavy", e.heavy}});
            r.text += spec + std::string(std::max<std::size_t>(2, 28 - spec.size()), ' ') + e.description + " (" +
                      std::to_string(e.facts.size()) + " facts" + (e.heavy ? ", slow" : "") + ")\n";
        }
        return r;
    }
    if (cmd == "verify") {
        need_inputs(1);
        return run_verify(o.inputs[0] == "all" ? gallery_specs() : std::vector<std::string>{o.inputs[0]});
    }
    if (cmd == "normalfan-eq") {
        need_inputs(2);
        Configuration a = load(o.inputs[0]), b = load(o.inputs[1]);
        bool eq = normal_fan_equal(convex_hull(a), convex_hull(b));
        r.json = {{"equal", eq}};
        r.text = std::string(eq ? "equal" : "different") + " normal fans\n";
        return r;
    }

    need_inputs(1);
    const Configuration a = load(o.inputs[0]);
    const auto& labels = a.labels();

    if (cmd == "kernel") {
        Sublattice k = kernel_lattice(a);
        Json basis = Json::array();
        for (std::size_t i = 0; i < k.rank(); ++i) basis.push_back(vector_json(k.basis().row_vector(i)));
        r.json = {{"d", a.dim()},       {"n", a.size()},          {"rank", a.rank()},
                  {"codim", k.rank()},  {"pointed", a.is_pointed()}, {"graded", grading(a).has_value()},
                  {"basis", basis}};
        r.text = "rank " + std::to_string(a.rank()) + ", kernel rank " + std::to_string(k.rank()) + "\n";
        for (const auto& b : basis) r.text += "  " + b.dump() + "\n";
    } else if (cmd == "ideal") {
        TermOrder order = parse_order(o, a.size());
        BinomialBasis gb = toric_ideal(a, order);
        Json el = Json::array();
        for (const auto& b : gb.elements) el.push_back(binomial_to_string(b.head, b.tail, labels));
        r.json = {{"order", order.describe()}, {"count", gb.size()}, {"maxdeg", gb.max_degree()}, {"elements", el}};
        r.text = "reduced Groebner basis (" + order.describe() + "), " + std::to_string(gb.size()) + " elements\n" +
                 render_list(el);
    } else if (cmd == "mingen") {
        auto g = minimal_generators(a);
        r.json = set_report(g, a);
        std::map<std::string, std::size_t> degs;
        for (const auto& u : g) ++degs[std::to_string(u.degree())];
        r.json["degrees"] = degs;
        r.text = std::to_string(g.size()) + " minimal generators\n" + render_list(r.json["elements"]);
    } else if (cmd == "circuits") {
        CircuitSet cs = circuits(a);
        Json el = Json::array();
        for (const auto& c : cs.elements)
            el.push_back({{"binomial", binomial_to_string(c.circuit, labels)},
                          {"degree", c.degree},
                          {"index", c.index.get_str()},
                          {"true_degree", c.true_degree.get_str()}});
        r.json = {{"count", cs.elements.size()}, {"maxdeg", cs.max_degree()}, {"elements", el}};
        r.text = std::to_string(cs.elements.size()) + " circuits\n";
        for (const auto& c : cs.elements)
            r.text += "  " + binomial_to_string(c.circuit, labels) + "   (degree " + std::to_string(c.degree) + ", index " +
                      c.index.get_str() + ", true degree " + c.true_degree.get_str() + ")\n";
    } else if (cmd == "graver") {
        auto g = graver(a);
        r.json = set_report(g, a);
        r.text = std::to_string(g.size()) + " Graver basis elements\n" + render_list(r.json["elements"]);
    } else if (cmd == "ugb") {
        UgbOptions u = parse_ugb(o.ugb);
        UniversalGB res = universal_gb(a, u);
        r.json = set_report(res.elements, a);
        r.json["mode"] = o.ugb;
        r.json["exhaustive"] = res.exhaustive;
        r.json["bases"] = res.num_bases;
        r.text = std::to_string(res.elements.size()) + " elements from " + std::to_string(res.num_bases) +
                 " reduced bases" + (res.exhaustive ? "" : " (sampled: a subset of the universal basis)") + "\n" +
                 render_list(r.json["elements"]);
    } else if (cmd == "lawrence") {
        Configuration l = lawrence(a);
        r.json = {{"matrix", format_configuration(l)}};
        r.text = format_configuration(l);
    } else if (cmd == "degree") {
        Integer v = normalized_volume(a);
        r.json = {{"degree", v.get_str()}, {"dim", convex_hull(a).dim}};
        r.text = v.get_str() + "\n";
    } else if (cmd == "ehrhart") {
        long smax = o.smax >= 0 ? o.smax : static_cast<long>(a.rank()) + 3;
        EhrhartResult e = ehrhart_polynomial(a, smax);
        r.json = {{"lattice", polynomial_json(e.lattice_polynomial)},
                  {"ambient", polynomial_json(e.ambient_polynomial)},
                  {"lattice_counts", integers_json(e.lattice_counts)},
                  {"ambient_counts", integers_json(e.ambient_counts)},
                  {"lattices_differ", !(e.lattice_polynomial == e.ambient_polynomial)}};
        r.text = "E(s) in ZA:  " + e.lattice_polynomial.to_string() + "\nE(s) in Z^d: " + e.ambient_polynomial.to_string() + "\n";
    } else if (cmd == "hilbert") {
        long smax = o.smax >= 0 ? o.smax : 10;
        RationalPolynomial hp = hilbert_polynomial(a);
        auto hf = hilbert_function(a, smax);
        r.json = {{"polynomial", polynomial_json(hp)}, {"function", integers_json(hf)}};
        r.text = "H(s) = " + hp.to_string() + "\nHF:";
        for (const auto& x : hf) r.text += " " + x.get_str();
        r.text += "\n";
    } else if (cmd == "normal") {
        r.json = normality_report(a);
        r.text = "normal: " + yes_no(r.json["normal"]) + "\nprojectively normal: " + yes_no(r.json["projectively_normal"]) +
                 "\nsmooth: " + yes_no(r.json["smooth"]) + "\nunimodular: " + yes_no(r.json["unimodular"]) +
                 "\nhereditarily normal: " + yes_no(r.json["hereditarily_normal"]) + "\n";
        if (!r.json["hilbert_basis"].is_null()) r.text += "Hilbert basis: " + r.json["hilbert_basis"].dump() + "\n";
        if (!r.json["witness"].is_null()) r.text += "witness: " + r.json["witness"].dump() + "\n";
    } else if (cmd == "smooth") {
        if (grading(a)) {
            ProjectiveReport p = is_normal_projective(a);
            Json charts = Json::array();
            for (const auto& c : p.charts)
                charts.push_back({{"vertex", labels[c.vertex]}, {"report", semigroup_json(c.report)}});
            r.json = {{"projective", true}, {"smooth", p.smooth}, {"normal", p.normal}, {"charts", charts}};
        } else {
            SemigroupReport s = is_normal(a);
            r.json = {{"projective", false}, {"smooth", s.smooth}, {"normal", s.normal}, {"report", semigroup_json(s)}};
        }
        r.text = std::string(r.json["smooth"].get<bool>() ? "smooth" : "not smooth") +
                 (r.json["projective"].get<bool>() ? " (projective, all vertex charts)\n" : " (affine)\n");
    } else if (cmd == "unimodular") {
        UnimodularReport u = is_unimodular(a);
        r.json = {{"unimodular", u.unimodular},
                  {"violating_circuit", u.violating_circuit ? Json(circuit_text(u.violating_circuit, a)) : Json(nullptr)},
                  {"triangulations_checked", u.triangulations_checked},
                  {"initial_ideals_checked", u.initial_ideals_checked}};
        r.text = std::string(u.unimodular ? "unimodular" : "not unimodular") +
                 (u.violating_circuit ? ", circuit " + circuit_text(u.violating_circuit, a) : "") + "\n";
    } else if (cmd == "hereditary") {
        HereditaryReport h = is_hereditarily_normal(a);
        r.json = {{"hereditarily_normal", h.hereditarily_normal},
                  {"violating_circuit", h.violating_circuit ? Json(circuit_text(h.violating_circuit, a)) : Json(nullptr)},
                  {"normal", h.normal ? Json(*h.normal) : Json(nullptr)}};
        r.text = std::string(h.hereditarily_normal ? "hereditarily normal" : "not hereditarily normal") +
                 (h.violating_circuit ? ", circuit " + circuit_text(h.violating_circuit, a) : "") + "\n";
    } else if (cmd == "faces") {
        Polytope p = convex_hull(a);
        FacePoset fp = face_poset(p);
        Json verts = Json::array(), facets = Json::array();
        for (auto v : p.vertices) verts.push_back(labels[v]);
        for (const auto& f : p.facets) {
            Json pts = Json::array();
            for (auto j : f.points) pts.push_back(labels[j]);
            facets.push_back({{"normal", vector_json(f.normal)}, {"offset", f.offset.get_str()}, {"points", pts}});
        }
        r.json = {{"dim", p.dim}, {"f_vector", fp.f_vector()}, {"vertices", verts}, {"facets", facets}};
        r.text = "dim " + std::to_string(p.dim) + ", f-vector " + Json(fp.f_vector()).dump() + "\nvertices " + verts.dump() + "\n";
    } else if (cmd == "bounds") {
        DegreeBoundReport b = degree_bound_report(a, parse_ugb(o.ugb));
        r.json = {{"maxdeg_circuits", b.maxdeg_circuits},
                  {"maxdeg_ugb", b.maxdeg_ugb ? Json(*b.maxdeg_ugb) : Json(nullptr)},
                  {"maxdeg_graver", b.maxdeg_graver},
                  {"degree", b.degree.get_str()},
                  {"codim", b.codim},
                  {"max_true_degree", b.max_true_degree.get_str()},
                  {"checks",
                   {{"eq44", bound_status_name(b.eq44)},
                    {"eq45", bound_status_name(b.eq45)},
                    {"lemma46", bound_status_name(b.lemma46)},
                    {"conj48", bound_status_name(b.conj48)}}},
                  {"graver_exceeds_circuits", b.maxdeg_graver > b.maxdeg_circuits},
                  {"true_degree_bounded", b.true_degree_bounded}};
        r.text = r.json.dump(2) + "\n";
    } else if (cmd == "triangulate") {
        std::vector<Integer> h(a.size());
        if (!o.heights.empty()) {
            auto v = parse_int_list(o.heights);
            if (v.size() != a.size()) fail(ErrorKind::input, "--heights needs one value per column");
            for (std::size_t i = 0; i < v.size(); ++i) h[i] = v[i];
        } else {
            std::mt19937_64 rng(1);
            std::uniform_int_distribution<long> dist(0, 1L << 20);
            for (auto& x : h) x = dist(rng);
        }
        Triangulation t = regular_triangulation(a, h);
        Json simplices = Json::array();
        for (std::size_t i = 0; i < t.simplices.size(); ++i)
            simplices.push_back({{"columns", t.simplices[i]}, {"volume", t.volumes[i].get_str()}});
        r.json = {{"simplices", simplices},
                  {"total_volume", t.total_volume().get_str()},
                  {"unimodular", t.unimodular()},
                  {"perturbed", t.perturbed}};
        r.text = std::to_string(t.simplices.size()) + " simplices, volume " + t.total_volume().get_str() +
                 (t.unimodular() ? ", unimodular" : "") + "\n";
    } else if (cmd == "radical") {
        if (o.binomial.empty()) fail(ErrorKind::input, "radical needs --binomial \"x^u - x^v\"");
        LatticeBinomial b = parse_binomial(o.binomial, labels);
        if (!b.in_kernel_of(a)) fail(ErrorKind::input, "the binomial is not in I_A");
        auto c = circuits(a).binomials();
        RadicalVerdict v = radical_membership_bounded(b, c, o.kmax);
        r.json = {{"binomial", binomial_to_string(b, labels)},
                  {"member", v.member},
                  {"power", v.member ? Json(v.power) : Json(nullptr)},
                  {"kmax", o.kmax}};
        r.text = v.member ? "power " + std::to_string(v.power) + " lies in the circuit ideal\n"
                          : "inconclusive up to power " + std::to_string(o.kmax) + "\n";
    } else {
        fail(ErrorKind::input, "unknown command '" + cmd + "'");
    }
    return r;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::cap_exceeded:
        case ErrorKind::instability:
        case ErrorKind::overflow:
            return cap_exceeded;
        case ErrorKind::internal:
            return internal_error;
        default:
            return input_error;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Toric ideals, Groebner bases and polyhedral invariants of integer configurations"};
    app.add_option("command", o.command,
                   "kernel ideal mingen circuits graver ugb lawrence degree ehrhart hilbert normal smooth "
                   "unimodular hereditary faces normalfan-eq bounds gallery verify triangulate radical")
        ->required();
    app.add_option("inputs", o.inputs, "matrix file(s) or gallery spec(s) such as birkhoff:4");
    app.add_option("--order", o.order, "lex | grevlex | weight <w1,...,wn>")->expected(1, 2);
    app.add_option("--tiebreak", o.tiebreak, "variable priority 1..n, e.g. 3,1,2");
    app.add_option("--ugb", o.ugb, "exhaustive | sampled:K");
    app.add_option("--smax", o.smax, "largest dilation / degree evaluated");
    app.add_option("--kmax", o.kmax, "largest power tried for radical membership");
    app.add_option("--heights", o.heights, "lifting heights for triangulate");
    app.add_option("--binomial", o.binomial, "binomial for radical, e.g. \"x1*x4 - x2*x3\"");
    app.add_flag("--json", o.json, "machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return input_error;
    }

    try {
        Result r = dispatch(o);
        if (o.json)
            out << r.json.dump(2) << "\n";
        else
            out << r.text;
        return r.code;
    } catch (const ToricError& e) {
        int code = exit_code_for(e.kind());
        if (o.json)
            out << Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}, {"exit_code", code}}.dump(2) << "\n";
        else
            err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return code;
    }
}

}  // namespace toric::cli
