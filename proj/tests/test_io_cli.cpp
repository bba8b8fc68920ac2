#include "cli.hpp"

#include "toric/error.hpp"
#include "toric/gallery.hpp"
#include "toric/binomial_gb.hpp"
#include "toric/io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json cli_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    CliRun r = cli(args);
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return nlohmann::json::parse(r.out);
}

TEST(MatrixFormat, RoundTrip) {
    for (const char* spec : {"twisted_cubic", "segre:1,2", "ex47"}) {
        Configuration a = make_config(spec);
        EXPECT_EQ(parse_configuration(format_configuration(a)), a) << spec;
    }
}

TEST(MatrixFormat, CommentsAndDefaultLabels) {
    Configuration a = parse_configuration("# twisted cubic\n2 4\n3 2 1 0  # first row\n0 1 2 3\n");
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(a.labels(), (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
    Configuration b = parse_configuration("1 2\n1 1\nlabels: a b\n");
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"a", "b"}));
}

TEST(MatrixFormat, ErrorsNameTheLine) {
    for (const char* bad : {"2 3\n1 2 3\n", "2 2\n1 2\n3 x\n", "1 2\n1 2 3\n", "", "1 2\n1 1\nlabels: a\n"}) {
        try {
            parse_configuration(bad);
            FAIL() << "accepted: " << bad;
        } catch (const ToricError& e) {
            EXPECT_EQ(e.kind(), ErrorKind::input);
        }
    }
    try {
        parse_configuration("2 2\n1 2\n3 x\n");
    } catch (const ToricError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(BinomialFormat, ParseAndPrint) {
    std::vector<std::string> labels{"x1", "x2", "x3", "x4"};
    auto u = parse_binomial("x1^2*x4 - x2^3", labels);
    EXPECT_EQ(u.vector(), (ExpVector{2, -3, 0, 1}));
    EXPECT_EQ(binomial_to_string(u, labels), "x1^2*x4 - x2^3");
    EXPECT_EQ(parse_binomial("x1*x2 - 1", labels).vector(), (ExpVector{1, 1, 0, 0}));
    EXPECT_THROW(parse_binomial("x1*x9 - x2", labels), ToricError);
    EXPECT_THROW(parse_binomial("x1 + x2", labels), ToricError);
    EXPECT_EQ(parse_int_list("3,1,2"), (std::vector<long>{3, 1, 2}));
}

TEST(Cli, IdealOfTwistedCubic) {
    auto j = cli_json({"ideal", "twisted_cubic"});
    EXPECT_EQ(j["count"], 3);
    EXPECT_EQ(j["maxdeg"], 2);
    EXPECT_NE(j["order"].get<std::string>().find("grevlex"), std::string::npos);
}

TEST(Cli, OrdersAndTieBreak) {
    auto lex = cli_json({"ideal", "twisted_cubic", "--order", "lex", "--tiebreak", "4,3,2,1"});
    EXPECT_NE(lex["order"].get<std::string>().find("[4,3,2,1]"), std::string::npos);
    auto w = cli_json({"ideal", "twisted_cubic", "--order", "weight", "1,0,0,1"});
    EXPECT_GE(w["count"].get<int>(), 3);
    EXPECT_EQ(cli({"ideal", "twisted_cubic", "--tiebreak", "1,1,2,3"}).code, cli::input_error);
    EXPECT_EQ(cli({"ideal", "twisted_cubic", "--order", "weight", "1,2"}).code, cli::input_error);
}

TEST(Cli, MatrixFileInput) {
    auto path = std::filesystem::temp_directory_path() / "toric_cli_test.mat";
    std::ofstream(path) << "2 4\n3 2 1 0\n0 1 2 3\n";
    auto j = cli_json({"circuits", path.string()});
    EXPECT_EQ(j["count"], 4);
    EXPECT_EQ(j["maxdeg"], 3);
    std::filesystem::remove(path);
}

TEST(Cli, EmptyKernelIsNotAnError) {
    auto path = std::filesystem::temp_directory_path() / "toric_cli_identity.mat";
    std::ofstream(path) << "2 2\n1 0\n0 1\n";
    EXPECT_EQ(cli_json({"ideal", path.string()})["count"], 0);
    EXPECT_EQ(cli_json({"graver", path.string()})["count"], 0);
    std::filesystem::remove(path);
}

TEST(Cli, NormalReportSchema) {
    auto j = cli_json({"normal", "ex26:4"});
    for (const char* key : {"pointed", "normal", "projectively_normal", "smooth", "unimodular", "hereditarily_normal",
                            "hilbert_basis", "witness"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["normal"], true);
    EXPECT_EQ(j["projectively_normal"], false);
    EXPECT_EQ(j["witness"], nlohmann::json::array({2, 2}));
}

TEST(Cli, BoundsReportSchema) {
    auto j = cli_json({"bounds", "twisted_cubic"});
    EXPECT_EQ(j["maxdeg_circuits"], 3);
    EXPECT_EQ(j["maxdeg_ugb"], 3);
    EXPECT_EQ(j["maxdeg_graver"], 3);
    EXPECT_EQ(j["degree"], "3");
    EXPECT_EQ(j["codim"], 2);
    for (const char* key : {"eq44", "eq45", "lemma46", "conj48"}) EXPECT_EQ(j["checks"][key], "pass") << key;
}

TEST(Cli, DegreeEhrhartHilbertFaces) {
    EXPECT_EQ(cli_json({"degree", "octahedron"})["degree"], "4");
    auto e = cli_json({"ehrhart", "ex26:4"});
    EXPECT_EQ(e["lattice_counts"][1], "5");
    auto h = cli_json({"hilbert", "ex26:4", "--smax", "3"});
    EXPECT_EQ(h["function"].size(), 4u);
    EXPECT_EQ(h["function"][1], "4");
    auto f = cli_json({"faces", "octahedron"});
    EXPECT_EQ(f["f_vector"], nlohmann::json::array({1, 6, 12, 8, 1}));
    EXPECT_EQ(cli_json({"normalfan-eq", "hexagon:1,2,3", "hexagon:2,3,5"})["equal"], true);
}

TEST(Cli, SetsAndLawrence) {
    EXPECT_EQ(cli_json({"graver", "twisted_cubic"})["count"], 5);
    EXPECT_EQ(cli_json({"ugb", "twisted_cubic"})["count"], 5);
    auto s = cli_json({"ugb", "ex26:5", "--ugb", "sampled:3"});
    EXPECT_EQ(s["exhaustive"], false);
    EXPECT_EQ(cli_json({"mingen", "ex26:5"})["degrees"]["4"], 4);
    CliRun l = cli({"lawrence", "twisted_cubic"});
    EXPECT_EQ(l.code, 0);
    EXPECT_EQ(parse_configuration(l.out).size(), 8u);
}

TEST(Cli, TriangulateAndRadical) {
    auto t = cli_json({"triangulate", "segre:1,1", "--heights", "0,0,0,1"});
    EXPECT_EQ(t["total_volume"], "2");
    EXPECT_EQ(t["simplices"].size(), 2u);
    auto r = cli_json({"radical", "twisted_cubic", "--binomial", "x1*x4 - x2*x3", "--kmax", "6"});
    EXPECT_EQ(r["member"], true);
    EXPECT_EQ(cli({"radical", "twisted_cubic", "--binomial", "x1 - x2"}).code, cli::input_error);
}

TEST(Cli, UnimodularAndHereditary) {
    EXPECT_EQ(cli_json({"unimodular", "octahedron"})["unimodular"], true);
    auto h = cli_json({"hereditary", "twisted_cubic"});
    EXPECT_EQ(h["hereditarily_normal"], false);
    EXPECT_TRUE(h["violating_circuit"].is_string());
    EXPECT_EQ(cli_json({"smooth", "segre:1,2"})["smooth"], true);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"nonsense", "twisted_cubic"}).code, cli::input_error);
    EXPECT_EQ(cli({"ideal", "no_such_entry"}).code, cli::input_error);
    EXPECT_EQ(cli({"ideal"}).code, cli::input_error);
    EXPECT_EQ(cli({}).code, cli::input_error);
    EXPECT_EQ(cli({"degree", "graph:1-2,2-3"}).code, cli::ok);
    auto path = std::filesystem::temp_directory_path() / "toric_cli_ungraded.mat";
    std::ofstream(path) << "1 2\n1 2\n";
    auto j = cli_json({"degree", path.string()}, cli::input_error);
    EXPECT_EQ(j["error"], "not-homogeneous");
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"--help"}).code, cli::ok);
}

TEST(Cli, CapExceededExitCode) {
    auto path = std::filesystem::temp_directory_path() / "toric_cli_rank.mat";
    std::ofstream(path) << "7 8\n1 0 0 0 0 0 0 1\n0 1 0 0 0 0 0 1\n0 0 1 0 0 0 0 1\n0 0 0 1 0 0 0 1\n"
                           "0 0 0 0 1 0 0 1\n0 0 0 0 0 1 0 1\n0 0 0 0 0 0 1 1\n";
    EXPECT_EQ(cli({"normal", path.string()}).code, cli::cap_exceeded);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyReportsFacts) {
    CliRun r = cli({"verify", "twisted_cubic"});
    EXPECT_EQ(r.code, cli::ok) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    auto j = cli_json({"verify", "ex26:4"});
    EXPECT_EQ(j["failures"], 0);
    auto g = cli_json({"gallery"});
    EXPECT_EQ(g.size(), gallery_specs().size());
}

}  // namespace
