#include "qbrauer/cli.hpp"
#include "qbrauer/linalg.hpp"
#include "qbrauer/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qbrauer;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("ranges") {
    CHECK(parse_range("3") == std::pair{3, 3});
    CHECK(parse_range("2..4") == std::pair{2, 4});
    CHECK_THROWS(parse_range("4..2"));
    CHECK_THROWS(parse_range("a"));
    CHECK_THROWS(parse_range("2..."));
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "def_2_3", "--n", "2", "--l", "4"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("tau_relation") != std::string::npos);
    CHECK(run({"verify", "--suite", "nosuch"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "def_2_3", "--n", "x"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "def_2_3", "--n", "2", "--l", "13"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "def_2_3", "--q", "1"}).code == kExitPass);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "yang_baxter", "--n", "2..4", "--negative-control", "perturb-r"}).code == kExitFail);
    CHECK(run({"verify", "--suite", "def_2_3", "--n", "2", "--l", "3", "--negative-control", "z-shift"}).code == kExitFail);
    CHECK(run({"verify", "--suite", "def_2_3", "--negative-control", "bogus"}).code == kExitUsage);
}

TEST_CASE("verify output is canonical and parseable") {
    const auto path = temp("qbrauer_cli_report.json");
    auto r = run({"verify", "--suite", "s_shape,yang_baxter", "--n", "2..3", "--l", "2..3", "--format", "json", "--out",
                  path.string()});
    CHECK(r.code == kExitPass);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto reports = reports_from_json(buf.str());
    REQUIRE_FALSE(reports.empty());
    CHECK(reports.front().suite == "yang_baxter");
    // yang_baxter ignores l: one cell per n.
    int yb = 0;
    for (const auto& x : reports) yb += x.suite == "yang_baxter";
    CHECK(yb == 2);
    auto text = run({"export", "report", "--in", path.string()});
    CHECK(text.code == kExitPass);
    CHECK(text.out == to_text(reports));
}

TEST_CASE("build") {
    const auto path = temp("qbrauer_r2.mat");
    CHECK(run({"build", "R", "--n", "2", "--out", path.string()}).code == kExitPass);
    std::ifstream in(path);
    const AnyMatrix m = read_matrix(in);
    CHECK(std::get<PolyMatrix>(m).nonzeros() == 5);
    auto q = run({"build", "Q", "--n", "3"});
    CHECK(std::get<PolyMatrix>(parse_matrix(q.out)).nonzeros() == 9);
    auto s = run({"build", "S", "--n", "2", "--l", "1"});
    CHECK(std::get<PolyMatrix>(parse_matrix(s.out)).rows() == 4);
    auto w = run({"build", "s1 e2", "--n", "2", "--l", "3", "--q", "5/3"});
    CHECK(w.code == kExitPass);
    CHECK(std::holds_alternative<RationalMatrix>(parse_matrix(w.out)));
    CHECK(run({"build", "nosuch", "--n", "2"}).code == kExitUsage);
    CHECK(run({"build", "R", "--n", "9"}).code == kExitUsage);
}

TEST_CASE("dims") {
    auto r = run({"dims", "--n", "3", "--l", "3", "--q", "5/3"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("diagrams 15") != std::string::npos);
    CHECK(r.out.find("algebra 15") != std::string::npos);
    auto two = run({"dims", "--n", "2", "--l", "2", "--q", "5/3"});
    CHECK(two.out == "algebra 3\ncommutant 6\ndiagrams 3\n");
    CHECK(run({"dims", "--n", "2", "--l", "9"}).code == kExitUsage);
    CHECK(run({"dims", "--n", "2", "--l", "2", "--q", "1"}).code == kExitUsage);
}

TEST_CASE("export") {
    auto d = run({"export", "diagrams", "--l", "3"});
    CHECK(d.code == kExitPass);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 15);
    auto c = run({"export", "catalog", "--format", "json"});
    CHECK(c.code == kExitPass);
    const auto dir = temp("qbrauer_mats");
    std::filesystem::remove_all(dir);
    CHECK(run({"export", "matrices", "--n", "2", "--l", "3", "--out", dir.string()}).code == kExitPass);
    CHECK(std::filesystem::exists(dir / "sigma2.mat"));
    CHECK(std::filesystem::exists(dir / "S.mat"));
    CHECK(run({"export", "nothing"}).code == kExitUsage);
}
