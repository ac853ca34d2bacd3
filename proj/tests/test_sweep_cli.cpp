#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hookbound/certificate.hpp"
#include "hookbound/cli.hpp"
#include "hookbound/errors.hpp"
#include "hookbound/sweep.hpp"

using namespace hookbound;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hookbound");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

GrowthRow row(int n, const std::string& verdict) {
    GrowthRow r;
    r.n = n;
    r.verdict = verdict;
    return r;
}

}  // namespace

TEST_CASE("family names") {
    CHECK(parse_family("balanced") == Family::Balanced);
    CHECK(parse_family("sample") == Family::Sample);
    CHECK(to_string(Family::Staircase) == "staircase");
    CHECK_THROWS_AS(parse_family("square"), ParseError);
}

TEST_CASE("empirical n0") {
    CHECK(empirical_n0({row(1, "PASS"), row(2, "FAIL"), row(3, "PASS"), row(4, "PASS")}) == 3);
    CHECK(empirical_n0({row(1, "PASS"), row(2, "PASS")}) == 1);
    CHECK_FALSE(empirical_n0({row(1, "PASS"), row(2, "FAIL")}).has_value());
    CHECK(empirical_n0({row(5, "HYPOTHESIS"), row(6, "PASS")}) == 6);
    CHECK_FALSE(empirical_n0({}).has_value());
}

TEST_CASE("balanced sweep") {
    SweepOptions opt;
    opt.n_from = 1;
    opt.n_to = 60;
    const auto report = run_sweep(opt);
    REQUIRE(report.rows.size() == 60);
    for (const auto& r : report.rows) {
        if (r.n >= 7) CHECK(r.verdict == "PASS");
        CHECK(r.log_beta == doctest::Approx(std::log(1.5)));
    }
    CHECK(report.rows[3].verdict == "FAIL");  // n = 4: f(2,2) = 2 < (3/2)^4
    CHECK(report.n0 == 7);

    const std::string csv = to_csv(report);
    CHECK(csv.rfind("n,partition,delta,class,log_f_per_n,log_beta,bound_log_per_n,verdict,margin\n", 0) == 0);
    CHECK(csv.find("\n4,\"2,2\",2,") != std::string::npos);
    const Json j = to_json(report);
    CHECK(j["rows"].size() == 60);
    CHECK(j["n0"] == 7);
}

TEST_CASE("enumerate sweep is capped") {
    SweepOptions opt;
    opt.family = Family::Enumerate;
    opt.n_from = 10;
    opt.n_to = 41;
    CHECK_THROWS_AS(run_sweep(opt), DomainError);
    opt.n_to = 12;
    const auto report = run_sweep(opt);
    CHECK(report.rows.size() == 18 + 19 + 39);
}

TEST_CASE("sampled sweeps are deterministic in the seed") {
    SweepOptions opt;
    opt.family = Family::Sample;
    opt.n_from = 30;
    opt.n_to = 40;
    opt.samples = 3;
    opt.seed = 11;
    const std::string a = to_csv(run_sweep(opt));
    const std::string b = to_csv(run_sweep(opt));
    CHECK(a == b);
    opt.seed = 12;
    CHECK(to_csv(run_sweep(opt)) != a);
}

TEST_CASE("cli degree") {
    const auto r = run({"degree", "3,3"});
    CHECK(r.code == exit_code::kPass);
    CHECK(r.out.rfind("5\n", 0) == 0);
    CHECK(run({"degree", "1,2"}).code == exit_code::kUsage);
    CHECK(run({"degree"}).code == exit_code::kUsage);
    CHECK(run({"nonsense"}).code == exit_code::kUsage);
}

TEST_CASE("cli certify exit codes") {
    CHECK(run({"certify", "rectangle", "--a", "2", "--b", "2"}).code == exit_code::kPass);
    CHECK(run({"certify", "strip", "2,2", "--k", "2", "--l", "0", "--alpha", "2"}).code ==
          exit_code::kFail);
    CHECK(run({"certify", "strip", "9,6,4,2,2,1", "--k", "4", "--l", "3", "--alpha", "1"}).code ==
          exit_code::kHypothesis);
    CHECK(run({"certify", "strict", "2,1", "--alpha", "3/2"}).code == exit_code::kHypothesis);
    CHECK(run({"certify", "bogus", "2,1"}).code == exit_code::kUsage);
    CHECK(run({"certify", "strip", "9,6,4,2,2,1", "--k", "4", "--l", "3", "--alpha", "x"}).code ==
          exit_code::kUsage);
}

TEST_CASE("cli certificates re-validate on re-read") {
    const auto r = run({"certify", "strip", "9,6,4,2,2,1", "--k", "4", "--l", "3", "--alpha", "3/2"});
    REQUIRE(r.code == exit_code::kPass);
    const Json j = Json::parse(r.out);
    CHECK(revalidate(j).empty());
    CHECK(j["t"] == Json::array({6, 5, 3, 6, 3, 1, 0}));
    CHECK(j["cells_b"] == Json::array({Json::array({5, 1}), Json::array({5, 2}), Json::array({6, 1})}));
    CHECK(to_json(certificate_from_json(j)) == j);

    const auto path = std::filesystem::temp_directory_path() / "hookbound_cert_test.json";
    CHECK(run({"certify", "theorem", "10,10,10,10,10,10,10,10,10,10", "--alpha", "2", "--beta",
               "3/2", "--out", path.string()})
              .code == exit_code::kPass);
    std::ifstream in(path);
    const Json saved = Json::parse(in);
    CHECK(saved["class"] == "M1");
    CHECK(revalidate(saved).empty());
    std::filesystem::remove(path);
}

TEST_CASE("cli typing and sweep") {
    std::string stair;
    for (int x = 20; x >= 11; --x) stair += (stair.empty() ? "" : ",") + std::to_string(x);
    const auto grid = run({"typing", stair, "--alpha", "11/10"});
    CHECK(grid.code == exit_code::kPass);
    CHECK_FALSE(grid.out.empty());
    const auto js = run({"typing", stair, "--alpha", "11/10", "--format", "json"});
    CHECK(js.code == exit_code::kPass);
    CHECK(Json::parse(js.out)["type_counts"] == Json::array({152, 0, 0, 3}));

    const std::vector<std::string> args{"sweep", "sample", "--n-from", "20", "--n-to", "24",
                                        "--samples", "2", "--seed", "7"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == exit_code::kPass);
    CHECK(a.out == b.out);
    CHECK(a.err.find("n0: ") != std::string::npos);
}

TEST_CASE("cli oracle") {
    const auto ok = run({"oracle", "--max-n", "6"});
    CHECK(ok.code == exit_code::kPass);
    CHECK(ok.out.find("sum-of-squares: PASS") != std::string::npos);
    CHECK(run({"oracle", "--max-n", "13"}).code == exit_code::kUsage);
}
