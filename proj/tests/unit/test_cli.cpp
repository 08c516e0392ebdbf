#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fstirling/cli.hpp"
#include "fstirling/verify.hpp"
#include "../known_issues.hpp"
#include "support.hpp"

using namespace fstirling;
using fstirling::testing::data_path;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Sets an environment variable for one scope.
class ScopedEnv
{
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST_SUITE("verify")
{
    TEST_CASE("registry")
    {
        const auto& names = suite_names();
        CHECK(names.size() == 17);
        CHECK(is_suite("prop1"));
        CHECK_FALSE(is_suite("all"));
        const VerifyConfig c{FtSetting(parse_fspec("linear:1,0"), parse_t("1")), 6, Exec::serial, false};
        CHECK_THROWS_AS(run_suite("nope", c), std::invalid_argument);
        for (const auto& name : names) {
            CHECK(run_suite(name, c).identity == name);
        }
    }

    TEST_CASE("serial and parallel suites produce identical reports")
    {
        for (const char* t : {"1", "symbolic"}) {
            VerifyConfig c{FtSetting(parse_fspec("linear:2,1"), parse_t(t)), 6, Exec::serial, false};
            for (const auto& name : suite_names()) {
                c.exec = Exec::serial;
                const std::string a = run_suite(name, c).to_json().dump();
                c.exec = Exec::parallel;
                REQUIRE(a == run_suite(name, c).to_json().dump());
            }
        }
    }

    TEST_CASE("prop1 failures match the known-issues record across the matrix")
    {
        const auto known = fstirling::testing::load_known_issues(data_path("known_issues.json"));
        CHECK(known.suite == "prop1");
        for (const auto& [f, t] : fstirling::testing::config_matrix()) {
            INFO(f << " t=" << t);
            const std::string dsl = fstirling::testing::resolve_fspec(f, FSTIRLING_TEST_DATA);
            const VerifyConfig c{FtSetting(parse_fspec(dsl), parse_t(t)), 10, Exec::parallel, false};
            std::set<fstirling::testing::KnownIssues::CellKey> observed;
            for (const auto& cell : run_suite("prop1", c).cells) {
                if (!cell.pass) {
                    observed.insert({cell.indices, cell.residual().to_string()});
                }
            }
            REQUIRE(known.cells.count({f, t}) == 1);
            CHECK(observed == known.cells.at({f, t}));
            CHECK(observed.size() == 12);
        }
        // the classical row of the record, spelled out
        CHECK(known.contains("linear:1,0", "1", {{1, 2}, "-1/2"}));
        CHECK(known.contains("linear:1,0", "1", {{3, 6}, "-35/48"}));
    }

    TEST_CASE("every other suite is green at (2n+1, 1)")
    {
        const VerifyConfig c{FtSetting(parse_fspec("linear:2,1"), parse_t("1")), 8, Exec::parallel, false};
        for (const auto& name : suite_names()) {
            if (name == "s2-geom" || name == "prop1") {
                continue;
            }
            INFO(name);
            CHECK(run_suite(name, c).passed());
        }
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("triangle csv")
    {
        const Run r = cli_run({"triangle", "--kind", "s1", "--f", "linear:1,0", "--t", "1", "--rows", "6", "--format",
                               "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\n4,0,6,11,6,1,,\n") != std::string::npos);
        const Run s2 = cli_run({"triangle", "--kind", "s2", "--rows", "3"});
        CHECK(s2.code == 0);
        const auto j = nlohmann::json::parse(s2.out);
        CHECK(j["kind"] == "s2");
        CHECK(j["rows"].size() == 4);
    }

    TEST_CASE("harmonic routes")
    {
        for (const char* m : {"direct", "ftilde", "roots", "subst"}) {
            const Run r = cli_run({"harmonic", "--f", "linear:1,0", "--t", "1", "--p", "2", "--n", "3", "--method", m});
            CHECK(r.code == 0);
            CHECK(r.out == "49/36\n");
        }
        const Run d = cli_run({"harmonic", "--p", "2", "--n", "3", "--decimal", "4"});
        CHECK(d.out == "1.3611\n");
        const Run j = cli_run({"harmonic", "--t", "symbolic", "--p", "2", "--n", "2", "--method", "subst", "--format", "json"});
        CHECK(j.code == 0);
        CHECK(nlohmann::json::parse(j.out)["value"] == "u^2+1/4*u^4");
        CHECK(cli_run({"harmonic", "--p", "4", "--method", "roots"}).code == cli::kUsage);
    }

    TEST_CASE("convpoly and eulersum")
    {
        CHECK(cli_run({"convpoly", "--n", "1", "--x", "5"}).out == "1/2\n");
        CHECK(cli_run({"convpoly", "--variant", "sigma-tilde", "--n", "0", "--x", "4", "--format", "csv"}).out ==
              "variant,n,x,value\nsigma-tilde,0,4,1/4\n");
        const Run fit = cli_run({"convpoly", "--variant", "fit", "--x", "7", "--n", "6"});
        CHECK(fit.code == 0);
        CHECK(nlohmann::json::parse(fit.out)["series"]["order"] == 6);
        CHECK(cli_run({"convpoly", "--variant", "fit", "--x", "4", "--n", "6"}).code == cli::kUsage);
        CHECK(cli_run({"convpoly", "--n", "1"}).code == cli::kUsage);

        CHECK(cli_run({"eulersum", "--r", "2", "--terms", "2"}).out == "21/16\n");
        CHECK(cli_run({"eulersum", "--mode", "fzeta", "--r", "2", "--terms", "3", "--exec", "serial"}).out ==
              "49/36\n");
        CHECK(cli_run({"eulersum", "--f", "qpow:1"}).code == cli::kUsage);
    }

    TEST_CASE("verify exit codes")
    {
        CHECK(cli_run({"verify", "--suite", "prop2", "--f", "linear:2,1", "--max-n", "8"}).code == cli::kOk);
        const Run all = cli_run({"verify", "--suite", "all", "--f", "linear:2,1", "--t", "1", "--max-n", "8"});
        CHECK(all.code == cli::kCheckFailed);
        const auto j = nlohmann::json::parse(all.out);
        CHECK(j["summary"]["failed_suites"] == nlohmann::json::array({"s2-geom", "prop1"}));
        CHECK(j["suites"].size() == 17);
        CHECK(all.err.find("prop1: 18 cells, 12 failed") != std::string::npos);

        const Run csv = cli_run({"verify", "--suite", "euler-identity", "--max-n", "3", "--format", "csv"});
        CHECK(csv.code == 0);
        CHECK(csv.out.rfind("suite,indices,lhs,rhs,residual,pass\neuler-identity,3;1,1,1,0,true\n", 0) == 0);
    }

    TEST_CASE("usage errors exit 2")
    {
        CHECK(cli_run({}).code == cli::kUsage);
        CHECK(cli_run({"frobnicate"}).code == cli::kUsage);
        CHECK(cli_run({"triangle", "--bogus"}).code == cli::kUsage);
        CHECK(cli_run({"triangle", "--f", "linear:1"}).code == cli::kUsage);
        CHECK(cli_run({"triangle", "--t", "0"}).code == cli::kUsage);
        CHECK(cli_run({"triangle", "--format", "xml"}).code == cli::kUsage);
        CHECK(cli_run({"verify", "--suite", "nope"}).code == cli::kUsage);
        CHECK(cli_run({"harmonic", "--f", "linear:1,-3", "--n", "4"}).code == cli::kUsage);
        CHECK(cli_run({"--help"}).code == cli::kOk);
    }

    TEST_CASE("max-n bounds and the oracle cap")
    {
        const Run cap = cli_run({"verify", "--suite", "s1-oracle", "--max-n", "16"});
        CHECK(cap.code == cli::kUsage);
        CHECK(cap.err.find("capped at n <= 15") != std::string::npos);
        CHECK(cli_run({"verify", "--suite", "euler-identity", "--max-n", "25"}).code == cli::kUsage);
        CHECK(cli_run({"verify", "--suite", "euler-identity", "--max-n", "0"}).code == cli::kUsage);
        {
            ScopedEnv env("FSTIRLING_MAX_N", "30");
            const Run soak = cli_run({"verify", "--suite", "euler-identity", "--max-n", "25"});
            CHECK(soak.code == cli::kOk);
            CHECK(nlohmann::json::parse(soak.out)["summary"]["cells"] == 4 * 50);
            CHECK(cli_run({"verify", "--suite", "s1-oracle", "--max-n", "16"}).code == cli::kUsage);
        }
        {
            ScopedEnv env("FSTIRLING_MAX_N", "many");
            CHECK(cli_run({"verify", "--suite", "prop2"}).code == cli::kUsage);
        }
    }

    TEST_CASE("output is deterministic and can go to a file")
    {
        const std::vector<std::string> args{"verify", "--suite", "all", "--f", "linear:1,0", "--t", "symbolic",
                                            "--max-n", "6"};
        CHECK(cli_run(args).out == cli_run(args).out);

        const auto path = std::filesystem::temp_directory_path() / "fstirling_cli_out.csv";
        const Run r = cli_run({"triangle", "--rows", "3", "--format", "csv", "--out", path.string()});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == "n,c0,c1,c2,c3\n0,1,,,\n1,0,1,,\n2,0,1,1,\n3,0,2,3,1\n");
        std::filesystem::remove(path);
        CHECK(cli_run({"triangle", "--out", "/nonexistent-dir/x.json"}).code == cli::kUsage);
    }
}
