#include <doctest.h>

#include "fstirling/stirling.hpp"
#include "support.hpp"

using namespace fstirling;
using fstirling::testing::Gen;
using fstirling::testing::kCases;

namespace {

FtSetting make(const char* f, const char* t)
{
    return FtSetting(parse_fspec(f), parse_t(t));
}

}  // namespace

TEST_SUITE("stirling")
{
    TEST_CASE("frozen first-kind rows")
    {
        const Triangle classic = s1_triangle(make("linear:1,0", "1"), 6);
        const std::vector<LaurentPoly> row4{0, 6, 11, 6, 1};
        CHECK(classic.row(4) == row4);
        CHECK(classic.at(6, 2) == LaurentPoly(274));
        CHECK(classic.at(1, 0) == LaurentPoly(0));
        CHECK(classic.at(0, 0) == LaurentPoly(1));
        CHECK(classic.at(3, 7) == LaurentPoly(0));
        CHECK_THROWS_AS(classic.at(7, 1), std::out_of_range);

        // (x+3)(x+5)
        const Triangle odd = s1_triangle(make("linear:2,1", "1"), 3);
        CHECK(odd.at(3, 1) == LaurentPoly(15));
        CHECK(odd.at(3, 2) == LaurentPoly(8));

        // (x+t^-1)(x+2t^-2)
        const Triangle sym = s1_triangle(make("linear:1,0", "symbolic"), 3);
        CHECK(sym.at(3, 1).to_string() == "2*t^-3");
        CHECK(sym.at(3, 2).to_string() == "2*t^-2+t^-1");

        // (x+q^2)(x+q^3)
        const Triangle q = s1_triangle(make("qpow:1", "1"), 3);
        CHECK(q.at(3, 1).to_string() == "q^5");
        CHECK(q.at(3, 2).to_string() == "q^2+q^3");
    }

    TEST_CASE("csv and json layout")
    {
        const Triangle tri = s1_triangle(make("linear:1,0", "1"), 4);
        const std::string csv = tri.to_csv();
        CHECK(csv.rfind("n,c0,c1,c2,c3,c4\n", 0) == 0);
        CHECK(csv.find("4,0,6,11,6,1\n") != std::string::npos);
        CHECK(csv.find("1,0,1,,,\n") != std::string::npos);
        const auto j = tri.to_json();
        CHECK(j["f"] == "linear:1,0");
        CHECK(j["rows"].size() == 5);
        CHECK(s1_triangle(make("linear:1,0", "2"), 2).to_csv(3).find("0.500") != std::string::npos);
    }

    TEST_CASE("classical recurrence matches the triangle")
    {
        const auto c = classical_stirling1(12);
        const Triangle tri = s1_triangle(make("linear:1,0", "1"), 12);
        for (long n = 0; n <= 12; ++n) {
            for (long k = 0; k <= n; ++k) {
                REQUIRE(tri.at(n, k) == LaurentPoly(to_rational(c[n][k])));
            }
        }
    }

    TEST_CASE("oracle cap")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK_THROWS_AS(s1_entry_oracle(s, kOracleMaxN + 1, 1), std::length_error);
        CHECK_THROWS_AS(s1_oracle_check(s, kOracleMaxN + 1), std::length_error);
        CHECK(s1_entry_oracle(s, 5, 2) == LaurentPoly(50));
    }

    TEST_CASE("recurrence equals subset oracle (property)")
    {
        Gen g(31);
        for (int i = 0; i < kCases; ++i) {
            const FtSetting s = g.setting(10);
            const long n = g.integer(0, 9);
            const long k = g.integer(0, n);
            const Triangle tri = s1_triangle(s, n);
            REQUIRE(tri.at(n, k) == s1_entry_oracle(s, n, k));
        }
    }

    TEST_CASE("serial and parallel oracle sweeps agree")
    {
        for (const char* t : {"1", "3/2", "symbolic"}) {
            const FtSetting s = make("linear:2,1", t);
            const Report a = s1_oracle_check(s, 10, Exec::serial);
            const Report b = s1_oracle_check(s, 10, Exec::parallel);
            CHECK(a.passed());
            CHECK(a.to_json().dump() == b.to_json().dump());
        }
    }

    TEST_CASE("column closed forms")
    {
        CHECK(s1_column_closed_forms(make("linear:2,1", "symbolic"), 8).passed());
        CHECK(s1_column_closed_forms(make("qpow:1", "1"), 8).passed());
    }

    TEST_CASE("second kind as defined")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK(s2_entry(s, 2, 2) == LaurentPoly(0));
        CHECK(s2_entry(s, 0, 0) == LaurentPoly(1));
        CHECK(s2_entry(s, 3, 0) == LaurentPoly(0));
        CHECK(s2_entry(s, 3, 1) == LaurentPoly(1));
        // 2^3/2 - 2*1 = 2
        CHECK(s2_entry(s, 3, 2) == LaurentPoly(2));
    }

    TEST_CASE("geometric transform holds in degree zero and one only")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK(s2_geom_transform_check(s, 5, 0).passed());
        CHECK(s2_geom_transform_check(s, 5, 1).passed());
        const Report r = s2_geom_transform_check(s, 5, 2);
        CHECK_FALSE(r.passed());
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes[0].find("6 of 6") != std::string::npos);
    }

    TEST_CASE("modified second kind")
    {
        const FSpec n = parse_fspec("linear:1,0");
        CHECK(s2star_entry(n, 1, 1) == LaurentPoly(1));
        CHECK(s2star_entry(n, 1, 2) == LaurentPoly(Rational(-3, 4)));
        const Report ogf = s2star_ogf_check(n, 1, 2);
        CHECK(ogf.passed());
        CHECK(ogf.cells.back().lhs == LaurentPoly(Rational(1, 2)));
        CHECK(s2star_ogf_check(parse_fspec("qpow:1"), 3, 8).passed());
        CHECK(s2star_egf_check(n, 2, 8).passed());
    }

    TEST_CASE("modified second kind transforms (property)")
    {
        Gen g(32);
        for (int i = 0; i < kCases; ++i) {
            const FSpec f = g.fspec(8);
            const long k = g.integer(1, 4);
            REQUIRE(s2star_ogf_check(f, k, g.integer(1, 6)).passed());
        }
    }
}
