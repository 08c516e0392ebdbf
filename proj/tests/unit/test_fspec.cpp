#include <doctest.h>

#include "fstirling/factorial.hpp"
#include "fstirling/fspec.hpp"
#include "support.hpp"

using namespace fstirling;
using fstirling::testing::data_path;
using fstirling::testing::Gen;
using fstirling::testing::kCases;

TEST_SUITE("fspec")
{
    TEST_CASE("dsl parsing and evaluation")
    {
        CHECK(parse_fspec("linear:2,1").eval(3) == LaurentPoly(7));
        CHECK(parse_fspec("poly:1,0,1").eval(2) == LaurentPoly(5));
        CHECK(parse_fspec("qpow:1").eval(2) == LaurentPoly::monomial(1, 3, "q"));
        CHECK(parse_fspec("qpow:1/2,0").eval(3) == LaurentPoly(Rational(1, 8)));
        CHECK(parse_fspec("qpow:1").is_symbolic());
        CHECK_FALSE(parse_fspec("qpow:2,1").is_symbolic());

        const FSpec tab = parse_fspec("table:" + data_path("random_table.json"));
        CHECK(tab.table_size() == 12u);
        CHECK(tab.eval(1) == LaurentPoly(Rational(3, 7)));
        CHECK_THROWS_AS(tab.eval(13), std::domain_error);

        CHECK_THROWS_AS(parse_fspec("linear:1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_fspec("cubic:1,2"), std::invalid_argument);
        CHECK_THROWS_AS(parse_fspec("n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_fspec("table:/no/such/file.json"), std::invalid_argument);
        CHECK_THROWS_AS(parse_fspec("linear:1,-2").eval(2), std::domain_error);
        CHECK_THROWS_AS(parse_fspec("linear:1,0").eval(0), std::domain_error);
    }

    TEST_CASE("t parsing and settings")
    {
        CHECK(parse_t("3/2") == LaurentPoly(Rational(3, 2)));
        CHECK(parse_t("symbolic") == LaurentPoly::variable("t"));
        CHECK(render_t(parse_t("symbolic")) == "symbolic");
        CHECK_THROWS_AS(parse_t("0"), std::invalid_argument);
        CHECK_THROWS_AS(FtSetting(parse_fspec("qpow:1"), parse_t("symbolic")), std::invalid_argument);

        const FtSetting s(parse_fspec("linear:1,0"), parse_t("2"));
        CHECK(s.root(3) == LaurentPoly(Rational(3, 8)));
    }

    TEST_CASE("fractional powers of t")
    {
        const FtSetting exact(parse_fspec("linear:1,0"), parse_t("9/4"));
        const RootedT r(exact, 2);
        CHECK_FALSE(r.generic());
        CHECK(r.root(2) == LaurentPoly(Rational(3, 2)));

        const RootedT g(FtSetting(parse_fspec("linear:1,0"), parse_t("3/2")), 6);
        CHECK(g.generic());
        CHECK(g.t() == LaurentPoly::monomial(1, 6, RootedT::kVar));
        CHECK(g.root(3) == LaurentPoly::monomial(1, 2, RootedT::kVar));
        CHECK_THROWS(g.root(4));

        const RootedT sym(FtSetting(parse_fspec("linear:1,0"), parse_t("symbolic")), 2);
        CHECK_FALSE(sym.generic());  // exact substitution t = u^2
        CHECK(sym.t() == LaurentPoly::monomial(1, 2, RootedT::kVar));
    }

    TEST_CASE("render round trip (property)")
    {
        Gen g(21);
        for (int i = 0; i < kCases; ++i) {
            const FSpec s = g.fspec(8);
            const FSpec back = parse_fspec(s.render());
            REQUIRE(back.render() == s.render());
            const long n = g.integer(1, 8);
            REQUIRE(back.eval(n) == s.eval(n));
        }
    }
}

TEST_SUITE("factorial")
{
    TEST_CASE("f-factorials")
    {
        const FSpec f = parse_fspec("linear:2,1");
        CHECK(bang_f(f, 0) == LaurentPoly(1));
        CHECK(bang_f(f, 3) == LaurentPoly(105));
        const FtSetting s(f, parse_t("2"));
        CHECK(bang_ft(s, 3) == LaurentPoly(Rational(105, 64)));
        CHECK(bang_f(parse_fspec("qpow:0"), 3) == LaurentPoly::monomial(1, 6, "q"));
        CHECK(triangular(4) == 10);
    }

    TEST_CASE("pochhammer expansion")
    {
        const FtSetting s(parse_fspec("linear:1,0"), parse_t("1"));
        const auto e = pochhammer_poly(s, 5);  // x(x+1)... shifted: (x+1)(x+2)(x+3)(x+4)
        REQUIRE(e.coeffs.size() == 5);
        CHECK(e.coeffs[0] == LaurentPoly(24));
        CHECK(e.coeffs[1] == LaurentPoly(50));
        CHECK(e.coeffs[4] == LaurentPoly(1));
        CHECK(pochhammer_poly(s, 0).coeffs.size() == 1);
        CHECK(pochhammer_poly(s, 1).coeffs.size() == 1);
    }

    TEST_CASE("pochhammer constant term is the normalized factorial (property)")
    {
        Gen g(22);
        for (int i = 0; i < kCases; ++i) {
            const FtSetting s = g.setting(10);
            const long n = g.integer(1, 8);
            const auto e = pochhammer_poly(s, n + 1);
            REQUIRE(e.coeffs[0] == bang_ft(s, n));
        }
    }
}
