#include <doctest.h>

#include <algorithm>

#include "fstirling/cyclotomic.hpp"
#include "fstirling/fharmonic.hpp"
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

TEST_SUITE("fharmonic")
{
    TEST_CASE("hand anchors for the harmonic routes")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK(fharmonic_direct(s.f(), 2, 3, 1) == LaurentPoly(Rational(49, 36)));
        CHECK(harmonic_via_ftilde(s, 2, 3) == LaurentPoly(Rational(49, 36)));
        CHECK(harmonic_via_roots(s, 2, 3) == LaurentPoly(Rational(49, 36)));
        CHECK(harmonic_via_subst(s, 2, 3).value == LaurentPoly(Rational(49, 36)));
        CHECK(harmonic_via_ftilde(s, 3, 2) == LaurentPoly(Rational(9, 8)));
        CHECK_THROWS_AS(harmonic_via_roots(s, 4, 3), std::invalid_argument);

        // [w^4](ft^2 - 12 w ft) = 49 for the row (x+1)(x+2)(x+3)
        const TruncSeries ft = ftilde_series(s, 3, 4);
        CHECK(ft[2] == LaurentPoly(11));
        CHECK(ft[4] == LaurentPoly(1));
        CHECK(series_int_pow(ft, 2)[4] - LaurentPoly(12) * ft[3] == LaurentPoly(49));
    }

    TEST_CASE("substitution writes the result in the root variable")
    {
        const SubstResult r = harmonic_via_subst(make("linear:1,0", "symbolic"), 2, 2);
        CHECK_FALSE(r.generic);
        CHECK(harmonic_via_subst(make("linear:1,0", "3/2"), 2, 2).generic);
        CHECK(r.value.to_string() == "u^2+1/4*u^4");
        CHECK(r.value == r.direct);
        const SubstResult exact = harmonic_via_subst(make("linear:1,0", "9/4"), 2, 2);
        CHECK_FALSE(exact.generic);
        CHECK(exact.value == fharmonic_direct(parse_fspec("linear:1,0"), 2, 2, Rational(9, 4)));
    }

    TEST_CASE("isobaric expansions")
    {
        CHECK(render_isobaric(ftilde_isobaric_expansion(2)) == "F2^2 - 2*F1*F3");
        CHECK(render_isobaric(ftilde_isobaric_expansion(3)) == "F2^3 - 3*F1*F2*F3 + 3*F1^2*F4");
        CHECK(render_isobaric(ftilde_isobaric_expansion(4)) ==
              "F2^4 - 4*F1*F2^2*F3 + 2*F1^2*F3^2 + 4*F1^2*F2*F4 - 4*F1^3*F5");
        CHECK(render_isobaric(ftilde_isobaric_expansion(5)) ==
              "F2^5 - 5*F1*F2^3*F3 + 5*F1^2*F2*F3^2 + 5*F1^2*F2^2*F4 - 5*F1^3*F3*F4 - 5*F1^3*F2*F5 + 5*F1^4*F6");
        for (long p = 2; p <= 8; ++p) {
            for (const auto& [key, c] : ftilde_isobaric_expansion(p)) {
                long w = 0;
                for (long k : key) {
                    w += k;
                }
                REQUIRE(w == 2 * p);
            }
        }
    }

    TEST_CASE("harmonic routes agree with direct sums (property)")
    {
        Gen g(41);
        for (int i = 0; i < kCases; ++i) {
            const FtSetting s = g.setting(8);
            const long p = g.integer(1, 3);
            const long n = g.integer(0, 5);
            const LaurentPoly direct = fharmonic_direct(s.f(), p, n, s.t().pow(p));
            REQUIRE(harmonic_via_ftilde(s, p, n) == direct);
            if (is_prime(p)) {
                REQUIRE(harmonic_via_roots(s, p, n) == direct);
            }
        }
    }

    TEST_CASE("weighted sums")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK(s1_from_wf_check(s, 8).passed());
        const Report rising = s1_from_wf_check(s, 8, WfVariant::rising);
        CHECK_FALSE(rising.passed());
        CHECK(wf_table(s, 3, 1).at(1) == LaurentPoly(1));
        CHECK(wf_table(make("linear:1,0", "symbolic"), 3, 1).at(1).to_string() == "t^-6");
        CHECK(s1_from_wf_check(make("qpow:1", "1"), 6).passed());
        CHECK(s1_from_wf_check(make("linear:2,1", "symbolic"), 6).passed());
        const Report cor = corollary_expansions_check(s, 10);
        CHECK(cor.passed());
        const auto it = std::find_if(cor.cells.begin(), cor.cells.end(), [](const Cell& c) {
            return c.indices == std::vector<long>{3, 3};
        });
        REQUIRE(it != cor.cells.end());
        CHECK(it->lhs == LaurentPoly(6));
    }

    TEST_CASE("functional equations")
    {
        const Report r = prop2_functional_eq_check(make("linear:1,0", "1"), 2, 1);
        CHECK(r.passed());
        REQUIRE(r.cells.size() == 2);
        CHECK(r.cells[0].rhs == LaurentPoly(Rational(5, 4)));
        CHECK(r.cells[1].rhs == LaurentPoly(Rational(5, 4)));

        Gen g(42);
        for (int i = 0; i < kCases; ++i) {
            const FtSetting s = g.setting(10);
            REQUIRE(prop2_functional_eq_check(s, g.integer(2, 5), g.integer(0, 6)).passed());
        }
    }

    TEST_CASE("ordinary-Stirling identity")
    {
        const Report r = stirling_harmonic_identity_check(3, 2);
        CHECK(r.passed());
        CHECK(r.cells[0].lhs == LaurentPoly(Rational(1, 8)));
        for (long p = 3; p <= 8; ++p) {
            for (long n = 1; n <= 25; ++n) {
                REQUIRE(stirling_harmonic_identity_check(p, n).passed());
            }
        }
    }

    TEST_CASE("order-raising recurrence residual")
    {
        const FtSetting s = make("linear:1,0", "1");
        CHECK(prop1_recurrence_check(s, 1, 1).passed());
        const Report bad = prop1_recurrence_check(s, 1, 2);
        CHECK_FALSE(bad.passed());
        CHECK(bad.cells[0].residual() == LaurentPoly(Rational(-1, 2)));
        CHECK(bad.cells[0].note == "residual equals p times the [n+1,p+2] term");
    }

    TEST_CASE("series anchors")
    {
        CHECK(nielsen_partial(2, 1, 1, 3) == Rational(251, 216));
        const FSpec n = parse_fspec("linear:1,0");
        CHECK(euler_sum_numeric(n, 2, 2, EulerMode::harmonic_over_f) == Rational(21, 16));
        CHECK(euler_sum_numeric(n, 2, 3, EulerMode::fzeta) == Rational(49, 36));
        CHECK(euler_sum_numeric(n, 1, 2, EulerMode::fzeta2r) == Rational(5, 4));
        CHECK(hf_weighted_partial(n, {2}, 2, 1, 1, 2) == Rational(21, 16));
        CHECK(parse_euler_mode("fzeta") == EulerMode::fzeta);
        CHECK_THROWS_AS(parse_euler_mode("zeta"), std::invalid_argument);
    }

    TEST_CASE("euler sums: identity and serial equals parallel (property)")
    {
        Gen g(43);
        for (int i = 0; i < kCases; ++i) {
            const FSpec f = g.fspec(60);
            const long r = g.integer(1, 3);
            const long N = g.integer(1, 60);
            const Rational a = euler_sum_numeric(f, r, N, EulerMode::fzeta, Exec::serial);
            const Rational b = euler_sum_numeric(f, r, N, EulerMode::fzeta2r, Exec::parallel);
            const Rational h = euler_sum_numeric(f, r, N, EulerMode::harmonic_over_f, Exec::parallel);
            REQUIRE(2 * h == a * a + b);
            REQUIRE(h == euler_sum_numeric(f, r, N, EulerMode::harmonic_over_f, Exec::serial));
        }
    }
}
