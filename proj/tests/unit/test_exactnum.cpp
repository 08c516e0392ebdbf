#include <doctest.h>

#include "fstirling/cyclotomic.hpp"
#include "fstirling/rational.hpp"
#include "fstirling/series.hpp"
#include "support.hpp"

using namespace fstirling;
using fstirling::testing::Gen;
using fstirling::testing::kCases;

TEST_SUITE("exactnum")
{
    TEST_CASE("rational text round trip and canonical form")
    {
        CHECK(to_string(parse_rational("-6/4")) == "-3/2");
        CHECK(to_string(parse_rational("+10/5")) == "2");
        CHECK(to_string(parse_rational("-0/7")) == "0");
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
        CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
        CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
        CHECK(*exact_root(Rational(9, 4), 2) == Rational(3, 2));
        CHECK_FALSE(exact_root(Rational(3, 2), 2).has_value());
        CHECK(binomial(10, 3) == 120);
        CHECK(factorial(6) == 720);
        CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);

        Gen g(11);
        for (int i = 0; i < kCases; ++i) {
            const Rational r = g.rational(1000, 1000);
            REQUIRE(parse_rational(to_string(r)) == r);
        }
    }

    TEST_CASE("laurent polynomial basics")
    {
        const LaurentPoly t = LaurentPoly::variable("t");
        const LaurentPoly p = t.pow(-1) * Rational(1, 2) + 3 + t * t;
        CHECK(p.to_string() == "1/2*t^-1+3+t^2");
        CHECK(p.min_exponent() == -1);
        CHECK(p.max_exponent() == 2);
        CHECK(p.evaluate(2) == Rational(29, 4));
        CHECK((p - p).is_zero());
        CHECK(t.inverse() == t.pow(-1));
        CHECK_THROWS_AS((t + 1).inverse(), std::domain_error);
        CHECK_THROWS_AS(t + LaurentPoly::variable("q"), std::invalid_argument);
        CHECK(LaurentPoly(5).to_string() == "5");
        CHECK(LaurentPoly().to_string() == "0");
        CHECK(LaurentPoly::from_json(p.to_json()) == p);
        CHECK(p.substitute_power(2, "u").to_string() == "1/2*u^-2+3+u^4");
    }

    TEST_CASE("laurent ring axioms (property)")
    {
        Gen g(12);
        for (int i = 0; i < kCases; ++i) {
            const LaurentPoly a = g.laurent();
            const LaurentPoly b = g.laurent();
            const LaurentPoly c = g.laurent();
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + b) - b == a);
            const Rational x = g.nonzero_rational();
            REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        }
    }

    TEST_CASE("product expansion gives elementary symmetric coefficients")
    {
        const std::vector<LaurentPoly> roots{1, 2, 3};
        const auto c = poly_product_expand(roots);
        REQUIRE(c.size() == 4);
        CHECK(c[0] == LaurentPoly(6));
        CHECK(c[1] == LaurentPoly(11));
        CHECK(c[2] == LaurentPoly(6));
        CHECK(c[3] == LaurentPoly(1));
        CHECK(poly_product_expand({}).size() == 1);
    }

    TEST_CASE("truncated series")
    {
        const TruncSeries e = TruncSeries::exp_linear("z", 5, 1);
        CHECK(e[3] == LaurentPoly(Rational(1, 6)));
        CHECK_THROWS_AS(e[6], std::out_of_range);
        const TruncSeries e2 = series_mul(e, e);
        CHECK(e2 == TruncSeries::exp_linear("z", 5, 2));
        CHECK(series_int_pow(e, 3) == TruncSeries::exp_linear("z", 5, 3));
        // (e^z - 1)/z lowers the order by one
        const TruncSeries num = e - TruncSeries::one("z", 5);
        const TruncSeries z("z", 5, {0, 1, 0, 0, 0, 0});
        const TruncSeries q = series_div(num, z);
        CHECK(q.order() == 4);
        CHECK(q[2] == LaurentPoly(Rational(1, 6)));
        // exp(z) composed with 2z
        const TruncSeries two_z("z", 5, {0, 2, 0, 0, 0, 0});
        CHECK(series_compose(e, two_z) == TruncSeries::exp_linear("z", 5, 2));
        CHECK_THROWS(series_compose(e, e));
        CHECK(e.shifted_up(2)[2] == LaurentPoly(1));
        CHECK(e.to_json()["coeffs"].size() == 6);
    }

    TEST_CASE("series division inverts multiplication (property)")
    {
        Gen g(13);
        for (int i = 0; i < kCases; ++i) {
            const std::size_t order = static_cast<std::size_t>(g.integer(1, 6));
            std::vector<LaurentPoly> ac;
            std::vector<LaurentPoly> bc{LaurentPoly(g.nonzero_rational())};
            for (std::size_t k = 0; k <= order; ++k) {
                ac.push_back(g.rational());
                if (k > 0) {
                    bc.push_back(g.rational());
                }
            }
            const TruncSeries a("z", order, ac);
            const TruncSeries b("z", order, bc);
            REQUIRE(series_div(series_mul(a, b), b) == a);
        }
    }

    TEST_CASE("cyclotomic arithmetic")
    {
        for (long p : {2L, 3L, 5L, 7L}) {
            CyclotomicElem sum(p);
            for (long e = 0; e < p; ++e) {
                sum += CyclotomicElem::zeta_power(p, e);
            }
            CHECK(sum.is_zero());
            CHECK(CyclotomicElem::zeta_power(p, 1) * CyclotomicElem::zeta_power(p, p - 1) ==
                  CyclotomicElem::scalar(p, 1));
            CHECK(CyclotomicElem::zeta_power(p, -1) == CyclotomicElem::zeta_power(p, p - 1));
        }
        CHECK_FALSE(CyclotomicElem::zeta_power(3, 1).is_rational());
        CHECK_THROWS_AS(CyclotomicElem::zeta_power(3, 1).to_scalar(), std::domain_error);
        CHECK(is_prime(5));
        CHECK_FALSE(is_prime(4));
        CHECK_FALSE(is_prime(1));
    }

    TEST_CASE("cyclotomic ring axioms (property)")
    {
        Gen g(14);
        const long primes[] = {2, 3, 5, 7};
        for (int i = 0; i < kCases; ++i) {
            const long p = primes[g.integer(0, 3)];
            auto rnd = [&] {
                CyclotomicElem e(p);
                for (long k = 0; k < p; ++k) {
                    e += CyclotomicElem::zeta_power(p, g.integer(-p, 2 * p), g.rational());
                }
                return e;
            };
            const CyclotomicElem a = rnd();
            const CyclotomicElem b = rnd();
            const CyclotomicElem c = rnd();
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(cyclo_mul(a, b) == a * b);
        }
    }
}
