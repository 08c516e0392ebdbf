#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fstirling/fspec.hpp"
#include "fstirling/laurent.hpp"

namespace fstirling::testing {

inline std::string data_path(const std::string& name)
{
    return std::string(FSTIRLING_TEST_DATA) + "/" + name;
}

/// Hand-rolled generators over a fixed-seed engine so every run sees the same cases.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long num_bound = 9, long den_bound = 6)
    {
        Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long num_bound = 9, long den_bound = 6)
    {
        for (;;) {
            Rational r = rational(num_bound, den_bound);
            if (r != 0) {
                return r;
            }
        }
    }

    LaurentPoly laurent(const std::string& var = "t", int max_terms = 4)
    {
        LaurentPoly p;
        const long terms = integer(0, max_terms);
        for (long i = 0; i < terms; ++i) {
            p += LaurentPoly::monomial(rational(), integer(-3, 3), var);
        }
        return p;
    }

    /// linear:a,b or poly:c0,c1,c2 with f(n) != 0 for 1 <= n <= max_n.
    FSpec fspec(long max_n = 16)
    {
        for (;;) {
            FSpec s = coin() ? FSpec::linear(nonzero_rational(), rational())
                             : FSpec::poly({rational(), rational(), rational(4, 3)});
            try {
                for (long n = 1; n <= max_n; ++n) {
                    s.eval(n);  // throws on a zero value
                }
                return s;
            } catch (const std::domain_error&) {
            }
        }
    }

    /// Numeric t half the time, the formal variable otherwise.
    FtSetting setting(long max_n = 16)
    {
        FSpec f = fspec(max_n);
        LaurentPoly t = coin() ? LaurentPoly(nonzero_rational(5, 4)) : LaurentPoly::variable("t");
        return FtSetting(std::move(f), std::move(t));
    }

private:
    std::mt19937_64 rng_;
};

/// Number of generated cases per property.
constexpr int kCases = 1000;

}  // namespace fstirling::testing
