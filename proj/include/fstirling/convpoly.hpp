#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fstirling/fspec.hpp"
#include "fstirling/report.hpp"
#include "fstirling/series.hpp"
#include "fstirling/stirling.hpp"

namespace fstirling {

enum class SigmaVariant {
    sigma,        // [x,x-n] (x-n-1)! / x!_f
    sigma_tilde,  // [x,x-n] (x-n-1)! / x!
};
SigmaVariant parse_sigma_variant(const std::string& text);
const char* to_string(SigmaVariant v);

/// Requires integers n >= 0 and x >= n+1; std::domain_error otherwise.
LaurentPoly sigma_eval(const FtSetting& setting, SigmaVariant variant, long n, long x);
/// Same, reading the entry from a prebuilt triangle (rows >= x).
LaurentPoly sigma_eval(const Triangle& tri, SigmaVariant variant, long n, long x);

/// Both recurrences for 1 <= n < x <= x_max, n <= n_max (indices [variant, n, x],
/// variant 1 = sigma, 2 = sigma-tilde), plus the inverse form of the
/// definition [n+1,k] = (n+1)!_f / (k-1)! sigma_{n+1-k}(n+1) (indices [3, n, k]
/// and [4, n, k] for the tilde form).
Report sigma_recurrence_check(const FtSetting& setting, long n_max, long x_max);

/// The three t = 1 closed-form generating functions:
///   classic    f(n) = n               x sigma_n(x) = [z^n] (z e^z/(e^z-1))^x
///   alpha      f(n) = a n + 1 - a     ... = [z^n] e^((1-a) z) (a z e^(az)/(e^(az)-1))^x
///   alphabeta  f(n) = a n + b         ... = [z^n] e^(b z)     (a z e^(az)/(e^(az)-1))^x
enum class GfFamily { classic, alpha, alphabeta };
GfFamily parse_gf_family(const std::string& text);
const char* to_string(GfFamily f);
Report stirlingpoly_gf_check(GfFamily family, const Rational& alpha, const Rational& beta, long n_max, long x_max);

/// (a z / (1 - e^(-a z))) to the given order, exact.
TruncSeries bernoulli_factor(const Rational& alpha, std::size_t order);

/// Second-order Eulerian numbers, rows 0..N; row 0 is [1], row n >= 1 has
/// entries k = 0..n-1.
std::vector<std::vector<Integer>> eulerian2_triangle(long N);

/// c(x, x-n) = sum_k E2(n,k) C(x+k, 2n) for 0 <= n <= n_max, n+1 <= x <= x_max.
Report eulerian2_identity_check(long n_max, long x_max);

/// S(z) = 1 + sum_{i>=1} coeffs[i-1] z^i. Solves S_t(z) = S(z S_t(z)^t) by
/// iteration and checks x s_n(x+tn)/(x+tn) = [z^n] S_t(z)^x for 0 <= n <= n_max,
/// 1 <= x <= x_max. A note reports whether coefficient k was already final
/// after k+1 iterations. For S = 1+z and t = 1 the closed form C(x+n-1, n) is
/// checked as well (indices [2, n, x]).
Report conv_family_shift_check(const std::vector<Rational>& coeffs, long t_shift, long n_max, long x_max);

/// Coefficients s*_1..s*_order of z / (1 - e^-z).
std::vector<Rational> stirling_conv_coeffs(std::size_t order);

/// Fixed point S_t after `iterations` rounds starting from S_t = 1.
TruncSeries conv_fixed_point(const TruncSeries& s, long t_shift, std::size_t iterations);

/// F(z)^x for integer x (negative x through the series inverse).
TruncSeries series_integer_power(const TruncSeries& a, long x);

/// Fit F(z) = 1 + g_1 z + ... + g_N z^N with [z^n] F^x = sigma_n(x)/sigma_0(x)
/// for n <= N (requires x >= N+1 so every target lies in the domain).
struct ExperimentalFit
{
    TruncSeries series;
    Report report;  // reproduction cells, indices [x, n]
};
ExperimentalFit fit_experimental_gf(const FtSetting& setting, long x, long N);

/// For 1 <= k <= n <= n_max: fit at x = n with N = n-1 and check
///   f_{n-k}(n) = sum_{j=1}^{n-k} C(n,j) [z^(n-k)] (F-1)^j + [n = k].
/// Indices [n, k]. Reproduction failures are appended with indices [0, x, n].
Report experimental_fit_check(const FtSetting& setting, long n_max);

}  // namespace fstirling
