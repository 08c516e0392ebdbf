#pragma once

#include <map>
#include <string>
#include <vector>

#include "fstirling/fspec.hpp"
#include "fstirling/parallel.hpp"
#include "fstirling/report.hpp"
#include "fstirling/series.hpp"

namespace fstirling {

/// sum_{k=1}^n arg^k / f(k)^p
LaurentPoly fharmonic_direct(const FSpec& spec, long p, long n, const LaurentPoly& arg);

/// sum_{k>=2} [n+1,k] w^k, a polynomial of degree n+1 carried to
/// max(order, n+1). Coefficients past the degree are exact zeros.
TruncSeries ftilde_series(const FtSetting& setting, long n, std::size_t order = 0);

/// sum_k t^(kp) / f(k)^p through [w^(2p)] of the f-tilde power expansion.
LaurentPoly harmonic_via_ftilde(const FtSetting& setting, long p, long n);

/// Same sum through the product of root-of-unity twisted rows, p prime.
/// Throws std::invalid_argument for non-prime p and std::logic_error if a
/// zeta-coordinate survives.
LaurentPoly harmonic_via_roots(const FtSetting& setting, long p, long n);

/// sum_k t^k / f(k)^p through the triangle taken at t^(1/p), computed in the
/// variable u of RootedT (t = u^p when t has no exact p-th root). Prime p uses
/// the root-of-unity product, other p the f-tilde expansion.
struct SubstResult
{
    LaurentPoly value;   // in the working variable
    LaurentPoly direct;  // sum t^k / f(k)^p written in the same variable
    bool generic = false;
};
SubstResult harmonic_via_subst(const FtSetting& setting, long p, long n);

/// The f-tilde route written as a polynomial in Fbar(k) = [n+1,k]. Each key
/// is a sorted multiset of lower indices; every key's index sum is 2p.
using IsobaricExpansion = std::map<std::vector<long>, Rational>;
IsobaricExpansion ftilde_isobaric_expansion(long p);
std::string render_isobaric(const IsobaricExpansion& e);

/// w_f(n+1, m), 1 <= m <= m_max, base case t^-(n(n+1)/2) at m = 1.
enum class WfVariant {
    /// (-1)^k (m-2)(m-3)...(m-1-k) weights: the Bell-polynomial recursion.
    bell,
    /// (-1)^k (1-m)_k rising-factorial weights; fails line 1 for m >= 3.
    rising,
};
struct WfTable
{
    long n = 0;
    WfVariant variant = WfVariant::bell;
    std::vector<LaurentPoly> values;  // values[m]; values[0] unused (zero)
    const LaurentPoly& at(long m) const { return values.at(static_cast<std::size_t>(m)); }
};
WfTable wf_table(const FtSetting& setting, long n, long m_max, WfVariant variant = WfVariant::bell);

/// [n+1,k] against both weighted-sum expansions for n <= N, 1 <= k <= n+1.
/// Indices are [line, n, k].
Report s1_from_wf_check(const FtSetting& setting, long N, WfVariant variant = WfVariant::bell);

/// The four closed forms for [n+1,k], k = 2..5, n <= N. Indices [k, n].
Report corollary_expansions_check(const FtSetting& setting, long N);

/// Coefficient-product recurrence from order p to p+1, evaluated term by term
/// with t = u^(p(p+1)). One cell; a note records whether the residual equals
/// p times the lone [n+1,p+2] term.
Report prop1_recurrence_check(const FtSetting& setting, long p, long n);

/// Both functional equations F_{n+1}^(p)(t^p) = F_n^(p)(t^p) + ... . Indices [form, p, n].
Report prop2_functional_eq_check(const FtSetting& setting, long p, long n);

/// The ordinary-Stirling identity for 1/n^p, p >= 3, n >= 1.
Report stirling_harmonic_identity_check(long p, long n);

/// sum_{n=1}^N c(n,k) z^n / (n^t n!) with classical c(n,k).
Rational nielsen_partial(long t_idx, long k, const Rational& z, long N);

enum class EulerMode { harmonic_over_f, fzeta, fzeta2r };
EulerMode parse_euler_mode(const std::string& text);
const char* to_string(EulerMode m);

/// Exact partial sums to N terms with a_n = 1/f(n)^r:
///   harmonic_over_f  sum_n F_n^(r)(1) a_n = sum_n a_n (a_1 + ... + a_n)
///   fzeta            sum_n a_n
///   fzeta2r          sum_n a_n^2
/// Binary splitting; the parallel kernel sums independent chunks with OpenMP
/// and merges them in order, the serial path recurses on the whole range.
Rational euler_sum_numeric(const FSpec& spec, long r, long N, EulerMode mode, Exec exec = Exec::parallel);

/// sum_{n=1}^N prod_i F_n^(o_i)(t^(o_i)) z^(sn) / f(n)^s
Rational hf_weighted_partial(const FSpec& spec, const std::vector<long>& orders, long s, const Rational& t,
                             const Rational& z, long N);

}  // namespace fstirling
