#pragma once

#include <vector>

#include <json.hpp>

#include "fstirling/fspec.hpp"
#include "fstirling/parallel.hpp"
#include "fstirling/report.hpp"
#include "fstirling/series.hpp"

namespace fstirling {

/// Dense lower-triangular table of entries (n, k), 0 <= k <= n <= N.
class Triangle
{
public:
    Triangle(FtSetting setting, std::vector<std::vector<LaurentPoly>> rows);

    const FtSetting& setting() const { return setting_; }
    long rows() const { return static_cast<long>(rows_.size()) - 1; }
    /// Zero for k < 0 or k > n; throws std::out_of_range past the last row.
    const LaurentPoly& at(long n, long k) const;
    const std::vector<LaurentPoly>& row(long n) const;

    /// {"f": dsl, "t": "symbolic" | rational, "rows": [[LaurentPoly json...]]}
    nlohmann::ordered_json to_json() const;
    /// Header "n,c0,...,cN", then one line per row padded to rectangular shape.
    std::string to_csv(int decimal_digits = -1) const;

private:
    FtSetting setting_;
    std::vector<std::vector<LaurentPoly>> rows_;
    LaurentPoly zero_;
};

/// First-kind triangle by the row recurrence
///   [n,k] = f(n-1) t^(1-n) [n-1,k] + [n-1,k-1],  [0,0] = 1.
/// Row 1 has no f(0) term, so [1,0] = 0.
Triangle s1_triangle(const FtSetting& setting, long N);

/// Largest n accepted by the subset-enumeration oracle.
constexpr long kOracleMaxN = 15;

/// e_{n-k} of {f(j) t^-j : 1 <= j < n} by direct enumeration of subsets.
/// Throws std::length_error for n > kOracleMaxN.
LaurentPoly s1_entry_oracle(const FtSetting& setting, long n, long k);

/// Recurrence triangle against the oracle for 0 <= k <= n <= N. Rows are
/// independent, so the parallel kernel distributes them across threads.
Report s1_oracle_check(const FtSetting& setting, long N, Exec exec = Exec::parallel);

/// Column formulas: [n+1,1] = n!_f t^-(n(n+1)/2) and, for k >= 2,
/// [n+1,k] = n!_f t^-(n(n+1)/2) sum_{j=1}^n [j,k-1] t^(j(j+1)/2) / j!_f.
Report s1_column_closed_forms(const FtSetting& setting, long N);

/// Unsigned classical first-kind numbers c(n,k), independent integer code path.
std::vector<std::vector<Integer>> classical_stirling1(long N);

/// Second kind: sum_{j=0}^k C(k,j) (-1)^(k-j) f(j)^n / (t^(jn) j!), with the
/// j = 0 summand taken as (-1)^k [n = 0] so f(0) is never evaluated.
LaurentPoly s2_entry(const FtSetting& setting, long n, long k);

/// Both sides of the finite geometric transform as polynomials in z:
///   sum_{0<=j<=n} f(j)^k t^(-jk) z^j  vs  sum_{j<=k} S2(k,j) z^j D^j[(1-z^(n+1))/(1-z)].
/// One cell per z-coefficient.
Report s2_geom_transform_check(const FtSetting& setting, long n, long k);

/// Modified second kind: sum_{1<=m<=j} C(j,m) (-1)^(j-m) / (j! f(m)^k).
/// A LaurentPoly because the symbolic q-power f gives values in q.
LaurentPoly s2star_entry(const FSpec& spec, long k, long j);

/// 1/f(n)^k = sum_{j<=n} S*(k,j) j! C(n,j) for 1 <= n <= N.
Report s2star_ogf_check(const FSpec& spec, long k, long N);

/// sum_n F_n^(r)(1) z^n / n! against sum_j S*(r,j) z^j e^z (j+1+z)/(j+1),
/// coefficient-wise for 1 <= n <= N with truncated series arithmetic.
Report s2star_egf_check(const FSpec& spec, long r, long N);

}  // namespace fstirling
