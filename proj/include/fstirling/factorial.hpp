#pragma once

#include <vector>

#include "fstirling/fspec.hpp"

namespace fstirling {

/// Coefficients of (x)_{f(t),n} = prod_{k=1}^{n-1} (x + f(k) t^-k) in x;
/// coeffs[k-1] is the coefficient of x^(k-1). n = 0 and n = 1 both give [1].
struct PochhammerExpansion
{
    long n = 0;
    std::vector<LaurentPoly> coeffs;
};

PochhammerExpansion pochhammer_poly(const FtSetting& setting, long n);

/// n!_f = prod_{j<=n} f(j)
LaurentPoly bang_f(const FSpec& f, long n);
/// n!_{f(t)} = n!_f / t^(n(n+1)/2)
LaurentPoly bang_ft(const FtSetting& setting, long n);

inline long triangular(long n) { return n * (n + 1) / 2; }

}  // namespace fstirling
