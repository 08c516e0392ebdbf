#include "fstirling/factorial.hpp"

#include <stdexcept>

namespace fstirling {

PochhammerExpansion pochhammer_poly(const FtSetting& setting, long n)
{
    if (n < 0) {
        throw std::invalid_argument("Pochhammer length must be non-negative");
    }
    std::vector<LaurentPoly> roots;
    for (long k = 1; k < n; ++k) {
        roots.push_back(setting.root(k));
    }
    return {n, poly_product_expand(roots)};
}

LaurentPoly bang_f(const FSpec& f, long n)
{
    if (n < 0) {
        throw std::invalid_argument("f-factorial of a negative integer");
    }
    LaurentPoly r(1);
    for (long j = 1; j <= n; ++j) {
        r *= f.eval(j);
    }
    return r;
}

LaurentPoly bang_ft(const FtSetting& setting, long n)
{
    return bang_f(setting.f(), n) * setting.t().pow(-triangular(n));
}

}  // namespace fstirling
