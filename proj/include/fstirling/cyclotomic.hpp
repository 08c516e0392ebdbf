#pragma once

#include <vector>

#include "fstirling/laurent.hpp"

namespace fstirling {

bool is_prime(long n);

/// Element of K[zeta_p], K the Laurent polynomials, for prime p.
/// Stored as coordinates on 1, zeta, ..., zeta^(p-2), always reduced modulo
/// 1 + zeta + ... + zeta^(p-1).
class CyclotomicElem
{
public:
    explicit CyclotomicElem(long p);

    static CyclotomicElem scalar(long p, const LaurentPoly& value);
    /// coeff * zeta^exponent; any integer exponent, reduced mod p.
    static CyclotomicElem zeta_power(long p, long exponent, const LaurentPoly& coeff = LaurentPoly(1));

    long order() const { return p_; }
    const std::vector<LaurentPoly>& coords() const { return coords_; }

    bool is_zero() const;
    /// True when every zeta-coordinate above degree 0 vanishes.
    bool is_rational() const;
    /// Degree-0 coordinate; throws std::domain_error unless is_rational().
    LaurentPoly to_scalar() const;

    CyclotomicElem& operator+=(const CyclotomicElem& rhs);
    CyclotomicElem& operator-=(const CyclotomicElem& rhs);
    CyclotomicElem& operator*=(const CyclotomicElem& rhs);

    friend CyclotomicElem operator+(CyclotomicElem a, const CyclotomicElem& b) { return a += b; }
    friend CyclotomicElem operator-(CyclotomicElem a, const CyclotomicElem& b) { return a -= b; }
    friend CyclotomicElem operator*(CyclotomicElem a, const CyclotomicElem& b) { return a *= b; }
    friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b)
    {
        return a.p_ == b.p_ && a.coords_ == b.coords_;
    }

private:
    void require_same_order(const CyclotomicElem& rhs) const;
    /// Folds a length-p vector (powers 0..p-1) onto the reduced basis.
    void assign_reduced(std::vector<LaurentPoly> full);

    long p_;
    std::vector<LaurentPoly> coords_;
};

CyclotomicElem cyclo_mul(const CyclotomicElem& a, const CyclotomicElem& b);

}  // namespace fstirling
