#include "fstirling/cyclotomic.hpp"

#include <stdexcept>

namespace fstirling {

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

CyclotomicElem::CyclotomicElem(long p) : p_(p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("cyclotomic order must be prime, got " + std::to_string(p));
    }
    coords_.resize(static_cast<std::size_t>(p - 1));
}

CyclotomicElem CyclotomicElem::scalar(long p, const LaurentPoly& value)
{
    CyclotomicElem e(p);
    e.coords_[0] = value;
    return e;
}

CyclotomicElem CyclotomicElem::zeta_power(long p, long exponent, const LaurentPoly& coeff)
{
    CyclotomicElem e(p);
    std::vector<LaurentPoly> full(static_cast<std::size_t>(p));
    const long r = ((exponent % p) + p) % p;
    full[static_cast<std::size_t>(r)] = coeff;
    e.assign_reduced(std::move(full));
    return e;
}

void CyclotomicElem::assign_reduced(std::vector<LaurentPoly> full)
{
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    const LaurentPoly top = full.back();
    full.pop_back();
    if (!top.is_zero()) {
        for (auto& c : full) {
            c -= top;
        }
    }
    coords_ = std::move(full);
}

bool CyclotomicElem::is_zero() const
{
    for (const auto& c : coords_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CyclotomicElem::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

LaurentPoly CyclotomicElem::to_scalar() const
{
    if (!is_rational()) {
        throw std::domain_error("cyclotomic element has nonzero zeta-coordinates");
    }
    return coords_[0];
}

void CyclotomicElem::require_same_order(const CyclotomicElem& rhs) const
{
    if (p_ != rhs.p_) {
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(p_) + " vs " +
                                    std::to_string(rhs.p_));
    }
}

CyclotomicElem& CyclotomicElem::operator+=(const CyclotomicElem& rhs)
{
    require_same_order(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += rhs.coords_[i];
    }
    return *this;
}

CyclotomicElem& CyclotomicElem::operator-=(const CyclotomicElem& rhs)
{
    require_same_order(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= rhs.coords_[i];
    }
    return *this;
}

CyclotomicElem& CyclotomicElem::operator*=(const CyclotomicElem& rhs)
{
    require_same_order(rhs);
    const auto p = static_cast<std::size_t>(p_);
    std::vector<LaurentPoly> full(p);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
            if (!rhs.coords_[j].is_zero()) {
                full[(i + j) % p] += coords_[i] * rhs.coords_[j];
            }
        }
    }
    assign_reduced(std::move(full));
    return *this;
}

CyclotomicElem cyclo_mul(const CyclotomicElem& a, const CyclotomicElem& b)
{
    return a * b;
}

}  // namespace fstirling
