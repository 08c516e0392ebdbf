#include "fstirling/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fstirling {

TruncSeries::TruncSeries(std::string var, std::size_t order, std::vector<LaurentPoly> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(std::string var, std::size_t order)
{
    return TruncSeries(std::move(var), order, {LaurentPoly(1)});
}

TruncSeries TruncSeries::exp_linear(std::string var, std::size_t order, const Rational& c)
{
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(order + 1);
    Rational term = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        if (i > 0) {
            term *= c;
            term /= static_cast<long>(i);
        }
        coeffs.emplace_back(term);
    }
    return TruncSeries(std::move(var), order, std::move(coeffs));
}

const LaurentPoly& TruncSeries::operator[](std::size_t i) const
{
    if (i >= coeffs_.size()) {
        throw std::out_of_range("coefficient " + std::to_string(i) + " is past truncation order " +
                                std::to_string(order()));
    }
    return coeffs_[i];
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::out_of_range("cannot raise the truncation order of a series");
    }
    return TruncSeries(var_, order, std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::shifted_up(std::size_t k) const
{
    std::vector<LaurentPoly> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return TruncSeries(var_, order() + k, std::move(c));
}

void TruncSeries::require_same_var(const TruncSeries& rhs) const
{
    if (var_ != rhs.var_) {
        throw std::invalid_argument("series variable mismatch: '" + var_ + "' vs '" + rhs.var_ + "'");
    }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs)
{
    require_same_var(rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs)
{
    require_same_var(rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const LaurentPoly& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

nlohmann::ordered_json TruncSeries::to_json() const
{
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_) {
        coeffs.push_back(c.to_json());
    }
    nlohmann::ordered_json j;
    j["var"] = var_;
    j["order"] = order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    if (a.var() != b.var()) {
        throw std::invalid_argument("series variable mismatch: '" + a.var() + "' vs '" + b.var() + "'");
    }
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<LaurentPoly> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return TruncSeries(a.var(), order, std::move(c));
}

TruncSeries series_int_pow(const TruncSeries& a, unsigned long exponent)
{
    TruncSeries result = TruncSeries::one(a.var(), a.order());
    TruncSeries base = a;
    while (exponent > 0) {
        if (exponent & 1UL) {
            result = series_mul(result, base);
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b)
{
    if (a.var() != b.var()) {
        throw std::invalid_argument("series variable mismatch: '" + a.var() + "' vs '" + b.var() + "'");
    }
    const std::size_t common = std::min(a.order(), b.order());
    std::size_t lead = 0;
    while (lead <= common && b[lead].is_zero()) {
        if (!a[lead].is_zero()) {
            throw std::domain_error("divisor vanishes to higher order than the dividend");
        }
        ++lead;
    }
    if (lead > common) {
        throw std::domain_error("divisor is zero to the carried order");
    }
    const LaurentPoly& b0 = b[lead];
    if (!b0.is_monomial()) {
        throw std::domain_error("leading divisor coefficient " + b0.to_string() + " is not invertible");
    }
    const LaurentPoly b0_inv = b0.inverse();
    const std::size_t order = common - lead;
    std::vector<LaurentPoly> r(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        LaurentPoly acc = a[m + lead];
        for (std::size_t i = 1; i <= m; ++i) {
            const LaurentPoly& bi = b[lead + i];
            if (!bi.is_zero() && !r[m - i].is_zero()) {
                acc -= bi * r[m - i];
            }
        }
        r[m] = acc * b0_inv;
    }
    return TruncSeries(a.var(), order, std::move(r));
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner)
{
    if (outer.var() != inner.var()) {
        throw std::invalid_argument("series variable mismatch: '" + outer.var() + "' vs '" + inner.var() + "'");
    }
    if (!inner[0].is_zero()) {
        throw std::domain_error("inner series of a composition must have zero constant term");
    }
    const std::size_t order = std::min(outer.order(), inner.order());
    const TruncSeries g = inner.truncated(order);
    TruncSeries result(outer.var(), order, {outer[order]});
    for (std::size_t i = order; i-- > 0;) {
        result = series_mul(result, g);
        std::vector<LaurentPoly> c = result.coeffs();
        c[0] += outer[i];
        result = TruncSeries(outer.var(), order, std::move(c));
    }
    return result;
}

}  // namespace fstirling
