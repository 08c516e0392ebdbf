#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "fstirling/laurent.hpp"

namespace fstirling {

/// Truncated formal power series sum_{i <= order} c_i z^i with Laurent
/// polynomial coefficients.
///
/// Coefficients past the truncation order are unknown, not zero: reading one
/// throws std::out_of_range. Binary operations carry the smaller order.
class TruncSeries
{
public:
    TruncSeries(std::string var, std::size_t order, std::vector<LaurentPoly> coeffs = {});

    static TruncSeries one(std::string var, std::size_t order);
    /// exp(c z) for rational c.
    static TruncSeries exp_linear(std::string var, std::size_t order, const Rational& c);

    const std::string& var() const { return var_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const LaurentPoly& operator[](std::size_t i) const;
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    TruncSeries truncated(std::size_t order) const;
    /// Multiplies by z^k; the order grows by k (the low coefficients are exactly zero).
    TruncSeries shifted_up(std::size_t k) const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const LaurentPoly& scalar);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const LaurentPoly& s) { return a *= s; }

    nlohmann::ordered_json to_json() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_var(const TruncSeries& rhs) const;

    std::string var_;
    std::vector<LaurentPoly> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_int_pow(const TruncSeries& a, unsigned long exponent);

/// a / b. A common leading run of zero coefficients is cancelled first, which
/// lowers the result order by its length; the first surviving coefficient of b
/// must be a monomial. Throws std::domain_error otherwise.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

/// outer(inner(z)); inner must have a zero constant term.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

}  // namespace fstirling
