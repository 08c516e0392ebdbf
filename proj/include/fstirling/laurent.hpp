#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fstirling/rational.hpp"

namespace fstirling {

/// Finite Laurent polynomial in one formal variable over Q.
///
/// Zero coefficients are never stored, so equality is equality of the term
/// maps. A value with no non-constant term is compatible with any variable;
/// combining two non-constant values in different variables throws
/// std::invalid_argument (bivariate values are not representable).
class LaurentPoly
{
public:
    using Exponent = long;
    using TermMap = std::map<Exponent, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long constant);             // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational& coeff, Exponent exponent, std::string var);
    static LaurentPoly variable(std::string var) { return monomial(1, 1, std::move(var)); }

    const std::string& var() const { return var_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coeff(Exponent e) const;
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    /// The rational value of a constant; throws std::domain_error otherwise.
    Rational constant_value() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    /// Negative exponents are only defined for monomials.
    LaurentPoly pow(long exponent) const;
    /// Inverse of a monomial; throws std::domain_error otherwise.
    LaurentPoly inverse() const;

    Rational evaluate(const Rational& at) const;
    /// Maps var^e to new_var^(e * factor).
    LaurentPoly substitute_power(long factor, std::string new_var) const;
    LaurentPoly with_var(std::string var) const;

    /// Canonical text, ascending exponents, e.g. "1/2*t^-1+3+t^2".
    std::string to_string() const;
    nlohmann::ordered_json to_json(std::string_view default_var = "t") const;
    static LaurentPoly from_json(const nlohmann::json& j);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(Exponent e, const Rational& c);
    void adopt_var(const LaurentPoly& other);

    std::string var_;
    TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
/// Division by a monomial divisor; anything else throws std::domain_error.
LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b);

/// Coefficients c_0..c_m (in the auxiliary variable x) of prod_i (x + r_i).
/// The result is monic; an empty input gives [1].
std::vector<LaurentPoly> poly_product_expand(std::span<const LaurentPoly> roots);

}  // namespace fstirling
