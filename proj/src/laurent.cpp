#include "fstirling/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace fstirling {

LaurentPoly::LaurentPoly(const Rational& constant)
{
    add_term(0, constant);
}

LaurentPoly::LaurentPoly(long constant)
{
    add_term(0, Rational(constant));
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, Exponent exponent, std::string var)
{
    LaurentPoly p;
    p.var_ = std::move(var);
    p.add_term(exponent, coeff);
    return p;
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPoly::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const
{
    if (terms_.empty()) {
        throw std::domain_error("min_exponent of zero");
    }
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const
{
    if (terms_.empty()) {
        throw std::domain_error("max_exponent of zero");
    }
    return terms_.rbegin()->first;
}

Rational LaurentPoly::constant_value() const
{
    if (!is_constant()) {
        throw std::domain_error("expected a constant, got " + to_string());
    }
    return coeff(0);
}

void LaurentPoly::add_term(Exponent e, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void LaurentPoly::adopt_var(const LaurentPoly& other)
{
    const bool mine = !is_constant();
    const bool theirs = !other.is_constant();
    if (mine && theirs && var_ != other.var_) {
        throw std::invalid_argument("mixed formal variables '" + var_ + "' and '" + other.var_ + "'");
    }
    if ((theirs && !mine) || var_.empty()) {
        var_ = other.var_;
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    adopt_var(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    adopt_var(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    adopt_var(rhs);
    TermMap acc;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            acc[ea + eb] += ca * cb;
        }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    terms_ = std::move(acc);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    if (is_monomial()) {
        const auto& [e, c] = *terms_.begin();
        return monomial(fstirling::pow(c, exponent), e * exponent, var_);
    }
    LaurentPoly result = monomial(1, 0, var_);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly LaurentPoly::inverse() const
{
    if (!is_monomial()) {
        throw std::domain_error("only monomials are invertible, got " + to_string());
    }
    const auto& [e, c] = *terms_.begin();
    return monomial(1 / c, -e, var_);
}

Rational LaurentPoly::evaluate(const Rational& at) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c * fstirling::pow(at, e);
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute_power(long factor, std::string new_var) const
{
    if (factor == 0) {
        throw std::invalid_argument("substitution factor must be nonzero");
    }
    LaurentPoly r;
    r.var_ = std::move(new_var);
    for (const auto& [e, c] : terms_) {
        r.add_term(e * factor, c);
    }
    return r;
}

LaurentPoly LaurentPoly::with_var(std::string var) const
{
    LaurentPoly r = *this;
    r.var_ = std::move(var);
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    const std::string v = var_.empty() ? "t" : var_;
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (sgn(c) < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (e == 0) {
            os << fstirling::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << fstirling::to_string(mag) << '*';
        }
        os << v;
        if (e != 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

nlohmann::ordered_json LaurentPoly::to_json(std::string_view default_var) const
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [e, c] : terms_) {
        terms[std::to_string(e)] = fstirling::to_string(c);
    }
    nlohmann::ordered_json j;
    j["var"] = var_.empty() ? std::string(default_var) : var_;
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j)
{
    LaurentPoly p;
    p.var_ = j.at("var").get<std::string>();
    for (const auto& [key, value] : j.at("terms").items()) {
        std::size_t used = 0;
        const long e = std::stol(key, &used);
        if (used != key.size()) {
            throw std::invalid_argument("bad exponent key '" + key + "'");
        }
        p.add_term(e, parse_rational(value.get<std::string>()));
    }
    return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b)
{
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b)
{
    a -= b;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r = a;
    r *= b;
    return r;
}

LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b)
{
    return a * b.inverse();
}

std::vector<LaurentPoly> poly_product_expand(std::span<const LaurentPoly> roots)
{
    std::vector<LaurentPoly> c{LaurentPoly(1)};
    for (const auto& r : roots) {
        std::vector<LaurentPoly> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] += c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace fstirling
