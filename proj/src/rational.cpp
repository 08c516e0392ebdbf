#include "fstirling/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fstirling {

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int digits)
{
    if (digits < 0) {
        throw std::invalid_argument("negative digit count");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer num = abs(value.get_num()) * scale * 2 + value.get_den();
    Integer den = value.get_den() * 2;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    std::string s = q.get_str(10);
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(value) < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

std::optional<Rational> exact_root(const Rational& value, unsigned long degree)
{
    if (degree == 0) {
        throw std::invalid_argument("root of degree zero");
    }
    if (degree == 1) {
        return value;
    }
    if (sgn(value) < 0 && degree % 2 == 0) {
        return std::nullopt;
    }
    Integer n, d;
    const Integer an = abs(value.get_num());
    if (mpz_root(n.get_mpz_t(), an.get_mpz_t(), degree) == 0) {
        return std::nullopt;
    }
    if (mpz_root(d.get_mpz_t(), value.get_den_mpz_t(), degree) == 0) {
        return std::nullopt;
    }
    if (sgn(value) < 0) {
        n = -n;
    }
    return Rational(n, d);
}

Integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace fstirling
