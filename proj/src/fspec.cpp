#include "fstirling/fspec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fstirling {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

long parse_long(std::string_view s)
{
    const Rational r = parse_rational(s);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    }
    return r.get_num().get_si();
}

std::vector<Rational> read_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read table file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("table file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("table file '" + path + "' must be a non-empty JSON array");
    }
    std::vector<Rational> values;
    for (const auto& v : j) {
        if (v.is_string()) {
            values.push_back(parse_rational(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            values.emplace_back(v.get<long>());
        } else {
            throw std::invalid_argument("table entries must be rational strings or integers");
        }
    }
    return values;
}

}  // namespace

FSpec FSpec::linear(const Rational& alpha, const Rational& beta)
{
    FSpec s;
    s.kind_ = Kind::linear;
    s.params_ = {alpha, beta};
    return s;
}

FSpec FSpec::poly(std::vector<Rational> coeffs)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("poly needs at least one coefficient");
    }
    FSpec s;
    s.kind_ = Kind::poly;
    s.params_ = std::move(coeffs);
    return s;
}

FSpec FSpec::qpow(long offset)
{
    FSpec s;
    s.kind_ = Kind::qpow;
    s.offset_ = offset;
    return s;
}

FSpec FSpec::qpow(const Rational& base, long offset)
{
    if (base == 0) {
        throw std::invalid_argument("qpow base must be nonzero");
    }
    FSpec s;
    s.kind_ = Kind::qpow;
    s.base_ = base;
    s.offset_ = offset;
    return s;
}

FSpec FSpec::table(std::vector<Rational> values, std::string source)
{
    if (values.empty()) {
        throw std::invalid_argument("empty table");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) {
            throw std::invalid_argument("table value f(" + std::to_string(i + 1) + ") is zero");
        }
    }
    FSpec s;
    s.kind_ = Kind::table;
    s.params_ = std::move(values);
    s.source_ = std::move(source);
    return s;
}

std::optional<std::size_t> FSpec::table_size() const
{
    if (kind_ != Kind::table) {
        return std::nullopt;
    }
    return params_.size();
}

LaurentPoly FSpec::eval(long n) const
{
    if (n < 1) {
        throw std::domain_error("f is defined on positive integers, got n = " + std::to_string(n));
    }
    LaurentPoly value;
    switch (kind_) {
    case Kind::linear:
        value = LaurentPoly(Rational(params_[0] * n + params_[1]));
        break;
    case Kind::poly: {
        Rational acc = 0;
        for (auto it = params_.rbegin(); it != params_.rend(); ++it) {
            acc = acc * n + *it;
        }
        value = LaurentPoly(acc);
        break;
    }
    case Kind::qpow:
        value = base_ ? LaurentPoly(fstirling::pow(*base_, n + offset_))
                      : LaurentPoly::monomial(1, n + offset_, symbol());
        break;
    case Kind::table:
        if (static_cast<std::size_t>(n) > params_.size()) {
            throw std::domain_error("f(" + std::to_string(n) + ") is past the end of a table of length " +
                                    std::to_string(params_.size()));
        }
        value = LaurentPoly(params_[static_cast<std::size_t>(n - 1)]);
        break;
    }
    if (value.is_zero()) {
        throw std::domain_error("f(" + std::to_string(n) + ") = 0");
    }
    return value;
}

Rational FSpec::eval_rational(long n) const
{
    if (is_symbolic()) {
        throw std::domain_error("f = " + render() + " is symbolic; a rational value is required");
    }
    return eval(n).constant_value();
}

std::string FSpec::render() const
{
    std::ostringstream os;
    switch (kind_) {
    case Kind::linear:
        os << "linear:" << to_string(params_[0]) << ',' << to_string(params_[1]);
        break;
    case Kind::poly:
        os << "poly:";
        for (std::size_t i = 0; i < params_.size(); ++i) {
            os << (i ? "," : "") << to_string(params_[i]);
        }
        break;
    case Kind::qpow:
        os << "qpow:";
        if (base_) {
            os << to_string(*base_) << ',';
        }
        os << offset_;
        break;
    case Kind::table:
        os << "table:" << source_;
        break;
    }
    return os.str();
}

FSpec parse_fspec(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("f spec needs a '<kind>:' prefix, got '" + std::string(text) + "'");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (kind == "table") {
        if (rest.empty()) {
            throw std::invalid_argument("table spec needs a file path");
        }
        std::string path(rest);
        return FSpec::table(read_table(path), path);
    }
    const auto fields = split(rest, ',');
    if (kind == "linear") {
        if (fields.size() != 2) {
            throw std::invalid_argument("linear spec takes exactly two parameters: linear:<alpha>,<beta>");
        }
        return FSpec::linear(parse_rational(fields[0]), parse_rational(fields[1]));
    }
    if (kind == "poly") {
        std::vector<Rational> c;
        for (auto f : fields) {
            c.push_back(parse_rational(f));
        }
        return FSpec::poly(std::move(c));
    }
    if (kind == "qpow") {
        if (fields.size() == 1) {
            return FSpec::qpow(parse_long(fields[0]));
        }
        if (fields.size() == 2) {
            return FSpec::qpow(parse_rational(fields[0]), parse_long(fields[1]));
        }
        throw std::invalid_argument("qpow spec is qpow:<offset> or qpow:<base>,<offset>");
    }
    throw std::invalid_argument("unknown f spec kind '" + std::string(kind) + "'");
}

LaurentPoly eval_f(const FSpec& spec, long n)
{
    return spec.eval(n);
}

LaurentPoly parse_t(std::string_view text)
{
    if (text == "symbolic" || text == "t") {
        return LaurentPoly::variable("t");
    }
    const Rational r = parse_rational(text);
    if (r == 0) {
        throw std::invalid_argument("t must be nonzero");
    }
    return LaurentPoly(r);
}

std::string render_t(const LaurentPoly& t)
{
    if (t.is_constant()) {
        return to_string(t.constant_value());
    }
    if (t == LaurentPoly::variable(t.var())) {
        return "symbolic";
    }
    return t.to_string();
}

FtSetting::FtSetting(FSpec f, LaurentPoly t) : f_(std::move(f)), t_(std::move(t))
{
    if (!t_.is_monomial()) {
        throw std::invalid_argument("t must be a nonzero rational or a monomial, got " + t_.to_string());
    }
    if (f_.is_symbolic() && !t_.is_constant()) {
        throw std::invalid_argument("symbolic f (" + f_.render() + ") requires a numeric t; "
                                    "bivariate coefficients are not supported");
    }
}

LaurentPoly FtSetting::root(long k) const
{
    return f_.eval(k) * t_.pow(-k);
}

RootedT::RootedT(const FtSetting& setting, long lcm) : base_(setting), lcm_(lcm)
{
    if (lcm < 1) {
        throw std::invalid_argument("root lcm must be positive");
    }
    const LaurentPoly& t = setting.t();
    const auto& [e, c] = *t.terms().begin();
    const auto coeff_root = exact_root(c, static_cast<unsigned long>(lcm));
    if (t.is_constant() && coeff_root) {
        t_ = t;
        unit_root_ = LaurentPoly(*coeff_root);
        return;
    }
    if (setting.f().is_symbolic()) {
        throw std::invalid_argument("t = " + render_t(t) + " has no exact " + std::to_string(lcm) +
                                    "-th root and f is symbolic; a second formal variable would be needed");
    }
    if (t.is_constant()) {
        // No exact root: check generically in u with t = u^lcm.
        generic_ = true;
        t_ = LaurentPoly::monomial(1, lcm, kVar);
        unit_root_ = LaurentPoly::variable(kVar);
        return;
    }
    if (!coeff_root) {
        throw std::invalid_argument("coefficient of t = " + t.to_string() + " has no exact root");
    }
    t_ = LaurentPoly::monomial(c, e * lcm, kVar);
    unit_root_ = LaurentPoly::monomial(*coeff_root, e, kVar);
}

LaurentPoly RootedT::root(long d) const
{
    if (d < 1 || lcm_ % d != 0) {
        throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(lcm_));
    }
    return unit_root_.pow(lcm_ / d);
}

}  // namespace fstirling
