#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fstirling/laurent.hpp"

namespace fstirling {

/// The function f: positive integers -> coefficient values.
///
///   linear:a,b        f(n) = a n + b
///   poly:c0,c1,...    f(n) = c0 + c1 n + ...
///   qpow:k            f(n) = q^(n+k), q the formal variable
///   qpow:b,k          f(n) = b^(n+k) for a rational base b
///   table:<path>      f(n) = values[n-1], read from a JSON array of rationals
///
/// The Pochhammer k-symbol with increment h is linear:h,0 at t = 1.
/// f(n) = 0 is rejected at the point of evaluation.
class FSpec
{
public:
    enum class Kind { linear, poly, qpow, table };

    static FSpec linear(const Rational& alpha, const Rational& beta);
    static FSpec poly(std::vector<Rational> coeffs);
    static FSpec qpow(long offset);
    static FSpec qpow(const Rational& base, long offset);
    static FSpec table(std::vector<Rational> values, std::string source);

    Kind kind() const { return kind_; }
    /// Only the symbolic q-power kind produces non-constant values.
    bool is_symbolic() const { return kind_ == Kind::qpow && !base_; }
    static constexpr const char* symbol() { return "q"; }

    const std::vector<Rational>& params() const { return params_; }
    long offset() const { return offset_; }
    std::optional<std::size_t> table_size() const;

    /// f(n) for n >= 1. Throws std::domain_error for n < 1, f(n) = 0, or a
    /// table index past the end.
    LaurentPoly eval(long n) const;
    /// Same as eval() but requires a rational value.
    Rational eval_rational(long n) const;

    std::string render() const;

private:
    Kind kind_ = Kind::linear;
    std::vector<Rational> params_;
    std::optional<Rational> base_;
    long offset_ = 0;
    std::string source_;
};

/// Parses the DSL above. Throws std::invalid_argument on malformed text or a
/// bad table file.
FSpec parse_fspec(std::string_view text);
LaurentPoly eval_f(const FSpec& spec, long n);

/// "symbolic" (or "t") gives the formal variable t; anything else must be a
/// nonzero rational.
LaurentPoly parse_t(std::string_view text);
std::string render_t(const LaurentPoly& t);

/// One (f, t) configuration. t is a nonzero rational or a monomial in a single
/// formal variable; bivariate combinations (symbolic f with non-constant t)
/// are rejected at construction.
class FtSetting
{
public:
    FtSetting(FSpec f, LaurentPoly t);

    const FSpec& f() const { return f_; }
    const LaurentPoly& t() const { return t_; }

    /// f(k) t^(-k), the k-th root of the Pochhammer product.
    LaurentPoly root(long k) const;
    /// Same f, different t (used for t -> t^(1/p) substitutions).
    FtSetting with_t(LaurentPoly t) const { return FtSetting(f_, std::move(t)); }

private:
    FSpec f_;
    LaurentPoly t_;
};

/// Fractional powers t^(1/d) for every d dividing `lcm`.
///
/// A rational t with an exact lcm-th root stays numeric. Otherwise a fresh
/// variable u is introduced with t = u^lcm; for numeric t that check is then
/// generic in t (which implies the specific value).
class RootedT
{
public:
    static constexpr const char* kVar = "u";

    RootedT(const FtSetting& setting, long lcm);

    /// t written in the working variable.
    const LaurentPoly& t() const { return t_; }
    /// t^(1/d); d must divide lcm.
    LaurentPoly root(long d) const;
    FtSetting setting_with_root(long d) const { return base_.with_t(root(d)); }
    bool generic() const { return generic_; }
    long lcm() const { return lcm_; }

private:
    FtSetting base_;
    long lcm_;
    bool generic_ = false;
    LaurentPoly t_;
    LaurentPoly unit_root_;  // t^(1/lcm)
};

}  // namespace fstirling
