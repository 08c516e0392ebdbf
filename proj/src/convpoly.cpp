#include "fstirling/convpoly.hpp"

#include <stdexcept>

#include "fstirling/factorial.hpp"

namespace fstirling {

namespace {

LaurentPoly rat(const Integer& num, const Integer& den = 1)
{
    return LaurentPoly(Rational(num) / Rational(den));
}

TruncSeries series_from(const std::vector<Rational>& coeffs, std::size_t order)
{
    std::vector<LaurentPoly> c(order + 1);
    c[0] = LaurentPoly(1);
    for (std::size_t i = 1; i <= order && i - 1 < coeffs.size(); ++i) {
        c[i] = LaurentPoly(coeffs[i - 1]);
    }
    return TruncSeries("z", order, std::move(c));
}

}  // namespace

SigmaVariant parse_sigma_variant(const std::string& text)
{
    if (text == "sigma") {
        return SigmaVariant::sigma;
    }
    if (text == "sigma-tilde") {
        return SigmaVariant::sigma_tilde;
    }
    throw std::invalid_argument("unknown sigma variant '" + text + "' (sigma | sigma-tilde)");
}

const char* to_string(SigmaVariant v)
{
    return v == SigmaVariant::sigma ? "sigma" : "sigma-tilde";
}

LaurentPoly sigma_eval(const Triangle& tri, SigmaVariant variant, long n, long x)
{
    if (n < 0 || x < n + 1) {
        throw std::domain_error("sigma_n(x) needs integers n >= 0 and x >= n+1, got n = " + std::to_string(n) +
                                ", x = " + std::to_string(x));
    }
    const LaurentPoly denom = variant == SigmaVariant::sigma ? bang_f(tri.setting().f(), x)
                                                             : LaurentPoly(to_rational(factorial(x)));
    return tri.at(x, x - n) * rat(factorial(x - n - 1)) * denom.inverse();
}

LaurentPoly sigma_eval(const FtSetting& setting, SigmaVariant variant, long n, long x)
{
    if (n < 0 || x < n + 1) {
        return sigma_eval(s1_triangle(setting, 0), variant, n, x);  // raises the domain error
    }
    return sigma_eval(s1_triangle(setting, x), variant, n, x);
}

Report sigma_recurrence_check(const FtSetting& setting, long n_max, long x_max)
{
    const Triangle tri = s1_triangle(setting, std::max(x_max, n_max + 1) + 1);
    const LaurentPoly& t = setting.t();
    Report rep;
    rep.identity = "convpoly-rec";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(t)}, {"n_max", n_max}, {"x_max", x_max}};
    for (long x = 2; x <= x_max; ++x) {
        for (long n = 1; n < x && n <= n_max; ++n) {
            const LaurentPoly fx = setting.f().eval(x);
            const LaurentPoly shift = fx * t.pow(-x);
            for (const auto variant : {SigmaVariant::sigma, SigmaVariant::sigma_tilde}) {
                const LaurentPoly lead = variant == SigmaVariant::sigma ? setting.f().eval(x + 1) : LaurentPoly(x + 1);
                const LaurentPoly lhs = lead * sigma_eval(tri, variant, n, x + 1);
                const LaurentPoly rhs = LaurentPoly(x - n) * sigma_eval(tri, variant, n, x) +
                                        shift * sigma_eval(tri, variant, n - 1, x);
                rep.cells.push_back(Cell::exact({variant == SigmaVariant::sigma ? 1 : 2, n, x}, lhs, rhs));
            }
        }
    }
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 1; k <= n + 1; ++k) {
            const LaurentPoly kf_inv = rat(1, factorial(k - 1));
            rep.cells.push_back(Cell::exact(
                {3, n, k}, tri.at(n + 1, k),
                bang_f(setting.f(), n + 1) * kf_inv * sigma_eval(tri, SigmaVariant::sigma, n + 1 - k, n + 1)));
            rep.cells.push_back(Cell::exact(
                {4, n, k}, tri.at(n + 1, k),
                rat(factorial(n + 1)) * kf_inv * sigma_eval(tri, SigmaVariant::sigma_tilde, n + 1 - k, n + 1)));
        }
    }
    rep.notes.push_back("recurrences checked for n >= 1; at n = 0 the extra [n = 0] term does not hold "
                        "because [x+1,x+1] = 1 is already carried by the first term");
    return rep;
}

GfFamily parse_gf_family(const std::string& text)
{
    if (text == "classic") {
        return GfFamily::classic;
    }
    if (text == "alpha") {
        return GfFamily::alpha;
    }
    if (text == "alphabeta") {
        return GfFamily::alphabeta;
    }
    throw std::invalid_argument("unknown family '" + text + "' (classic | alpha | alphabeta)");
}

const char* to_string(GfFamily f)
{
    switch (f) {
    case GfFamily::classic:
        return "classic";
    case GfFamily::alpha:
        return "alpha";
    case GfFamily::alphabeta:
        return "alphabeta";
    }
    return "?";
}

TruncSeries bernoulli_factor(const Rational& alpha, std::size_t order)
{
    if (alpha == 0) {
        throw std::invalid_argument("alpha must be nonzero");
    }
    const std::size_t o = order + 1;
    std::vector<LaurentPoly> num(o + 1);
    num[1] = LaurentPoly(alpha);
    const TruncSeries denom = TruncSeries::one("z", o) - TruncSeries::exp_linear("z", o, -alpha);
    return series_div(TruncSeries("z", o, std::move(num)), denom);
}

Report stirlingpoly_gf_check(GfFamily family, const Rational& alpha, const Rational& beta, long n_max, long x_max)
{
    Rational a = alpha;
    Rational shift = beta;
    switch (family) {
    case GfFamily::classic:
        a = 1;
        shift = 0;
        break;
    case GfFamily::alpha:
        shift = 1 - alpha;
        break;
    case GfFamily::alphabeta:
        break;
    }
    const FtSetting setting(FSpec::linear(a, shift), LaurentPoly(1));
    const Triangle tri = s1_triangle(setting, x_max);
    const auto order = static_cast<std::size_t>(n_max);
    const TruncSeries bern = bernoulli_factor(a, order);
    const TruncSeries prefix = TruncSeries::exp_linear("z", order, shift);

    Report rep;
    rep.identity = "gf-special";
    rep.params = {{"family", to_string(family)},
                  {"f", setting.f().render()},
                  {"n_max", n_max},
                  {"x_max", x_max}};
    for (long x = 1; x <= x_max; ++x) {
        const TruncSeries rhs = series_mul(prefix, series_int_pow(bern, static_cast<unsigned long>(x)));
        for (long n = 0; n < x && n <= n_max; ++n) {
            const LaurentPoly lhs = tri.at(x, x - n) * rat(factorial(x - n - 1), factorial(x - 1));
            rep.cells.push_back(Cell::exact({n, x}, lhs, rhs[static_cast<std::size_t>(n)]));
        }
    }
    return rep;
}

std::vector<std::vector<Integer>> eulerian2_triangle(long N)
{
    if (N < 0) {
        throw std::invalid_argument("Eulerian triangle size must be non-negative");
    }
    std::vector<std::vector<Integer>> e;
    e.push_back({Integer(1)});
    for (long n = 1; n <= N; ++n) {
        const auto& prev = e.back();
        std::vector<Integer> row(static_cast<std::size_t>(n), 0);
        for (long k = 0; k < n; ++k) {
            Integer v = 0;
            if (k < static_cast<long>(prev.size())) {
                v += Integer(k + 1) * prev[static_cast<std::size_t>(k)];
            }
            if (k >= 1 && k - 1 < static_cast<long>(prev.size())) {
                v += Integer(2 * n - 1 - k) * prev[static_cast<std::size_t>(k - 1)];
            }
            row[static_cast<std::size_t>(k)] = v;
        }
        e.push_back(std::move(row));
    }
    return e;
}

Report eulerian2_identity_check(long n_max, long x_max)
{
    const auto e = eulerian2_triangle(n_max);
    const auto c = classical_stirling1(x_max);
    Report rep;
    rep.identity = "eulerian2";
    rep.params = {{"n_max", n_max}, {"x_max", x_max}};
    for (long n = 0; n <= n_max; ++n) {
        for (long x = n + 1; x <= x_max; ++x) {
            Integer rhs = 0;
            const auto& row = e[static_cast<std::size_t>(n)];
            for (long k = 0; k < static_cast<long>(row.size()); ++k) {
                rhs += row[static_cast<std::size_t>(k)] * binomial(x + k, 2 * n);
            }
            rep.cells.push_back(
                Cell::exact({n, x}, rat(c[static_cast<std::size_t>(x)][static_cast<std::size_t>(x - n)]), rat(rhs)));
        }
    }
    return rep;
}

std::vector<Rational> stirling_conv_coeffs(std::size_t order)
{
    const TruncSeries b = bernoulli_factor(1, order);
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= order; ++i) {
        out.push_back(b[i].constant_value());
    }
    return out;
}

TruncSeries series_integer_power(const TruncSeries& a, long x)
{
    if (x >= 0) {
        return series_int_pow(a, static_cast<unsigned long>(x));
    }
    return series_div(TruncSeries::one(a.var(), a.order()), series_int_pow(a, static_cast<unsigned long>(-x)));
}

TruncSeries conv_fixed_point(const TruncSeries& s, long t_shift, std::size_t iterations)
{
    const std::size_t order = s.order();
    TruncSeries cur = TruncSeries::one(s.var(), order);
    for (std::size_t i = 0; i < iterations; ++i) {
        const TruncSeries inner = series_integer_power(cur, t_shift).shifted_up(1).truncated(order);
        cur = series_compose(s, inner);
    }
    return cur;
}

Report conv_family_shift_check(const std::vector<Rational>& coeffs, long t_shift, long n_max, long x_max)
{
    if (t_shift < 0 || n_max < 0) {
        throw std::invalid_argument("conv-shift needs t_shift >= 0 and n_max >= 0");
    }
    const auto order = static_cast<std::size_t>(n_max);
    const TruncSeries s = series_from(coeffs, order);
    const TruncSeries fixed = conv_fixed_point(s, t_shift, order + 1);

    Report rep;
    rep.identity = "conv-shift";
    auto cj = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) {
        cj.push_back(to_string(c));
    }
    rep.params = {{"coeffs", cj}, {"t_shift", t_shift}, {"n_max", n_max}, {"x_max", x_max}};

    // Coefficient k must be final once more than k iterations have run.
    bool stable = true;
    for (std::size_t it = 1; it <= order; ++it) {
        const TruncSeries partial = conv_fixed_point(s, t_shift, it);
        for (std::size_t k = 0; k < it; ++k) {
            stable = stable && partial[k] == fixed[k];
        }
    }
    rep.notes.push_back(stable ? "fixed-point coefficient k settled after k+1 iterations"
                               : "fixed-point coefficients did not settle as expected");

    const bool geometric = coeffs.size() == 1 && coeffs[0] == 1 && t_shift == 1;
    for (long x = 1; x <= x_max; ++x) {
        const TruncSeries lhs_pow = series_integer_power(fixed, x);
        for (long n = 0; n <= n_max; ++n) {
            const long y = x + t_shift * n;
            if (y == 0) {
                rep.notes.push_back("skipped n = " + std::to_string(n) + ", x = " + std::to_string(x) +
                                    " (x + t n = 0)");
                continue;
            }
            const LaurentPoly sn = series_integer_power(s, y)[static_cast<std::size_t>(n)];
            const LaurentPoly lhs = LaurentPoly(Rational(x) / Rational(y)) * sn;
            rep.cells.push_back(Cell::exact({1, n, x}, lhs, lhs_pow[static_cast<std::size_t>(n)]));
            if (geometric) {
                rep.cells.push_back(
                    Cell::exact({2, n, x}, rat(binomial(x + n - 1, n)), lhs_pow[static_cast<std::size_t>(n)]));
            }
        }
    }
    return rep;
}

ExperimentalFit fit_experimental_gf(const FtSetting& setting, long x, long N)
{
    if (x == 0) {
        throw std::invalid_argument("x = 0 makes the triangular system singular");
    }
    if (N < 0 || x < N + 1) {
        throw std::domain_error("fit targets sigma_n(x) for n <= N need x >= N+1, got x = " + std::to_string(x) +
                                ", N = " + std::to_string(N));
    }
    const Triangle tri = s1_triangle(setting, x);
    const LaurentPoly sigma0_inv = sigma_eval(tri, SigmaVariant::sigma, 0, x).inverse();
    std::vector<LaurentPoly> targets(static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n) {
        targets[static_cast<std::size_t>(n)] = sigma_eval(tri, SigmaVariant::sigma, n, x) * sigma0_inv;
    }
    const auto order = static_cast<std::size_t>(N);
    std::vector<LaurentPoly> g(order + 1);
    g[0] = LaurentPoly(1);
    const LaurentPoly inv_x(Rational(1) / Rational(x));
    for (std::size_t n = 1; n <= order; ++n) {
        // g_n enters [z^n] F^x linearly with coefficient x.
        const TruncSeries partial = series_integer_power(TruncSeries("z", order, g), x);
        g[n] = (targets[n] - partial[n]) * inv_x;
    }
    ExperimentalFit fit{TruncSeries("z", order, g), Report{}};
    fit.report.identity = "experimental-fit";
    fit.report.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"x", x}, {"N", N}};
    const TruncSeries power = series_integer_power(fit.series, x);
    for (long n = 0; n <= N; ++n) {
        fit.report.cells.push_back(
            Cell::exact({x, n}, targets[static_cast<std::size_t>(n)], power[static_cast<std::size_t>(n)]));
    }
    return fit;
}

Report experimental_fit_check(const FtSetting& setting, long n_max)
{
    Report rep;
    rep.identity = "experimental-fit";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"n_max", n_max}};
    rep.notes.push_back("targets normalized as sigma_n(x)/sigma_0(x) so that [z^0] F^x = 1");
    for (long n = 1; n <= n_max; ++n) {
        const ExperimentalFit fit = fit_experimental_gf(setting, n, n - 1);
        for (const auto& c : fit.report.cells) {
            if (!c.pass) {
                Cell bad = c;
                bad.indices.insert(bad.indices.begin(), 0);
                rep.cells.push_back(std::move(bad));
            }
        }
        const TruncSeries f_minus_one = fit.series - TruncSeries::one("z", fit.series.order());
        for (long k = 1; k <= n; ++k) {
            const auto m = static_cast<std::size_t>(n - k);
            // f_{n-k}(n) as fitted: the reproduced target
            const LaurentPoly lhs = fit.report.cells[m].lhs;
            LaurentPoly rhs = n == k ? LaurentPoly(1) : LaurentPoly();
            TruncSeries power = TruncSeries::one("z", fit.series.order());
            for (long j = 1; j <= n - k; ++j) {
                power = series_mul(power, f_minus_one);
                rhs += rat(binomial(n, j)) * power[m];
            }
            rep.cells.push_back(Cell::exact({n, k}, lhs, rhs));
        }
    }
    return rep;
}

}  // namespace fstirling
