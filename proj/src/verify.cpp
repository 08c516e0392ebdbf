#include "fstirling/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "fstirling/convpoly.hpp"
#include "fstirling/cyclotomic.hpp"
#include "fstirling/factorial.hpp"
#include "fstirling/fharmonic.hpp"
#include "fstirling/stirling.hpp"

namespace fstirling {
namespace {

using Grid = std::vector<std::vector<long>>;
using PartFn = std::function<Report(const std::vector<long>&)>;

long capped(const VerifyConfig& c, long limit)
{
    return c.soak ? c.max_n : std::min(c.max_n, limit);
}

std::string tag(const std::vector<long>& point)
{
    std::string s = "[";
    for (std::size_t i = 0; i < point.size(); ++i) {
        s += (i ? "," : "") + std::to_string(point[i]);
    }
    return s + "] ";
}

/// Evaluates every grid point (in parallel when asked) and merges the parts in
/// grid order. With `prefix` set, each cell's indices are led by its grid point.
Report sweep(Report into, const Grid& grid, const PartFn& fn, Exec exec, bool prefix = false)
{
    auto parts = parallel_map<Report>(grid.size(), [&](std::size_t i) { return fn(grid[i]); }, exec);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto& cell : parts[i].cells) {
            if (prefix) {
                cell.indices.insert(cell.indices.begin(), grid[i].begin(), grid[i].end());
            }
            into.cells.push_back(std::move(cell));
        }
        for (const auto& note : parts[i].notes) {
            into.notes.push_back(tag(grid[i]) + note);
        }
    }
    return into;
}

Report start(const std::string& name, const VerifyConfig& c)
{
    Report r;
    r.identity = name;
    r.params = {{"f", c.setting.f().render()}, {"t", render_t(c.setting.t())}, {"max_n", c.max_n}};
    return r;
}

Grid range2(long a0, long a1, long b0, long b1)
{
    Grid g;
    for (long a = a0; a <= a1; ++a) {
        for (long b = b0; b <= b1; ++b) {
            g.push_back({a, b});
        }
    }
    return g;
}

// Tabulated isobaric expansions for p = 2..5, keyed like ftilde_isobaric_expansion.
const std::map<long, IsobaricExpansion>& tabulated_isobaric()
{
    static const std::map<long, IsobaricExpansion> table = [] {
        std::map<long, IsobaricExpansion> t;
        t[2] = {{{2, 2}, 1}, {{1, 3}, -2}};
        t[3] = {{{2, 2, 2}, 1}, {{1, 2, 3}, -3}, {{1, 1, 4}, 3}};
        t[4] = {{{2, 2, 2, 2}, 1}, {{1, 2, 2, 3}, -4}, {{1, 1, 3, 3}, 2}, {{1, 1, 2, 4}, 4}, {{1, 1, 1, 5}, -4}};
        t[5] = {{{2, 2, 2, 2, 2}, 1}, {{1, 2, 2, 2, 3}, -5}, {{1, 1, 2, 3, 3}, 5}, {{1, 1, 2, 2, 4}, 5},
                {{1, 1, 1, 3, 4}, -5}, {{1, 1, 1, 2, 5}, -5}, {{1, 1, 1, 1, 6}, 5}};
        return t;
    }();
    return table;
}

Report suite_s1_oracle(const VerifyConfig& c)
{
    Report r = start("s1-oracle", c);
    r.append(s1_oracle_check(c.setting, c.max_n, c.exec));
    return r;
}

Report suite_s1_columns(const VerifyConfig& c)
{
    Report r = start("s1-columns", c);
    r.append(s1_column_closed_forms(c.setting, c.max_n));
    return r;
}

Report suite_s2_geom(const VerifyConfig& c)
{
    const long n_max = capped(c, 8);
    return sweep(start("s2-geom", c), range2(0, n_max, 0, 5),
                 [&](const auto& g) { return s2_geom_transform_check(c.setting, g[0], g[1]); }, c.exec);
}

Report suite_s2star_ogf(const VerifyConfig& c)
{
    Grid g;
    for (long k = 1; k <= 4; ++k) {
        g.push_back({k});
    }
    return sweep(start("s2star-ogf", c), g,
                 [&](const auto& p) { return s2star_ogf_check(c.setting.f(), p[0], c.max_n); }, c.exec);
}

Report suite_s2star_egf(const VerifyConfig& c)
{
    const long N = capped(c, 8);
    Grid g;
    for (long r = 1; r <= 4; ++r) {
        g.push_back({r});
    }
    return sweep(start("s2star-egf", c), g,
                 [&](const auto& p) { return s2star_egf_check(c.setting.f(), p[0], N); }, c.exec);
}

/// Sum of the isobaric expansion evaluated on row n+1 of the recurrence triangle.
LaurentPoly isobaric_value(const FtSetting& s, const Triangle& tri, long p, long n)
{
    LaurentPoly bracket;
    for (const auto& [key, coeff] : ftilde_isobaric_expansion(p)) {
        LaurentPoly term(coeff);
        for (long k : key) {
            term = term * tri.at(n + 1, k);
        }
        bracket += term;
    }
    const LaurentPoly pre = s.t().pow(p * triangular(n)) * bang_f(s.f(), n).pow(-p);
    return pre * bracket;
}

Report suite_harmonic_routes(const VerifyConfig& c)
{
    const long n_max = capped(c, 10);
    const Triangle tri = s1_triangle(c.setting, n_max + 1);
    Report r = sweep(start("harmonic-routes", c), range2(1, 5, 1, n_max),
        [&](const auto& g) {
            const long p = g[0];
            const long n = g[1];
            Report part;
            const LaurentPoly direct = fharmonic_direct(c.setting.f(), p, n, c.setting.t().pow(p));
            part.cells.push_back(Cell::exact({1, p, n}, harmonic_via_ftilde(c.setting, p, n), direct));
            if (is_prime(p)) {
                part.cells.push_back(Cell::exact({2, p, n}, harmonic_via_roots(c.setting, p, n), direct));
            }
            if (p <= 4) {
                const SubstResult sub = harmonic_via_subst(c.setting, p, n);
                part.cells.push_back(Cell::exact({3, p, n}, sub.value, sub.direct));
                if (sub.generic && n == 1) {
                    part.notes.push_back("t^(1/p) carried as a formal root u, t = u^p");
                }
            }
            if (p >= 2) {
                part.cells.push_back(Cell::exact({4, p, n}, isobaric_value(c.setting, tri, p, n), direct));
            }
            return part;
        },
        c.exec);
    r.notes.push_back("routes: 1 f-tilde powers, 2 root-of-unity product, 3 t^(1/p) substitution, "
                      "4 isobaric expansion on the recurrence row, 5 isobaric terms against the tabulated list");
    for (long p = 2; p <= 5; ++p) {
        const IsobaricExpansion mine = ftilde_isobaric_expansion(p);
        const IsobaricExpansion& tabulated = tabulated_isobaric().at(p);
        std::map<std::vector<long>, std::pair<Rational, Rational>> both;
        for (const auto& [k, v] : mine) {
            both[k].first = v;
        }
        for (const auto& [k, v] : tabulated) {
            both[k].second = v;
        }
        long term = 0;
        for (const auto& [k, v] : both) {
            r.cells.push_back(Cell::exact({5, p, term++}, LaurentPoly(v.first), LaurentPoly(v.second)));
        }
    }
    return r;
}

Report suite_wf(const VerifyConfig& c)
{
    Report r = start("wf", c);
    r.append(s1_from_wf_check(c.setting, capped(c, 10)));
    return r;
}

Report suite_corollary(const VerifyConfig& c)
{
    Report r = start("corollary", c);
    r.append(corollary_expansions_check(c.setting, capped(c, 10)));
    return r;
}

Report suite_prop1(const VerifyConfig& c)
{
    return sweep(start("prop1", c), range2(1, 3, 1, capped(c, 6)),
                 [&](const auto& g) { return prop1_recurrence_check(c.setting, g[0], g[1]); }, c.exec);
}

Report suite_prop2(const VerifyConfig& c)
{
    return sweep(start("prop2", c), range2(2, 6, 1, capped(c, 10)),
                 [&](const auto& g) { return prop2_functional_eq_check(c.setting, g[0], g[1]); }, c.exec);
}

Report suite_euler_identity(const VerifyConfig& c)
{
    const long n_max = c.soak ? 2 * c.max_n : std::max<long>(20, 2 * c.max_n);
    Report r = sweep(start("euler-identity", c), range2(3, 6, 1, n_max),
                     [&](const auto& g) { return stirling_harmonic_identity_check(g[0], g[1]); }, c.exec);
    r.notes.push_back("classical f(n) = n, t = 1 identity, independent of the configured f and t");
    return r;
}

Report suite_convpoly_rec(const VerifyConfig& c)
{
    const long x_max = capped(c, 10);
    Report r = start("convpoly-rec", c);
    r.append(sigma_recurrence_check(c.setting, x_max - 1, x_max));
    return r;
}

Report suite_gf_special(const VerifyConfig& c)
{
    const long n_max = capped(c, 6);
    const long x_max = capped(c, 8);
    Report r = sweep(start("gf-special", c), {{0}, {1}, {2}},
        [&](const auto& g) {
            switch (g[0]) {
            case 0: return stirlingpoly_gf_check(GfFamily::classic, 1, 0, n_max, x_max);
            case 1: return stirlingpoly_gf_check(GfFamily::alpha, 2, 0, n_max, x_max);
            default: return stirlingpoly_gf_check(GfFamily::alphabeta, 2, 1, n_max, x_max);
            }
        },
        c.exec, true);
    r.notes.push_back("families at t = 1: 0 classic, 1 alpha = 2, 2 alpha = 2 beta = 1");
    return r;
}

Report suite_eulerian2(const VerifyConfig& c)
{
    Report r = start("eulerian2", c);
    r.append(eulerian2_identity_check(capped(c, 6), c.soak ? 2 * c.max_n : 12));
    return r;
}

Report suite_conv_shift(const VerifyConfig& c)
{
    const long n_max = capped(c, 5);
    const long x_max = capped(c, 6);
    const std::vector<Rational> one_plus_z{Rational(1)};
    const std::vector<Rational> stirling = stirling_conv_coeffs(static_cast<std::size_t>(n_max));
    Report r = sweep(start("conv-shift", c), range2(1, 2, 0, 2),
        [&](const auto& g) { return conv_family_shift_check(g[0] == 1 ? one_plus_z : stirling, g[1], n_max, x_max); },
        c.exec, true);
    r.notes.push_back("leading indices [S, t_shift]: S = 1 is 1+z, S = 2 is z/(1-e^-z)");
    return r;
}

Report suite_experimental_fit(const VerifyConfig& c)
{
    Report r = start("experimental-fit", c);
    r.append(experimental_fit_check(c.setting, capped(c, 10)));
    return r;
}

Report suite_euler_sum(const VerifyConfig& c)
{
    Report r = start("euler-sum-numeric", c);
    const FSpec& f = c.setting.f();
    if (f.is_symbolic()) {
        r.notes.push_back("skipped: symbolic f has no numeric partial sums");
        return r;
    }
    const long N = f.table_size() ? static_cast<long>(*f.table_size()) : (c.soak ? 100 * c.max_n : 200);
    for (long rr = 2; rr <= 3; ++rr) {
        const Rational a = euler_sum_numeric(f, rr, N, EulerMode::fzeta, c.exec);
        const Rational b = euler_sum_numeric(f, rr, N, EulerMode::fzeta2r, c.exec);
        const Rational h = euler_sum_numeric(f, rr, N, EulerMode::harmonic_over_f, c.exec);
        r.cells.push_back(Cell::exact({1, rr, N}, LaurentPoly(h), LaurentPoly(Rational((a * a + b) / 2))));
        long m = 0;
        for (EulerMode mode : {EulerMode::harmonic_over_f, EulerMode::fzeta, EulerMode::fzeta2r}) {
            r.cells.push_back(Cell::exact({2, rr, m++}, LaurentPoly(euler_sum_numeric(f, rr, N, mode, Exec::serial)),
                                          LaurentPoly(euler_sum_numeric(f, rr, N, mode, Exec::parallel))));
        }
    }
    r.notes.push_back("[1, r, N] partial-sum identity 2 S_H = S_1^2 + S_2; [2, r, mode] serial against parallel");
    return r;
}

struct SuiteEntry
{
    std::string name;
    Report (*run)(const VerifyConfig&);
};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> entries{
        {"s1-oracle", suite_s1_oracle},
        {"s1-columns", suite_s1_columns},
        {"s2-geom", suite_s2_geom},
        {"s2star-ogf", suite_s2star_ogf},
        {"s2star-egf", suite_s2star_egf},
        {"harmonic-routes", suite_harmonic_routes},
        {"wf", suite_wf},
        {"corollary", suite_corollary},
        {"prop1", suite_prop1},
        {"prop2", suite_prop2},
        {"euler-identity", suite_euler_identity},
        {"convpoly-rec", suite_convpoly_rec},
        {"gf-special", suite_gf_special},
        {"eulerian2", suite_eulerian2},
        {"conv-shift", suite_conv_shift},
        {"experimental-fit", suite_experimental_fit},
        {"euler-sum-numeric", suite_euler_sum},
    };
    return entries;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) {
            out.push_back(e.name);
        }
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(const std::string& name, const VerifyConfig& config)
{
    if (config.max_n < 1) {
        throw std::invalid_argument("max-n must be at least 1");
    }
    for (const auto& e : registry()) {
        if (e.name == name) {
            return e.run(config);
        }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace fstirling
