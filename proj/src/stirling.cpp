#include "fstirling/stirling.hpp"

#include <sstream>
#include <stdexcept>

#include "fstirling/factorial.hpp"

namespace fstirling {

Triangle::Triangle(FtSetting setting, std::vector<std::vector<LaurentPoly>> rows)
    : setting_(std::move(setting)), rows_(std::move(rows))
{
}

const LaurentPoly& Triangle::at(long n, long k) const
{
    if (n < 0 || n > rows()) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " not computed (rows 0.." +
                                std::to_string(rows()) + ")");
    }
    if (k < 0 || k > n) {
        return zero_;
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<LaurentPoly>& Triangle::row(long n) const
{
    if (n < 0 || n > rows()) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " not computed");
    }
    return rows_[static_cast<std::size_t>(n)];
}

nlohmann::ordered_json Triangle::to_json() const
{
    nlohmann::ordered_json j;
    j["f"] = setting_.f().render();
    j["t"] = render_t(setting_.t());
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows_) {
        auto rj = nlohmann::ordered_json::array();
        for (const auto& e : r) {
            rj.push_back(e.to_json(e.var().empty() ? "t" : e.var()));
        }
        rows_json.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows_json);
    return j;
}

std::string Triangle::to_csv(int decimal_digits) const
{
    std::ostringstream os;
    os << 'n';
    for (long k = 0; k <= rows(); ++k) {
        os << ",c" << k;
    }
    os << '\n';
    for (long n = 0; n <= rows(); ++n) {
        os << n;
        for (long k = 0; k <= rows(); ++k) {
            os << ',';
            if (k <= n) {
                os << render_value(at(n, k), decimal_digits);
            }
        }
        os << '\n';
    }
    return os.str();
}

Triangle s1_triangle(const FtSetting& setting, long N)
{
    if (N < 0) {
        throw std::invalid_argument("triangle size must be non-negative");
    }
    std::vector<std::vector<LaurentPoly>> rows;
    rows.push_back({LaurentPoly(1)});
    for (long n = 1; n <= N; ++n) {
        const auto& prev = rows.back();
        std::vector<LaurentPoly> cur(static_cast<std::size_t>(n + 1));
        // f(n-1) t^(1-n), absent for n = 1
        const LaurentPoly scale = n >= 2 ? setting.root(n - 1) : LaurentPoly();
        for (long k = 0; k <= n; ++k) {
            LaurentPoly v;
            if (n >= 2 && k <= n - 1) {
                v += scale * prev[static_cast<std::size_t>(k)];
            }
            if (k >= 1) {
                v += prev[static_cast<std::size_t>(k - 1)];
            }
            cur[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows.push_back(std::move(cur));
    }
    return Triangle(setting, std::move(rows));
}

LaurentPoly s1_entry_oracle(const FtSetting& setting, long n, long k)
{
    if (n > kOracleMaxN) {
        throw std::length_error("subset oracle is capped at n <= " + std::to_string(kOracleMaxN) +
                                ", got n = " + std::to_string(n));
    }
    if (n < 0 || k < 0 || k > n) {
        return LaurentPoly();
    }
    if (n == 0) {
        return LaurentPoly(1);
    }
    const long m = n - 1;  // ground set {1, ..., n-1}
    const long size = n - k;
    if (size > m) {
        return LaurentPoly();
    }
    if (size == 0) {
        return LaurentPoly(1);
    }
    std::vector<LaurentPoly> roots;
    for (long j = 1; j <= m; ++j) {
        roots.push_back(setting.root(j));
    }
    LaurentPoly sum;
    // Gosper's hack walks the size-element subsets of an m-bit mask.
    unsigned long subset = (1UL << size) - 1;
    const unsigned long limit = 1UL << m;
    while (subset < limit) {
        LaurentPoly term(1);
        for (long b = 0; b < m; ++b) {
            if (subset & (1UL << b)) {
                term *= roots[static_cast<std::size_t>(b)];
            }
        }
        sum += term;
        const unsigned long c = subset & (~subset + 1);
        const unsigned long r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    return sum;
}

Report s1_oracle_check(const FtSetting& setting, long N, Exec exec)
{
    if (N > kOracleMaxN) {
        throw std::length_error("subset oracle is capped at n <= " + std::to_string(kOracleMaxN) +
                                ", got N = " + std::to_string(N));
    }
    const Triangle tri = s1_triangle(setting, N);
    auto rows = parallel_map<std::vector<Cell>>(
        static_cast<std::size_t>(N + 1),
        [&](std::size_t i) {
            const long n = static_cast<long>(i);
            std::vector<Cell> cells;
            for (long k = 0; k <= n; ++k) {
                cells.push_back(Cell::exact({n, k}, tri.at(n, k), s1_entry_oracle(setting, n, k)));
            }
            return cells;
        },
        exec);
    Report rep;
    rep.identity = "s1-oracle";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"N", N}};
    for (auto& r : rows) {
        for (auto& c : r) {
            rep.cells.push_back(std::move(c));
        }
    }
    return rep;
}

Report s1_column_closed_forms(const FtSetting& setting, long N)
{
    const Triangle tri = s1_triangle(setting, N + 1);
    const LaurentPoly& t = setting.t();
    Report rep;
    rep.identity = "s1-columns";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"N", N}};
    for (long n = 0; n <= N; ++n) {
        const LaurentPoly scale = bang_f(setting.f(), n) * t.pow(-triangular(n));
        rep.cells.push_back(Cell::exact({n, 1}, tri.at(n + 1, 1), scale));
        for (long k = 2; k <= n + 1; ++k) {
            LaurentPoly sum;
            for (long j = 1; j <= n; ++j) {
                sum += tri.at(j, k - 1) * t.pow(triangular(j)) * bang_f(setting.f(), j).inverse();
            }
            rep.cells.push_back(Cell::exact({n, k}, tri.at(n + 1, k), scale * sum));
        }
    }
    return rep;
}

std::vector<std::vector<Integer>> classical_stirling1(long N)
{
    std::vector<std::vector<Integer>> c(static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 0);
    }
    c[0][0] = 1;
    for (long n = 0; n < N; ++n) {
        const auto& cur = c[static_cast<std::size_t>(n)];
        auto& next = c[static_cast<std::size_t>(n + 1)];
        for (long k = 0; k <= n; ++k) {
            // c(n+1,k+1) = n c(n,k+1) + c(n,k)
            next[static_cast<std::size_t>(k + 1)] += cur[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] += Integer(n) * cur[static_cast<std::size_t>(k)];
        }
    }
    return c;
}

LaurentPoly s2_entry(const FtSetting& setting, long n, long k)
{
    if (n < 0 || k < 0) {
        throw std::invalid_argument("second-kind indices must be non-negative");
    }
    LaurentPoly sum;
    if (n == 0) {
        sum += LaurentPoly(k % 2 == 0 ? 1 : -1);
    }
    for (long j = 1; j <= k; ++j) {
        Rational c = to_rational(binomial(k, j)) / to_rational(factorial(j));
        if ((k - j) % 2 != 0) {
            c = -c;
        }
        sum += setting.root(j).pow(n) * LaurentPoly(c);
    }
    return sum;
}

Report s2_geom_transform_check(const FtSetting& setting, long n, long k)
{
    Report rep;
    rep.identity = "s2-geom";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"n", n}, {"k", k}};
    std::vector<LaurentPoly> s2(static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
        s2[static_cast<std::size_t>(j)] = s2_entry(setting, k, j);
    }
    for (long m = 0; m <= n; ++m) {
        // f(0)^k read as 0^k.
        const LaurentPoly lhs = m == 0 ? LaurentPoly(k == 0 ? 1 : 0) : setting.root(m).pow(k);
        // z^j D^j z^m = m(m-1)...(m-j+1) z^m
        LaurentPoly rhs;
        Integer falling = 1;
        for (long j = 0; j <= k && j <= m; ++j) {
            rhs += s2[static_cast<std::size_t>(j)] * LaurentPoly(to_rational(falling));
            falling *= (m - j);
        }
        rep.cells.push_back(Cell::exact({n, k, m}, lhs, rhs));
    }
    // Diagnostic: the same transform with the classical normalization
    // (1/j!) sum_i C(j,i) (-1)^(j-i) g(i), i.e. 1/j! outside the sum.
    const auto g = [&](long i) { return i == 0 ? LaurentPoly(k == 0 ? 1 : 0) : setting.root(i).pow(k); };
    long classical_ok = 0;
    for (long m = 0; m <= n; ++m) {
        LaurentPoly rhs;
        Integer falling = 1;
        for (long j = 0; j <= k && j <= m; ++j) {
            LaurentPoly diff;
            for (long i = 0; i <= j; ++i) {
                diff += g(i) * LaurentPoly(Rational((j - i) % 2 == 0 ? 1 : -1) * to_rational(binomial(j, i)));
            }
            rhs += diff * LaurentPoly(to_rational(falling) / to_rational(factorial(j)));
            falling *= (m - j);
        }
        classical_ok += rhs == g(m) ? 1 : 0;
    }
    rep.notes.push_back("with 1/j! outside the alternating sum " + std::to_string(classical_ok) + " of " +
                        std::to_string(n + 1) + " coefficients agree");
    return rep;
}

LaurentPoly s2star_entry(const FSpec& spec, long k, long j)
{
    if (k < 0 || j < 0) {
        throw std::invalid_argument("modified second-kind indices must be non-negative");
    }
    LaurentPoly sum;
    const Rational jfact = to_rational(factorial(j));
    for (long m = 1; m <= j; ++m) {
        Rational c = to_rational(binomial(j, m)) / jfact;
        if ((j - m) % 2 != 0) {
            c = -c;
        }
        sum += spec.eval(m).pow(-k) * LaurentPoly(c);
    }
    return sum;
}

Report s2star_ogf_check(const FSpec& spec, long k, long N)
{
    Report rep;
    rep.identity = "s2star-ogf";
    rep.params = {{"f", spec.render()}, {"k", k}, {"N", N}};
    std::vector<LaurentPoly> star(static_cast<std::size_t>(N + 1));
    for (long j = 1; j <= N; ++j) {
        star[static_cast<std::size_t>(j)] = s2star_entry(spec, k, j);
    }
    for (long n = 1; n <= N; ++n) {
        LaurentPoly rhs;
        for (long j = 1; j <= n; ++j) {
            rhs += star[static_cast<std::size_t>(j)] * LaurentPoly(to_rational(factorial(j) * binomial(n, j)));
        }
        rep.cells.push_back(Cell::exact({k, n}, spec.eval(n).pow(-k), rhs));
    }
    return rep;
}

Report s2star_egf_check(const FSpec& spec, long r, long N)
{
    Report rep;
    rep.identity = "s2star-egf";
    rep.params = {{"f", spec.render()}, {"r", r}, {"N", N}};
    if (N < 1) {
        return rep;
    }
    const std::size_t order = static_cast<std::size_t>(N);
    const std::string z = "z";

    std::vector<LaurentPoly> lhs(order + 1);
    LaurentPoly harmonic;
    for (long n = 1; n <= N; ++n) {
        harmonic += spec.eval(n).pow(-r);
        lhs[static_cast<std::size_t>(n)] = harmonic * LaurentPoly(Rational(1) / to_rational(factorial(n)));
    }
    const TruncSeries left(z, order, lhs);

    const TruncSeries ez = TruncSeries::exp_linear(z, order, 1);
    TruncSeries right(z, order);
    for (long j = 0; j <= N; ++j) {
        const LaurentPoly coeff = s2star_entry(spec, r, j);
        if (coeff.is_zero()) {
            continue;
        }
        // (j + 1 + z) / (j + 1)
        std::vector<LaurentPoly> lin(2);
        lin[0] = LaurentPoly(1);
        lin[1] = LaurentPoly(Rational(1, static_cast<unsigned long>(j + 1)));
        const TruncSeries term = series_mul(ez, TruncSeries(z, order, lin)).truncated(order - static_cast<std::size_t>(j))
                                     .shifted_up(static_cast<std::size_t>(j));
        right += term * coeff;
    }
    for (long n = 1; n <= N; ++n) {
        rep.cells.push_back(Cell::exact({r, n}, left[static_cast<std::size_t>(n)], right[static_cast<std::size_t>(n)]));
    }
    return rep;
}

}  // namespace fstirling
