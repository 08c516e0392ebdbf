#include "fstirling/fharmonic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fstirling/cyclotomic.hpp"
#include "fstirling/factorial.hpp"
#include "fstirling/stirling.hpp"

namespace fstirling {

namespace {

LaurentPoly sign(long e)
{
    return LaurentPoly(e % 2 == 0 ? 1 : -1);
}

LaurentPoly ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return LaurentPoly(r);
}

/// Calls fn(parts) for every composition of `total` into `count` parts, each
/// part in 0..total.
void for_each_composition(long total, long count, const std::function<void(const std::vector<long>&)>& fn)
{
    std::vector<long> parts(static_cast<std::size_t>(count), 0);
    std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx == count - 1) {
            parts[static_cast<std::size_t>(idx)] = left;
            fn(parts);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            parts[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, left - v);
        }
    };
    if (count == 0) {
        if (total == 0) {
            fn(parts);
        }
        return;
    }
    rec(0, total);
}

/// Row n+1 of the first-kind triangle straight from the product expansion;
/// entry k sits at index k (index 0 holds [n+1,0] = 0).
std::vector<LaurentPoly> shifted_row(const FtSetting& setting, long n)
{
    std::vector<LaurentPoly> roots;
    for (long j = 1; j <= n; ++j) {
        roots.push_back(setting.root(j));
    }
    std::vector<LaurentPoly> row{LaurentPoly()};
    for (auto& c : poly_product_expand(roots)) {
        row.push_back(std::move(c));
    }
    return row;
}

LaurentPoly harmonic_prefactor(const FtSetting& setting, long p, long n)
{
    return setting.t().pow(p * triangular(n)) * bang_f(setting.f(), n).pow(-p);
}

}  // namespace

LaurentPoly fharmonic_direct(const FSpec& spec, long p, long n, const LaurentPoly& arg)
{
    if (n < 0) {
        throw std::invalid_argument("harmonic index n must be non-negative");
    }
    LaurentPoly sum;
    for (long k = 1; k <= n; ++k) {
        sum += arg.pow(k) * spec.eval(k).pow(-p);
    }
    return sum;
}

TruncSeries ftilde_series(const FtSetting& setting, long n, std::size_t order)
{
    const auto row = shifted_row(setting, n);
    const std::size_t degree = static_cast<std::size_t>(n + 1);
    std::vector<LaurentPoly> coeffs(std::max(order, degree) + 1);
    for (std::size_t k = 2; k <= degree; ++k) {
        coeffs[k] = row[k];
    }
    const std::size_t top = coeffs.size() - 1;
    return TruncSeries("w", top, std::move(coeffs));
}

LaurentPoly harmonic_via_ftilde(const FtSetting& setting, long p, long n)
{
    if (p < 1) {
        throw std::invalid_argument("harmonic order p must be >= 1");
    }
    const std::size_t order = static_cast<std::size_t>(2 * p);
    const TruncSeries ft = ftilde_series(setting, n, order);
    const LaurentPoly c1 = shifted_row(setting, n)[1];
    LaurentPoly bracket;
    for (long j = 0; j < p; ++j) {
        const TruncSeries power = series_int_pow(ft, static_cast<unsigned long>(p - j));
        bracket += sign(j) * ratio(p, p - j) * c1.pow(j) * power[static_cast<std::size_t>(2 * p - j)];
    }
    return harmonic_prefactor(setting, p, n) * bracket;
}

LaurentPoly harmonic_via_roots(const FtSetting& setting, long p, long n)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("the root-of-unity route needs a prime p, got " + std::to_string(p));
    }
    const auto row = shifted_row(setting, n);
    const std::size_t top = static_cast<std::size_t>(2 * p);
    std::vector<CyclotomicElem> prod(top + 1, CyclotomicElem(p));
    prod[0] = CyclotomicElem::scalar(p, 1);
    for (long m = 0; m < p; ++m) {
        std::vector<CyclotomicElem> next(top + 1, CyclotomicElem(p));
        for (std::size_t a = 0; a <= top; ++a) {
            if (prod[a].is_zero()) {
                continue;
            }
            for (std::size_t k = 1; k < row.size() && a + k <= top; ++k) {
                if (row[k].is_zero()) {
                    continue;
                }
                const long twist = m * (static_cast<long>(k) - 1);
                next[a + k] += prod[a] * CyclotomicElem::zeta_power(p, twist, row[k]);
            }
        }
        prod = std::move(next);
    }
    const CyclotomicElem& c = prod[top];
    if (!c.is_rational()) {
        throw std::logic_error("root-of-unity product left a nonzero zeta-coordinate");
    }
    return sign(p + 1) * c.to_scalar() * harmonic_prefactor(setting, p, n);
}

SubstResult harmonic_via_subst(const FtSetting& setting, long p, long n)
{
    if (p < 1) {
        throw std::invalid_argument("harmonic order p must be >= 1");
    }
    const RootedT rooted(setting, p);
    const FtSetting at_root = rooted.setting_with_root(p);
    SubstResult r;
    r.value = is_prime(p) ? harmonic_via_roots(at_root, p, n) : harmonic_via_ftilde(at_root, p, n);
    r.direct = fharmonic_direct(setting.f(), p, n, rooted.t());
    r.generic = rooted.generic();
    return r;
}

IsobaricExpansion ftilde_isobaric_expansion(long p)
{
    IsobaricExpansion out;
    for (long j = 0; j < p; ++j) {
        Rational coeff(p, p - j);
        coeff.canonicalize();
        if (j % 2 != 0) {
            coeff = -coeff;
        }
        const long parts = p - j;
        const long weight = 2 * p - j;
        // parts of size >= 2: shift each by 2 and compose the remainder
        for_each_composition(weight - 2 * parts, parts, [&](const std::vector<long>& c) {
            std::vector<long> key(static_cast<std::size_t>(j), 1);
            for (long v : c) {
                key.push_back(v + 2);
            }
            std::sort(key.begin(), key.end());
            out[key] += coeff;
        });
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string render_isobaric(const IsobaricExpansion& e)
{
    std::ostringstream os;
    bool first = true;
    // Highest power of Fbar(2) first, the conventional order.
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        const auto& [key, c] = *it;
        const bool neg = c < 0;
        if (!first) {
            os << (neg ? " - " : " + ");
        } else if (neg) {
            os << '-';
        }
        first = false;
        const Rational mag = neg ? Rational(-c) : c;
        if (mag != 1) {
            os << to_string(mag) << '*';
        }
        std::map<long, long> counts;
        for (long k : key) {
            ++counts[k];
        }
        bool first_factor = true;
        for (const auto& [k, m] : counts) {
            os << (first_factor ? "" : "*") << "F" << k;
            if (m > 1) {
                os << '^' << m;
            }
            first_factor = false;
        }
    }
    return os.str();
}

WfTable wf_table(const FtSetting& setting, long n, long m_max, WfVariant variant)
{
    if (n < 0 || m_max < 1) {
        throw std::invalid_argument("wf table needs n >= 0 and m_max >= 1");
    }
    std::vector<LaurentPoly> power_sums(static_cast<std::size_t>(m_max + 1));
    for (long j = 1; j <= m_max; ++j) {
        power_sums[static_cast<std::size_t>(j)] = fharmonic_direct(setting.f(), j, n, setting.t().pow(j));
    }
    WfTable tab;
    tab.n = n;
    tab.variant = variant;
    tab.values.assign(static_cast<std::size_t>(m_max + 1), LaurentPoly());
    for (long m = 1; m <= m_max; ++m) {
        LaurentPoly acc = m == 1 ? setting.t().pow(-triangular(n)) : LaurentPoly();
        for (long k = 0; k < m; ++k) {
            Integer weight = 1;
            for (long i = 0; i < k; ++i) {
                weight *= variant == WfVariant::bell ? (m - 2 - i) : (1 - m + i);
            }
            if (weight == 0) {
                continue;
            }
            acc += sign(k) * LaurentPoly(to_rational(weight)) * power_sums[static_cast<std::size_t>(k + 1)] *
                   tab.values[static_cast<std::size_t>(m - 1 - k)];
        }
        tab.values[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return tab;
}

Report s1_from_wf_check(const FtSetting& setting, long N, WfVariant variant)
{
    const Triangle tri = s1_triangle(setting, N + 1);
    Report rep;
    rep.identity = "wf";
    rep.params = {{"f", setting.f().render()},
                  {"t", render_t(setting.t())},
                  {"N", N},
                  {"variant", variant == WfVariant::bell ? "bell" : "rising"}};
    long rising_disagree = 0;
    long unscaled_disagree = 0;
    for (long n = 0; n <= N; ++n) {
        const WfTable w = wf_table(setting, n, n + 1, variant);
        const LaurentPoly nf = bang_f(setting.f(), n);
        std::vector<LaurentPoly> power_sums(static_cast<std::size_t>(n + 2));
        for (long j = 1; j <= n + 1; ++j) {
            power_sums[static_cast<std::size_t>(j)] = fharmonic_direct(setting.f(), j, n, setting.t().pow(j));
        }
        const WfTable rising = wf_table(setting, n, n + 1, WfVariant::rising);
        const LaurentPoly unscale = setting.t().pow(triangular(n));
        for (long k = 1; k <= n + 1; ++k) {
            const LaurentPoly entry = tri.at(n + 1, k);
            const LaurentPoly kfact_inv(Rational(1) / to_rational(factorial(k - 1)));
            rep.cells.push_back(Cell::exact({1, n, k}, entry, nf * kfact_inv * w.at(k)));

            LaurentPoly line2 = k == 1 ? bang_ft(setting, n) : LaurentPoly();
            for (long j = 0; j <= k - 2; ++j) {
                line2 += tri.at(n + 1, k - 1 - j) * sign(j) * power_sums[static_cast<std::size_t>(j + 1)] *
                         ratio(1, k - 1);
            }
            rep.cells.push_back(Cell::exact({2, n, k}, entry, line2));

            if (nf * kfact_inv * rising.at(k) != entry) {
                ++rising_disagree;
            }
            if (nf * kfact_inv * w.at(k) * unscale != entry) {
                ++unscaled_disagree;
            }
        }
    }
    if (variant == WfVariant::bell) {
        rep.notes.push_back("(1-m)_k recursion disagrees with line 1 in " + std::to_string(rising_disagree) +
                            " cells");
    }
    rep.notes.push_back("unscaled base w(n+1,1) = 1 would disagree with line 1 in " +
                        std::to_string(unscaled_disagree) + " cells");
    return rep;
}

Report corollary_expansions_check(const FtSetting& setting, long N)
{
    const Triangle tri = s1_triangle(setting, N + 1);
    const LaurentPoly& t = setting.t();
    Report rep;
    rep.identity = "corollary";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(t)}, {"N", N}};
    for (long n = 0; n <= N; ++n) {
        const LaurentPoly scale = bang_f(setting.f(), n) * t.pow(-triangular(n));
        const LaurentPoly p1 = fharmonic_direct(setting.f(), 1, n, t);
        const LaurentPoly p2 = fharmonic_direct(setting.f(), 2, n, t.pow(2));
        const LaurentPoly p3 = fharmonic_direct(setting.f(), 3, n, t.pow(3));
        const LaurentPoly p4 = fharmonic_direct(setting.f(), 4, n, t.pow(4));
        const LaurentPoly rhs[4] = {
            scale * p1,
            scale * ratio(1, 2) * (p1.pow(2) - p2),
            scale * ratio(1, 6) * (p1.pow(3) - LaurentPoly(3) * p1 * p2 + LaurentPoly(2) * p3),
            scale * ratio(1, 24) *
                (p1.pow(4) - LaurentPoly(6) * p1.pow(2) * p2 + LaurentPoly(3) * p2.pow(2) +
                 LaurentPoly(8) * p1 * p3 - LaurentPoly(6) * p4),
        };
        for (long k = 2; k <= 5; ++k) {
            rep.cells.push_back(Cell::exact({k, n}, tri.at(n + 1, k), rhs[k - 2]));
        }
    }
    return rep;
}

Report prop1_recurrence_check(const FtSetting& setting, long p, long n)
{
    if (p < 1 || n < 0) {
        throw std::invalid_argument("prop1 check needs p >= 1 and n >= 0");
    }
    const RootedT rooted(setting, p * (p + 1));
    const LaurentPoly& tt = rooted.t();
    const Triangle tri_p = s1_triangle(rooted.setting_with_root(p), n + 1);
    const Triangle tri_q = s1_triangle(rooted.setting_with_root(p + 1), n + 1);
    const LaurentPoly root_p = rooted.root(p);
    const LaurentPoly root_q = rooted.root(p + 1);
    const LaurentPoly nf = bang_f(setting.f(), n);
    const long tn = triangular(n);
    const LaurentPoly ttn = tt.pow(tn);

    const auto comp_sum = [&](const Triangle& tri, long total, long parts) {
        LaurentPoly s;
        for_each_composition(total, parts, [&](const std::vector<long>& c) {
            LaurentPoly prod(1);
            for (long i : c) {
                prod *= tri.at(n + 1, i + 2);
            }
            s += prod;
        });
        return s;
    };

    const LaurentPoly lhs = fharmonic_direct(setting.f(), p + 1, n, tt);
    const LaurentPoly fp = fharmonic_direct(setting.f(), p, n, tt);
    const LaurentPoly a = sign(p) * ttn * root_q.pow(-p * tn) * nf.inverse() * tri_q.at(n + 1, p + 2);
    LaurentPoly b;
    for (long j = 0; j < p; ++j) {
        b += LaurentPoly(p) * sign(j + 1) * ttn * root_p.pow(-j * tn) * nf.pow(-(p - j)) * ratio(1, p - j) *
             comp_sum(tri_p, j, p - j);
    }
    LaurentPoly c;
    for (long j = 0; j < p; ++j) {
        for (long i = 0; i <= j; ++i) {
            c += LaurentPoly(p + 1) * ttn * sign(j) * root_q.pow(-j * tn) * nf.pow(-(p + 1 - j)) *
                 ratio(1, p + 1 - j) * tri_q.at(n + 1, i + 2) * comp_sum(tri_q, j - i, p - j);
        }
    }
    Report rep;
    rep.identity = "prop1";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(setting.t())}, {"p", p}, {"n", n}};
    if (rooted.generic() || !tt.is_constant()) {
        rep.params["working_t"] = tt.to_string();
    }
    Cell cell = Cell::exact({p, n}, lhs, fp + a + b + c);
    if (!cell.pass) {
        const bool is_pa = cell.residual() == LaurentPoly(p) * a;
        cell.note = is_pa ? "residual equals p times the [n+1,p+2] term"
                          : "residual differs from p times the [n+1,p+2] term";
    }
    rep.cells.push_back(std::move(cell));
    return rep;
}

Report prop2_functional_eq_check(const FtSetting& setting, long p, long n)
{
    if (p < 2 || n < 0) {
        throw std::invalid_argument("prop2 check needs p >= 2 and n >= 0");
    }
    const Triangle tri = s1_triangle(setting, n + 2);
    const LaurentPoly& t = setting.t();
    const LaurentPoly tp = t.pow(p);
    const LaurentPoly lhs = fharmonic_direct(setting.f(), p, n + 1, tp);
    const LaurentPoly base = fharmonic_direct(setting.f(), p, n, tp);
    const LaurentPoly fn1 = setting.f().eval(n + 1);
    const LaurentPoly bf_inv = bang_ft(setting, n + 1).inverse();
    const long m = n + 1;

    LaurentPoly form1 = base + tri.at(n + 1, p) * sign(p + 1) * bf_inv;
    for (long j = 1; j < p; ++j) {
        form1 += tri.at(n + 2, p + 1 - j) * sign(p + 1 - j) * t.pow(j * m) * fn1.pow(-j) * bf_inv;
    }

    LaurentPoly form2 = base + t.pow((p - 1) * m) * fn1.pow(-(p - 1)) +
                        sign(p - 1) * bf_inv * (tri.at(n + 1, p) + tri.at(n + 1, p - 1)) +
                        tri.at(n + 2, p) * sign(p) * t.pow(m) * fn1.inverse() * bf_inv;
    const LaurentPoly shift = fn1 * t.pow(-m) - LaurentPoly(1);
    for (long j = 0; j <= p - 3; ++j) {
        form2 += tri.at(n + 2, j + 2) * sign(j + 1) * shift * t.pow((p - 1 - j) * m) * fn1.pow(-(p - 1 - j)) * bf_inv;
    }

    Report rep;
    rep.identity = "prop2";
    rep.params = {{"f", setting.f().render()}, {"t", render_t(t)}, {"p", p}, {"n", n}};
    rep.cells.push_back(Cell::exact({1, p, n}, lhs, form1));
    rep.cells.push_back(Cell::exact({2, p, n}, lhs, form2));
    return rep;
}

Report stirling_harmonic_identity_check(long p, long n)
{
    if (p < 3 || n < 1) {
        throw std::invalid_argument("the ordinary-Stirling identity needs p >= 3 and n >= 1");
    }
    const auto c = classical_stirling1(n + 1);
    const auto at = [&](long a, long b) -> Rational {
        if (b < 0 || b > a) {
            return 0;
        }
        return to_rational(c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    };
    const Rational nn(n);
    const Rational nfact = to_rational(factorial(n));
    Rational rhs = pow(nn, -(p - 1));
    rhs += Rational((p - 1) % 2 == 0 ? 1 : -1) / nfact * (at(n, p) + at(n, p - 1));
    rhs += at(n + 1, p) * Rational(p % 2 == 0 ? 1 : -1) / (nn * nfact);
    for (long j = 0; j <= p - 3; ++j) {
        rhs += at(n + 1, j + 2) * Rational((j + 1) % 2 == 0 ? 1 : -1) * Rational(n - 1) /
               (pow(nn, p - 1 - j) * nfact);
    }
    Report rep;
    rep.identity = "euler-identity";
    rep.params = {{"p", p}, {"n", n}};
    rep.cells.push_back(Cell::exact({p, n}, LaurentPoly(pow(nn, -p)), LaurentPoly(rhs)));
    return rep;
}

Rational nielsen_partial(long t_idx, long k, const Rational& z, long N)
{
    if (N < 1) {
        throw std::invalid_argument("nielsen partial sum needs N >= 1");
    }
    const auto c = classical_stirling1(N);
    Rational sum = 0;
    for (long n = std::max(1L, k); n <= N; ++n) {
        if (k < 0) {
            break;
        }
        const Rational term = to_rational(c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) *
                              pow(z, n) / (pow(Rational(n), t_idx) * to_rational(factorial(n)));
        sum += term;
    }
    return sum;
}

EulerMode parse_euler_mode(const std::string& text)
{
    if (text == "harmonic_over_f") {
        return EulerMode::harmonic_over_f;
    }
    if (text == "fzeta") {
        return EulerMode::fzeta;
    }
    if (text == "fzeta2r") {
        return EulerMode::fzeta2r;
    }
    throw std::invalid_argument("unknown euler-sum mode '" + text + "' (harmonic_over_f | fzeta | fzeta2r)");
}

const char* to_string(EulerMode m)
{
    switch (m) {
    case EulerMode::harmonic_over_f:
        return "harmonic_over_f";
    case EulerMode::fzeta:
        return "fzeta";
    case EulerMode::fzeta2r:
        return "fzeta2r";
    }
    return "?";
}

namespace {

// Block [lo, hi): total = sum a_n, cross = sum a_n (a_lo + ... + a_n).
struct SplitBlock
{
    Rational total;
    Rational cross;
};

SplitBlock merge(const SplitBlock& l, const SplitBlock& r)
{
    return {l.total + r.total, l.cross + r.cross + l.total * r.total};
}

SplitBlock split_sum(const std::function<Rational(long)>& term, long lo, long hi, bool squares_only)
{
    if (hi - lo == 1) {
        const Rational a = term(lo);
        return squares_only ? SplitBlock{a * a, 0} : SplitBlock{a, a * a};
    }
    const long mid = lo + (hi - lo) / 2;
    const SplitBlock l = split_sum(term, lo, mid, squares_only);
    const SplitBlock r = split_sum(term, mid, hi, squares_only);
    return squares_only ? SplitBlock{l.total + r.total, 0} : merge(l, r);
}

}  // namespace

Rational euler_sum_numeric(const FSpec& spec, long r, long N, EulerMode mode, Exec exec)
{
    if (N < 1) {
        throw std::invalid_argument("euler sum needs N >= 1");
    }
    if (r < 1) {
        throw std::invalid_argument("euler sum order r must be >= 1");
    }
    const std::function<Rational(long)> term = [&](long n) { return pow(spec.eval_rational(n), -r); };
    const bool squares = mode == EulerMode::fzeta2r;
    SplitBlock block;
    if (exec == Exec::serial) {
        block = split_sum(term, 1, N + 1, squares);
    } else {
        const long chunks = std::min<long>(N, std::max(4L, 4L * available_threads()));
        auto parts = parallel_map<SplitBlock>(
            static_cast<std::size_t>(chunks),
            [&](std::size_t i) {
                const long lo = 1 + N * static_cast<long>(i) / chunks;
                const long hi = 1 + N * (static_cast<long>(i) + 1) / chunks;
                return split_sum(term, lo, hi, squares);
            },
            Exec::parallel);
        // Pairwise merge keeps the operand sizes balanced.
        while (parts.size() > 1) {
            std::vector<SplitBlock> next;
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
                next.push_back(squares ? SplitBlock{parts[i].total + parts[i + 1].total, 0}
                                       : merge(parts[i], parts[i + 1]));
            }
            if (parts.size() % 2 == 1) {
                next.push_back(parts.back());
            }
            parts = std::move(next);
        }
        block = parts.front();
    }
    switch (mode) {
    case EulerMode::harmonic_over_f:
        return block.cross;
    case EulerMode::fzeta:
    case EulerMode::fzeta2r:
        return block.total;
    }
    return 0;
}

Rational hf_weighted_partial(const FSpec& spec, const std::vector<long>& orders, long s, const Rational& t,
                             const Rational& z, long N)
{
    if (N < 1) {
        throw std::invalid_argument("weighted partial sum needs N >= 1");
    }
    std::vector<Rational> partial(orders.size(), 0);
    Rational sum = 0;
    for (long n = 1; n <= N; ++n) {
        const Rational fn = spec.eval_rational(n);
        Rational prod = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            partial[i] += pow(t, orders[i] * n) / pow(fn, orders[i]);
            prod *= partial[i];
        }
        sum += prod * pow(z, s * n) / pow(fn, s);
    }
    return sum;
}

}  // namespace fstirling
