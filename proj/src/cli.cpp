#include "fstirling/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fstirling/convpoly.hpp"
#include "fstirling/fharmonic.hpp"
#include "fstirling/fspec.hpp"
#include "fstirling/stirling.hpp"
#include "fstirling/verify.hpp"

namespace fstirling::cli {
namespace {

using nlohmann::ordered_json;

/// A usage or configuration problem detected after parsing.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string f = "linear:1,0";
    std::string t = "1";
    std::string format;
    std::string out;
    int decimal = -1;
    std::string exec = "parallel";

    long rows = 6;
    std::string kind = "s1";

    long p = 2;
    long n = 3;
    std::string method = "ftilde";

    std::string mode = "harmonic_over_f";
    long r = 2;
    long terms = 1000;

    std::string variant = "sigma";
    std::optional<long> x;

    std::string suite = "all";
    std::optional<long> max_n;
};

std::optional<long> env_max_n()
{
    const char* raw = std::getenv("FSTIRLING_MAX_N");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1) {
        throw UsageError(std::string("FSTIRLING_MAX_N must be a positive integer, got '") + raw + "'");
    }
    return v;
}

Exec parse_exec(const std::string& s)
{
    return s == "serial" ? Exec::serial : Exec::parallel;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return q + "\"";
}

FtSetting make_setting(const Options& o)
{
    return FtSetting(parse_fspec(o.f), parse_t(o.t));
}

std::string format_or(const Options& o, const char* fallback)
{
    return o.format.empty() ? fallback : o.format;
}

int cmd_triangle(const Options& o, std::ostream& out)
{
    if (o.rows < 0) {
        throw UsageError("--rows must be non-negative");
    }
    const FtSetting setting = make_setting(o);
    Triangle tri = o.kind == "s1" ? s1_triangle(setting, o.rows) : [&] {
        std::vector<std::vector<LaurentPoly>> rows;
        for (long n = 0; n <= o.rows; ++n) {
            std::vector<LaurentPoly> row;
            for (long k = 0; k <= n; ++k) {
                row.push_back(s2_entry(setting, n, k));
            }
            rows.push_back(std::move(row));
        }
        return Triangle(setting, std::move(rows));
    }();
    if (format_or(o, "json") == "csv") {
        out << tri.to_csv(o.decimal);
    } else {
        ordered_json j = tri.to_json();
        j["kind"] = o.kind;
        out << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_harmonic(const Options& o, std::ostream& out)
{
    if (o.p < 1 || o.n < 0) {
        throw UsageError("harmonic needs --p >= 1 and --n >= 0");
    }
    const FtSetting setting = make_setting(o);
    LaurentPoly value;
    LaurentPoly direct = fharmonic_direct(setting.f(), o.p, o.n, setting.t().pow(o.p));
    std::string target = "sum t^(kp)/f(k)^p";
    if (o.method == "direct") {
        value = direct;
    } else if (o.method == "ftilde") {
        value = harmonic_via_ftilde(setting, o.p, o.n);
    } else if (o.method == "roots") {
        value = harmonic_via_roots(setting, o.p, o.n);
    } else {
        const SubstResult sub = harmonic_via_subst(setting, o.p, o.n);
        value = sub.value;
        direct = sub.direct;
        const bool in_root_var = sub.value.var() == RootedT::kVar || sub.direct.var() == RootedT::kVar;
        target = in_root_var ? "sum t^k/f(k)^p with t = u^p" : "sum t^k/f(k)^p";
    }
    const bool agrees = value == direct;
    if (format_or(o, "text") == "json") {
        ordered_json j;
        j["f"] = setting.f().render();
        j["t"] = render_t(setting.t());
        j["p"] = o.p;
        j["n"] = o.n;
        j["method"] = o.method;
        j["sum"] = target;
        j["value"] = render_value(value, o.decimal);
        j["direct"] = render_value(direct, o.decimal);
        j["agrees"] = agrees;
        out << j.dump(2) << '\n';
    } else if (format_or(o, "text") == "csv") {
        out << "f,t,p,n,method,value,direct,agrees\n"
            << csv_field(setting.f().render()) << ',' << csv_field(render_t(setting.t())) << ',' << o.p << ','
            << o.n << ',' << o.method << ',' << csv_field(render_value(value, o.decimal)) << ','
            << csv_field(render_value(direct, o.decimal)) << ',' << (agrees ? "true" : "false") << '\n';
    } else {
        out << render_value(value, o.decimal) << '\n';
    }
    return agrees ? kOk : kCheckFailed;
}

int cmd_convpoly(const Options& o, std::ostream& out)
{
    const FtSetting setting = make_setting(o);
    const std::string fmt = format_or(o, o.variant == "fit" ? "json" : "text");
    if (o.variant == "fit") {
        if (!o.x) {
            throw UsageError("convpoly --variant fit needs --x");
        }
        const ExperimentalFit fit = fit_experimental_gf(setting, *o.x, o.n);
        if (fmt == "csv") {
            out << "n,g\n";
            for (long k = 0; k <= o.n; ++k) {
                out << k << ',' << csv_field(render_value(fit.series[static_cast<std::size_t>(k)], o.decimal)) << '\n';
            }
        } else {
            ordered_json j;
            j["series"] = fit.series.to_json();
            j["report"] = fit.report.to_json(o.decimal);
            out << j.dump(2) << '\n';
        }
        return fit.report.passed() ? kOk : kCheckFailed;
    }
    const SigmaVariant v = parse_sigma_variant(o.variant);
    if (!o.x) {
        throw UsageError("convpoly needs --x");
    }
    const LaurentPoly value = sigma_eval(setting, v, o.n, *o.x);
    if (fmt == "json") {
        ordered_json j;
        j["f"] = setting.f().render();
        j["t"] = render_t(setting.t());
        j["variant"] = to_string(v);
        j["n"] = o.n;
        j["x"] = *o.x;
        j["value"] = render_value(value, o.decimal);
        out << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "variant,n,x,value\n"
            << to_string(v) << ',' << o.n << ',' << *o.x << ',' << csv_field(render_value(value, o.decimal)) << '\n';
    } else {
        out << render_value(value, o.decimal) << '\n';
    }
    return kOk;
}

int cmd_eulersum(const Options& o, std::ostream& out)
{
    if (o.r < 1 || o.terms < 1) {
        throw UsageError("eulersum needs --r >= 1 and --terms >= 1");
    }
    const FSpec spec = parse_fspec(o.f);
    if (spec.is_symbolic()) {
        throw UsageError("eulersum needs a numeric f");
    }
    const EulerMode mode = parse_euler_mode(o.mode);
    const Rational value = euler_sum_numeric(spec, o.r, o.terms, mode, parse_exec(o.exec));
    const std::string text = render_value(LaurentPoly(value), o.decimal);
    const std::string fmt = format_or(o, "text");
    if (fmt == "json") {
        ordered_json j;
        j["f"] = spec.render();
        j["mode"] = to_string(mode);
        j["r"] = o.r;
        j["terms"] = o.terms;
        j["value"] = text;
        out << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "f,mode,r,terms,value\n"
            << csv_field(spec.render()) << ',' << to_string(mode) << ',' << o.r << ',' << o.terms << ','
            << csv_field(text) << '\n';
    } else {
        out << text << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const std::optional<long> env = env_max_n();
    const long ceiling = env.value_or(kMaxNCeiling);
    VerifyConfig cfg{make_setting(o), o.max_n.value_or(std::min(kDefaultMaxN, ceiling)), parse_exec(o.exec),
                     env.has_value()};
    if (cfg.max_n < 1 || cfg.max_n > ceiling) {
        throw UsageError("--max-n must lie in 1.." + std::to_string(ceiling) + " (raise with FSTIRLING_MAX_N)");
    }
    if (o.suite != "all" && !is_suite(o.suite)) {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    const bool needs_oracle = o.suite == "all" || o.suite == "s1-oracle";
    if (needs_oracle && cfg.max_n > kOracleMaxN) {
        throw UsageError("the subset oracle is capped at n <= " + std::to_string(kOracleMaxN) + ", got --max-n " +
                         std::to_string(cfg.max_n));
    }

    std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    std::vector<Report> reports;
    std::size_t cells = 0;
    std::size_t failures = 0;
    auto failed = ordered_json::array();
    for (const auto& name : names) {
        reports.push_back(run_suite(name, cfg));
        const Report& rep = reports.back();
        cells += rep.cells.size();
        failures += rep.failures();
        if (!rep.passed()) {
            failed.push_back(name);
        }
        err << name << ": " << rep.cells.size() << " cells, " << rep.failures() << " failed\n";
    }

    if (format_or(o, "json") == "csv") {
        out << "suite,indices,lhs,rhs,residual,pass\n";
        for (const auto& rep : reports) {
            for (const auto& c : rep.cells) {
                std::string idx;
                for (std::size_t i = 0; i < c.indices.size(); ++i) {
                    idx += (i ? ";" : "") + std::to_string(c.indices[i]);
                }
                out << rep.identity << ',' << idx << ',' << csv_field(render_value(c.lhs, o.decimal)) << ','
                    << csv_field(render_value(c.rhs, o.decimal)) << ','
                    << csv_field(render_value(c.residual(), o.decimal)) << ',' << (c.pass ? "true" : "false") << '\n';
            }
        }
    } else {
        ordered_json j;
        j["f"] = cfg.setting.f().render();
        j["t"] = render_t(cfg.setting.t());
        j["max_n"] = cfg.max_n;
        j["suites"] = ordered_json::array();
        for (const auto& rep : reports) {
            j["suites"].push_back(rep.to_json(o.decimal));
        }
        j["summary"] = {{"suites", reports.size()}, {"cells", cells}, {"failures", failures}, {"failed_suites", failed}};
        j["passed"] = failures == 0;
        out << j.dump(2) << '\n';
    }
    return failures == 0 ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, Options& o, bool with_t = true)
{
    sub->add_option("--f", o.f, "f specification (linear:a,b | poly:c0,.. | qpow:k | qpow:b,k | table:path)")
        ->capture_default_str();
    if (with_t) {
        sub->add_option("--t", o.t, "t: nonzero rational or 'symbolic'")->capture_default_str();
    }
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
    sub->add_option("--decimal", o.decimal, "render constant values as decimals with this many digits")
        ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Generalized f(t)-Stirling numbers, f-harmonic sums and convolution polynomial analogs"};
    app.name("fstirling");
    app.require_subcommand(1);

    auto* tri = app.add_subcommand("triangle", "first or second kind triangle");
    add_common(tri, o);
    tri->add_option("--kind", o.kind)->check(CLI::IsMember({"s1", "s2"}))->capture_default_str();
    tri->add_option("--rows", o.rows, "last row index")->capture_default_str();
    tri->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* harm = app.add_subcommand("harmonic", "p-order f-harmonic sum by one of the routes");
    add_common(harm, o);
    harm->add_option("--p", o.p)->capture_default_str();
    harm->add_option("--n", o.n)->capture_default_str();
    harm->add_option("--method", o.method)
        ->check(CLI::IsMember({"direct", "ftilde", "roots", "subst"}))
        ->capture_default_str();
    harm->add_option("--format", o.format, "text (default), json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* conv = app.add_subcommand("convpoly", "convolution polynomial analogs and the experimental fit");
    add_common(conv, o);
    conv->add_option("--variant", o.variant)
        ->check(CLI::IsMember({"sigma", "sigma-tilde", "fit"}))
        ->capture_default_str();
    conv->add_option("--n", o.n, "sigma index, or the fit order N")->capture_default_str();
    conv->add_option("--x", o.x, "evaluation point, or the fit exponent");
    conv->add_option("--format", o.format, "text (default; json for fit), json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* euler = app.add_subcommand("eulersum", "exact partial Euler sums");
    add_common(euler, o, false);
    euler->add_option("--mode", o.mode)
        ->check(CLI::IsMember({"harmonic_over_f", "fzeta", "fzeta2r"}))
        ->capture_default_str();
    euler->add_option("--r", o.r)->capture_default_str();
    euler->add_option("--terms", o.terms)->capture_default_str();
    euler->add_option("--exec", o.exec)->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    euler->add_option("--format", o.format, "text (default), json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* ver = app.add_subcommand("verify", "run identity suites and emit a report");
    add_common(ver, o);
    std::vector<std::string> choices = suite_names();
    choices.insert(choices.begin(), "all");
    ver->add_option("--suite", o.suite)->check(CLI::IsMember(choices))->capture_default_str();
    ver->add_option("--max-n", o.max_n, "sweep bound (default 10)");
    ver->add_option("--exec", o.exec)->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    ver->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open '" << o.out << "' for writing\n";
            return kUsage;
        }
    }
    std::ostream& sink = o.out.empty() ? out : file;

    try {
        if (tri->parsed()) {
            return cmd_triangle(o, sink);
        }
        if (harm->parsed()) {
            return cmd_harmonic(o, sink);
        }
        if (conv->parsed()) {
            return cmd_convpoly(o, sink);
        }
        if (euler->parsed()) {
            return cmd_eulersum(o, sink);
        }
        return cmd_verify(o, sink, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace fstirling::cli
