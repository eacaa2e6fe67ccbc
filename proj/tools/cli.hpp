//Copyright (c) 2026, The lerch authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

// Command implementations for the lerch executable. Kept in a header so the
// tests can drive them in-process.

#ifndef LERCH_TOOLS_CLI_HPP
#define LERCH_TOOLS_CLI_HPP

#include <lerch/lerch.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace lerch::cli {

using json = nlohmann::ordered_json;

enum ExitCode { Ok = 0, CheckFailed = 1, ParseFailure = 2, DomainFailure = 3, OutputFailure = 4 };

/// Bad command-line value (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "<re>", "<re>+<im>i", "<re>-<im>i", "<im>i".
inline Complex parse_complex(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t.empty()) throw UsageError("empty complex number");
    try {
        if (t.back() != 'i') return Complex(Real(std::string_view(t)));
        std::string body = t.substr(0, t.size() - 1);
        // split at the last sign that is not leading and not an exponent sign
        std::size_t cut = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                cut = i;
                break;
            }
        }
        std::string re = cut == std::string::npos ? "0" : body.substr(0, cut);
        std::string im = cut == std::string::npos ? body : body.substr(cut);
        if (im == "+" || im == "") im = "1";
        if (im == "-") im = "-1";
        if (im[0] == '+') im = im.substr(1);
        return Complex(Real(std::string_view(re)), Real(std::string_view(im)));
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed complex number '" + text + "'");
    }
}

inline Param parse_param(const std::string& text)
{
    try {
        return Param::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// Significant decimal digits printed for a working precision.
inline int output_digits(long bits) { return static_cast<int>(bits * 0.30103) + 1; }

inline json complex_json(const Complex& z, int digits)
{
    return json{{"re", to_string(z.re, digits)}, {"im", to_string(z.im, digits)}};
}

inline json eval_json(const EvalResult& r, int digits)
{
    json j;
    j["value"] = complex_json(r.value, digits);
    j["err_bound"] = to_string(r.err_bound, 6);
    if (r.pole) j["pole"] = json{{"location", complex_json(r.pole->location, digits)},
                                 {"residue", complex_json(r.pole->residue, digits)}};
    return j;
}

const std::vector<std::string> function_names{"zeta", "zeta_star", "hurwitz", "periodic", "dirichlet", "lplus",
                                              "lminus", "lhat_plus", "lhat_minus", "renorm_plus", "renorm_minus",
                                              "lhat_n"};

/// Evaluates a named function at (s, a, c). hurwitz ignores a, periodic ignores c.
inline EvalResult evaluate(const std::string& fn, const Complex& s, const Param& a, const Param& c, int n,
                           const PrecisionContext& ctx)
{
    if (fn == "zeta" || fn == "zeta_star") return zeta_star(s, a, c, ctx);
    if (fn == "hurwitz") return hurwitz(s, c, ctx);
    if (fn == "periodic") return periodic_zeta(a, s, ctx);
    if (fn == "dirichlet") return dirichlet_zeta_star(s, a, c, ctx);
    if (fn == "lplus") return l_star(Sign::Plus, s, a, c, ctx);
    if (fn == "lminus") return l_star(Sign::Minus, s, a, c, ctx);
    if (fn == "lhat_plus") return lhat_star(Sign::Plus, s, a, c, ctx);
    if (fn == "lhat_minus") return lhat_star(Sign::Minus, s, a, c, ctx);
    if (fn == "renorm_plus") return renorm_l(Sign::Plus, s, a, c, ctx);
    if (fn == "renorm_minus") return renorm_l(Sign::Minus, s, a, c, ctx);
    if (fn == "lhat_n") return lhat_n(n, s, a, c, ctx);
    throw UsageError("unknown function '" + fn + "'");
}

// ---------------------------------------------------------------- fecheck

struct SampleOutcome {
    double residual = 0;
    double scale = 1;
    json detail;
};


/// Exact rational in (lo, hi) with a random denominator, never an integer.
inline Param random_rational(Sampler& rng, long lo, long hi, long max_den = 97)
{
    long den = rng.integer(2, max_den);
    long num;
    do num = rng.integer(lo * den + 1, hi * den - 1);
    while (num % den == 0);
    return Param::exact(num, den);
}

inline Complex random_s(Sampler& rng, double re_lo, double re_hi, double im_abs)
{
    return Complex(Real(rng.uniform(re_lo, re_hi)), Real(rng.uniform(-im_abs, im_abs)));
}

inline std::string s_text(const Complex& s) { return to_string(s.re, 17) + (s.im < 0 ? "" : "+") + to_string(s.im, 17) + "i"; }

/// Weil-type functional equation residual of the completed functions.
inline Real weil_residual(Sign sign, const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx,
                          Real* scale = nullptr)
{
    PrecisionScope scope(ctx.internal_bits());
    Complex lhs = lhat_star(sign, s, a, c, ctx).value;
    Complex rhs = lhat_star(sign, Complex(1) - s, 1 - c, a, ctx).value * turn(-(a * c));
    if (sign == Sign::Minus) rhs = mul_i(rhs);
    if (scale) *scale = abs(lhs);
    return abs(lhs - rhs);
}

/// One suite sample. Draws come first so the sequence only depends on the seed.
using SuiteSample = std::function<SampleOutcome(const PrecisionContext&)>;

inline std::vector<SuiteSample> build_suite(const std::string& suite, int samples, std::uint64_t seed, int nmax)
{
    Sampler rng(seed);
    std::vector<SuiteSample> out;
    for (int i = 0; i < samples; ++i) {
        if (suite == "weil") {
            double re = rng.uniform(-5, 5), im = rng.uniform(-20, 20);
            Param a = random_rational(rng, 0, 1), c = random_rational(rng, 0, 1);
            out.push_back([=](const PrecisionContext& ctx) {
                PrecisionScope scope(ctx.internal_bits());
                Complex s{Real(re), Real(im)};
                Real sp, sm;
                Real rp = weil_residual(Sign::Plus, s, a, c, ctx, &sp);
                Real rm = weil_residual(Sign::Minus, s, a, c, ctx, &sm);
                SampleOutcome o;
                o.residual = max(rp, rm).to_double();
                o.detail = {{"s", s_text(s)}, {"a", a.to_string()}, {"c", c.to_string()}};
                return o;
            });
        } else if (suite == "transform") {
            double re = rng.uniform(-3, 4), im = rng.uniform(0.5, 10) * (rng.integer(0, 1) ? 1 : -1);
            Param a = random_rational(rng, 0, 1), c = random_rational(rng, 0, 1);
            out.push_back([=](const PrecisionContext& ctx) {
                PrecisionScope scope(ctx.internal_bits());
                Complex s{Real(re), Real(im)};
                TransformCheck t = lerch_transform_check(s, a, c, ctx);
                SampleOutcome o;
                o.residual = t.residual.to_double();
                o.detail = {{"s", s_text(s)}, {"a", a.to_string()}, {"c", c.to_string()}};
                return o;
            });
        } else if (suite == "renorm") {
            double re = rng.uniform(-4, 5), im = rng.uniform(-10, 10);
            auto pick = [&]() {
                long kind = rng.integer(0, 3);
                if (kind == 0) return Param(0);
                if (kind == 1) return Param(1);
                return random_rational(rng, 0, 1);
            };
            Param a = pick(), c = pick();
            out.push_back([=](const PrecisionContext& ctx) {
                PrecisionScope scope(ctx.internal_bits());
                Complex s{Real(re), Real(im)};
                SampleOutcome o;
                Real worst(0);
                for (Sign sg : {Sign::Plus, Sign::Minus}) {
                    Complex lhs = renorm_lhat(sg, s, a, c, ctx).value;
                    Complex rhs = renorm_lhat(sg, Complex(1) - s, 1 - c, a, ctx).value * turn(-(a * c));
                    if (sg == Sign::Minus) rhs = mul_i(rhs);
                    worst = max(worst, abs(lhs - rhs));
                }
                o.residual = worst.to_double();
                o.detail = {{"s", s_text(s)}, {"a", a.to_string()}, {"c", c.to_string()}};
                return o;
            });
        } else if (suite == "zeta-integral") {
            static const std::vector<std::pair<std::string, int>> fns{
                {"gaussian", 0},    {"hermite1", 1},       {"x2_gaussian", 0},    {"hermite2", 0},
                {"hermite3", 1},    {"mixed_gaussian", 0}, {"mixed_gaussian", 1}, {"wide_gaussian", 0}};
            auto [name, k] = fns[static_cast<std::size_t>(i) % fns.size()];
            double re = rng.uniform(-2, 3), im = rng.uniform(-6, 6);
            Param a = random_rational(rng, -1, 2, 40), c = random_rational(rng, -1, 2, 40);
            out.push_back([=](const PrecisionContext& ctx) {
                PrecisionScope scope(ctx.internal_bits());
                Complex s{Real(re), Real(im)};
                const TestFunction& f = TestFunctionRegistry::builtin().get(name);
                ResidualReport fe = fe_residual_general(f, k, s, a, c, ctx);
                SampleOutcome o;
                o.residual = fe.residual.to_double();
                o.detail = {{"function", name}, {"k", k}, {"s", s_text(s)}, {"a", a.to_string()}, {"c", c.to_string()},
                            {"quadrature_err", to_string(fe.err_bound, 6)}};
                return o;
            });
        } else if (suite == "hermite") {
            int n = i % (nmax + 1);
            double re = rng.uniform(-4, 5), im = rng.uniform(-10, 10);
            Param a = random_rational(rng, 0, 1), c = random_rational(rng, 0, 1);
            out.push_back([=](const PrecisionContext& ctx) {
                PrecisionScope scope(ctx.internal_bits());
                Complex s{Real(re), Real(im)};
                Complex lhs = lhat_n(n, s, a, c, ctx).value;
                Complex rhs = lhat_n(n, Complex(1) - s, 1 - c, a, ctx).value * turn(-(a * c));
                for (int j = 0; j < n % 4; ++j) rhs = mul_i(rhs);
                SampleOutcome o;
                o.residual = abs(lhs - rhs).to_double();
                o.detail = {{"n", n}, {"s", s_text(s)}, {"a", a.to_string()}, {"c", c.to_string()}};
                return o;
            });
        } else {
            throw UsageError("unknown suite '" + suite + "'");
        }
    }
    return out;
}

/// Residuals must stay below 2^-tol_bits; tol_bits defaults to prec / 2.
inline int cmd_fecheck(const std::string& suite, int samples, std::uint64_t seed, long prec, int nmax, int threads,
                       std::ostream& out, long tol_bits = -1)
{
    if (samples < 1) throw UsageError("--samples must be positive");
    PrecisionContext ctx(prec);
    std::vector<SuiteSample> work = build_suite(suite, samples, seed, nmax);
    std::vector<SampleOutcome> results(work.size());
    threads = std::max(1, threads);
    // samples are independent; results are stored by index so the report does
    // not depend on the thread count
    for (std::size_t base = 0; base < work.size(); base += static_cast<std::size_t>(threads)) {
        std::vector<std::future<SampleOutcome>> batch;
        for (std::size_t j = base; j < std::min(work.size(), base + threads); ++j)
            batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                       [&, j] { return work[j](ctx); }));
        for (std::size_t j = 0; j < batch.size(); ++j) results[base + j] = batch[j].get();
    }
    double tol = std::ldexp(1.0, -static_cast<int>(tol_bits < 0 ? prec / 2 : tol_bits));
    std::vector<double> res;
    json failures = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        res.push_back(results[i].residual);
        if (!(results[i].residual < tol)) {
            json f = results[i].detail;
            f["index"] = i;
            f["residual"] = results[i].residual;
            failures.push_back(f);
        }
    }
    std::vector<double> sorted = res;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted.size() % 2 ? sorted[sorted.size() / 2]
                                      : (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]) / 2;
    json rep;
    rep["suite"] = suite;
    rep["samples"] = samples;
    rep["seed"] = seed;
    rep["prec"] = prec;
    rep["tolerance"] = tol;
    rep["max_residual"] = sorted.back();
    rep["median_residual"] = median;
    rep["pass"] = failures.empty();
    rep["failures"] = failures;
    out << rep.dump(2) << "\n";
    return failures.empty() ? Ok : CheckFailed;
}

// ---------------------------------------------------------------- grid

struct GridRequest {
    Complex s;
    Param a_lo, a_hi, c_lo, c_hi;
    int a_count = 2, c_count = 2;
    std::string fn = "zeta_star";
    int n = 0;
    std::string format = "csv";
};

/// lo, lo + (hi - lo)/(count - 1), ..., hi; exact when both ends are exact.
inline std::vector<Param> linspace(const Param& lo, const Param& hi, int count)
{
    std::vector<Param> out;
    for (int i = 0; i < count; ++i) {
        if (lo.is_exact() && hi.is_exact())
            out.push_back(Param::exact(lo.rational() + (hi.rational() - lo.rational()) * i / (count - 1)));
        else
            out.push_back(Param::real(lo.value() + (hi.value() - lo.value()) * i / (count - 1)));
    }
    return out;
}

/// Parses "lo:hi".
inline std::pair<Param, Param> parse_range(const std::string& text)
{
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("range must be lo:hi, got '" + text + "'");
    return {parse_param(text.substr(0, colon)), parse_param(text.substr(colon + 1))};
}

inline void write_grid(const GridRequest& req, const PrecisionContext& ctx, std::ostream& out)
{
    if (req.a_count < 2 || req.c_count < 2) throw UsageError("grid counts must be at least 2");
    PrecisionScope scope(ctx.internal_bits());
    int digits = output_digits(ctx.working_bits());
    auto as = linspace(req.a_lo, req.a_hi, req.a_count);
    auto cs = linspace(req.c_lo, req.c_hi, req.c_count);
    json rows = json::array();
    if (req.format == "csv") out << "a,c,re,im,err_bound\n";
    for (const Param& c : cs)
        for (const Param& a : as) {
            EvalResult r = evaluate(req.fn, req.s, a, c, req.n, ctx);
            if (req.format == "csv") {
                out << to_string(a.value(), 20) << ',' << to_string(c.value(), 20) << ',' << to_string(r.value.re, digits)
                    << ',' << to_string(r.value.im, digits) << ',' << to_string(r.err_bound, 6) << '\n';
            } else {
                json j = eval_json(r, digits);
                json row{{"a", a.to_string()}, {"c", c.to_string()}};
                for (auto& [k, v] : j.items()) row[k] = v;
                rows.push_back(row);
            }
        }
    if (req.format == "json") out << rows.dump(2) << '\n';
}

// ---------------------------------------------------------------- poly / zeros

inline PolyFamily parse_family(const std::string& f)
{
    if (f == "p" || f == "P") return PolyFamily::P;
    if (f == "q" || f == "Q") return PolyFamily::Q;
    throw UsageError("family must be p or q");
}

inline void write_poly(PolyFamily fam, int n, bool as_json, std::ostream& out)
{
    if (n < 0) throw UsageError("--n must be nonnegative");
    IntPolynomial p = poly_family(fam, n);
    auto coeffs = p.descending();
    if (as_json) {
        out << json{{"family", to_string(fam)}, {"n", n}, {"coefficients_descending", coeffs},
                    {"polynomial", p.to_string()}}.dump(2)
            << '\n';
        return;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i];
    out << '\n';
}

inline void write_zeros(PolyFamily fam, int n, const PrecisionContext& ctx, int digits, bool as_json, std::ostream& out)
{
    if (n < 1) throw UsageError("--n must be at least 1");
    PrecisionScope scope(ctx.internal_bits());
    IntPolynomial p = poly_family(fam, n);
    auto zs = poly_zeros(fam, n, ctx);
    json arr = json::array();
    for (const Complex& z : zs) {
        Real re_res = abs(z.re - Real(1) / 2);
        Real val_res = abs(p(z));
        if (as_json) {
            arr.push_back({{"re", to_string(z.re, digits)}, {"im", to_string(z.im, digits)},
                           {"re_minus_half", to_string(re_res, 6)}, {"abs_p", to_string(val_res, 6)}});
        } else {
            out << to_string(z.re, digits) << (z.im < 0 ? " - " : " + ") << to_string(abs(z.im), digits)
                << "i  |Re-1/2|=" << to_string(re_res, 3) << "  |p|=" << to_string(val_res, 3) << '\n';
        }
    }
    if (as_json) out << json{{"family", to_string(fam)}, {"n", n}, {"roots", arr}}.dump(2) << '\n';
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arbitrary-precision Lerch zeta functions"};
    app.require_subcommand(1);
    app.fallthrough();
    long prec = 128;
    app.add_option("--prec", prec, "working precision in bits (>= 64)")->capture_default_str();

    const char* param_help =
        "rational p/q or integer (exact; integers are treated as integers), or a decimal such as 0.5 "
        "(never treated as an integer, so --a 1 and --a 1.0 differ)";

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one function at (s, a, c); prints JSON");
    std::string fn = "zeta", s_str, a_str = "0", c_str = "1";
    int n_index = 0;
    eval->add_option("--fn", fn, "function")->check(CLI::IsMember(function_names))->capture_default_str();
    eval->add_option("--s", s_str, "complex s as <re>[+<im>i]")->required();
    eval->add_option("--a", a_str, param_help)->capture_default_str();
    eval->add_option("--c", c_str, param_help)->capture_default_str();
    eval->add_option("--n", n_index, "index for lhat_n")->capture_default_str();

    // fecheck
    auto* fe = app.add_subcommand("fecheck", "functional-equation verification suite; prints a JSON report");
    std::string suite;
    int samples = 20, nmax = 6, threads = 1;
    long tol_bits = -1;
    std::uint64_t seed = 1;
    fe->add_option("--suite", suite, "suite")
        ->required()
        ->check(CLI::IsMember({"weil", "zeta-integral", "transform", "renorm", "hermite"}));
    fe->add_option("--samples", samples, "number of samples")->capture_default_str();
    fe->add_option("--seed", seed, "sampler seed")->capture_default_str();
    fe->add_option("--nmax", nmax, "largest oscillator index for the hermite suite")->capture_default_str();
    fe->add_option("--tol-bits", tol_bits, "pass threshold 2^-bits (default prec/2)");
    fe->add_option("--threads", threads, "worker threads (output does not depend on it)")->capture_default_str();

    // grid
    auto* grid = app.add_subcommand("grid", "evaluate on an (a, c) grid; CSV or JSON, c outer, a inner");
    GridRequest req;
    std::string g_s, a_range, c_range, out_path, g_fn = "zeta_star";
    grid->add_option("--s", g_s, "complex s")->required();
    grid->add_option("--fn", g_fn, "function")->check(CLI::IsMember(function_names))->capture_default_str();
    grid->add_option("--n", req.n, "index for lhat_n")->capture_default_str();
    grid->add_option("--a-range", a_range, "lo:hi (same number syntax as --a)")->required();
    grid->add_option("--c-range", c_range, "lo:hi")->required();
    grid->add_option("--a-count", req.a_count, "points in a (>= 2)")->capture_default_str();
    grid->add_option("--c-count", req.c_count, "points in c (>= 2)")->capture_default_str();
    grid->add_option("--format", req.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    grid->add_option("--out", out_path, "output file (default: standard output)");

    // poly / zeros
    auto* poly = app.add_subcommand("poly", "integer coefficients of p_n or q_n, leading first");
    auto* zeros = app.add_subcommand("zeros", "zeros of p_n or q_n with critical-line residuals");
    std::string family;
    int pn = 0, digits = 0;
    bool as_json = false;
    for (auto* sub : {poly, zeros}) {
        sub->add_option("--family", family, "p or q")->required()->check(CLI::IsMember({"p", "q"}));
        sub->add_option("--n", pn, "index")->required();
        sub->add_flag("--json", as_json, "JSON output");
    }
    zeros->add_option("--digits", digits, "significant digits (default from --prec)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    try {
        if (prec < 64) throw UsageError("--prec must be at least 64");
        PrecisionContext ctx(prec);
        PrecisionScope scope(ctx.internal_bits());
        if (*eval) {
            Complex s = parse_complex(s_str);
            Param a = parse_param(a_str), c = parse_param(c_str);
            EvalResult r = evaluate(fn, s, a, c, n_index, ctx);
            out << eval_json(r, output_digits(prec)).dump(2) << "\n";
            return Ok;
        }
        if (*fe) return cmd_fecheck(suite, samples, seed, prec, nmax, threads, out, tol_bits);
        if (*grid) {
            req.s = parse_complex(g_s);
            req.fn = g_fn;
            std::tie(req.a_lo, req.a_hi) = parse_range(a_range);
            std::tie(req.c_lo, req.c_hi) = parse_range(c_range);
            if (out_path.empty()) {
                write_grid(req, ctx, out);
                return Ok;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot write '" << out_path << "'\n";
                return OutputFailure;
            }
            std::ostringstream buffer;
            write_grid(req, ctx, buffer);
            file << buffer.str();
            file.flush();
            if (!file) {
                err << "error: cannot write '" << out_path << "'\n";
                return OutputFailure;
            }
            return Ok;
        }
        if (*poly) {
            write_poly(parse_family(family), pn, as_json, out);
            return Ok;
        }
        if (*zeros) {
            write_zeros(parse_family(family), pn, ctx, digits > 0 ? digits : output_digits(prec), as_json, out);
            return Ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return DomainFailure;
    } catch (const Error& e) {
        err << "evaluation failed: " << e.what() << "\n";
        return DomainFailure;
    }
    return ParseFailure;
}

} // namespace lerch::cli

#endif
