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

#ifndef LERCH_ZETA_INTEGRAL_HPP
#define LERCH_ZETA_INTEGRAL_HPP

#include <lerch/core.hpp>
#include <lerch/quadrature.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace lerch {

enum class Parity { Even, Odd, Mixed };

/// |f(x)| and |Ff(x)| are both at most C e^{-x^2 / r} for all real x.
struct DecayEnvelope {
    double C = 1;
    double r = 2;
};

/// Schwartz test function together with its Fourier transform
/// Ff(y) = int f(x) e^{-2 pi i x y} dx.
class TestFunction {
public:
    using Fn = std::function<Complex(const Real&)>;

    /// Builds and validates a test function: checks the decay envelope at
    /// spot points out to 3 sqrt(r * bits * ln 2) and the declared parity.
    static TestFunction make(std::string name, Fn f, Fn fourier, DecayEnvelope env, Parity parity,
                             const PrecisionContext& ctx = {})
    {
        if (!(env.C > 0) || !(env.r > 0)) throw RegistrationError(name + ": envelope constants must be positive");
        TestFunction tf(std::move(name), std::move(f), std::move(fourier), env, parity);
        tf.validate(ctx);
        return tf;
    }

    const std::string& name() const { return name_; }
    Parity parity() const { return parity_; }
    const DecayEnvelope& envelope() const { return env_; }
    Complex operator()(const Real& x) const { return f_(x); }
    Complex fourier(const Real& x) const { return fhat_(x); }

    /// The Fourier transform as a test function; its own transform is f(-x).
    TestFunction dual() const
    {
        Fn f = f_;
        return TestFunction("F[" + name_ + "]", fhat_, [f](const Real& x) { return f(-x); }, env_, parity_);
    }

private:
    TestFunction(std::string name, Fn f, Fn fourier, DecayEnvelope env, Parity parity)
        : name_(std::move(name)), f_(std::move(f)), fhat_(std::move(fourier)), env_(env), parity_(parity) {}

    void validate(const PrecisionContext& ctx) const
    {
        PrecisionScope scope(ctx.internal_bits());
        Real slack = pow2(-ctx.internal_bits() + 8);
        double x_max = 3 * std::sqrt(env_.r * ctx.working_bits() * 0.6931);
        for (int j = 0; j <= 96; ++j) {
            Real x = j == 0 ? Real(0) : Real(x_max) * pow(Real(2), Real(-(96 - j) / 8.0));
            Real bound = Real(env_.C) * exp(-(x * x) / Real(env_.r)) * (1 + pow2(-20)) + slack;
            for (int sgn : {1, -1}) {
                Real xs = x * sgn;
                Complex fx = f_(xs), gx = fhat_(xs);
                if (abs(fx) > bound || abs(gx) > bound)
                    throw RegistrationError(name_ + ": decay envelope violated at x = " + to_string(xs, 8));
            }
            if (parity_ != Parity::Mixed) {
                int sign = parity_ == Parity::Even ? 1 : -1;
                Complex fx = f_(x), fm = f_(-x);
                if (abs(fm - fx * sign) > slack * (abs(fx) + 1))
                    throw RegistrationError(name_ + ": declared parity does not hold at x = " + to_string(x, 8));
            }
        }
    }

    std::string name_;
    Fn f_;
    Fn fhat_;
    DecayEnvelope env_;
    Parity parity_;
};

namespace detail {

/// Coefficients of the physicists' Hermite polynomial H_n, lowest degree first.
inline std::vector<mpz_class> hermite_h_coefficients(int n)
{
    std::vector<mpz_class> prev{1}, cur{0, 2};
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        // H_{k+1} = 2 y H_k - 2 k H_{k-1}
        std::vector<mpz_class> next(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// H_n(y) by the three-term recurrence.
inline Real hermite_h(int n, const Real& y)
{
    Real prev(1);
    if (n == 0) return prev;
    Real cur = 2 * y;
    for (int k = 1; k < n; ++k) {
        Real next = 2 * y * cur - 2 * k * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// sup_y |H_n(y)| e^{-kappa y^2} bounded through the coefficients.
inline double hermite_envelope_constant(int n, double kappa)
{
    double total = 0;
    std::vector<mpz_class> h = hermite_h_coefficients(n);
    for (std::size_t k = 0; k < h.size(); ++k) {
        double c = std::fabs(h[k].get_d());
        double m = k == 0 ? 1.0 : std::pow(k / (2 * kappa * 2.718281828459045), k / 2.0);
        total += c * m;
    }
    return total * 1.01;
}

} // namespace detail

/// phi_n(x) = H_n(sqrt(2 pi) x) e^{-pi x^2}, the n-th raising-operator image
/// of the Gaussian. Its Fourier transform is (-i)^n phi_n.
inline Real hermite_gaussian(int n, const Real& x)
{
    Real y = sqrt(2 * const_pi()) * x;
    return detail::hermite_h(n, y) * exp(-(const_pi() * x * x));
}

/// phi_n as a validated test function with envelope C e^{-x^2/2}.
inline TestFunction hermite_test_function(int n, const PrecisionContext& ctx = {})
{
    if (n < 0) throw DomainError("Hermite index must be nonnegative");
    // x^2 / 2 = y^2 / (4 pi), so the envelope needs sup |H_n(y)| e^{-(1/2 - 1/(4 pi)) y^2}.
    double kappa = 0.5 - 1 / (4 * 3.141592653589793);
    DecayEnvelope env{detail::hermite_envelope_constant(n, kappa), 2};
    int rot = n % 4;  // (-i)^n
    auto f = [n](const Real& x) { return Complex(hermite_gaussian(n, x)); };
    auto fhat = [n, rot](const Real& x) {
        Real v = hermite_gaussian(n, x);
        switch (rot) {
        case 0: return Complex(v);
        case 1: return Complex(Real(0), -v);
        case 2: return Complex(-v);
        default: return Complex(Real(0), v);
        }
    };
    return TestFunction::make("hermite" + std::to_string(n), f, fhat, env, n % 2 ? Parity::Odd : Parity::Even, ctx);
}

/// Named, validated test functions. Built once, immutable afterwards.
class TestFunctionRegistry {
public:
    static const TestFunctionRegistry& builtin()
    {
        static const TestFunctionRegistry reg = make_builtin();
        return reg;
    }

    const TestFunction& get(const std::string& name) const
    {
        auto it = fns_.find(name);
        if (it == fns_.end()) throw DomainError("unknown test function '" + name + "'");
        return it->second;
    }
    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (const auto& kv : fns_) out.push_back(kv.first);
        return out;
    }

private:
    static TestFunctionRegistry make_builtin()
    {
        TestFunctionRegistry reg;
        PrecisionContext ctx;
        auto gauss = [](const Real& x) { return exp(-(const_pi() * x * x)); };
        for (int n = 0; n <= 12; ++n) reg.add(hermite_test_function(n, ctx));
        reg.add(TestFunction::make(
            "gaussian", [gauss](const Real& x) { return Complex(gauss(x)); },
            [gauss](const Real& x) { return Complex(gauss(x)); }, {1, 2}, Parity::Even, ctx));
        // F[x^2 e^{-pi x^2}](y) = (1/(2 pi) - y^2) e^{-pi y^2}
        reg.add(TestFunction::make(
            "x2_gaussian", [gauss](const Real& x) { return Complex(x * x * gauss(x)); },
            [gauss](const Real& y) { return Complex((1 / (2 * const_pi()) - y * y) * gauss(y)); }, {1, 2},
            Parity::Even, ctx));
        // F[(1 + x) e^{-pi x^2}](y) = (1 - i y) e^{-pi y^2}
        reg.add(TestFunction::make(
            "mixed_gaussian", [gauss](const Real& x) { return Complex((1 + x) * gauss(x)); },
            [gauss](const Real& y) { return Complex(gauss(y), -(y * gauss(y))); }, {2, 2}, Parity::Mixed, ctx));
        // F[e^{-pi x^2 / 2}](y) = sqrt(2) e^{-2 pi y^2}
        reg.add(TestFunction::make(
            "wide_gaussian", [](const Real& x) { return Complex(exp(-(const_pi() * x * x / 2))); },
            [](const Real& y) { return Complex(sqrt(Real(2)) * exp(-(2 * const_pi() * y * y))); }, {1.5, 2},
            Parity::Even, ctx));
        return reg;
    }

    void add(TestFunction f) { fns_.emplace(f.name(), std::move(f)); }

    std::map<std::string, TestFunction> fns_;
};

namespace detail {

/// Radius X beyond which C e^{-X^2/r} is below 2^-(bits + 24).
inline double lattice_cutoff(const DecayEnvelope& env, long bits)
{
    return std::sqrt(env.r * ((bits + 24) * 0.6931 + std::log(std::max(env.C, 1.0))));
}

/// Envelope bound on sum_{|t_n| x > X} |f(t_n x)| over a unit-spaced lattice.
inline Real lattice_tail(const DecayEnvelope& env, double cutoff, const Real& x)
{
    Real X(cutoff);
    Real rr(env.r);
    Real q = exp(-(2 * X * x) / rr);
    return 2 * Real(env.C) * exp(-(X * X) / rr) / (1 - q) + 2 * Real(env.C) * exp(-(X * X) / rr);
}

constexpr long max_lattice_terms = 200000;

} // namespace detail

/// sum_n f((n + c) x) e^{2 pi i n a}, truncated by the decay envelope.
inline EvalResult averaged_kernel(const TestFunction& f, const Param& a, const Param& c, const Real& x,
                                  const PrecisionContext& ctx = {})
{
    if (x.sign() <= 0) throw DomainError("averaged kernel needs x > 0");
    PrecisionScope scope(ctx.internal_bits());
    double X = detail::lattice_cutoff(f.envelope(), ctx.internal_bits());
    double xd = x.to_double(), cd = c.value().to_double();
    long lo = static_cast<long>(std::ceil(-X / xd - cd)), hi = static_cast<long>(std::floor(X / xd - cd));
    if (hi - lo > detail::max_lattice_terms) throw DecayEnvelopeInsufficient("lattice too dense at this x");
    Complex sum;
    Real abs_sum(0);
    for (long n = lo; n <= hi; ++n) {
        Complex v = f((c + n).value() * x) * turn(a * n);
        abs_sum += abs(v);
        sum += v;
    }
    EvalResult r;
    r.value = sum;
    r.err_bound = detail::lattice_tail(f.envelope(), X, x) + abs_sum * pow2(-ctx.internal_bits() + 4);
    return r;
}

/// The Poisson-dual side (1/x) sum_m e^{2 pi i c (m - a)} Ff((m - a) / x).
inline EvalResult poisson_dual_kernel(const TestFunction& f, const Param& a, const Param& c, const Real& x,
                                      const PrecisionContext& ctx = {})
{
    if (x.sign() <= 0) throw DomainError("averaged kernel needs x > 0");
    PrecisionScope scope(ctx.internal_bits());
    double X = detail::lattice_cutoff(f.envelope(), ctx.internal_bits());
    double xi = 1 / x.to_double(), ad = a.value().to_double();
    long lo = static_cast<long>(std::ceil(-X / xi + ad)), hi = static_cast<long>(std::floor(X / xi + ad));
    if (hi - lo > detail::max_lattice_terms) throw DecayEnvelopeInsufficient("dual lattice too dense at this x");
    Complex sum;
    Real abs_sum(0);
    for (long m = lo; m <= hi; ++m) {
        Param t = Param(m) - a;
        Complex v = f.fourier(t.value() / x) * turn(c * t);
        abs_sum += abs(v);
        sum += v;
    }
    EvalResult r;
    r.value = sum / x;
    r.err_bound = (detail::lattice_tail(f.envelope(), X, 1 / x) + abs_sum * pow2(-ctx.internal_bits() + 4)) / x;
    return r;
}

namespace detail {

/// Regular part of int_1^inf sum_{n != -c} e^{2 pi i a (n + c/2)} f((n + c) x) x^{w-1} dx
/// plus the coefficient of 1/w contributed by the excluded term.
struct PhiPieces {
    Complex regular;
    Complex coeff_inv_w;
    Real err;
    int level = 0;
};

inline PhiPieces phi_pieces(const TestFunction& f, const Complex& w, const Param& a, const Param& c,
                            const PrecisionContext& ctx, const QuadratureSpec& spec)
{
    double X = lattice_cutoff(f.envelope(), ctx.internal_bits());
    double cd = c.value().to_double();
    long lo = static_cast<long>(std::ceil(-X - cd)), hi = static_cast<long>(std::floor(X - cd));
    std::vector<Complex> phases;
    std::vector<Real> shifts;
    for (long n = lo; n <= hi; ++n) {
        Param t = c + n;
        bool skip = t.is_zero() && t.is_exact();
        if (t.value().is_zero() && !t.is_exact())
            throw DomainError("floating-point parameter equals an integer; pass it as an exact rational");
        phases.push_back(skip ? Complex(0) : turn(a * n + a * c * Param::exact(1, 2)));
        shifts.push_back(t.value());
    }
    Complex wm1 = w - 1;
    auto integrand = [&](const Real& x) {
        Complex sum;
        for (std::size_t j = 0; j < shifts.size(); ++j) {
            if (phases[j].is_zero()) continue;
            Real tx = shifts[j] * x;
            if (abs(tx) > X) continue;
            sum += f(tx) * phases[j];
        }
        return sum * exp(wm1 * log(x));
    };
    Real tol = pow2(-(ctx.target_bits() + 8));
    QuadratureResult q = integrate_half_line(integrand, Real(1), tol, spec);
    PhiPieces out;
    out.regular = q.value;
    out.level = q.level;
    // Lattice truncation error integrated against x^{Re w - 1} over [1, inf) is
    // dominated by its value near x = 1 where the envelope tail is largest.
    out.err = q.err_est + lattice_tail(f.envelope(), X, Real(1)) * 4;
    if (c.is_integer()) out.coeff_inv_w = -(turn(-(a * c) * Param::exact(1, 2)) * f(Real(0)));
    else out.coeff_inv_w = Complex(0);
    return out;
}

/// Phi_k(f; w, a, c) as parts: regular, coefficient of 1/w.
inline PhiPieces phi_k_pieces(const TestFunction& f, int k, const Complex& w, const Param& a, const Param& c,
                              const PrecisionContext& ctx, const QuadratureSpec& spec)
{
    PhiPieces p1 = phi_pieces(f, w, a, c, ctx, spec);
    PhiPieces p2 = phi_pieces(f, w, 1 - a, 1 - c, ctx, spec);
    // (-1)^k e^{-pi i (a + 1 - c)}
    Complex m = turn(-(a + 1 - c) * Param::exact(1, 2));
    if (k) m = -m;
    PhiPieces out;
    out.regular = p1.regular + m * p2.regular;
    out.coeff_inv_w = p1.coeff_inv_w + m * p2.coeff_inv_w;
    out.err = p1.err + p2.err;
    out.level = std::max(p1.level, p2.level);
    return out;
}

} // namespace detail

/// int_1^inf of the phase-weighted lattice sum of f excluding n = -c.
///
/// When c is an integer the excluded term contributes -e^{-pi i a c} f(0) / s,
/// which is reported in the pole field (location 0); value is then the
/// regular part.
inline EvalResult phi_integral(const TestFunction& f, const Complex& s, const Param& a, const Param& c,
                               const PrecisionContext& ctx = {}, const QuadratureSpec& spec = {})
{
    PrecisionScope scope(ctx.internal_bits());
    detail::PhiPieces p = detail::phi_pieces(f, s, a, c, ctx, spec);
    EvalResult r;
    r.value = p.regular;
    r.err_bound = p.err;
    if (!p.coeff_inv_w.is_zero()) r.pole = Pole{Complex(0), p.coeff_inv_w};
    return r;
}

/// Parts of the zeta integral F_k(f; s, a, c) with pole coefficients of 1/s and 1/(s - 1).
inline CompletedParts zeta_integral_parts(const TestFunction& f, int k, const Complex& s, const Param& a,
                                          const Param& c, const PrecisionContext& ctx = {},
                                          const QuadratureSpec& spec = {})
{
    if (k != 0 && k != 1) throw DomainError("parity index k must be 0 or 1");
    PrecisionScope scope(ctx.internal_bits());
    detail::PhiPieces direct = detail::phi_k_pieces(f, k, s, a, c, ctx, spec);
    detail::PhiPieces dual = detail::phi_k_pieces(f.dual(), k, Complex(1) - s, 1 - c, a, ctx, spec);
    // (-1)^k e^{-pi i a}
    Complex m = turn(-(a * Param::exact(1, 2)));
    if (k) m = -m;
    CompletedParts out;
    out.regular = direct.regular + m * dual.regular;
    out.coeff_zero = direct.coeff_inv_w;
    // 1 / (1 - s) = -1 / (s - 1)
    out.coeff_one = -(m * dual.coeff_inv_w);
    out.err = direct.err + dual.err;
    return out;
}

/// F_k(f; s, a, c) with the pole terms folded in, or reported as a pole with
/// the finite part as value inside the near-pole window.
inline EvalResult zeta_integral(const TestFunction& f, int k, const Complex& s, const Param& a, const Param& c,
                                const PrecisionContext& ctx = {}, const QuadratureSpec& spec = {})
{
    PrecisionScope scope(ctx.internal_bits());
    CompletedParts parts = zeta_integral_parts(f, k, s, a, c, ctx, spec);
    return detail::finish_completed(parts, s, ctx);
}

struct ResidualReport {
    Real residual;
    Real err_bound;
};

/// |F_k(f; s, a, c) - (-1)^k e^{-pi i a} F_k(Ff; 1 - s, 1 - c, a)| from two
/// separately evaluated sides.
inline ResidualReport fe_residual_general(const TestFunction& f, int k, const Complex& s, const Param& a,
                                          const Param& c, const PrecisionContext& ctx = {},
                                          const QuadratureSpec& spec = {})
{
    PrecisionScope scope(ctx.internal_bits());
    EvalResult lhs = zeta_integral(f, k, s, a, c, ctx, spec);
    EvalResult rhs = zeta_integral(f.dual(), k, Complex(1) - s, 1 - c, a, ctx, spec);
    if (lhs.pole || rhs.pole) throw PoleError("functional equation check requested at a pole");
    Complex m = turn(-(a * Param::exact(1, 2)));
    if (k) m = -m;
    ResidualReport out;
    out.residual = abs(lhs.value - m * rhs.value);
    out.err_bound = lhs.err_bound + rhs.err_bound;
    return out;
}

struct PeriodicityReport {
    /// |F_k(s, a+1, c) - e^{pi i c} F_k(s, a, c)|
    Real shift_a;
    /// |F_k(s, a, c+1) - e^{-pi i a} F_k(s, a, c)|
    Real shift_c;
    Real err_bound;
};

inline PeriodicityReport periodicity_residuals(const TestFunction& f, int k, const Complex& s, const Param& a,
                                               const Param& c, const PrecisionContext& ctx = {},
                                               const QuadratureSpec& spec = {})
{
    PrecisionScope scope(ctx.internal_bits());
    EvalResult base = zeta_integral(f, k, s, a, c, ctx, spec);
    EvalResult ta = zeta_integral(f, k, s, a + 1, c, ctx, spec);
    EvalResult tc = zeta_integral(f, k, s, a, c + 1, ctx, spec);
    Complex pa = turn(c * Param::exact(1, 2)), pc = turn(-(a * Param::exact(1, 2)));
    PeriodicityReport out;
    out.shift_a = abs(ta.value - pa * base.value);
    out.shift_c = abs(tc.value - pc * base.value);
    if (base.pole) {
        out.shift_a += abs(ta.pole->residue - pa * base.pole->residue);
        out.shift_c += abs(tc.pole->residue - pc * base.pole->residue);
    }
    out.err_bound = base.err_bound * 2 + ta.err_bound + tc.err_bound;
    return out;
}

/// Two-sided parity-projected Mellin transform
/// M_k(f)(s) = int_0^inf (f(x) + (-1)^k f(-x)) x^{s-1} dx by quadrature; Re s > 0
/// (or larger, as the behaviour of f at 0 requires).
inline EvalResult mellin_transform(const std::function<Complex(const Real&)>& f, int k, const Complex& s,
                                   const PrecisionContext& ctx = {}, const QuadratureSpec& spec = {})
{
    PrecisionScope scope(ctx.internal_bits());
    Complex sm1 = s - 1;
    auto integrand = [&](const Real& x) {
        Complex v = k ? f(x) - f(-x) : f(x) + f(-x);
        if (v.is_zero()) return v;
        return v * exp(sm1 * log(x));
    };
    QuadratureResult q = integrate_half_line(integrand, Real(0), pow2(-(ctx.target_bits() + 8)), spec);
    EvalResult r;
    r.value = q.value;
    r.err_bound = q.err_est;
    return r;
}

} // namespace lerch

#endif
