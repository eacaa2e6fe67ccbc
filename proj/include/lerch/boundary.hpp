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

#ifndef LERCH_BOUNDARY_HPP
#define LERCH_BOUNDARY_HPP

#include <lerch/core.hpp>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <complex>
#include <future>
#include <thread>
#include <vector>

namespace lerch {

namespace detail {

inline bool is_integer_point(const Complex& s) { return s.im.is_zero() && s.re.is_integer(); }

inline void reject_integer_s(const Complex& s)
{
    if (is_integer_point(s)) throw IntegerSRejected("integer s: a gamma factor of the correction term is singular");
}

inline bool open_unit(const Param& p)
{
    if (p.is_exact()) return p.rational() > 0 && p.rational() < 1;
    Real v = p.value();
    return v > 0 && v < 1;
}

} // namespace detail

/// The four summands of the correction term S^{+-}(s, a, c), k = 0 for +, 1 for -:
///   c^{-s} + (-1)^k e^{-2 pi i a} (1 - c)^{-s}
///   + i^k gamma^{+-}(1 - s) (e^{-2 pi i a c} a^{s-1} + (-1)^k e^{2 pi i (1 - a) c} (1 - a)^{s-1}).
struct CorrectionTerms {
    Complex c_power;
    Complex c_mirror;
    Complex a_power;
    Complex a_mirror;
    Real err;

    Complex sum() const { return c_power + c_mirror + a_power + a_mirror; }
};

/// Correction terms for s not an integer and (a, c) in the open unit square.
inline CorrectionTerms correction_terms(Sign sign, const Complex& s, const Param& a, const Param& c,
                                        const PrecisionContext& ctx = {})
{
    detail::reject_integer_s(s);
    if (!detail::open_unit(a) || !detail::open_unit(c))
        throw DomainError("correction term is evaluated for (a, c) in the open unit square");
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s));
    int k = parity_of(sign);
    Real av = a.value(), cv = c.value();
    Real one_a = (1 - a).value(), one_c = (1 - c).value();
    Complex sm1 = s - 1;
    Complex gam = tate_gamma(sign, Complex(1) - s, ctx).value;
    if (k) gam = mul_i(gam);
    CorrectionTerms t;
    t.c_power = exp(-(s * log(cv)));
    t.c_mirror = turn(-a) * exp(-(s * log(one_c)));
    t.a_power = gam * turn(-(a * c)) * exp(sm1 * log(av));
    t.a_mirror = gam * turn((1 - a) * c) * exp(sm1 * log(one_a));
    if (k) {
        t.c_mirror = -t.c_mirror;
        t.a_mirror = -t.a_mirror;
    }
    Real mag = abs(t.c_power) + abs(t.c_mirror) + abs(t.a_power) + abs(t.a_mirror);
    t.err = mag * pow2(-ctx.internal_bits() + 8);
    return t;
}

inline EvalResult correction(Sign sign, const Complex& s, const Param& a, const Param& c,
                             const PrecisionContext& ctx = {})
{
    CorrectionTerms t = correction_terms(sign, s, a, c, ctx);
    PrecisionScope scope(ctx.internal_bits());
    EvalResult r;
    r.value = t.sum();
    r.err_bound = t.err;
    return r;
}

namespace detail {

inline void require_closed_square(const Param& a, const Param& c)
{
    if (classify(a, c) == DomainClass::Outside)
        throw DomainError("renormalized functions are evaluated on the closed unit square");
}

} // namespace detail

/// Completed renormalized function: the lattice representation with the four
/// edge terms replaced by their entire parts. Continuous on the closed square.
inline EvalResult renorm_lhat(Sign sign, const Complex& s, const Param& a, const Param& c,
                              const PrecisionContext& ctx = {})
{
    detail::reject_integer_s(s);
    detail::require_closed_square(a, c);
    PrecisionScope scope(ctx.internal_bits());
    CompletedParts parts = completed_parts(sign, s, a, c, detail::BadTerms::Regularize);
    EvalResult r;
    r.value = parts.regular;
    r.err_bound = parts.err + abs(r.value) * pow2(-ctx.internal_bits() + 4);
    return r;
}

/// L^{R,+-}(s, a, c) = L^{+-}(s, a, c) - S^{+-}(s, a, c), extended continuously
/// to the closed unit square.
inline EvalResult renorm_l(Sign sign, const Complex& s, const Param& a, const Param& c,
                           const PrecisionContext& ctx = {})
{
    detail::reject_integer_s(s);
    detail::require_closed_square(a, c);
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s));
    int k = parity_of(sign);
    CompletedParts parts = completed_parts(sign, s, a, c, detail::BadTerms::Regularize);
    Complex rg = rgamma_factor(k, s);
    EvalResult r;
    r.value = rg * parts.regular;
    r.err_bound = abs(rg) * parts.err + abs(r.value) * pow2(-ctx.internal_bits() + 6);
    return r;
}

/// Boundary pieces of the closed unit square.
enum class BoundaryLocation { EdgeC1, EdgeC0, EdgeA1, EdgeA0, Corner11, Corner01, Corner10, Corner00 };

inline bool is_corner(BoundaryLocation loc)
{
    return loc == BoundaryLocation::Corner11 || loc == BoundaryLocation::Corner01 ||
           loc == BoundaryLocation::Corner10 || loc == BoundaryLocation::Corner00;
}

inline const char* to_string(BoundaryLocation loc)
{
    switch (loc) {
    case BoundaryLocation::EdgeC1: return "c=1";
    case BoundaryLocation::EdgeC0: return "c=0";
    case BoundaryLocation::EdgeA1: return "a=1";
    case BoundaryLocation::EdgeA0: return "a=0";
    case BoundaryLocation::Corner11: return "(1,1)";
    case BoundaryLocation::Corner01: return "(0,1)";
    case BoundaryLocation::Corner10: return "(1,0)";
    default: return "(0,0)";
    }
}

/// Whether zeta(s, a, c) on the open square extends continuously to the
/// given edge (open segment) or corner.
inline bool continuity_classifier(const Complex& s, BoundaryLocation loc)
{
    double re = s.re.to_double();
    switch (loc) {
    case BoundaryLocation::EdgeA0:
    case BoundaryLocation::EdgeA1:
    case BoundaryLocation::Corner01:
    case BoundaryLocation::Corner11: return re > 1;
    case BoundaryLocation::EdgeC0: return re < 0;
    case BoundaryLocation::EdgeC1: return true;
    default: return false;
    }
}

/// Edge or corner approached from the open square. For edges, position is
/// the fixed coordinate a' (c-edges) or c' (a-edges) in (0, 1).
struct BoundaryTarget {
    BoundaryLocation where = BoundaryLocation::EdgeC1;
    Param position = Param::exact(1, 2);
};

enum class ProbeMode {
    /// subtract the divergent closed-form term of the case, extrapolate to the edge
    Subtracted,
    /// plain zeta* along the approach, no subtraction
    Raw
};

struct ProbeOptions {
    ProbeMode mode = ProbeMode::Subtracted;
    int first_level = 3;
    int last_level = 12;
    double tolerance = 0x1p-40;
};

struct ProbeReport {
    BoundaryTarget target;
    ProbeMode mode = ProbeMode::Subtracted;
    std::vector<double> eps;
    /// zeta*(s, a_k, c_k) minus the subtraction term (Raw mode: zeta* itself)
    std::vector<Complex> values;
    /// |value_k - boundary value|
    std::vector<double> raw_gaps;
    /// |extrapolation to eps = 0 through the first k + 1 points - boundary value|
    std::vector<double> extrapolated_gaps;
    Complex limit;
    Complex boundary_value;
    /// slope of log raw gap against log eps over the last five points
    double decay_exponent = 0;
    bool converged = false;
    /// every raw gap exceeds 1e-3
    bool persistent_gap = false;
};

namespace detail {

/// Value at 0 of the interpolating polynomial through (x_j, y_j), Neville's scheme.
inline Complex neville_at_zero(const std::vector<Real>& x, std::vector<Complex> y)
{
    std::size_t n = y.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) {
            // P_{i..i+m}(0) from P_{i..i+m-1}(0) and P_{i+1..i+m}(0)
            y[i] = (y[i + 1] * x[i] - y[i] * x[i + m]) / (x[i] - x[i + m]);
        }
    return y[0];
}

inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// 1/2 (gamma^+(1 - s) -+ i gamma^-(1 - s)): coefficient of the power
/// (1-a)^{s-1} (upper sign) or a^{s-1} (lower sign) near an a-edge.
inline Complex a_edge_coefficient(const Complex& s, bool upper, const PrecisionContext& ctx)
{
    auto ratio = [&](Sign sg) {
        try {
            return tate_gamma(sg, Complex(1) - s, ctx).value;
        } catch (const PoleError& e) {
            if (e.kind() != SingularityKind::Zero) throw;
            return Complex(0);
        }
    };
    Complex gp = ratio(Sign::Plus);
    Complex gm = mul_i(ratio(Sign::Minus));
    return (upper ? gp - gm : gp + gm) / 2;
}

inline void check_probe_range(const Complex& s, const BoundaryTarget& t, ProbeMode mode)
{
    bool integer = is_integer_point(s);
    long m = integer ? s.re.to_long() : 0;
    bool a_side = t.where == BoundaryLocation::EdgeA0 || t.where == BoundaryLocation::EdgeA1 || is_corner(t.where);
    if (integer && m == 1 && a_side)
        throw CaseOutOfRange("s = 1: the boundary value on a = 0, 1 is a pole");
    if (mode == ProbeMode::Raw || !integer) return;
    switch (t.where) {
    case BoundaryLocation::EdgeC0:
    case BoundaryLocation::EdgeC1:
        // s >= 2: the Dirichlet series converges absolutely on the closed square
        if (m == 1) throw CaseOutOfRange("c-edge limit formula at integer s needs s <= 0 or s >= 2");
        return;
    case BoundaryLocation::EdgeA0:
    case BoundaryLocation::EdgeA1:
        if (m < 1) throw CaseOutOfRange("a-edge limit formula holds at integer s only for s >= 1");
        return;
    default:
        if (!(m >= 2 || (m < 0 && m % 2 != 0)))
            throw CaseOutOfRange("corner limit formula holds at integer s only for s >= 2 or negative odd s");
    }
}

} // namespace detail

/// Follows (a_k, c_k) -> target along eps = 2^-k and compares zeta*(s, a_k, c_k),
/// minus the case's divergent closed-form term, with the boundary value.
///
/// Subtracted mode extrapolates the sequence to eps = 0 by polynomial
/// extrapolation (the remainder is analytic in eps along a straight approach;
/// at integer s >= 2 the logarithmic a-edge term is removed first)
/// and declares convergence when the extrapolated gaps decrease over the
/// last four levels and end below the tolerance. Raw mode reports the decay exponent of the plain gaps.
inline ProbeReport boundary_limit_probe(const Complex& s, const BoundaryTarget& target,
                                        const PrecisionContext& ctx = {}, const ProbeOptions& opt = {})
{
    detail::check_probe_range(s, target, opt.mode);
    if (!is_corner(target.where) && !detail::open_unit(target.position))
        throw DomainError("edge position must lie in (0, 1)");
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s) + 16);
    using L = BoundaryLocation;
    L w = target.where;
    bool integer = detail::is_integer_point(s);
    Param pos = target.position;

    Param a_edge, c_edge;
    switch (w) {
    case L::EdgeC1: a_edge = pos; c_edge = Param(1); break;
    case L::EdgeC0: a_edge = pos; c_edge = Param(0); break;
    case L::EdgeA1: a_edge = Param(1); c_edge = pos; break;
    case L::EdgeA0: a_edge = Param(0); c_edge = pos; break;
    case L::Corner11: a_edge = Param(1); c_edge = Param(1); break;
    case L::Corner01: a_edge = Param(0); c_edge = Param(1); break;
    case L::Corner10: a_edge = Param(1); c_edge = Param(0); break;
    case L::Corner00: a_edge = Param(0); c_edge = Param(0); break;
    }
    EvalResult bv = zeta_star(s, a_edge, c_edge, ctx);

    bool sub = opt.mode == ProbeMode::Subtracted;
    bool sub_c0 = sub && (w == L::EdgeC0 || w == L::Corner10 || w == L::Corner00);
    bool a_upper = w == L::EdgeA1 || w == L::Corner11 || w == L::Corner10;
    bool a_lower = w == L::EdgeA0 || w == L::Corner01 || w == L::Corner00;
    // at integer s = m >= 2 the a-power coefficient is infinite; the singular
    // piece becomes (-x)^{m-1} (-log x) / (m-1)! with x = +-2 pi i delta
    bool log_a = sub && (a_upper || a_lower) && integer && s.re > 1;
    bool sub_a = sub && (a_upper || a_lower) && !log_a;
    Complex coeff_a = sub_a ? detail::a_edge_coefficient(s, a_upper, ctx) : Complex(0);
    long m = log_a ? s.re.to_long() : 0;
    Real factorial(1);
    for (long j = 2; j < m; ++j) factorial *= j;

    ProbeReport rep;
    rep.target = target;
    rep.mode = opt.mode;
    rep.boundary_value = bv.value;
    std::vector<Real> xs;
    for (int lev = opt.first_level; lev <= opt.last_level; ++lev) {
        Param e = Param::exact(mpq_class(1, mpz_class(1) << lev));
        // approach at a slant so both coordinates move
        Param quarter = e * Param::exact(1, 4);
        Param ak, ck;
        switch (w) {
        case L::EdgeC1: ak = pos + quarter; ck = 1 - e; break;
        case L::EdgeC0: ak = pos + quarter; ck = e; break;
        case L::EdgeA1: ak = 1 - e; ck = pos + quarter; break;
        case L::EdgeA0: ak = e; ck = pos + quarter; break;
        case L::Corner11: ak = 1 - e; ck = 1 - e * Param::exact(1, 2); break;
        case L::Corner01: ak = e; ck = 1 - e * Param::exact(1, 2); break;
        case L::Corner10: ak = 1 - e; ck = e * Param::exact(1, 2); break;
        case L::Corner00: ak = e; ck = e * Param::exact(1, 2); break;
        }
        Complex v = zeta_star(s, ak, ck, ctx).value;
        if (sub_c0) v -= exp(-(s * log(ck.value())));
        if (sub_a) {
            if (a_upper) v -= coeff_a * turn((1 - ak) * ck) * exp((s - 1) * log((1 - ak).value()));
            else v -= coeff_a * turn(-(ak * ck)) * exp((s - 1) * log(ak.value()));
        }
        if (log_a) {
            Real delta = a_upper ? (1 - ak).value() : ak.value();
            Complex x = mul_i(Complex(2 * const_pi() * delta));
            if (!a_upper) x = -x;
            Complex lead = a_upper ? turn((1 - ak) * ck) : turn(-(ak * ck));
            Complex mx = -x, pw(1);
            for (long j = 1; j < m; ++j) pw = pw * mx;
            v += lead * pw * log(x) / factorial;
        }
        rep.eps.push_back(e.value().to_double());
        xs.push_back(e.value());
        rep.values.push_back(v);
        rep.raw_gaps.push_back(abs(v - bv.value).to_double());
        std::vector<Complex> ys(rep.values.begin(), rep.values.end());
        Complex ex = detail::neville_at_zero(xs, ys);
        rep.extrapolated_gaps.push_back(abs(ex - bv.value).to_double());
        rep.limit = ex;
    }
    std::size_t n = rep.eps.size();
    std::size_t from = n > 5 ? n - 5 : 0;
    std::vector<double> lx, ly;
    for (std::size_t i = from; i < n; ++i) {
        lx.push_back(std::log(rep.eps[i]));
        ly.push_back(std::log(std::max(rep.raw_gaps[i], 1e-300)));
    }
    rep.decay_exponent = detail::fit_slope(lx, ly);
    rep.persistent_gap = std::all_of(rep.raw_gaps.begin(), rep.raw_gaps.end(), [](double g) { return g > 1e-3; });
    if (sub) {
        // final gap below tolerance, reached by a decreasing tail
        const auto& g = rep.extrapolated_gaps;
        rep.converged = n >= 4 && g[n - 1] < opt.tolerance;
        for (std::size_t i = n >= 4 ? n - 4 : 0; i + 1 < n && rep.converged; ++i)
            rep.converged = g[i + 1] < g[i] || g[i + 1] < opt.tolerance * 1e-6;
    } else {
        rep.converged = rep.decay_exponent > 0.1;
    }
    return rep;
}

struct LpOptions {
    int first_level = 3;
    int last_level = 10;
    /// Chebyshev nodes per coordinate for the smooth renormalized part
    int interpolation_nodes = 40;
    /// points in the final regression
    int fit_points = 5;
};

struct LpReport {
    std::vector<double> eps;
    /// int over [eps, 1 - eps]^2 of |F|^p
    std::vector<double> integrals;
    /// I(eps_{k}) - I(eps_{k-1}), indexed by eps_k (first entry unused, 0)
    std::vector<double> increments;
    /// slope of log increment against log eps over the last fit_points levels
    double exponent = 0;
    bool bounded = false;
    /// 1 - 1/p < Re(s) < 1/p
    bool predicted_bounded = false;
    /// exponent of the dominant correction-term power: min(1 - p Re s, 1 - p (1 - Re s))
    double predicted_exponent = 0;
    /// max interpolation error of the smooth part at check points
    double interpolation_error = 0;
    /// s is an integer: classification is reported, not asserted
    bool report_only = false;
};

namespace detail {

using cd = std::complex<double>;

inline cd to_cd(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

/// Two-dimensional Chebyshev interpolant on [0, 1]^2 from values at first-kind nodes.
class Chebyshev2D {
public:
    Chebyshev2D(int n, const std::vector<cd>& values) : n_(n), coef_(static_cast<std::size_t>(n) * n)
    {
        // c_{jk} = (2 - d_j0)(2 - d_k0) / n^2 sum_{p,q} f(x_p, y_q) T_j(x_p) T_k(y_q)
        std::vector<double> t(static_cast<std::size_t>(n) * n);
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p) t[j * n + p] = std::cos(M_PI * j * (p + 0.5) / n);
        std::vector<cd> tmp(static_cast<std::size_t>(n) * n);
        for (int j = 0; j < n; ++j)
            for (int q = 0; q < n; ++q) {
                cd acc = 0;
                for (int p = 0; p < n; ++p) acc += values[p * n + q] * t[j * n + p];
                tmp[j * n + q] = acc;
            }
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                cd acc = 0;
                for (int q = 0; q < n; ++q) acc += tmp[j * n + q] * t[k * n + q];
                double w = (j == 0 ? 1.0 : 2.0) * (k == 0 ? 1.0 : 2.0) / (double(n) * n);
                coef_[j * n + k] = acc * w;
            }
    }

    static double node(int n, int p) { return (1 + std::cos(M_PI * (p + 0.5) / n)) / 2; }

    cd operator()(double a, double c) const
    {
        double x = 2 * a - 1, y = 2 * c - 1;
        std::vector<double> tx(n_), ty(n_);
        tx[0] = ty[0] = 1;
        if (n_ > 1) {
            tx[1] = x;
            ty[1] = y;
        }
        for (int j = 2; j < n_; ++j) {
            tx[j] = 2 * x * tx[j - 1] - tx[j - 2];
            ty[j] = 2 * y * ty[j - 1] - ty[j - 2];
        }
        cd acc = 0;
        for (int j = 0; j < n_; ++j) {
            cd row = 0;
            for (int k = 0; k < n_; ++k) row += coef_[j * n_ + k] * ty[k];
            acc += row * tx[j];
        }
        return acc;
    }

private:
    int n_;
    std::vector<cd> coef_;
};

/// Renormalized parts that are finite at this s for the signs in use; at
/// integer s a sign whose local gamma factors are singular is rejected.
inline void check_lp_sign(Sign sign, const Complex& s)
{
    int k = parity_of(sign);
    Complex a1 = (s + k) / 2, a2 = (Complex(1) - s + k) / 2;
    if (is_nonpositive_integer(a1) || is_nonpositive_integer(a2))
        throw IntegerSRejected("renormalized decomposition is singular at this integer s");
}

} // namespace detail

/// Growth of int_{[eps, 1-eps]^2} |w_+ L^+ + w_- L^-|^p da dc as eps -> 0.
///
/// The function is split as the renormalized part (smooth on the closed
/// square, replaced by a Chebyshev interpolant) plus the closed-form
/// correction terms, and integrated with Gauss-Legendre panels refined
/// dyadically towards the edges. The increments I(eps_k) - I(eps_{k-1})
/// behave like eps^beta; the member is classified bounded when beta > 0.1.
inline LpReport lp_diagnostic(const Complex& w_plus, const Complex& w_minus, const Complex& s, double p,
                              const PrecisionContext& ctx = {}, const LpOptions& opt = {})
{
    if (!(p >= 1)) throw DomainError("p must be at least 1");
    if (w_plus.is_zero() && w_minus.is_zero()) throw DomainError("trivial linear combination");
    using detail::cd;
    LpReport rep;
    rep.report_only = detail::is_integer_point(s);
    std::vector<Sign> signs;
    if (!w_plus.is_zero()) signs.push_back(Sign::Plus);
    if (!w_minus.is_zero()) signs.push_back(Sign::Minus);
    for (Sign sg : signs) detail::check_lp_sign(sg, s);

    long bits = ctx.internal_bits() + detail::imaginary_part_bits(s);
    cd wp = detail::to_cd(w_plus), wm = detail::to_cd(w_minus);
    cd sd = detail::to_cd(s);

    // smooth part at Chebyshev nodes
    int n = opt.interpolation_nodes;
    auto smooth_at = [&](const Param& a, const Param& c) {
        PrecisionScope scope(bits);
        cd acc = 0;
        for (Sign sg : signs) {
            int k = parity_of(sg);
            CompletedParts parts = completed_parts(sg, s, a, c, detail::BadTerms::Regularize);
            cd v = detail::to_cd(rgamma_factor(k, s) * parts.regular);
            acc += (sg == Sign::Plus ? wp : wm) * v;
        }
        return acc;
    };
    std::vector<cd> values(static_cast<std::size_t>(n) * n);
    {
        unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        std::vector<std::future<void>> jobs;
        for (unsigned t = 0; t < threads; ++t)
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (int pi = static_cast<int>(t); pi < n; pi += static_cast<int>(threads))
                    for (int q = 0; q < n; ++q) {
                        Param a = Param::real(Real(detail::Chebyshev2D::node(n, pi)));
                        Param c = Param::real(Real(detail::Chebyshev2D::node(n, q)));
                        values[pi * n + q] = smooth_at(a, c);
                    }
            }));
        for (auto& j : jobs) j.get();
    }
    detail::Chebyshev2D smooth(n, values);
    for (auto [a, c] : {std::pair{0.0, 0.0}, std::pair{0.137, 0.911}, std::pair{1.0, 0.5}, std::pair{0.5, 1.0}}) {
        cd direct = smooth_at(Param::real(Real(a)), Param::real(Real(c)));
        rep.interpolation_error = std::max(rep.interpolation_error, std::abs(direct - smooth(a, c)));
    }

    // correction terms in double
    cd gp, gm;
    {
        PrecisionScope scope(bits);
        if (!w_plus.is_zero()) gp = detail::to_cd(tate_gamma(Sign::Plus, Complex(1) - s, ctx).value);
        if (!w_minus.is_zero()) gm = cd(0, 1) * detail::to_cd(tate_gamma(Sign::Minus, Complex(1) - s, ctx).value);
    }
    auto turn_d = [](double r) { return std::polar(1.0, 2 * M_PI * r); };
    auto F = [&](double a, double c) {
        cd cs = std::exp(-sd * std::log(c)), cm = turn_d(-a) * std::exp(-sd * std::log(1 - c));
        cd as = turn_d(-a * c) * std::exp((sd - 1.0) * std::log(a));
        cd am = turn_d((1 - a) * c) * std::exp((sd - 1.0) * std::log(1 - a));
        cd v = smooth(a, c);
        if (!w_plus.is_zero()) v += wp * (cs + cm + gp * (as + am));
        if (!w_minus.is_zero()) v += wm * (cs - cm + gm * (as - am));
        return v;
    };

    // panels: dyadic towards both ends, uniform in the middle
    int K = opt.last_level;
    std::vector<std::pair<double, double>> panels;
    std::vector<int> level;  // dyadic level of a panel, 0 for interior
    double e0 = std::ldexp(1.0, -opt.first_level);
    for (int j = K - 1; j >= opt.first_level; --j) {
        panels.push_back({std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j)});
        level.push_back(j + 1);
    }
    for (int m = 0; m < 8; ++m) {
        panels.push_back({e0 + (1 - 2 * e0) * m / 8, e0 + (1 - 2 * e0) * (m + 1) / 8});
        level.push_back(0);
    }
    for (int j = opt.first_level; j <= K - 1; ++j) {
        panels.push_back({1 - std::ldexp(1.0, -j), 1 - std::ldexp(1.0, -j - 1)});
        level.push_back(j + 1);
    }
    using GL = boost::math::quadrature::gauss<double, 20>;
    auto integrate_cell = [&](std::pair<double, double> pa, std::pair<double, double> pc) {
        const auto& x = GL::abscissa();
        const auto& w = GL::weights();
        double ha = (pa.second - pa.first) / 2, ma = (pa.second + pa.first) / 2;
        double hc = (pc.second - pc.first) / 2, mc = (pc.second + pc.first) / 2;
        double acc = 0;
        // abscissa holds the nonnegative half; index 0 is the centre for odd counts only
        auto nodes = [&](auto&& fn) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0) fn(0.0, w[i]);
                else {
                    fn(x[i], w[i]);
                    fn(-x[i], w[i]);
                }
            }
        };
        nodes([&](double xa, double wa) {
            nodes([&](double xc, double wc) {
                acc += wa * wc * std::pow(std::abs(F(ma + ha * xa, mc + hc * xc)), p);
            });
        });
        return acc * ha * hc;
    };
    // cell contributes to I(eps_j) for all j >= max level of its two panels
    std::vector<double> by_level(K + 1, 0.0);
    for (std::size_t i = 0; i < panels.size(); ++i)
        for (std::size_t j = 0; j < panels.size(); ++j) {
            int lv = std::max(std::max(level[i], level[j]), opt.first_level);
            by_level[lv] += integrate_cell(panels[i], panels[j]);
        }
    double total = 0;
    for (int j = opt.first_level; j <= K; ++j) {
        total += by_level[j];
        rep.eps.push_back(std::ldexp(1.0, -j));
        rep.integrals.push_back(total);
        rep.increments.push_back(j == opt.first_level ? 0.0 : by_level[j]);
    }
    std::vector<double> lx, ly;
    int m = static_cast<int>(rep.eps.size());
    for (int i = std::max(1, m - opt.fit_points); i < m; ++i) {
        lx.push_back(std::log(rep.eps[i]));
        ly.push_back(std::log(std::max(rep.increments[i], 1e-300)));
    }
    rep.exponent = detail::fit_slope(lx, ly);
    rep.bounded = rep.exponent > 0.1;
    double re = sd.real();
    rep.predicted_bounded = 1 - 1 / p < re && re < 1 / p;
    rep.predicted_exponent = std::min(1 - p * re, 1 - p * (1 - re));
    return rep;
}

} // namespace lerch

#endif
