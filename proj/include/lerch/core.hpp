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

#ifndef LERCH_CORE_HPP
#define LERCH_CORE_HPP

#include <lerch/incomplete_gamma.hpp>
#include <lerch/param.hpp>

#include <cmath>
#include <initializer_list>

namespace lerch {

/// Pieces of a completed function: regular part plus simple pole terms
/// coeff_one / (s - 1) and coeff_zero / s.
struct CompletedParts {
    Complex regular;
    Complex coeff_one;
    Complex coeff_zero;
    Real err;
};

/// Record of the shift (a, c) = (a0 + shift_a, c0 + shift_c) into [0, 1)^2.
struct ReductionRecord {
    Param a0;
    Param c0;
    long shift_a = 0;
    long shift_c = 0;
    /// f(s, a, c) = phase * f(s, a0, c0) for the twisted-periodic functions.
    Complex phase;
};

inline ReductionRecord reduce_fundamental(const Param& a, const Param& c)
{
    ReductionRecord r;
    r.shift_a = a.floor_long();
    r.shift_c = c.floor_long();
    r.a0 = a - r.shift_a;
    r.c0 = c - r.shift_c;
    r.phase = turn(-(r.a0 * r.shift_c));
    return r;
}

namespace detail {

/// How the terms that carry the boundary singularities are treated.
enum class BadTerms { Exclude, Regularize };

/// Number of extra bits that keep non-completed values accurate when the
/// gamma factor is exponentially small in |Im s|.
inline long imaginary_part_bits(const Complex& s)
{
    double y = std::fabs(s.im.to_double());
    return static_cast<long>(std::ceil(y * 3.1416 / (4 * 0.6931))) + 4;
}

/// sum_n turn(rate * n + offset) * K(n + shift) over the lattice, where K(t)
/// is x^-alpha Gamma(alpha, x) with x = pi t^2, times t for odd parity.
///
/// Terms with n in `bad` are replaced by their entire parts in Regularize
/// mode; in Exclude mode a term with t exactly zero is skipped.
inline Approx lattice_sum(int parity, const Complex& alpha, const Param& shift, const Param& rate, const Param& offset,
                          std::initializer_list<long> bad, BadTerms mode)
{
    long p = current_precision();
    Real pi = const_pi();
    double ra = abs(alpha - 1).to_double();
    double m = std::sqrt((p * 0.6931 + 24) / 3.1416) + 1.5;
    m = std::max(m, std::sqrt((2 * ra + 2) / 3.1416) + 1);
    Real radius(m);
    long lo = static_cast<long>(std::ceil(-shift.value().to_double() - m));
    long hi = static_cast<long>(std::floor(-shift.value().to_double() + m));

    bool have_gamma = !is_nonpositive_integer(alpha);
    Complex gamma_alpha = have_gamma ? gamma_value(alpha) : Complex(0);

    Complex sum;
    Real err(0);
    for (long n = lo; n <= hi; ++n) {
        Param t = shift + n;
        Real tv = t.value();
        bool is_bad = false;
        if (mode == BadTerms::Regularize)
            for (long b : bad) is_bad = is_bad || b == n;
        Complex phase = turn(rate * n + offset);
        if (is_bad) {
            Approx reg = regular_lower_gamma(alpha, pi * tv * tv);
            Complex k = parity ? reg.value * tv : reg.value;
            sum -= phase * k;
            err += reg.err * (parity ? abs(tv) + 1 : Real(1));
            continue;
        }
        if (tv.is_zero()) {
            if (!t.is_exact())
                throw DomainError("floating-point parameter equals an integer; pass it as an exact rational");
            continue;
        }
        Approx u = scaled_upper_gamma(alpha, pi * tv * tv, have_gamma ? &gamma_alpha : nullptr);
        Complex k = parity ? u.value * tv : u.value;
        sum += phase * k;
        err += u.err * (parity ? abs(tv) : Real(1));
    }
    // Tail: |x^-alpha Gamma(alpha, x)| <= e^-x / (x - |alpha - 1|) past the radius.
    Real x0 = pi * radius * radius;
    Real tail = 4 * (radius + 1) * exp(-x0) / (x0 - ra);
    err += tail + abs(sum) * pow2(-p + 6);
    return {sum, err};
}

} // namespace detail

/// Completed parts of L^{+-}(s, a, c) for arbitrary real a, c.
///
/// Regularize mode (valid for a, c in [0, 1]) replaces the four lattice
/// terms nearest the square's edges by their entire parts, which yields the
/// renormalized completed function; no pole terms appear in that mode.
inline CompletedParts completed_parts(Sign sign, const Complex& s, const Param& a, const Param& c,
                                      detail::BadTerms mode = detail::BadTerms::Exclude)
{
    int k = parity_of(sign);
    Complex alpha1 = (s + k) / 2;
    Complex alpha2 = (Complex(1) - s + k) / 2;
    Approx first = detail::lattice_sum(k, alpha1, c, a, Param(0), {0, -1}, mode);
    Approx second = detail::lattice_sum(k, alpha2, -a, c, -(a * c), {0, 1}, mode);
    CompletedParts out;
    out.regular = k == 0 ? first.value + second.value : first.value - mul_i(second.value);
    out.err = first.err + second.err;
    out.coeff_one = Complex(0);
    out.coeff_zero = Complex(0);
    if (k == 0 && mode == detail::BadTerms::Exclude) {
        if (a.is_integer()) out.coeff_one = Complex(2);
        if (c.is_integer()) out.coeff_zero = -(turn(-(a * c)) * 2);
    }
    return out;
}

namespace detail {

/// Folds the pole terms into the value unless s lies within the near-pole
/// window, in which case the pole is reported and the value is the finite part.
inline EvalResult finish_completed(const CompletedParts& parts, const Complex& s, const PrecisionContext& ctx)
{
    EvalResult r;
    Real radius = near_pole_radius(ctx);
    Complex sm1 = s - 1;
    bool near_one = !parts.coeff_one.is_zero() && abs(sm1) < radius;
    bool near_zero = !parts.coeff_zero.is_zero() && abs(s) < radius;
    r.value = parts.regular;
    r.err_bound = parts.err;
    if (!parts.coeff_one.is_zero()) {
        if (near_one) r.pole = Pole{Complex(1), parts.coeff_one};
        else r.value += parts.coeff_one / sm1;
    }
    if (!parts.coeff_zero.is_zero()) {
        if (near_zero) r.pole = Pole{Complex(0), parts.coeff_zero};
        else r.value += parts.coeff_zero / s;
    }
    r.err_bound += abs(r.value) * pow2(-ctx.internal_bits() + 4);
    return r;
}

/// (pi^{s/2} / Gamma(s/2) - 1) / (s - 1), analytic at s = 1.
inline Complex even_factor_slope_at_one(const Complex& s)
{
    long p = current_precision();
    Complex sm1 = s - 1;
    if (sm1.is_zero()) {
        // derivative at 1: (log pi + euler + 2 log 2) / 2
        return Complex((log(const_pi()) + const_euler() + 2 * const_log2()) / 2);
    }
    long extra = std::max<long>(0, -abs(sm1).exponent()) + 16;
    Complex out;
    {
        PrecisionScope up(p + extra);
        out = (rgamma_factor_even(s) - 1) / sm1;
    }
    return out;
}

/// Non-completed L^{+-}: completed parts divided by the gamma factor.
inline EvalResult finish_plain(Sign sign, const CompletedParts& parts, const Complex& s, const PrecisionContext& ctx)
{
    EvalResult r;
    Real radius = near_pole_radius(ctx);
    if (sign == Sign::Minus) {
        Complex rg = rgamma_factor_odd(s);
        r.value = rg * parts.regular;
        r.err_bound = abs(rg) * parts.err;
    } else {
        Complex rg = rgamma_factor_even(s);
        r.value = rg * parts.regular;
        r.err_bound = abs(rg) * parts.err;
        if (!parts.coeff_zero.is_zero()) {
            // (pi^{s/2} / Gamma(s/2)) / s = pi^{s/2} / (2 Gamma(1 + s/2))
            Complex f = pow(const_pi(), s / 2) * rgamma_value(s / 2 + 1) / 2;
            r.value += parts.coeff_zero * f;
        }
        if (!parts.coeff_one.is_zero()) {
            Complex sm1 = s - 1;
            if (abs(sm1) < radius) {
                r.pole = Pole{Complex(1), parts.coeff_one};
                r.value += parts.coeff_one * even_factor_slope_at_one(s);
            } else {
                r.value += parts.coeff_one * rg / sm1;
            }
        }
    }
    r.err_bound += abs(r.value) * pow2(-ctx.internal_bits() + 6);
    return r;
}

} // namespace detail

/// Completed L^{+-}(s, a, c) for real a, c.
inline EvalResult lhat_star(Sign sign, const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits());
    ReductionRecord red = reduce_fundamental(a, c);
    CompletedParts parts = completed_parts(sign, s, red.a0, red.c0);
    EvalResult r = detail::finish_completed(parts, s, ctx);
    r.value = r.value * red.phase;
    if (r.pole) r.pole->residue = r.pole->residue * red.phase;
    return r;
}

/// Non-completed L^{+-}(s, a, c) = zeta*(s, a, c) +- e^{-2 pi i a} zeta*(s, 1 - a, 1 - c).
inline EvalResult l_star(Sign sign, const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s));
    ReductionRecord red = reduce_fundamental(a, c);
    CompletedParts parts = completed_parts(sign, s, red.a0, red.c0);
    EvalResult r = detail::finish_plain(sign, parts, s, ctx);
    r.value = r.value * red.phase;
    if (r.pole) r.pole->residue = r.pole->residue * red.phase;
    return r;
}

/// Extended Lerch zeta function zeta*(s, a, c), meromorphic in s, for real a, c.
///
/// The only pole is at s = 1 with residue 1 when a is an integer.
inline EvalResult zeta_star(const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s));
    ReductionRecord red = reduce_fundamental(a, c);
    CompletedParts plus = completed_parts(Sign::Plus, s, red.a0, red.c0);
    CompletedParts minus = completed_parts(Sign::Minus, s, red.a0, red.c0);
    EvalResult lp = detail::finish_plain(Sign::Plus, plus, s, ctx);
    EvalResult lm = detail::finish_plain(Sign::Minus, minus, s, ctx);
    EvalResult r;
    r.value = (lp.value + lm.value) * red.phase / 2;
    r.err_bound = (lp.err_bound + lm.err_bound) / 2;
    if (lp.pole) r.pole = Pole{lp.pole->location, lp.pole->residue * red.phase / 2};
    return r;
}

/// Direct Dirichlet series sum_{n + c > 0} e^{2 pi i n a} (n + c)^-s for Re s > 1.
///
/// Sums at most max_terms terms; err_bound includes a rigorous tail bound
/// (integral comparison, and summation by parts when a is not an integer).
inline EvalResult dirichlet_zeta_star(const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx = {},
                                      long max_terms = 1L << 14)
{
    if (!(s.re > 1)) throw DomainError("the Dirichlet series needs Re(s) > 1");
    PrecisionScope scope(ctx.internal_bits());
    Real sigma = s.re;
    Real abs_s = abs(s);
    // first n with n + c > 0
    long n0 = -c.floor_long();
    if ((c + n0).sign() <= 0) ++n0;

    Real sin_pa(0);
    if (!a.is_integer()) sin_pa = abs(sinpi(Complex(a.frac().value())).re);
    Real target = ctx.target_abs_error();
    auto tail_bound = [&](const Real& tf) {
        Real b = pow(tf, -sigma) + pow(tf, 1 - sigma) / (sigma - 1);
        if (!sin_pa.is_zero()) b = min(b, pow(tf, -sigma) * (1 + abs_s / sigma) / sin_pa);
        return b;
    };
    // Number of terms: smallest power of two reaching the target, up to the cap.
    long n_terms = 64;
    while (n_terms < max_terms && tail_bound(Param(n0 + n_terms).value() + c.value()) > target) n_terms *= 2;
    n_terms = std::min(n_terms, max_terms);

    Complex sum;
    for (long j = 0; j < n_terms; ++j) {
        long n = n0 + j;
        Real t = (c + n).value();
        Complex term = exp(-(s * log(t)));
        sum += turn(a * n) * term;
    }
    EvalResult r;
    r.value = sum;
    r.err_bound = tail_bound((c + (n0 + n_terms)).value()) + abs(sum) * pow2(-ctx.internal_bits() + 4) +
                  Real(n_terms) * pow2(-ctx.internal_bits() + 4);
    return r;
}

/// Hurwitz zeta(s, c) = zeta*(s, 0, c) for c > 0.
inline EvalResult hurwitz(const Complex& s, const Param& c, const PrecisionContext& ctx = {})
{
    if (c.sign() <= 0) throw DomainError("Hurwitz zeta needs c > 0");
    return zeta_star(s, Param(0), c, ctx);
}

/// Periodic zeta F(a, s) = zeta*(s, a, 0).
inline EvalResult periodic_zeta(const Param& a, const Complex& s, const PrecisionContext& ctx = {})
{
    return zeta_star(s, a, Param(0), ctx);
}

struct TransformCheck {
    Real residual;
    Real err_bound;
};

/// Residual of the classical transformation formula relating zeta*(1 - s, a, c)
/// to zeta*(s, 1 - c, a) and zeta*(s, c, 1 - a).
inline TransformCheck lerch_transform_check(const Complex& s, const Param& a, const Param& c,
                                            const PrecisionContext& ctx = {})
{
    if (detail::is_nonpositive_integer(s)) throw PoleError("Gamma(s) has a pole at this s");
    PrecisionScope scope(ctx.internal_bits() + detail::imaginary_part_bits(s));
    Complex one_minus_s = Complex(1) - s;
    EvalResult lhs = zeta_star(one_minus_s, a, c, ctx);
    EvalResult z1 = zeta_star(s, 1 - c, a, ctx);
    EvalResult z2 = zeta_star(s, c, 1 - a, ctx);
    if (lhs.pole || z1.pole || z2.pole) throw PoleError("a term of the transformation formula has a pole at this s");
    Complex g = gamma_value(s) * pow(2 * const_pi(), -s);
    Complex half_turn_s = exp(mul_i(s) * const_pi() / 2);  // e^{pi i s / 2}
    Complex rhs = g * (half_turn_s * turn(-(a * c)) * z1.value +
                       (Complex(1) / half_turn_s) * turn(c * (1 - a)) * z2.value);
    TransformCheck out;
    out.residual = abs(lhs.value - rhs);
    out.err_bound = lhs.err_bound + abs(g) * (abs(half_turn_s) + 1 / abs(half_turn_s)) * (z1.err_bound + z2.err_bound);
    return out;
}

} // namespace lerch

#endif
