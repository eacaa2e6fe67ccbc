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

#ifndef LERCH_INCOMPLETE_GAMMA_HPP
#define LERCH_INCOMPLETE_GAMMA_HPP

#include <lerch/gamma.hpp>

namespace lerch {

/// Value together with an absolute error estimate.
struct Approx {
    Complex value;
    Real err;
};

namespace detail {

/// sum_{k>=0} x^k / (alpha)_{k+1}; alpha not a nonpositive integer.
inline Approx lower_series(const Complex& alpha, const Real& x)
{
    long p = current_precision();
    Real eps = pow2(-p - 4);
    Complex term = Complex(1) / alpha;
    Complex sum = term;
    Real abs_sum = abs(term);
    long cap = 20 * p + 10 * (x.to_long() + 10);
    long k = 1;
    for (; k < cap; ++k) {
        Complex ak = alpha + k;
        term = term * x / ak;
        sum += term;
        Real at = abs(term);
        abs_sum += at;
        if (abs(ak) > x && at <= eps * abs_sum) break;
    }
    if (k >= cap) throw ConvergenceFailure("incomplete gamma series did not converge");
    return {sum, abs_sum * (k + 8) * pow2(-p)};
}

/// h with Gamma(alpha, x) = e^-x x^alpha h, by the modified Lentz algorithm.
inline Approx upper_continued_fraction(const Complex& alpha, const Real& x, long cap)
{
    long p = current_precision();
    Real tiny = pow2(-4 * p);
    Real eps = pow2(-p - 2);
    Complex b = x + 1 - alpha;
    Complex c = Complex(Real(1) / tiny);
    Complex d = Complex(1) / b;
    Complex h = d;
    long i = 1;
    for (; i <= cap; ++i) {
        Complex an = -(Complex(i) - alpha) * static_cast<long>(i);
        b = b + 2;
        d = an * d + b;
        if (abs(d) < tiny) d = Complex(tiny);
        c = b + an / c;
        if (abs(c) < tiny) c = Complex(tiny);
        d = Complex(1) / d;
        Complex del = d * c;
        h = h * del;
        if (abs(del - 1) < eps) break;
    }
    if (i > cap) throw ConvergenceFailure("incomplete gamma continued fraction did not converge");
    return {h, abs(h) * (i + 8) * pow2(-p)};
}

/// E1(x) for x > 0 by its convergent power series.
inline Real exponential_integral_e1(const Real& x)
{
    long p = current_precision();
    Real out;
    {
        PrecisionScope up(p + static_cast<long>(1.5 * x.to_double()) + 16);
        Real eps = pow2(-p - 8);
        Real sum(0);
        Real term(1);
        for (long k = 1; k < 100000; ++k) {
            term = -(term * x) / k;  // (-x)^k / k!
            Real t = term / k;
            sum += t;
            if (k > x && abs(t) < eps) break;
        }
        out = -const_euler() - log(x) - sum;
    }
    return out;
}

/// x^m Gamma(-m, x) for an integer m >= 0.
inline Real scaled_upper_gamma_negint(long m, const Real& x)
{
    long p = current_precision();
    Real out;
    {
        PrecisionScope up(p + 16 + 2 * m);
        Real g = exponential_integral_e1(x);  // Gamma(0, x)
        Real ex = exp(-x);
        Real xp(1);
        for (long j = 1; j <= m; ++j) {
            xp = xp / x;  // x^-j
            g = (g - xp * ex) / (-j);
        }
        out = g * pow(x, m);
    }
    return out;
}

} // namespace detail

/// x^-alpha Gamma(alpha, x) for real x > 0 and complex alpha.
///
/// When x is small the result is split as Gamma(alpha) x^-alpha minus an
/// entire remainder (see regular_lower_gamma). The optional gamma_alpha
/// avoids recomputing Gamma(alpha) across calls with the same alpha.
inline Approx scaled_upper_gamma(const Complex& alpha, const Real& x, const Complex* gamma_alpha = nullptr)
{
    if (x.sign() <= 0) throw DomainError("incomplete gamma needs x > 0");
    long p = current_precision();
    if (x >= abs(alpha) + 4) {
        Approx h = detail::upper_continued_fraction(alpha, x, 10 * p);
        Real ex = exp(-x);
        return {h.value * ex, h.err * ex};
    }
    if (detail::is_nonpositive_integer(alpha)) {
        long m = -alpha.re.to_long();
        Real v = detail::scaled_upper_gamma_negint(m, x);
        return {Complex(v), abs(v) * pow2(-p + 4)};
    }
    // Near a nonpositive integer both pieces blow up; recover the lost bits.
    long extra = 0;
    Real r;
    long m = detail::reduce_half(alpha.re, r);
    if (m <= 0) {
        Real dist = hypot(r, alpha.im);
        if (dist < 0.25) extra = std::max<long>(0, -dist.exponent()) + 8;
    }
    Approx out;
    {
        PrecisionScope up(p + extra + 8);
        Complex g = (gamma_alpha && extra == 0) ? *gamma_alpha : gamma_value(alpha);
        Complex singular = g * pow(x, -alpha);
        Approx s = detail::lower_series(alpha, x);
        Real ex = exp(-x);
        out.value = singular - s.value * ex;
        out.err = (abs(singular) + s.err * ex) * pow2(-(p + extra)) * 16 + s.err * ex;
    }
    return out;
}

/// e^-x sum_{k>=0} x^k / (alpha)_{k+1} = x^-alpha gamma(alpha, x).
///
/// Entire in x, meromorphic in alpha with simple poles at nonpositive integers.
inline Approx regular_lower_gamma(const Complex& alpha, const Real& x)
{
    if (detail::is_nonpositive_integer(alpha)) throw PoleError("lower incomplete gamma pole in alpha");
    if (x.is_zero()) {
        Complex v = Complex(1) / alpha;
        return {v, abs(v) * pow2(-current_precision())};
    }
    Approx s = detail::lower_series(alpha, x);
    Real ex = exp(-x);
    return {s.value * ex, s.err * ex};
}

/// Upper incomplete gamma Gamma(alpha, x) for real x > 0.
inline EvalResult upper_incomplete_gamma(const Complex& alpha, const Real& x, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits());
    Approx u = scaled_upper_gamma(alpha, x);
    Complex xa = pow(x, alpha);
    EvalResult r;
    r.value = u.value * xa;
    r.err_bound = u.err * abs(xa) + abs(r.value) * pow2(-ctx.internal_bits() + 4);
    return r;
}

} // namespace lerch

#endif
