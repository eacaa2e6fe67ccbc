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

#ifndef LERCH_QUADRATURE_HPP
#define LERCH_QUADRATURE_HPP

#include <lerch/context.hpp>

namespace lerch {

/// Refinement limits for double-exponential quadrature. Level L uses step 2^-L.
struct QuadratureSpec {
    int min_level = 3;
    int max_level = 10;
};

struct QuadratureResult {
    Complex value;
    /// max(|I_L - I_{L-1}|, rounding floor).
    Real err_est;
    int level = 0;
    long evaluations = 0;
};

namespace detail {

/// Map t -> (x, dx/dt) of a double-exponential substitution.
struct ExpSinhMap {
    Real lower;
    void operator()(const Real& t, Real& x, Real& w) const
    {
        Real sh, ch;
        sinh_cosh(t, sh, ch);
        Real half_pi = const_pi() / 2;
        Real e = exp(half_pi * sh);
        x = lower + e;
        w = half_pi * ch * e;
    }
};

struct TanhSinhMap {
    Real center;
    Real half_width;
    void operator()(const Real& t, Real& x, Real& w) const
    {
        Real sh, ch;
        sinh_cosh(t, sh, ch);
        Real half_pi = const_pi() / 2;
        Real u = half_pi * sh;
        Real cu = cosh(u);
        x = center + half_width * tanh(u);
        w = half_width * half_pi * ch / (cu * cu);
    }
};

template <class Map, class F>
QuadratureResult double_exponential(const Map& map, F&& f, const Real& tol, const QuadratureSpec& spec, double t_cap)
{
    long p = current_precision();
    Real eps = pow2(-p - 8);
    QuadratureResult res;
    Complex raw_sum;  // sum of w f over all visited nodes
    Real abs_sum(0);
    Complex previous;
    bool have_previous = false;

    auto visit = [&](const Real& t) {
        Real x, w;
        map(t, x, w);
        if (!x.is_finite() || !w.is_finite() || w.is_zero()) return Real(0);
        Complex v = f(x) * w;
        ++res.evaluations;
        Real av = abs(v);
        raw_sum += v;
        abs_sum += av;
        return av;
    };
    // Walks outwards from the origin over j = first, first + stride, ... in
    // both directions until three consecutive contributions are negligible.
    auto sweep = [&](const Real& h, long first, long stride) {
        for (int dir = -1; dir <= 1; dir += 2) {
            int small = 0;
            for (long j = first;; j += stride) {
                Real t = h * (dir * j);
                if (abs(t) > t_cap) break;
                Real av = visit(t);
                if (av <= eps * abs_sum) {
                    if (++small >= 3 && abs(t) > 1) break;
                } else {
                    small = 0;
                }
            }
        }
    };

    for (int level = 0; level <= spec.max_level; ++level) {
        Real h = pow2(-level);
        if (level == 0) {
            visit(Real(0));
            sweep(h, 1, 1);
        } else {
            sweep(h, 1, 2);
        }
        if (level < spec.min_level) continue;
        Complex estimate = raw_sum * h;
        Real floor_err = abs_sum * h * pow2(-p + 4);
        if (have_previous) {
            Real diff = abs(estimate - previous);
            res.value = estimate;
            res.level = level;
            res.err_est = max(diff, floor_err);
            if (diff <= tol || diff <= floor_err) return res;
        }
        previous = estimate;
        have_previous = true;
    }
    throw QuadratureNonconvergent("double-exponential quadrature did not reach tolerance " + to_string(tol, 6) +
                                  " (last change " + to_string(res.err_est, 6) + ")");
}

} // namespace detail

/// Integral of f over [lower, infinity) with the exp-sinh substitution.
/// f maps a Real to a Complex and must decay at infinity.
template <class F>
QuadratureResult integrate_half_line(F&& f, const Real& lower, const Real& tol, const QuadratureSpec& spec = {})
{
    // Far enough left that x - lower < 2^-(20 p).
    double t_cap = std::asinh(current_precision() * 0.6931 * 40 / 3.1416) + 0.5;
    return detail::double_exponential(detail::ExpSinhMap{lower}, std::forward<F>(f), tol, spec, t_cap);
}

/// Integral of f over [a, b] with the tanh-sinh substitution.
template <class F>
QuadratureResult integrate_interval(F&& f, const Real& a, const Real& b, const Real& tol, const QuadratureSpec& spec = {})
{
    // Endpoint weights fall below 2^-(2 p) beyond this.
    double t_cap = std::asinh(current_precision() * 0.6931 * 2 / 3.1416) + 0.5;
    return detail::double_exponential(detail::TanhSinhMap{(a + b) / 2, (b - a) / 2}, std::forward<F>(f), tol, spec, t_cap);
}

} // namespace lerch

#endif
