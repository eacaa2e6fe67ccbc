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

#ifndef LERCH_GAMMA_HPP
#define LERCH_GAMMA_HPP

#include <lerch/context.hpp>

#include <deque>
#include <mutex>

namespace lerch {

namespace detail {

/// Bernoulli number B_{2k}, cached for the process.
inline const mpq_class& bernoulli_even(std::size_t k)
{
    static std::mutex mu;
    static std::deque<mpq_class> all{mpq_class(1)};  // B_0, B_1, ...
    std::lock_guard<std::mutex> lock(mu);
    std::size_t need = 2 * k;
    while (all.size() <= need) {
        std::size_t m = all.size();
        mpq_class acc(0);
        mpz_class binom(1);  // C(m+1, j)
        for (std::size_t j = 0; j < m; ++j) {
            acc += binom * all[j];
            binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        mpq_class b = -acc / static_cast<unsigned long>(m + 1);
        b.canonicalize();
        all.push_back(b);
    }
    return all[need];
}

/// log Gamma(w) by the Stirling series; needs |w| large and Re w > 0.
inline Complex stirling_lgamma(const Complex& w)
{
    long p = current_precision();
    Complex lw = log(w);
    Complex sum = (w - Real(0.5)) * lw - w + log(2 * const_pi()) / 2;
    Complex winv = Complex(1) / w;
    Complex w2inv = winv * winv;
    Complex wpow = winv;
    Real eps = pow2(-p - 4);
    for (std::size_t k = 1; k < 4096; ++k) {
        Real coef = Real(bernoulli_even(k)) / static_cast<long>((2 * k) * (2 * k - 1));
        Complex term = wpow * coef;
        sum += term;
        if (abs(term) < eps) break;
        wpow = wpow * w2inv;
    }
    return sum;
}

/// Gamma(z) for Re z >= 1/2.
inline Complex gamma_right(const Complex& z)
{
    long p = current_precision();
    Real radius = Real(0.15 * p + 8.0);
    Complex w = z;
    Complex prod(1);
    if (abs(z) < radius) {
        long n = (radius - z.re).to_long() + 1;
        for (long j = 0; j < n; ++j) prod = prod * (z + j);
        w = z + n;
    }
    return exp(stirling_lgamma(w)) / prod;
}

inline bool is_nonpositive_integer(const Complex& z)
{
    return z.im.is_zero() && z.re.is_integer() && z.re <= 0;
}

} // namespace detail

/// Gamma(z) at the current precision; z must not be a nonpositive integer.
inline Complex gamma_value(const Complex& z)
{
    long p = current_precision();
    if (detail::is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a nonpositive integer");
    Complex out;
    {
        PrecisionScope up(p + 16);
        if (z.re >= 0.5) {
            out = detail::gamma_right(z);
        } else {
            Complex one_minus = Complex(1) - z;
            out = Complex(const_pi()) / (sinpi(z) * detail::gamma_right(one_minus));
        }
    }
    return out;
}

/// 1 / Gamma(z) at the current precision; exactly zero at nonpositive integers.
inline Complex rgamma_value(const Complex& z)
{
    long p = current_precision();
    if (detail::is_nonpositive_integer(z)) return Complex(0);
    Complex out;
    {
        PrecisionScope up(p + 16);
        if (z.re >= 0.5) {
            out = Complex(1) / detail::gamma_right(z);
        } else {
            Complex one_minus = Complex(1) - z;
            out = sinpi(z) * detail::gamma_right(one_minus) / const_pi();
        }
    }
    return out;
}

/// Gamma(s) with error bound.
inline EvalResult complex_gamma(const Complex& s, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits());
    EvalResult r;
    r.value = gamma_value(s);
    r.err_bound = abs(r.value) * pow2(-ctx.internal_bits() + 6);
    return r;
}

/// 1 / Gamma(s) with error bound; entire.
inline EvalResult reciprocal_gamma(const Complex& s, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits());
    EvalResult r;
    r.value = rgamma_value(s);
    r.err_bound = abs(r.value) * pow2(-ctx.internal_bits() + 6);
    return r;
}

/// pi^(-s/2) Gamma(s/2), the even archimedean gamma factor.
inline Complex gamma_factor_even(const Complex& s)
{
    Complex half = s / 2;
    return pow(const_pi(), -half) * gamma_value(half);
}

/// pi^(-(s+1)/2) Gamma((s+1)/2), the odd archimedean gamma factor.
inline Complex gamma_factor_odd(const Complex& s) { return gamma_factor_even(s + 1); }

/// 1 / gamma_factor_even(s); entire, zero at s = 0, -2, -4, ...
inline Complex rgamma_factor_even(const Complex& s)
{
    Complex half = s / 2;
    return pow(const_pi(), half) * rgamma_value(half);
}

/// 1 / gamma_factor_odd(s); entire, zero at s = -1, -3, ...
inline Complex rgamma_factor_odd(const Complex& s) { return rgamma_factor_even(s + 1); }

/// 1 / gamma_factor_even for parity k (0 even, 1 odd).
inline Complex rgamma_factor(int k, const Complex& s) { return k == 0 ? rgamma_factor_even(s) : rgamma_factor_odd(s); }
inline Complex gamma_factor(int k, const Complex& s) { return k == 0 ? gamma_factor_even(s) : gamma_factor_odd(s); }

enum class Sign { Plus, Minus };

inline int parity_of(Sign sign) { return sign == Sign::Plus ? 0 : 1; }

/// Local gamma ratio gamma_factor(s) / gamma_factor(1 - s) of the given parity.
///
/// Throws PoleError (kind Pole) where the numerator has a pole and PoleError
/// (kind Zero) where the denominator has one.
inline EvalResult tate_gamma(Sign sign, const Complex& s, const PrecisionContext& ctx = {})
{
    PrecisionScope scope(ctx.internal_bits());
    int k = parity_of(sign);
    Complex num_arg = (s + k) / 2;
    Complex den_arg = (Complex(1) - s + k) / 2;
    if (detail::is_nonpositive_integer(num_arg))
        throw PoleError("local gamma ratio has a pole here", SingularityKind::Pole);
    if (detail::is_nonpositive_integer(den_arg))
        throw PoleError("local gamma ratio vanishes here", SingularityKind::Zero);
    EvalResult r;
    // pi^(1/2 - s) Gamma((s+k)/2) / Gamma((1-s+k)/2)
    r.value = pow(const_pi(), Complex(Real(0.5)) - s) * gamma_value(num_arg) * rgamma_value(den_arg);
    r.err_bound = abs(r.value) * pow2(-ctx.internal_bits() + 8);
    return r;
}

} // namespace lerch

#endif
