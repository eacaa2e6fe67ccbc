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

#ifndef LERCH_REAL_HPP
#define LERCH_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace lerch {

namespace detail {
inline thread_local mpfr_prec_t current_bits = 128;
}

/// Precision (in bits) given to newly created reals on this thread.
inline long current_precision() { return detail::current_bits; }

/// Sets the thread's working precision for its lifetime and restores it on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(long bits) : saved_(detail::current_bits)
    {
        detail::current_bits = std::max<long>(bits, MPFR_PREC_MIN);
    }
    ~PrecisionScope() { detail::current_bits = saved_; }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Arbitrary-precision binary floating point value.
///
/// Every value produced by an arithmetic operation or a function carries the
/// precision that was current on the calling thread when it was produced.
class Real {
public:
    Real() { init(detail::current_bits); mpfr_set_zero(v_, 1); }

    template <class I, std::enable_if_t<std::is_integral_v<I> && std::is_signed_v<I>, int> = 0>
    Real(I x) { init(detail::current_bits); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }

    template <class I, std::enable_if_t<std::is_integral_v<I> && std::is_unsigned_v<I>, int> = 0>
    Real(I x) { init(detail::current_bits); mpfr_set_ui(v_, static_cast<unsigned long>(x), MPFR_RNDN); }

    Real(double x) { init(detail::current_bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const mpz_class& x) { init(detail::current_bits); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& x) { init(detail::current_bits); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }

    /// Parses a decimal literal such as "-1.25e-3".
    explicit Real(std::string_view text)
    {
        init(detail::current_bits);
        std::string s(text);
        char* end = nullptr;
        if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (s.empty() || end != s.c_str() + s.size()) {
            mpfr_clear(v_);
            throw std::invalid_argument("not a decimal number: '" + s + "'");
        }
    }

    Real(const Real& o) { init(mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept
    {
        v_[0] = o.v_[0];
        o.v_[0]._mpfr_d = nullptr;
    }
    Real& operator=(const Real& o)
    {
        if (this == &o) return *this;
        if (!live()) init(mpfr_get_prec(o.v_));
        else mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept
    {
        std::swap(v_[0], o.v_[0]);
        return *this;
    }
    ~Real()
    {
        if (live()) mpfr_clear(v_);
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

    Real operator-() const
    {
        Real r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(long b, const Real& a) { return a + b; }
    friend Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(long b, const Real& a) { Real r; mpfr_si_sub(r.v_, b, a.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long b, const Real& a) { return a * b; }
    friend Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(long b, const Real& a) { Real r; mpfr_si_div(r.v_, b, a.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
    friend Real operator+(int b, const Real& a) { return a + static_cast<long>(b); }
    friend Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
    friend Real operator-(int b, const Real& a) { return static_cast<long>(b) - a; }
    friend Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
    friend Real operator*(int b, const Real& a) { return a * static_cast<long>(b); }
    friend Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
    friend Real operator/(int b, const Real& a) { return static_cast<long>(b) / a; }

    friend Real operator+(const Real& a, double b) { return a + Real(b); }
    friend Real operator+(double b, const Real& a) { return Real(b) + a; }
    friend Real operator-(const Real& a, double b) { return a - Real(b); }
    friend Real operator-(double b, const Real& a) { return Real(b) - a; }
    friend Real operator*(const Real& a, double b) { return a * Real(b); }
    friend Real operator*(double b, const Real& a) { return Real(b) * a; }
    friend Real operator/(const Real& a, double b) { return a / Real(b); }
    friend Real operator/(double b, const Real& a) { return Real(b) / a; }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
    friend bool operator!=(const Real& a, int b) { return a != static_cast<long>(b); }
    friend bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
    friend bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
    friend bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
    friend bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
    void init(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    bool live() const { return v_[0]._mpfr_d != nullptr; }

    mpfr_t v_;
};

namespace detail {
template <class F>
Real apply1(const Real& x, F f)
{
    Real r;
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
} // namespace detail

inline Real abs(const Real& x) { return detail::apply1(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::apply1(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return detail::apply1(x, mpfr_exp); }
inline Real expm1(const Real& x) { return detail::apply1(x, mpfr_expm1); }
inline Real log(const Real& x) { return detail::apply1(x, mpfr_log); }
inline Real log1p(const Real& x) { return detail::apply1(x, mpfr_log1p); }
inline Real log2(const Real& x) { return detail::apply1(x, mpfr_log2); }
inline Real sin(const Real& x) { return detail::apply1(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::apply1(x, mpfr_cos); }
inline Real tan(const Real& x) { return detail::apply1(x, mpfr_tan); }
inline Real atan(const Real& x) { return detail::apply1(x, mpfr_atan); }
inline Real sinh(const Real& x) { return detail::apply1(x, mpfr_sinh); }
inline Real cosh(const Real& x) { return detail::apply1(x, mpfr_cosh); }
inline Real tanh(const Real& x) { return detail::apply1(x, mpfr_tanh); }
inline Real real_gamma(const Real& x) { return detail::apply1(x, mpfr_gamma); }
inline Real real_lgamma(const Real& x) { return detail::apply1(x, mpfr_lngamma); }

inline Real floor(const Real& x) { Real r; mpfr_floor(r.raw(), x.raw()); return r; }
inline Real ceil(const Real& x) { Real r; mpfr_ceil(r.raw(), x.raw()); return r; }
/// Nearest integer, ties away from zero.
inline Real round(const Real& x) { Real r; mpfr_round(r.raw(), x.raw()); return r; }
inline Real trunc(const Real& x) { Real r; mpfr_trunc(r.raw(), x.raw()); return r; }

inline void sin_cos(const Real& x, Real& s, Real& c)
{
    s = Real();
    c = Real();
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}
inline void sinh_cosh(const Real& x, Real& s, Real& c)
{
    s = Real();
    c = Real();
    mpfr_sinh_cosh(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& x, long n) { Real r; mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN); return r; }
/// x * 2^k, exact.
inline Real ldexp(const Real& x, long k) { Real r; mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN); return r; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

inline Real const_pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
inline Real const_euler() { Real r; mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }
inline Real const_log2() { Real r; mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }
inline Real const_catalan() { Real r; mpfr_const_catalan(r.raw(), MPFR_RNDN); return r; }

/// 2^k at the current precision.
inline Real pow2(long k) { return ldexp(Real(1), k); }

/// Exact conversion of a finite value to a rational.
inline mpq_class to_rational(const Real& x)
{
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    mpq_class q(m);
    if (e >= 0) mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    q.canonicalize();
    return q;
}

/// Scientific decimal rendering with the given number of significant digits.
inline std::string to_string(const Real& x, int digits = 0)
{
    if (digits <= 0) digits = static_cast<int>(std::ceil(x.precision() * 0.30103)) + 1;
    if (x.is_zero()) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, x.raw());
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << to_string(x, 20); }

} // namespace lerch

#endif
