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

#ifndef LERCH_COMPLEX_HPP
#define LERCH_COMPLEX_HPP

#include <lerch/real.hpp>

#include <complex>
#include <string>

namespace lerch {

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}

    static Complex i() { return Complex(Real(0), Real(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Complex& operator/=(const Complex& b) { return *this = *this / b; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b)
    {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator+(const Real& b, const Complex& a) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator-(const Real& b, const Complex& a) { return {b - a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }

    friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
    friend Complex operator+(long b, const Complex& a) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
    friend Complex operator-(long b, const Complex& a) { return {b - a.re, -a.im}; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(long b, const Complex& a) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator+(const Complex& a, int b) { return a + static_cast<long>(b); }
    friend Complex operator+(int b, const Complex& a) { return a + static_cast<long>(b); }
    friend Complex operator-(const Complex& a, int b) { return a - static_cast<long>(b); }
    friend Complex operator-(int b, const Complex& a) { return static_cast<long>(b) - a; }
    friend Complex operator*(const Complex& a, int b) { return a * static_cast<long>(b); }
    friend Complex operator*(int b, const Complex& a) { return a * static_cast<long>(b); }
    friend Complex operator/(const Complex& a, int b) { return a / static_cast<long>(b); }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }
inline Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

/// cos(theta) + i sin(theta).
inline Complex expi(const Real& theta)
{
    Complex r;
    sin_cos(theta, r.im, r.re);
    return r;
}

inline Complex exp(const Complex& z)
{
    Real m = exp(z.re);
    Complex u = expi(z.im);
    return {m * u.re, m * u.im};
}

/// Principal logarithm, imaginary part in (-pi, pi].
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

/// Principal power z^w; z must be nonzero.
inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

/// t^w for real t > 0.
inline Complex pow(const Real& t, const Complex& w) { return exp(w * log(t)); }

inline Complex pow(const Complex& z, long n)
{
    Complex result(1);
    Complex base = z;
    bool inv = n < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return inv ? Complex(1) / result : result;
}

inline Complex sqrt(const Complex& z)
{
    if (z.is_zero()) return Complex(0);
    Real r = abs(z);
    Real u = sqrt((r + abs(z.re)) / 2);
    if (z.re >= 0) return {u, z.im / (2 * u)};
    Real v = z.im.sign() < 0 ? -u : u;
    return {abs(z.im) / (2 * u), v};
}

inline Complex sin(const Complex& z)
{
    Real s, c, sh, ch;
    sin_cos(z.re, s, c);
    sinh_cosh(z.im, sh, ch);
    return {s * ch, c * sh};
}

inline Complex cos(const Complex& z)
{
    Real s, c, sh, ch;
    sin_cos(z.re, s, c);
    sinh_cosh(z.im, sh, ch);
    return {c * ch, -(s * sh)};
}

namespace detail {
/// Splits x = k + r with k = round(x) and |r| <= 1/2 (exact).
inline long reduce_half(const Real& x, Real& r)
{
    Real k = round(x);
    r = x - k;
    return k.to_long();
}
} // namespace detail

/// sin(pi z), exact zero at integers.
inline Complex sinpi(const Complex& z)
{
    Real r;
    long k = detail::reduce_half(z.re, r);
    Real pr = const_pi() * r;
    Real s, c, sh, ch;
    sin_cos(pr, s, c);
    sinh_cosh(const_pi() * z.im, sh, ch);
    Complex out{s * ch, c * sh};
    return (k & 1) ? -out : out;
}

/// cos(pi z), exact zero at half-integers.
inline Complex cospi(const Complex& z)
{
    Real r;
    long k = detail::reduce_half(z.re, r);
    Real s, c, sh, ch;
    if (abs(r) == Real(0.5)) {
        c = Real(0);
        s = Real(r.sign());
    } else {
        sin_cos(const_pi() * r, s, c);
    }
    sinh_cosh(const_pi() * z.im, sh, ch);
    Complex out{c * ch, -(s * sh)};
    return (k & 1) ? -out : out;
}

inline std::string to_string(const Complex& z, int digits = 0)
{
    return "(" + to_string(z.re, digits) + ", " + to_string(z.im, digits) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z)
{
    return os << "(" << z.re << ", " << z.im << ")";
}

} // namespace lerch

#endif
