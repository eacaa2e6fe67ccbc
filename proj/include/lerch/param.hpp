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

#ifndef LERCH_PARAM_HPP
#define LERCH_PARAM_HPP

#include <lerch/context.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace lerch {

/// Real parameter that is either an exact rational or a floating value.
///
/// Integrality is decided on the exact representation only: a floating
/// value is never treated as an integer, even when it is one numerically.
class Param {
public:
    Param() : q_(mpq_class(0)) {}
    Param(int n) : q_(mpq_class(n)) {}
    Param(long n) : q_(mpq_class(n)) {}

    static Param exact(mpq_class q)
    {
        q.canonicalize();
        Param p;
        p.q_ = std::move(q);
        return p;
    }
    static Param exact(long num, long den) { return exact(mpq_class(num, den)); }
    static Param real(Real x)
    {
        Param p;
        p.q_.reset();
        p.x_ = std::move(x);
        return p;
    }

    /// "p/q" and "n" give exact values; anything else is read as a decimal
    /// floating value, so "1.0" is not an integer.
    static Param parse(std::string_view text)
    {
        std::string s(text);
        auto is_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!is_int(num) || !is_int(den) || den.find('-') != std::string::npos)
                throw std::invalid_argument("malformed rational '" + s + "'");
            mpz_class d(strip_plus(den));
            if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
            return exact(mpq_class(mpz_class(strip_plus(num)), d));
        }
        if (is_int(s)) return exact(mpq_class(mpz_class(strip_plus(s))));
        return real(Real(std::string_view(s)));
    }

    bool is_exact() const { return q_.has_value(); }
    bool is_integer() const { return q_ && q_->get_den() == 1; }
    const mpq_class& rational() const
    {
        if (!q_) throw DomainError("parameter is not exact");
        return *q_;
    }

    /// Value rounded to the current precision.
    Real value() const { return q_ ? Real(*q_) : x_; }

    Param operator-() const { return q_ ? exact(-*q_) : real(-x_); }
    friend Param operator+(const Param& a, const Param& b)
    {
        if (a.q_ && b.q_) return exact(*a.q_ + *b.q_);
        return real(a.value() + b.value());
    }
    friend Param operator-(const Param& a, const Param& b) { return a + (-b); }
    friend Param operator*(const Param& a, const Param& b)
    {
        if (a.q_ && b.q_) return exact(*a.q_ * *b.q_);
        return real(a.value() * b.value());
    }
    friend Param operator+(const Param& a, long k) { return a + Param(k); }
    friend Param operator-(const Param& a, long k) { return a + Param(-k); }
    friend Param operator*(const Param& a, long k) { return a * Param(k); }
    friend Param operator-(long k, const Param& a) { return Param(k) - a; }

    /// Largest integer <= value.
    long floor_long() const
    {
        if (q_) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), q_->get_num_mpz_t(), q_->get_den_mpz_t());
            return f.get_si();
        }
        return floor(x_).to_long();
    }

    /// value - floor(value), in [0, 1).
    Param frac() const { return *this - floor_long(); }

    int sign() const { return q_ ? sgn(*q_) : x_.sign(); }
    bool is_zero() const { return q_ ? *q_ == 0 : x_.is_zero(); }

    friend bool operator==(const Param& a, long k) { return a.q_ && *a.q_ == k; }

    std::string to_string() const
    {
        if (q_) return q_->get_str();
        return lerch::to_string(x_);
    }

private:
    std::optional<mpq_class> q_;
    Real x_;
};

/// e^{2 pi i r}, reducing r modulo 1 exactly when r is exact.
inline Complex turn(const Param& r)
{
    if (r.is_exact()) {
        mpq_class f = r.frac().rational();
        if (f == 0) return Complex(1);
        if (f == mpq_class(1, 4)) return Complex(Real(0), Real(1));
        if (f == mpq_class(1, 2)) return Complex(-1);
        if (f == mpq_class(3, 4)) return Complex(Real(0), Real(-1));
        return expi(2 * const_pi() * Real(f));
    }
    Real x = r.value();
    return expi(2 * const_pi() * (x - floor(x)));
}

/// e^{2 pi i r} for a floating r.
inline Complex turn(const Real& r) { return expi(2 * const_pi() * (r - floor(r))); }

enum class DomainClass { Interior, Edge, Corner, Outside };

/// Position of (a, c) relative to the closed unit square. Only exact 0 and 1
/// count as boundary values.
inline DomainClass classify(const Param& a, const Param& c)
{
    auto on_side = [](const Param& p) { return p == 0 || p == 1; };
    auto inside = [](const Param& p) {
        if (p.is_exact()) return p.rational() > 0 && p.rational() < 1;
        Real v = p.value();
        return v > 0 && v < 1;
    };
    bool ea = on_side(a), ec = on_side(c);
    if (ea && ec) return DomainClass::Corner;
    if ((ea && inside(c)) || (ec && inside(a))) return DomainClass::Edge;
    if (inside(a) && inside(c)) return DomainClass::Interior;
    return DomainClass::Outside;
}

} // namespace lerch

#endif
