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

#ifndef LERCH_HERMITE_HPP
#define LERCH_HERMITE_HPP

#include <lerch/zeta_integral.hpp>

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lerch {

/// Polynomial in s with exact integer coefficients, lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

    /// c1 s + c0
    static IntPolynomial linear(long c1, long c0) { return IntPolynomial({mpz_class(c0), mpz_class(c1)}); }
    static IntPolynomial constant(long c0) { return IntPolynomial({mpz_class(c0)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    mpz_class coefficient(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0); }

    /// s -> s + k
    IntPolynomial shifted(long k) const
    {
        IntPolynomial r;
        IntPolynomial lin = linear(1, k);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + IntPolynomial({*it});
        return r;
    }

    /// s -> 1 - s
    IntPolynomial reflected() const
    {
        IntPolynomial r;
        IntPolynomial lin = linear(-1, 1);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + IntPolynomial({*it});
        return r;
    }

    Complex operator()(const Complex& s) const
    {
        Complex r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + Complex(Real(*it));
        return r;
    }

    mpq_class operator()(const mpq_class& s) const
    {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
        return r;
    }

    /// Coefficients from the leading one down, as decimal strings.
    std::vector<std::string> descending() const
    {
        std::vector<std::string> out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->get_str());
        if (out.empty()) out.push_back("0");
        return out;
    }

    /// e.g. "8s^2 - 8s + 6"
    std::string to_string() const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& v = c_[i];
            if (v == 0) continue;
            mpz_class mag = abs(v);
            if (out.empty()) out += v < 0 ? "-" : "";
            else out += v < 0 ? " - " : " + ";
            if (mag != 1 || i == 0) out += mag.get_str();
            if (i >= 1) out += "s";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a) { return a * mpz_class(-1); }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const mpz_class& k)
    {
        std::vector<mpz_class> r = a.c_;
        for (auto& v : r) v *= k;
        return IntPolynomial(std::move(r));
    }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

/// p: the even-index family, q: the odd-index family. Evaluated on the
/// critical line s = 1/2 + ix they give the orthogonal families P_n, Q_n.
enum class PolyFamily { P, Q };

inline std::string to_string(PolyFamily f) { return f == PolyFamily::P ? "p" : "q"; }

namespace detail {

struct PolyCache {
    std::mutex mutex;
    std::vector<IntPolynomial> p{IntPolynomial::constant(1)};
    std::vector<IntPolynomial> q{IntPolynomial::constant(1)};
};

inline PolyCache& poly_cache()
{
    static PolyCache cache;
    return cache;
}

} // namespace detail

/// p_n or q_n from the coupled recurrences
///   p_{n+1}(s) = s q_n(s+1) + (s-1) q_n(s-1),  q_{n+1}(s) = p_{n+1}(s+1) + p_{n+1}(s-1)
/// starting from p_0 = q_0 = 1. Memoized.
inline IntPolynomial poly_family(PolyFamily family, int n)
{
    if (n < 0) throw DomainError("polynomial index must be nonnegative");
    auto& cache = detail::poly_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    while (static_cast<int>(cache.p.size()) <= n) {
        const IntPolynomial& qn = cache.q.back();
        IntPolynomial p = IntPolynomial::linear(1, 0) * qn.shifted(1) + IntPolynomial::linear(1, -1) * qn.shifted(-1);
        IntPolynomial q = p.shifted(1) + p.shifted(-1);
        cache.p.push_back(std::move(p));
        cache.q.push_back(std::move(q));
    }
    return family == PolyFamily::P ? cache.p[n] : cache.q[n];
}

/// Same polynomials from the single-family three-term recurrences
///   p_{n+1}(s) = s p_n(s+2) + (2s-1) p_n(s) + (s-1) p_n(s-2),
///   q_{n+1}(s) = (s+1) q_n(s+2) + (2s-1) q_n(s) + (s-2) q_n(s-2).
/// The p recurrence starts at p_1 = 2s - 1: q_0 = 1 is not p_0(s+1) + p_0(s-1),
/// so the step from p_0 would give 2 p_1.
inline IntPolynomial poly_family_three_term(PolyFamily family, int n)
{
    if (n < 0) throw DomainError("polynomial index must be nonnegative");
    IntPolynomial mid = IntPolynomial::linear(2, -1);
    if (family == PolyFamily::P) {
        if (n == 0) return IntPolynomial::constant(1);
        IntPolynomial p = mid;
        for (int k = 1; k < n; ++k)
            p = IntPolynomial::linear(1, 0) * p.shifted(2) + mid * p + IntPolynomial::linear(1, -1) * p.shifted(-2);
        return p;
    }
    IntPolynomial q = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k)
        q = IntPolynomial::linear(1, 1) * q.shifted(2) + mid * q + IntPolynomial::linear(1, -2) * q.shifted(-2);
    return q;
}

namespace detail {

using RatPoly = std::vector<mpq_class>;

inline void rp_trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpq_class rp_eval(const RatPoly& p, const mpq_class& x)
{
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline Real rp_eval(const RatPoly& p, const Real& x)
{
    Real r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + Real(*it);
    return r;
}

inline RatPoly rp_derivative(const RatPoly& p)
{
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

/// Remainder of a divided by b.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b)
{
    rp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p)
{
    std::vector<RatPoly> chain{p, rp_derivative(p)};
    while (chain.back().size() > 1) {
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& v : r) v = -v;
        // positive rescaling keeps the signs and the coefficient growth down
        mpq_class lead = abs(r.back());
        for (auto& v : r) v /= lead;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<RatPoly>& chain, const mpq_class& x)
{
    int changes = 0, last = 0;
    for (const RatPoly& p : chain) {
        int sg = sgn(rp_eval(p, x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

} // namespace detail

/// Real polynomial R with p(1/2 + ix) = i^n R(x), n = deg p, for a p satisfying
/// p(1 - s) = (-1)^n p(s) (so that i^-n p(1/2 + ix) is real on the real line).
inline std::vector<mpq_class> critical_line_form(const IntPolynomial& p)
{
    int n = p.degree();
    if (n < 0) throw DomainError("zero polynomial");
    std::vector<mpq_class> re(n + 1, 0), im(n + 1, 0);
    // (1/2 + ix)^j, as coefficients of x^k with Gaussian-rational values
    std::vector<mpq_class> pr{1}, pi{0};
    for (int j = 0; j <= n; ++j) {
        const mpz_class& cj = p.coefficients()[j];
        for (int k = 0; k <= j; ++k) {
            re[k] += cj * pr[k];
            im[k] += cj * pi[k];
        }
        std::vector<mpq_class> nr(j + 2, 0), ni(j + 2, 0);
        for (int k = 0; k <= j; ++k) {
            nr[k] += pr[k] / 2;
            ni[k] += pi[k] / 2;
            nr[k + 1] -= pi[k];
            ni[k + 1] += pr[k];
        }
        pr = std::move(nr);
        pi = std::move(ni);
    }
    // multiply by (-i)^n
    std::vector<mpq_class> out(n + 1), rest(n + 1);
    for (int k = 0; k <= n; ++k) {
        switch (n % 4) {
        case 0: out[k] = re[k]; rest[k] = im[k]; break;
        case 1: out[k] = im[k]; rest[k] = -re[k]; break;
        case 2: out[k] = -re[k]; rest[k] = -im[k]; break;
        default: out[k] = -im[k]; rest[k] = re[k]; break;
        }
    }
    for (const auto& v : rest)
        if (v != 0) throw DomainError("polynomial is not real on the critical line up to i^n");
    return out;
}

/// Number of distinct real roots of the critical-line form, by a Sturm sequence.
inline int critical_line_root_count(const IntPolynomial& p)
{
    detail::RatPoly r = critical_line_form(p);
    std::vector<detail::RatPoly> chain = detail::sturm_chain(r);
    mpq_class bound = 0;
    for (const auto& v : r) bound = std::max(bound, mpq_class(abs(v / r.back())));
    bound += 1;
    return detail::sign_changes(chain, -bound) - detail::sign_changes(chain, bound);
}

/// Zeros of p_n or q_n as s = 1/2 + ix, sorted by increasing imaginary part.
///
/// The real roots x are isolated exactly (Sturm sequence over the rationals);
/// finding n distinct ones certifies that every zero lies on Re(s) = 1/2.
/// Each isolating interval is then bisected over dyadic rationals to
/// internal precision.
inline std::vector<Complex> poly_zeros(PolyFamily family, int n, const PrecisionContext& ctx = {})
{
    if (n < 1) throw DomainError("poly_zeros needs n >= 1");
    IntPolynomial p = poly_family(family, n);
    detail::RatPoly r = critical_line_form(p);
    std::vector<detail::RatPoly> chain = detail::sturm_chain(r);
    mpq_class bound = 0;
    for (const auto& v : r) bound = std::max(bound, mpq_class(abs(v / r.back())));
    bound += 1;
    // power-of-two endpoints keep every bisection point dyadic
    mpz_class pb = 1;
    while (pb < bound) pb *= 2;
    mpq_class lo0(-pb), hi0(pb);

    struct Interval { mpq_class lo, hi; int count; };
    int total = detail::sign_changes(chain, lo0) - detail::sign_changes(chain, hi0);
    if (total != n)
        throw RootIsolationFailure("found " + std::to_string(total) + " real critical-line roots, expected " +
                                   std::to_string(n));
    std::vector<Interval> work{{lo0, hi0, total}}, isolated;
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (detail::rp_eval(r, mid) == 0) {
            // exact root at the midpoint (x = 0 for odd n): isolate it in a small interval
            mpq_class w = (iv.hi - iv.lo) / 1024;
            while (detail::sign_changes(chain, mid - w) - detail::sign_changes(chain, mid + w) != 1) w /= 2;
            isolated.push_back({mid - w, mid + w, 1});
            int left = detail::sign_changes(chain, iv.lo) - detail::sign_changes(chain, mid - w);
            int right = detail::sign_changes(chain, mid + w) - detail::sign_changes(chain, iv.hi);
            work.push_back({iv.lo, mid - w, left});
            work.push_back({mid + w, iv.hi, right});
            continue;
        }
        int left = detail::sign_changes(chain, iv.lo) - detail::sign_changes(chain, mid);
        work.push_back({iv.lo, mid, left});
        work.push_back({mid, iv.hi, iv.count - left});
    }

    PrecisionScope scope(ctx.internal_bits());
    long bits = ctx.internal_bits() + 8;
    std::vector<Complex> roots;
    for (Interval& iv : isolated) {
        int slo = sgn(detail::rp_eval(r, iv.lo));
        mpq_class width_goal(mpz_class(1), mpz_class(1) << bits);
        while (iv.hi - iv.lo > width_goal) {
            mpq_class mid = (iv.lo + iv.hi) / 2;
            int sm = sgn(detail::rp_eval(r, mid));
            if (sm == 0) {
                iv.lo = iv.hi = mid;
                break;
            }
            if (sm == slo) iv.lo = mid;
            else iv.hi = mid;
        }
        roots.emplace_back(Real(mpq_class(1, 2)), Real(mpq_class((iv.lo + iv.hi) / 2)));
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& u, const Complex& v) { return u.im < v.im; });
    return roots;
}

namespace detail {

inline void require_open_square(const Param& a, const Param& c)
{
    auto open = [](const Param& p) {
        if (p.is_exact()) return p.rational() > 0 && p.rational() < 1;
        return p.value() > 0 && p.value() < 1;
    };
    if (!open(a) || !open(c)) throw DomainError("the oscillator family is defined for 0 < a, c < 1");
}

} // namespace detail

/// Generalized completed Lerch function of index n by the product formula
///   n = 2m:     (2 pi)^{-m/2} p_m(s) L^+(s, a, c)
///   n = 2m + 1: (2 pi)^{-m/2} sqrt(2 pi) q_m(s) L^-(s, a, c)
/// (completed L). n = 0 gives L^+ itself; n = 1 gives sqrt(2 pi) L^-.
inline EvalResult lhat_n(int n, const Complex& s, const Param& a, const Param& c, const PrecisionContext& ctx = {})
{
    if (n < 0) throw DomainError("oscillator index must be nonnegative");
    detail::require_open_square(a, c);
    PrecisionScope scope(ctx.internal_bits());
    int m = n / 2;
    bool odd = n % 2;
    Real two_pi = 2 * const_pi();
    Real scale = pow(two_pi, Real(-m) / 2);
    if (odd) scale *= sqrt(two_pi);
    Complex poly = poly_family(odd ? PolyFamily::Q : PolyFamily::P, m)(s);
    EvalResult base = lhat_star(odd ? Sign::Minus : Sign::Plus, s, a, c, ctx);
    EvalResult r;
    Complex factor = poly * scale;
    r.value = factor * base.value;
    r.err_bound = abs(factor) * base.err_bound + abs(r.value) * pow2(-ctx.internal_bits() + 8);
    return r;
}

/// Constant kappa_n with lhat_n_quadrature = kappa_n * lhat_n, for phi_n = D_+^n phi_0
/// = H_n(sqrt(2 pi) x) e^{-pi x^2}. From M_0(phi_{2m}) = alpha_m pi^{-s/2} Gamma(s/2) p_m(s)
/// and M_1(phi_{2m+1}) = 2 sqrt(2 pi) pi^{-(s+1)/2} Gamma((s+1)/2) q_m(s), alpha_0 = 1 and
/// alpha_m = 2 otherwise:
///   n = 2m:     alpha_m (2 pi)^{-m/2}
///   n = 2m + 1: 2 (2 pi)^{-(m+1)/2}
inline Real hermite_quadrature_constant(int n)
{
    if (n < 0) throw DomainError("oscillator index must be nonnegative");
    int m = n / 2;
    Real two_pi = 2 * const_pi();
    if (n % 2) return 2 * pow(two_pi, Real(-(m + 1)) / 2);
    return (m == 0 ? Real(1) : Real(2)) * pow(two_pi, Real(-m) / 2);
}

/// (2 pi)^{-n/2} M(2 A^{a,c}[phi_n])(s) computed as the zeta integral of the
/// Hermite-Gaussian phi_n with k = n mod 2, times e^{-pi i a c}.
inline EvalResult lhat_n_quadrature(int n, const Complex& s, const Param& a, const Param& c,
                                    const PrecisionContext& ctx = {}, const QuadratureSpec& spec = {})
{
    if (n < 0) throw DomainError("oscillator index must be nonnegative");
    detail::require_open_square(a, c);
    PrecisionScope scope(ctx.internal_bits());
    std::string name = "hermite" + std::to_string(n);
    const TestFunctionRegistry& reg = TestFunctionRegistry::builtin();
    auto names = reg.names();
    std::optional<TestFunction> own;
    if (std::find(names.begin(), names.end(), name) == names.end()) own = hermite_test_function(n, ctx);
    const TestFunction& f = own ? *own : reg.get(name);
    EvalResult z = zeta_integral(f, n % 2, s, a, c, ctx, spec);
    Complex factor = turn(-(a * c) * Param::exact(1, 2)) * pow(2 * const_pi(), Real(-n) / 2);
    EvalResult r;
    r.value = z.value * factor;
    r.err_bound = z.err_bound * abs(factor) + abs(r.value) * pow2(-ctx.internal_bits() + 8);
    return r;
}

namespace detail {

/// |Gamma(lambda + iy)|^2 <= 2 pi (1 + |y|)^{1/2} e^{1/3} e^{-pi |y|} for lambda in {1/4, 3/4}, |y| >= 1
/// (Stirling with remainder at most 1/(6|z|) for Re z > 0, and -y arg z <= -pi|y|/2 + lambda).
/// With |R_m(x)| <= A_m (1 + |x|)^m the integrand is at most K (1 + |x|)^d e^{-b|x|},
/// K = 2 pi e^{1/3} A_m A_n, d = m + n + 1/2, b = pi/2, and for b(1 + T) > d
///   int_{|x| > T} <= 2 K (1 + T)^d e^{-bT} / (b - d/(1 + T)).
inline Real inner_product_tail(const Real& coeff_bound, int degree_sum, const Real& T)
{
    Real b = const_pi() / 2;
    Real d = Real(degree_sum) + Real(0.5);
    Real beta = b - d / (1 + T);
    if (!(beta > 0)) return Real(1e300);
    Real K = 2 * const_pi() * exp(Real(1) / 3) * coeff_bound;
    return 2 * K * exp(d * log(1 + T) - b * T) / beta;
}

} // namespace detail

/// Hermitian inner product int F(x) conj(G(x)) |Gamma(lambda + ix/2)|^2 dx over [-T, T]
/// for F = f(1/2 + ix), G = g(1/2 + ix); lambda = 1/4 for family P and 3/4 for Q.
///
/// T starts at sqrt(2 working_bits ln 2) + 2 max(deg f, deg g) and grows until
/// the tail bound of detail::inner_product_tail is below the target; the bound
/// is added to err_bound.
inline EvalResult critical_line_inner_product(const IntPolynomial& f, const IntPolynomial& g, PolyFamily weight,
                                              const PrecisionContext& ctx = {}, const QuadratureSpec& spec = {3, 12})
{
    PrecisionScope scope(ctx.internal_bits());
    Real lambda = weight == PolyFamily::P ? Real(1) / 4 : Real(3) / 4;
    auto coeff_sum = [](const IntPolynomial& p) {
        Real acc(0);
        for (const auto& v : critical_line_form(p)) acc += abs(Real(v));
        return acc;
    };
    Real A = coeff_sum(f) * coeff_sum(g);
    int df = f.degree(), dg = g.degree();
    Real target = ctx.target_abs_error();
    Real T = sqrt(2 * Real(ctx.working_bits()) * log(Real(2))) + 2 * std::max(df, dg);
    while (detail::inner_product_tail(A, df + dg, T) > target / 16) T += 1;
    Real tail = detail::inner_product_tail(A, df + dg, T);

    auto integrand = [&](const Real& x) {
        Complex s(Real(1) / 2, x);
        Complex w = complex_gamma(Complex(lambda, x / 2), ctx).value;
        return f(s) * conj(g(s)) * norm(w);
    };
    // The weight has poles at x = +-i(4 lambda + 4k)/2 on the imaginary axis only, so
    // panels [2^j, 2^{j+1}] keep each pole about a panel width away.
    std::vector<Real> cuts{Real(0)};
    for (Real b(1); b < T; b *= 2) cuts.push_back(b);
    cuts.push_back(T);
    Real panel_tol = target / (8 * Real(long(cuts.size())));
    EvalResult r;
    r.err_bound = tail;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadratureResult right = integrate_interval(integrand, cuts[i], cuts[i + 1], panel_tol, spec);
        QuadratureResult left = integrate_interval(integrand, -cuts[i + 1], -cuts[i], panel_tol, spec);
        r.value += right.value + left.value;
        r.err_bound += right.err_est + left.err_est;
    }
    return r;
}

/// <F_m, F_n> for the P (weight |Gamma(1/4 + ix/2)|^2) or Q (|Gamma(3/4 + ix/2)|^2) family.
inline EvalResult mp_inner_product(PolyFamily family, int m, int n, const PrecisionContext& ctx = {},
                                   const QuadratureSpec& spec = {3, 12})
{
    if (m < 0 || n < 0) throw DomainError("polynomial index must be nonnegative");
    return critical_line_inner_product(poly_family(family, m), poly_family(family, n), family, ctx, spec);
}

/// Residuals of the two Mellin difference identities for phi_n,
///   M_k(f')(s) = -(s - 1) M_{k+1}(f)(s - 1),   M_k(x f)(s) = M_{k+1}(f)(s + 1),
/// at the parity index k = n + 1 (mod 2) where both sides are nonzero.
struct MellinDifferenceReport {
    Real derivative_residual;
    Real multiplication_residual;
    /// combined quadrature error estimate of the transforms involved
    Real err_bound;
    /// |M_k(f')(s)| and |M_k(xf)(s)|, for scale
    Real derivative_scale;
    Real multiplication_scale;
};

inline MellinDifferenceReport mellin_difference_check(int n, const Complex& s, const PrecisionContext& ctx = {})
{
    if (n < 0) throw DomainError("oscillator index must be nonnegative");
    PrecisionScope scope(ctx.internal_bits());
    int k = (n + 1) % 2;
    auto f = [n](const Real& x) { return Complex(hermite_gaussian(n, x)); };
    // d/dx H_n(y) e^{-y^2/2} with y = sqrt(2 pi) x, using H_n' = 2n H_{n-1}
    auto df = [n](const Real& x) {
        Real rt = sqrt(2 * const_pi());
        Real y = rt * x;
        Real h = (n ? 2 * n * detail::hermite_h(n - 1, y) : Real(0)) - y * detail::hermite_h(n, y);
        return Complex(rt * h * exp(-(const_pi() * x * x)));
    };
    auto xf = [n](const Real& x) { return Complex(x * hermite_gaussian(n, x)); };

    EvalResult lhs_d = mellin_transform(df, k, s, ctx);
    EvalResult rhs_d = mellin_transform(f, (k + 1) % 2, s - 1, ctx);
    EvalResult lhs_x = mellin_transform(xf, k, s, ctx);
    EvalResult rhs_x = mellin_transform(f, (k + 1) % 2, s + 1, ctx);
    Complex sm1 = s - 1;

    MellinDifferenceReport rep;
    rep.derivative_residual = abs(lhs_d.value + sm1 * rhs_d.value);
    rep.multiplication_residual = abs(lhs_x.value - rhs_x.value);
    rep.err_bound = lhs_d.err_bound + abs(sm1) * rhs_d.err_bound + lhs_x.err_bound + rhs_x.err_bound;
    rep.derivative_scale = abs(lhs_d.value);
    rep.multiplication_scale = abs(lhs_x.value);
    return rep;
}

} // namespace lerch

#endif
