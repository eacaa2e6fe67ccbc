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

#include <lerch/incomplete_gamma.hpp>
#include <lerch/quadrature.hpp>

#include "test_support.hpp"

#include <thread>

using namespace lerch;

namespace {

const PrecisionContext ctx128{128};

Complex C(double re, double im = 0) { return Complex(Real(re), Real(im)); }

Real mpfr_fn(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x)
{
    Real r;
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

} // namespace

TEST(Real, ArithmeticFollowsThreadPrecision)
{
    PrecisionScope p(200);
    Real third = Real(1) / 3;
    EXPECT_EQ(third.precision(), 200);
    {
        PrecisionScope q(80);
        Real x = third * 3;
        EXPECT_EQ(x.precision(), 80);
    }
    EXPECT_EQ(current_precision(), 200);
}

TEST(Real, PrecisionIsPerThread)
{
    PrecisionScope p(300);
    long seen = 0;
    std::thread t([&] { seen = current_precision(); });
    t.join();
    EXPECT_EQ(seen, 128);
    EXPECT_EQ(current_precision(), 300);
}

TEST(Real, ParsesDecimalsAndRejectsGarbage)
{
    PrecisionScope p(128);
    EXPECT_EQ(Real("0.5"), Real(0.5));
    EXPECT_THROW(Real("0.5x"), std::invalid_argument);
    EXPECT_THROW(Real(""), std::invalid_argument);
}

TEST(Real, ToRationalIsExact)
{
    PrecisionScope p(128);
    Real x = Real(3) / 8;
    EXPECT_EQ(to_rational(x), mpq_class(3, 8));
}

TEST(ComplexFns, SinpiVanishesExactlyAtIntegers)
{
    PrecisionScope p(144);
    for (int k = -4; k <= 4; ++k) EXPECT_TRUE(sinpi(C(k)).is_zero());
    EXPECT_TRUE(cospi(C(2.5)).re.is_zero());
    LERCH_EXPECT_CLOSE(sinpi(C(0.25, 0.5)), sin(C(0.25, 0.5) * const_pi()), -135);
}

TEST(ComplexFns, PrincipalBranchLogAndPow)
{
    PrecisionScope p(144);
    Complex z = C(-1, 0);
    LERCH_EXPECT_CLOSE(log(z), Complex(Real(0), const_pi()), -140);
    LERCH_EXPECT_CLOSE(pow(C(4), C(0.5)), C(2), -138);
    LERCH_EXPECT_CLOSE(sqrt(C(-4)), C(0, 2), -138);
}

TEST(Gamma, MatchesRealGammaOfMpfr)
{
    PrecisionScope p(ctx128.internal_bits());
    for (double x : {0.3, 1.5, 7.25, 31.5, -2.5, -0.7, 1e-20}) {
        Real rx(x);
        Complex g = complex_gamma(Complex(rx), ctx128).value;
        Real ref = mpfr_fn(mpfr_gamma, rx);
        EXPECT_LT((abs(g.re - ref) / abs(ref)).to_double(), std::ldexp(1.0, -128)) << x;
        EXPECT_TRUE(g.im.is_zero());
    }
}

TEST(Gamma, ModulusOnImaginaryAndCriticalLines)
{
    PrecisionScope p(ctx128.internal_bits());
    Real pi = const_pi();
    for (double y : {1.0, 3.7, 15.0, 40.0}) {
        Real ry(y);
        // |Gamma(iy)|^2 = pi / (y sinh(pi y)), |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
        Real a = norm(complex_gamma(Complex(Real(0), ry), ctx128).value);
        Real ea = pi / (ry * sinh(pi * ry));
        EXPECT_LT((abs(a - ea) / ea).to_double(), std::ldexp(1.0, -124)) << y;
        Real b = norm(complex_gamma(Complex(Real(0.5), ry), ctx128).value);
        Real eb = pi / cosh(pi * ry);
        EXPECT_LT((abs(b - eb) / eb).to_double(), std::ldexp(1.0, -124)) << y;
    }
}

TEST(Gamma, DuplicationFormulaAtComplexPoints)
{
    PrecisionScope p(ctx128.internal_bits());
    for (auto z : {C(0.3, 2.0), C(-1.7, 0.4), C(4.2, -9.5), C(0.01, 20)}) {
        Complex lhs = gamma_value(z) * gamma_value(z + Real(0.5));
        Complex rhs = pow(C(2), Complex(1) - z * 2) * sqrt(const_pi()) * gamma_value(z * 2);
        EXPECT_LT((abs(lhs - rhs) / abs(rhs)).to_double(), std::ldexp(1.0, -124));
    }
}

TEST(Gamma, RecurrenceAcrossShiftThreshold)
{
    PrecisionScope p(ctx128.internal_bits());
    for (double re = -3.3; re < 30; re += 1.9) {
        Complex z = C(re, 1.25);
        Complex lhs = gamma_value(z + 1);
        Complex rhs = z * gamma_value(z);
        EXPECT_LT((abs(lhs - rhs) / abs(rhs)).to_double(), std::ldexp(1.0, -124)) << re;
    }
}

TEST(Gamma, PolesAndReciprocalZeros)
{
    for (int k : {0, -1, -5}) {
        EXPECT_THROW(complex_gamma(C(k), ctx128), PoleError);
        EXPECT_TRUE(reciprocal_gamma(C(k), ctx128).value.is_zero());
    }
    PrecisionScope p(ctx128.internal_bits());
    // Near -3: 1/Gamma(-3 + d) ~ -6 d
    Real d = pow2(-100);
    Complex r = rgamma_value(Complex(Real(-3) + d));
    EXPECT_LT((abs(r.re + 6 * d) / (6 * d)).to_double(), 1e-25);
}

TEST(TateGamma, MatchesSingleGammaForm)
{
    PrecisionScope p(ctx128.internal_bits());
    // even: 2 (2 pi)^-s cos(pi s / 2) Gamma(s); odd: 2 (2 pi)^-s sin(pi s / 2) Gamma(s)
    for (auto s : {C(0.3, 2.0), C(-1.7, 0.4), C(2.5, -7.0)}) {
        Complex base = pow(Complex(2 * const_pi()), -s) * gamma_value(s) * 2;
        Complex even = base * cospi(s / 2);
        Complex odd = base * sinpi(s / 2);
        EXPECT_LT((abs(tate_gamma(Sign::Plus, s, ctx128).value - even) / abs(even)).to_double(), std::ldexp(1.0, -120));
        EXPECT_LT((abs(tate_gamma(Sign::Minus, s, ctx128).value - odd) / abs(odd)).to_double(), std::ldexp(1.0, -120));
        Complex prod = tate_gamma(Sign::Plus, s, ctx128).value * tate_gamma(Sign::Plus, Complex(1) - s, ctx128).value;
        LERCH_EXPECT_CLOSE(prod, C(1), -120);
    }
}

TEST(TateGamma, SignalsPolesAndZeros)
{
    auto kind = [](Sign sg, double s) {
        try {
            tate_gamma(sg, C(s), ctx128);
        } catch (const PoleError& e) {
            return e.kind() == SingularityKind::Pole ? 1 : 2;
        }
        return 0;
    };
    EXPECT_EQ(kind(Sign::Plus, 0), 1);
    EXPECT_EQ(kind(Sign::Plus, -2), 1);
    EXPECT_EQ(kind(Sign::Plus, 1), 2);
    EXPECT_EQ(kind(Sign::Plus, 3), 2);
    EXPECT_EQ(kind(Sign::Minus, -1), 1);
    EXPECT_EQ(kind(Sign::Minus, 2), 2);
    EXPECT_EQ(kind(Sign::Minus, 0.5), 0);
}

TEST(IncompleteGamma, HalfOrderIsComplementaryErrorFunction)
{
    PrecisionScope p(ctx128.internal_bits());
    for (double x : {0.01, 0.7, 3.0, 4.6, 25.0}) {
        Real rx(x);
        Complex g = upper_incomplete_gamma(C(0.5), rx, ctx128).value;
        Real ref = sqrt(const_pi()) * mpfr_fn(mpfr_erfc, sqrt(rx));
        EXPECT_LT((abs(g.re - ref) / ref).to_double(), std::ldexp(1.0, -120)) << x;
    }
}

TEST(IncompleteGamma, SmallArgumentLimitIsCompleteGamma)
{
    PrecisionScope p(ctx128.internal_bits());
    Complex g = upper_incomplete_gamma(C(0.5), Real("1e-40"), ctx128).value;
    LERCH_EXPECT_CLOSE(g, Complex(sqrt(const_pi())), -60);
}

TEST(IncompleteGamma, IntegerOrdersHaveClosedForms)
{
    PrecisionScope p(ctx128.internal_bits());
    for (double x : {0.25, 1.5, 6.0, 40.0}) {
        Real rx(x);
        // Gamma(3, x) = 2 e^-x (1 + x + x^2 / 2)
        Real g3 = 2 * exp(-rx) * (1 + rx + rx * rx / 2);
        LERCH_EXPECT_CLOSE(upper_incomplete_gamma(C(3), rx, ctx128).value, Complex(g3), -120);
        // Gamma(0, x) = E1(x) = -Ei(-x)
        Real e1 = -mpfr_fn(mpfr_eint, -rx);
        Complex g0 = upper_incomplete_gamma(C(0), rx, ctx128).value;
        EXPECT_LT((abs(g0.re - e1) / e1).to_double(), std::ldexp(1.0, -118)) << x;
        // Gamma(-2, x) = (E1(x) - e^-x (1/x - 1/x^2)) / 2
        Real gm2 = (e1 - exp(-rx) * (1 / rx - 1 / (rx * rx))) / 2;
        Complex g = upper_incomplete_gamma(C(-2), rx, ctx128).value;
        EXPECT_LT((abs(g.re - gm2) / abs(gm2)).to_double(), std::ldexp(1.0, -115)) << x;
    }
}

TEST(IncompleteGamma, RecurrenceAcrossBranches)
{
    PrecisionScope p(ctx128.internal_bits());
    Complex alpha = C(0.25, 7);
    // |alpha| + 4 ~ 11.004 separates the series and continued-fraction branches.
    for (double x : {0.5, 3.5, 10.9, 11.1, 30.0}) {
        Real rx(x);
        Complex lhs = upper_incomplete_gamma(alpha + 1, rx, ctx128).value;
        Complex rhs = alpha * upper_incomplete_gamma(alpha, rx, ctx128).value + pow(rx, alpha) * exp(-rx);
        EXPECT_LT((abs(lhs - rhs) / abs(rhs)).to_double(), std::ldexp(1.0, -112)) << x;
    }
}

TEST(IncompleteGamma, AgreesWithDirectQuadrature)
{
    PrecisionScope p(ctx128.internal_bits());
    Complex alpha = C(0.25, 7);
    Real x(3.5);
    EvalResult g = upper_incomplete_gamma(alpha, x, ctx128);
    auto integrand = [&](const Real& t) { return pow(t, alpha - 1) * exp(-t); };
    QuadratureResult q = integrate_half_line(integrand, x, pow2(-120));
    LERCH_EXPECT_CLOSE(g.value, q.value, -110);
    EXPECT_LT(g.err_bound.to_double(), std::ldexp(1.0, -100));
}

TEST(IncompleteGamma, ContinuousThroughNonpositiveIntegerOrder)
{
    PrecisionScope p(ctx128.internal_bits());
    Real x(1.75);
    Complex at = upper_incomplete_gamma(C(-2), x, ctx128).value;
    Complex near = upper_incomplete_gamma(Complex(Real(-2) + pow2(-90)), x, ctx128).value;
    LERCH_EXPECT_CLOSE(at, near, -80);
    Complex near_c = upper_incomplete_gamma(Complex(Real(-1), pow2(-60)), x, ctx128).value;
    Complex at1 = upper_incomplete_gamma(C(-1), x, ctx128).value;
    LERCH_EXPECT_CLOSE(at1, near_c, -52);
}

TEST(Quadrature, GaussianAndAlgebraicIntegrals)
{
    PrecisionScope p(ctx128.internal_bits());
    auto gauss = [](const Real& x) { return Complex(exp(-(x * x))); };
    QuadratureResult g = integrate_half_line(gauss, Real(0), pow2(-125));
    LERCH_EXPECT_CLOSE(g.value, Complex(sqrt(const_pi()) / 2), -120);
    auto root = [](const Real& x) { return Complex(sqrt(x)); };
    QuadratureResult r = integrate_interval(root, Real(0), Real(1), pow2(-125));
    LERCH_EXPECT_CLOSE(r.value, Complex(Real(2) / 3), -118);
}

TEST(Quadrature, ReportsNonconvergence)
{
    PrecisionScope p(ctx128.internal_bits());
    auto bad = [](const Real& x) { return Complex(sin(x * 1000)); };
    QuadratureSpec spec;
    spec.max_level = 4;
    EXPECT_THROW(integrate_interval(bad, Real(0), Real(1), pow2(-120), spec), QuadratureNonconvergent);
}

TEST(PrecisionContextTest, ValidatesInvariants)
{
    EXPECT_THROW(PrecisionContext(32), DomainError);
    EXPECT_THROW(PrecisionContext(128, 4), DomainError);
    PrecisionContext c(128, 16);
    EXPECT_EQ(c.internal_bits(), 144);
    EXPECT_EQ(c.target_bits(), 112);
}
