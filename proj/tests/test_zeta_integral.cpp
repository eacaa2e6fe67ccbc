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
#include <lerch/zeta_integral.hpp>

#include "test_support.hpp"

using namespace lerch;

namespace {

const PrecisionContext ctx{128};
const PrecisionContext low{64};

Complex C(double re, double im = 0) { return Complex(Real(re), Real(im)); }
Param Q(long p, long q) { return Param::exact(p, q); }

const TestFunction& fn(const std::string& name) { return TestFunctionRegistry::builtin().get(name); }

Param random_rational(Sampler& rng, long lo, long hi)
{
    long den = rng.integer(2, 40);
    long num;
    do num = rng.integer(lo * den + 1, hi * den - 1);
    while (num % den == 0);
    return Q(num, den);
}

/// Independent closed form for the Gaussian: each lattice term integrates to
/// (1/2) pi^{-s/2} |t|^{-s} Gamma(s/2, pi t^2).
Complex gaussian_phi_oracle(const Complex& s, const Param& a, const Param& c)
{
    Complex sum;
    for (long n = -40; n <= 40; ++n) {
        Param t = c + n;
        if (t.is_zero()) continue;
        Real tt = abs(t.value());
        Complex g = upper_incomplete_gamma(s / 2, const_pi() * tt * tt, ctx).value;
        Complex term = g * exp(-(s * log(tt))) * pow(const_pi(), -(s / 2)) / 2;
        sum += term * turn(a * n + a * c * Param::exact(1, 2));
    }
    return sum;
}

} // namespace

TEST(TestFunctions, RegistryHoldsHermiteFamilyAndNonGaussians)
{
    auto names = TestFunctionRegistry::builtin().names();
    for (const char* n : {"gaussian", "hermite0", "hermite6", "hermite12", "x2_gaussian", "mixed_gaussian",
                          "wide_gaussian"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_THROW(TestFunctionRegistry::builtin().get("nope"), DomainError);
}

TEST(TestFunctions, RegistrationRejectsBadEnvelopeAndParity)
{
    auto g = [](const Real& x) { return Complex(exp(-(const_pi() * x * x))); };
    auto slow = [](const Real& x) { return Complex(1 / (1 + x * x)); };
    EXPECT_THROW(TestFunction::make("slow", slow, g, {1, 2}, Parity::Even), RegistrationError);
    EXPECT_THROW(TestFunction::make("small", g, g, {0.5, 2}, Parity::Even), RegistrationError);
    EXPECT_THROW(TestFunction::make("parity", g, g, {1, 2}, Parity::Odd), RegistrationError);
    EXPECT_NO_THROW(TestFunction::make("ok", g, g, {1, 2}, Parity::Even));
}

TEST(TestFunctions, HermiteFourierIsRotation)
{
    // Spot-check (-i)^n against the Fourier integral by quadrature.
    PrecisionScope p(low.internal_bits());
    for (int n : {1, 2, 3}) {
        const TestFunction& f = fn("hermite" + std::to_string(n));
        for (double y : {0.3, 1.1}) {
            Real yy(y);
            auto integrand = [&](const Real& x) {
                return f(x) * expi(-2 * const_pi() * x * yy) + f(-x) * expi(2 * const_pi() * x * yy);
            };
            QuadratureResult q = integrate_half_line(integrand, Real(0), pow2(-60));
            LERCH_EXPECT_CLOSE(q.value, f.fourier(yy), -50);
        }
    }
}

TEST(AveragedKernel, GaussianThetaValue)
{
    PrecisionScope p(ctx.internal_bits());
    Real oracle(0);
    for (long n = -30; n <= 30; ++n) oracle += exp(-(const_pi() * n * n));
    EvalResult r = averaged_kernel(fn("gaussian"), Param(0), Param(0), Real(1), ctx);
    LERCH_EXPECT_CLOSE(r.value, Complex(oracle), -120);
    EXPECT_NEAR(r.value.re.to_double(), 1.0864348112, 1e-10);
}

TEST(AveragedKernel, OddFunctionCancels)
{
    PrecisionScope p(ctx.internal_bits());
    for (double x : {0.4, 1.0, 2.5}) {
        EvalResult r = averaged_kernel(fn("hermite3"), Param(0), Param(0), Real(x), ctx);
        EXPECT_LT(abs(r.value).to_double(), 1e-30);
    }
}

TEST(AveragedKernel, PoissonIdentityForEveryRegisteredFunction)
{
    Sampler rng(11);
    PrecisionScope p(ctx.internal_bits());
    for (const std::string& name : TestFunctionRegistry::builtin().names()) {
        const TestFunction& f = fn(name);
        for (int j = 0; j < 20; ++j) {
            Param a = Param::real(Real(rng.uniform(-2, 3)));
            Param c = Param::real(Real(rng.uniform(-2, 3)));
            Real x(rng.uniform(0.3, 3));
            EvalResult lhs = averaged_kernel(f, a, c, x, ctx);
            EvalResult rhs = poisson_dual_kernel(f, a, c, x, ctx);
            Real diff = abs(lhs.value - rhs.value);
            EXPECT_LE(diff, lhs.err_bound + rhs.err_bound) << name << " x=" << x;
        }
    }
}

TEST(PhiIntegral, GaussianMatchesIncompleteGammaClosedForm)
{
    PrecisionScope p(ctx.internal_bits());
    struct Case { Complex s; Param a, c; };
    for (const Case& k : {Case{C(2), Q(1, 3), Q(2, 5)}, Case{C(0.5, 3), Q(-7, 4), Q(5, 3)},
                          Case{C(-1.5, -2), Q(2, 7), Q(1, 9)}}) {
        EvalResult r = phi_integral(fn("gaussian"), k.s, k.a, k.c, ctx);
        EXPECT_FALSE(r.pole.has_value());
        Complex oracle = gaussian_phi_oracle(k.s, k.a, k.c);
        EXPECT_LE(abs(r.value - oracle), r.err_bound + pow2(-110));
        LERCH_EXPECT_CLOSE(r.value, oracle, -100);
    }
}

TEST(PhiIntegral, IntegerShiftSurfacesPoleTerm)
{
    PrecisionScope p(ctx.internal_bits());
    Param a = Q(1, 3);
    EvalResult r = phi_integral(fn("gaussian"), C(2), a, Param(2), ctx);
    ASSERT_TRUE(r.pole.has_value());
    EXPECT_TRUE(r.pole->location.is_zero());
    Complex expected = -turn(-(a * Param(2)) * Param::exact(1, 2));
    LERCH_EXPECT_CLOSE(r.pole->residue, expected, -120);
    LERCH_EXPECT_CLOSE(r.value, gaussian_phi_oracle(C(2), a, Param(2)), -100);
}

TEST(ZetaIntegral, GaussianReproducesCompletedLerch)
{
    // L^+ = e^{-pi i a c} F_0(phi_0) and L^- = e^{-pi i a c} F_1(phi_1) / const,
    // where phi_1 here is H_1(sqrt(2 pi) x) e^{-pi x^2} = 2 sqrt(2 pi) x e^{-pi x^2}.
    PrecisionScope p(ctx.internal_bits());
    Complex s = C(0.3, 4);
    Param a = Q(2, 7), c = Q(3, 5);
    Complex phase = turn(-(a * c) * Param::exact(1, 2));
    EvalResult f0 = zeta_integral(fn("gaussian"), 0, s, a, c, ctx);
    EvalResult lp = lhat_star(Sign::Plus, s, a, c, ctx);
    LERCH_EXPECT_CLOSE(phase * f0.value, lp.value, -100);
    EvalResult f1 = zeta_integral(fn("hermite1"), 1, s, a, c, ctx);
    EvalResult lm = lhat_star(Sign::Minus, s, a, c, ctx);
    Real scale = 2 * sqrt(2 * const_pi());
    LERCH_EXPECT_CLOSE(phase * f1.value / scale, lm.value, -100);
}

TEST(ZetaIntegral, GaussianClosedFormEquivalenceOnGrid)
{
    PrecisionScope p(low.internal_bits());
    Real scale = 2 * sqrt(2 * const_pi());
    const double sv[] = {-2.5, -0.7, 0.5, 1.8, 3.2};
    const long num[] = {1, 2, 3, 5, 6};
    for (double s_re : sv)
        for (long an : num)
            for (long cn : num) {
                Complex s = C(s_re, 1.5);
                Param a = Q(an, 7), c = Q(cn, 7);
                Complex phase = turn(-(a * c) * Param::exact(1, 2));
                EvalResult f0 = zeta_integral(fn("gaussian"), 0, s, a, c, low);
                EvalResult lp = lhat_star(Sign::Plus, s, a, c, low);
                EXPECT_LE(abs(phase * f0.value - lp.value), f0.err_bound + lp.err_bound);
                EvalResult f1 = zeta_integral(fn("hermite1"), 1, s, a, c, low);
                EvalResult lm = lhat_star(Sign::Minus, s, a, c, low);
                EXPECT_LE(abs(phase * f1.value / scale - lm.value), f1.err_bound / scale + lm.err_bound);
            }
}

TEST(ZetaIntegral, ParityAnnihilation)
{
    PrecisionScope p(ctx.internal_bits());
    Complex s = C(0.7, 1.3);
    Param a = Q(1, 5), c = Q(3, 8);
    EXPECT_LT(abs(zeta_integral(fn("gaussian"), 1, s, a, c, ctx).value).to_double(), 1e-30);
    EXPECT_LT(abs(zeta_integral(fn("hermite1"), 0, s, a, c, ctx).value).to_double(), 1e-30);
    EXPECT_LT(abs(zeta_integral(fn("x2_gaussian"), 1, s, a, c, ctx).value).to_double(), 1e-30);
    EXPECT_LT(abs(zeta_integral(fn("hermite3"), 0, s, a, c, ctx).value).to_double(), 1e-30);
}

TEST(ZetaIntegral, FunctionalEquationCases)
{
    PrecisionScope p(ctx.internal_bits());
    ResidualReport r1 = fe_residual_general(fn("gaussian"), 0, C(0.2, 5), Q(3, 11), Q(4, 9), ctx);
    EXPECT_LE(r1.residual, r1.err_bound);
    ResidualReport r2 = fe_residual_general(fn("hermite1"), 1, C(1.4, -2), Q(17, 10), Q(-3, 10), ctx);
    EXPECT_LE(r2.residual, r2.err_bound);
    // wide_gaussian is not self-reciprocal; the Gaussian is, checked on the critical line
    ResidualReport r3 = fe_residual_general(fn("gaussian"), 0, C(0.5, 7), Q(5, 13), Q(1, 6), ctx);
    EXPECT_LE(r3.residual, r3.err_bound);
    EXPECT_LT(r1.err_bound.to_double(), 1e-30);
}

TEST(ZetaIntegral, GeneralityForNonGaussianFunctions)
{
    Sampler rng(5);
    PrecisionScope p(ctx.internal_bits());
    struct Case { const char* name; int k; };
    for (const Case& k : {Case{"x2_gaussian", 0}, Case{"hermite2", 0}, Case{"hermite3", 1},
                          Case{"mixed_gaussian", 0}, Case{"mixed_gaussian", 1}, Case{"wide_gaussian", 0}}) {
        Complex s = C(rng.uniform(-2, 3), rng.uniform(-6, 6));
        Param a = random_rational(rng, -1, 2), c = random_rational(rng, -1, 2);
        ResidualReport fe = fe_residual_general(fn(k.name), k.k, s, a, c, ctx);
        EXPECT_LE(fe.residual, fe.err_bound * 10) << k.name;
        PeriodicityReport per = periodicity_residuals(fn(k.name), k.k, s, a, c, ctx);
        EXPECT_LE(per.shift_a, per.err_bound * 10) << k.name;
        EXPECT_LE(per.shift_c, per.err_bound * 10) << k.name;
    }
}

TEST(ZetaIntegral, PeriodicityAtLatticeCorner)
{
    PrecisionScope p(ctx.internal_bits());
    PeriodicityReport per = periodicity_residuals(fn("x2_gaussian"), 0, C(0.3, 0.8), Param(0), Param(0), ctx);
    EXPECT_LE(per.shift_a, per.err_bound);
    EXPECT_LE(per.shift_c, per.err_bound);
    EvalResult base = zeta_integral(fn("x2_gaussian"), 0, C(1), Param(0), Param(0), ctx);
    ASSERT_TRUE(base.pole.has_value());
}

TEST(ZetaIntegral, ResiduesMatchClosedForms)
{
    PrecisionScope p(ctx.internal_bits());
    for (const char* name : {"x2_gaussian", "hermite2", "wide_gaussian", "mixed_gaussian"}) {
        const TestFunction& f = fn(name);
        // a integer: pole at s = 1 with residue 2 e^{pi i a c} Ff(0)
        Param a(1), c = Q(2, 5);
        EvalResult at1 = zeta_integral(f, 0, C(1), a, c, ctx);
        ASSERT_TRUE(at1.pole.has_value()) << name;
        Complex res1 = turn(a * c * Param::exact(1, 2)) * f.fourier(Real(0)) * 2;
        LERCH_EXPECT_CLOSE(at1.pole->residue, res1, -100);
        // c integer: pole at s = 0 with residue -2 e^{-pi i a c} f(0)
        Param a2 = Q(3, 7), c2(-1);
        EvalResult at0 = zeta_integral(f, 0, C(0), a2, c2, ctx);
        Complex res0 = -(turn(-(a2 * c2) * Param::exact(1, 2)) * f(Real(0)) * 2);
        // x^2 e^{-pi x^2} vanishes at 0, so no pole is reported there
        EXPECT_EQ(at0.pole.has_value(), !res0.is_zero()) << name;
        LERCH_EXPECT_CLOSE(at0.pole ? at0.pole->residue : Complex(0), res0, -100);
        // symmetric-difference estimate eps (F(s0 + eps) - F(s0 - eps)) / 2
        Real eps = pow2(-24);
        Complex num1 = (zeta_integral(f, 0, Complex(1 + eps), a, c, ctx).value -
                        zeta_integral(f, 0, Complex(1 - eps), a, c, ctx).value) * eps / 2;
        LERCH_EXPECT_CLOSE(num1, res1, -40);
        Complex num0 = (zeta_integral(f, 0, Complex(eps), a2, c2, ctx).value -
                        zeta_integral(f, 0, Complex(-eps), a2, c2, ctx).value) * eps / 2;
        LERCH_EXPECT_CLOSE(num0, res0, -40);
    }
}

TEST(ZetaIntegral, OddParityIndexIsEntire)
{
    PrecisionScope p(ctx.internal_bits());
    for (double s : {0.0, 1e-12, 1.0, 1 - 1e-12}) {
        EvalResult r = zeta_integral(fn("hermite3"), 1, C(s), Param(1), Param(0), ctx);
        EXPECT_FALSE(r.pole.has_value());
        EXPECT_LT(abs(r.value).to_double(), 1e6);
    }
}

TEST(ZetaIntegral, DependsOnlyOnParityProjectedMellinTransform)
{
    // (1 + x) e^{-pi x^2} has the same even part as the Gaussian and an odd part
    // proportional to phi_1, so M_0 agrees with the Gaussian and M_1 with phi_1 / (2 sqrt(2 pi)).
    PrecisionScope p(ctx.internal_bits());
    Complex s = C(0.6, 2.2);
    Param a = Q(2, 9), c = Q(5, 7);
    const TestFunction& mixed = fn("mixed_gaussian");
    auto mm0 = mellin_transform([&](const Real& x) { return mixed(x); }, 0, Complex(2), ctx);
    auto mg0 = mellin_transform([&](const Real& x) { return fn("gaussian")(x); }, 0, Complex(2), ctx);
    LERCH_EXPECT_CLOSE(mm0.value, mg0.value, -100);
    LERCH_EXPECT_CLOSE(zeta_integral(mixed, 0, s, a, c, ctx).value,
                       zeta_integral(fn("gaussian"), 0, s, a, c, ctx).value, -100);
    Real scale = 2 * sqrt(2 * const_pi());
    LERCH_EXPECT_CLOSE(zeta_integral(mixed, 1, s, a, c, ctx).value * scale,
                       zeta_integral(fn("hermite1"), 1, s, a, c, ctx).value, -100);
}

TEST(ZetaIntegral, RefiningQuadratureStaysWithinReportedError)
{
    PrecisionScope p(ctx.internal_bits());
    Complex s = C(-0.4, 3);
    Param a = Q(1, 6), c = Q(4, 11);
    EvalResult coarse = phi_integral(fn("hermite4"), s, a, c, ctx);
    EvalResult fine = phi_integral(fn("hermite4"), s, a, c, ctx, QuadratureSpec{7, 11});
    EXPECT_LE(abs(coarse.value - fine.value), coarse.err_bound + fine.err_bound);
}

TEST(ZetaIntegral, RejectsBadParityIndex)
{
    EXPECT_THROW(zeta_integral(fn("gaussian"), 2, C(2), Q(1, 2), Q(1, 2), ctx), DomainError);
}
