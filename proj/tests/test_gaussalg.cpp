#include <gtest/gtest.h>

#include <cmath>

#include "blab/gaussalg.hpp"
#include "oracles.hpp"

using namespace blab;

namespace {

Real rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(ComplexPoly, TrimsTrailingZerosAndReportsDegree) {
  ComplexPoly p({1.0L, 2.0L, 0.0L, 0.0L});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(ComplexPoly().degree(), -1);
  EXPECT_TRUE(ComplexPoly({0.0L}).is_zero());
}

TEST(ComplexPoly, ArithmeticMatchesPointwise) {
  oracle::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const ComplexPoly p = rng.poly(rng.integer(0, 6)), q = rng.poly(rng.integer(0, 6));
    const Complex z = rng.complex(1.5L), a = rng.complex(), b = rng.complex();
    EXPECT_LT(std::abs((p * q)(z) - p(z) * q(z)), 1e-14L);
    EXPECT_LT(std::abs((p + q)(z) - (p(z) + q(z))), 1e-15L);
    EXPECT_LT(std::abs(p.compose_linear(a, b)(z) - p(a * z + b)), 1e-14L);
    EXPECT_LT(std::abs(p.times_x()(z) - z * p(z)), 1e-15L);
  }
}

TEST(ComplexPoly, DerivativeOfSquare) {
  const ComplexPoly p = ComplexPoly::monomial(2);
  EXPECT_EQ(max_coeff_diff(p.derivative(), ComplexPoly::monomial(1, 2.0L)), 0);
}

TEST(ComplexPoly, DegreeCapOverflows) {
  EXPECT_NO_THROW(ComplexPoly::monomial(ComplexPoly::kDegreeCap));
  EXPECT_THROW(ComplexPoly::monomial(ComplexPoly::kDegreeCap + 1), DegreeOverflow);
  const ComplexPoly p = ComplexPoly::monomial(40);
  EXPECT_THROW(p * p, DegreeOverflow);
}

TEST(GaussIntegral, ClosedFormValues) {
  EXPECT_NEAR(static_cast<double>(gauss_integral(1, 0).real()), 1.7724538509055159, 1e-15);
  EXPECT_LT(std::abs(gauss_integral(2, 0) - Complex(kSqrtPi / 2)), 1e-18L);
  EXPECT_THROW(gauss_integral(0, 0), DomainError);
  EXPECT_THROW(gauss_integral(1, kPi / 4), DomainError);
  EXPECT_THROW(gauss_integral(1, -0.8L), DomainError);
}

TEST(GaussIntegral, MatchesAdaptiveQuadrature) {
  for (Real rho : {0.5L, 1.0L, 2.0L}) {
    for (Real th : {-0.7L, 0.0L, 0.7L}) {
      const Complex w = rho * rho * std::exp(2.0L * kI * th);
      const Complex q = oracle::integrate_line([&](Real t) { return std::exp(-w * t * t); });
      EXPECT_LT(rel(gauss_integral(rho, th), q), 1e-8L) << rho << " " << th;
    }
  }
}

TEST(GaussianMoment, StandardValues) {
  EXPECT_LT(std::abs(gaussian_moment(-1.0L, 0.0L, 0) - kSqrtPi), 1e-18L);
  EXPECT_LT(std::abs(gaussian_moment(-1.0L, 0.0L, 2) - kSqrtPi / 2), 1e-18L);
  EXPECT_LT(std::abs(gaussian_moment(-1.0L, 0.0L, 3)), 1e-18L);
  EXPECT_THROW(gaussian_moment(Complex(0, 1), 0.0L, 0), DomainError);
}

TEST(GaussianMoment, MatchesAdaptiveQuadrature) {
  const Complex g2(-1, 0.3L), g1(0.5L, -0.2L);
  const Complex q =
      oracle::integrate_line([&](Real x) { return x * x * x * std::exp(g2 * x * x + g1 * x); });
  EXPECT_LT(rel(gaussian_moment(g2, g1, 3), q), 1e-9L);

  oracle::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Complex a(rng.uniform(-2, -0.4L), rng.uniform(-1, 1)), b = rng.complex();
    const auto ms = gaussian_moments(a, b, 8);
    for (int k = 0; k <= 8; ++k) {
      const Complex qk =
          oracle::integrate_line([&](Real x) { return std::pow(x, k) * std::exp(a * x * x + b * x); });
      EXPECT_LT(std::abs(ms[k] - qk), 1e-8L * std::max<Real>(1, std::abs(qk))) << t << " " << k;
    }
  }
}

TEST(InnerProductLine, GroundStateHasUnitNorm) {
  const PolyGauss phi0(ComplexPoly::constant(std::pow(kPi, -0.25L)), -0.5L);
  EXPECT_LT(std::abs(inner_product_line(phi0, phi0) - Complex(1)), 1e-17L);
  EXPECT_EQ(inner_product_line(phi0, PolyGauss()), Complex(0));
}

TEST(InnerProductLine, MatchesQuadratureAndIsSesquilinear) {
  oracle::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const PolyGauss f = rng.polygauss(), g = rng.polygauss(), k = rng.polygauss();
    const Complex exact = inner_product_line(f, g);
    const Complex q = oracle::integrate_line([&](Real x) { return f(x) * std::conj(g(x)); });
    EXPECT_LT(std::abs(exact - q), 1e-9L * std::max<Real>(1, std::abs(q)));
    EXPECT_LT(std::abs(exact - std::conj(inner_product_line(g, f))), 1e-15L);
    EXPECT_GT(inner_product_line(f, f).real(), 0);
    const Complex c = rng.complex();
    // Different exponents cannot be summed in the class; check linearity in the scalar.
    EXPECT_LT(std::abs(inner_product_line(c * f, g) - c * exact), 1e-14L);
    EXPECT_LT(std::abs(inner_product_line(f, c * g) - std::conj(c) * exact), 1e-14L);
    const PolyGauss k2(k.poly(), f.gamma2(), f.gamma1());
    EXPECT_LT(std::abs(inner_product_line(f + k2, g) - (exact + inner_product_line(k2, g))),
              1e-13L);
  }
}

TEST(PolyGauss, RejectsNonIntegrableExponent) {
  EXPECT_THROW(PolyGauss(ComplexPoly::constant(1.0L), Complex(0, 1)), DomainError);
  const PolyGauss a(ComplexPoly::constant(1.0L), -1.0L), b(ComplexPoly::constant(1.0L), -2.0L);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_NO_THROW(a + PolyGauss());
}

TEST(DiffOp, IdentityAndHDOnGaussian) {
  const PolyGauss g(ComplexPoly::constant(1.0L), -0.5L);
  EXPECT_EQ(max_coeff_diff(DiffOp::identity(1).apply(g), g), 0);
  // hD e^{-x^2/2} = i x e^{-x^2/2}
  const PolyGauss expect(ComplexPoly::monomial(1, kI), -0.5L);
  EXPECT_LT(max_coeff_diff(apply_diffop(DiffOp::hD(1), g), expect), 1e-18L);
}

TEST(DiffOp, ClassicHamiltonianOnGroundState) {
  for (Real h : {1.0L, 0.5L}) {
    const DiffOp H = compose(DiffOp::hD(h), DiffOp::hD(h)) + compose(DiffOp::x(h), DiffOp::x(h));
    const PolyGauss phi0(ComplexPoly::constant(std::pow(kPi * h, -0.25L)), -0.5L / h);
    EXPECT_LT(max_coeff_diff(H.apply(phi0), Complex(h) * phi0), 1e-17L);
  }
}

TEST(DiffOp, MatchesCentralDifferences) {
  oracle::Rng rng(3);
  const Real h = 0.7L;
  for (int t = 0; t < 10; ++t) {
    const PolyGauss f = rng.polygauss();
    const Real x = rng.uniform(-1.5, 1.5);
    const PolyGauss df = DiffOp::hD(h).apply(f);
    const Real re = oracle::central_diff([&](Real s) { return f(s).real(); }, x);
    const Real im = oracle::central_diff([&](Real s) { return f(s).imag(); }, x);
    EXPECT_LT(std::abs(df(x) - (-kI * h) * Complex(re, im)), 1e-6L);
  }
}

TEST(DiffOp, CompositionAgreesWithSequentialApplication) {
  oracle::Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const Real h = rng.uniform(0.3, 2);
    const DiffOp a(h, {{{0, 0}, rng.complex()}, {{1, 0}, rng.complex()}, {{0, 1}, rng.complex()}});
    const DiffOp b(h, {{{0, 0}, rng.complex()}, {{1, 0}, rng.complex()}, {{0, 1}, rng.complex()}});
    const PolyGauss f = rng.polygauss();
    EXPECT_LT(max_coeff_diff(compose(a, b).apply(f), a.apply(b.apply(f))), 1e-12L);
  }
}

TEST(DiffOp, RejectsOrderAboveTwo) {
  EXPECT_THROW(DiffOp(1, {{{2, 1}, 1.0L}}), DomainError);
  EXPECT_THROW(compose(compose(DiffOp::hD(1), DiffOp::hD(1)), DiffOp::hD(1)), DomainError);
}

TEST(HoloGauss, DifferentiateMonomial) {
  const HoloGauss z2(ComplexPoly::monomial(2), 0.0L);
  EXPECT_EQ(max_coeff_diff(z2.differentiate(), HoloGauss(ComplexPoly::monomial(1, 2.0L), 0.0L)), 0);
}

TEST(HoloGauss, ConjugationIdentity) {
  // (d/dz + cz) f = e^{-cz^2/2} d/dz (e^{cz^2/2} f)
  oracle::Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const Complex c = rng.complex(0.5L);
    const HoloGauss f(rng.poly(rng.integer(0, 5)), rng.complex(0.2L), rng.complex(0.3L));
    const HoloGauss lhs = f.differentiate() + f.multiply_by_z().scale(c);
    const HoloGauss rhs = f.multiply_exp(c / 2.0L).differentiate().multiply_exp(-c / 2.0L);
    EXPECT_LT(max_coeff_diff(lhs, rhs), 1e-12L);
  }
  const Complex c(0.3L, 0.1L);
  const HoloGauss g(ComplexPoly::constant(1.0L), -c / 2.0L);
  EXPECT_TRUE((g.differentiate() + g.multiply_by_z().scale(c)).poly().is_zero() ||
              (g.differentiate() + g.multiply_by_z().scale(c)).poly().max_abs_coeff() < 1e-18L);
}

TEST(HoloGauss, MembershipInvariant) {
  EXPECT_NO_THROW(HoloGauss(ComplexPoly::constant(1.0L), 0.2L, 0.0L, 1.0L));
  EXPECT_THROW(HoloGauss(ComplexPoly::constant(1.0L), 0.3L, 0.0L, 1.0L), InvariantError);
  const HoloGauss f(ComplexPoly::constant(1.0L), 0.2L, 0.0L, 1.0L);
  EXPECT_THROW(f.multiply_exp(0.1L), InvariantError);
  EXPECT_NO_THROW(f.with_membership(std::nullopt).multiply_exp(0.1L));
}
