#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "blab/bargmann.hpp"
#include "blab/ellipse.hpp"
#include "oracles.hpp"

using namespace blab;

namespace {

const std::vector<std::pair<Real, Real>> kSets{{2, 0}, {2, 1}, {0.5L, 3}};

}  // namespace

TEST(EllipseParams, ValuesAtTwoZero) {
  const EllipseParams p = derived_constants(2, 0);
  EXPECT_LT(std::abs(p.a - Complex(0.6L)), 1e-18L);
  EXPECT_LT(std::abs(p.lambda - Complex(8.0L / 15)), 1e-18L);
  EXPECT_LT(std::abs(p.lambda / p.a - Complex(8.0L / 9)), 1e-18L);
  EXPECT_LT(std::abs(p.C_ab - Complex(1.0L / 3)), 1e-18L);
  EXPECT_LT(std::abs(p.A_ab - std::pow(kPi, 0.25L) * std::sqrt(5.0L)), 1e-17L);
}

TEST(EllipseParams, ValuesAtOneOne) {
  const EllipseParams p = derived_constants(1, 1);
  EXPECT_LT(std::abs(p.a - Complex(1, 2) / 3.0L), 1e-18L);
  EXPECT_NEAR(static_cast<double>(std::abs(p.a)), std::sqrt(5.0) / 3, 1e-16);
}

TEST(EllipseParams, RejectsDegenerateAndInvalid) {
  EXPECT_THROW(derived_constants(1, 0), DomainError);
  EXPECT_THROW(derived_constants(0, 1), DomainError);
  const FamilyResolution r = resolve_family(1, 0);
  EXPECT_EQ(r.tag, FamilyTag::ClassicDisk);
  EXPECT_FALSE(r.ellipse.has_value());
  EXPECT_EQ(r.phase.C, Complex(0, 1));
  EXPECT_EQ(resolve_family(2, 1).tag, FamilyTag::Ellipse);
}

TEST(EllipseParams, InvariantsOnRandomInputs) {
  oracle::Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const EllipseParams p = derived_constants(rng.uniform(0.1, 4), rng.uniform(-4, 4));
    EXPECT_LT(std::abs(p.a), 1);
    EXPECT_GT(std::abs(p.a), 0);
    EXPECT_LT(std::abs(p.a + 2.0L * p.lambda - 1.0L / std::conj(p.a)), 1e-12L);
    const Complex r = p.lambda / p.a;
    EXPECT_LT(std::abs(r.imag()), 1e-12L * std::abs(r));
    EXPECT_LT(std::abs(r.real() - p.lambda_over_a()), 1e-12L * p.lambda_over_a());
    EXPECT_LT(std::abs(std::arg(p.A_ab)), kPi / 4);
    // Eigenvalue consistency: lambda / (a |C|^2) = 2 alpha^2 / (1 + beta^2)
    EXPECT_LT(std::abs(r.real() / std::norm(p.C_ab) - 2 * p.omega()), 1e-12L * p.omega());
    const Complex c2 = (1.0L + kI * p.beta) / Complex(p.alpha * p.alpha + p.beta * p.beta - 1, -2 * p.beta);
    EXPECT_LT(std::abs(p.C_ab - c2), 1e-12L * std::abs(c2));
  }
}

TEST(PsiN, FirstTerms) {
  const EllipseParams p = derived_constants(2, 1);
  EXPECT_LT(max_coeff_diff(psi_n(p, 0), HoloGauss(ComplexPoly::constant(1.0L), -p.a / 4.0L)), 1e-18L);
  EXPECT_LT(max_coeff_diff(psi_n(p, 1), HoloGauss(ComplexPoly::monomial(1, p.lambda), -p.a / 4.0L)),
            1e-18L);
}

TEST(PsiN, RodriguesMatchesLadder) {
  for (auto [a, b] : kSets) {
    const EllipseParams p = derived_constants(a, b);
    for (int n = 0; n <= 12; ++n) {
      const HoloGauss r = psi_n(p, n), l = psi_n_ladder(p, n);
      EXPECT_LT(max_coeff_diff(r, l), 1e-12L * std::max<Real>(1, r.poly().max_abs_coeff())) << n;
    }
  }
}

TEST(Ladder, AnnihilatesGroundAndCommutator) {
  for (auto [a, b] : kSets) {
    const EllipseParams p = derived_constants(a, b);
    const HoloGauss lg = apply_ladder(p, Ladder::Lambda, psi_0(p));
    EXPECT_TRUE(lg.is_zero() || lg.poly().max_abs_coeff() < 1e-18L);
    const HoloGauss f = psi_n(p, 3);
    const HoloGauss comm =
        apply_ladder(p, Ladder::Lambda, apply_ladder(p, Ladder::LambdaStar, f)) -
        apply_ladder(p, Ladder::LambdaStar, apply_ladder(p, Ladder::Lambda, f));
    EXPECT_LT(max_coeff_diff(comm, f.scale(p.lambda / p.a)), 1e-12L);
    // Item (iv): (Lambda* Lambda / |C|^2 + omega) psi_n = omega (2n + 1) psi_n
    for (int n = 0; n < 6; ++n) {
      const HoloGauss g = psi_n(p, n);
      const HoloGauss lhs =
          apply_ladder(p, Ladder::LambdaStar, apply_ladder(p, Ladder::Lambda, g)).scale(1.0L / std::norm(p.C_ab)) +
          g.scale(p.omega());
      EXPECT_LT(max_coeff_diff(lhs, g.scale(p.omega() * (2 * n + 1))),
                1e-12L * std::max<Real>(1, g.poly().max_abs_coeff()));
    }
    EXPECT_THROW(apply_ladder(p, Ladder::H, psi_0(p)), DomainError);
    EXPECT_THROW(apply_ladder(p, Ladder::Lambda, Psi_n(p, 0)), DomainError);
  }
}

TEST(PsiN, NormsByQuadrature) {
  for (auto [a, b] : kSets) {
    const EllipseParams p = derived_constants(a, b);
    EXPECT_NEAR(static_cast<double>(psi_norm_sq(p, 0)), static_cast<double>(p.kappa * kPi / a), 1e-14);
    const ComplexMatrix G = psi_gram_quad(p, 7);
    for (int m = 0; m < 7; ++m) {
      for (int n = 0; n < 7; ++n) {
        if (m == n) {
          EXPECT_LT(std::abs(G(n, n).real() / psi_norm_sq(p, n) - 1), 1e-4L);
        } else {
          EXPECT_LT(std::abs(G(m, n)), 1e-5L * std::sqrt(psi_norm_sq(p, m) * psi_norm_sq(p, n)));
        }
      }
    }
  }
  const ComplexMatrix G = psi_gram_quad(derived_constants(2, 0), 1);
  EXPECT_LT(std::abs(G(0, 0) - Complex(5 * kPi / 2)), 1e-4L);
}

TEST(BigPsi, GroundState) {
  const EllipseParams p = derived_constants(2, 0);
  const PolyGauss expect(ComplexPoly::constant(std::pow(kPi, 0.25L) * std::sqrt(5.0L)), -2.0L);
  EXPECT_LT(max_coeff_diff(Psi_n(p, 0), expect), 1e-17L);
  for (auto [a, b] : kSets) {
    const EllipseParams q = derived_constants(a, b);
    const Complex g2 = -Complex(a * a, q.kappa * b) / (2 * (1 + b * b));
    EXPECT_LT(max_coeff_diff(Psi_n(q, 0), PolyGauss(ComplexPoly::constant(q.A_ab), g2)), 1e-17L);
  }
}

TEST(BigPsi, TwoZeroIsFrequencyFourOscillator) {
  const EllipseParams p = derived_constants(2, 0);
  const DiffOp d = DiffOp::d_dx(1), x = DiffOp::x(1);
  const DiffOp expect = Complex(-1) * compose(d, d) + Complex(16) * compose(x, x);
  EXPECT_LT(max_coeff_diff(ladder_diffops(p).H, expect), 1e-17L);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(Psi_eigenvalue(p, n), 4 * (2 * n + 1));
}

TEST(BigPsi, EigenResidualsAndOrthogonality) {
  for (auto [a, b] : kSets) {
    const EllipseParams p = derived_constants(a, b);
    const LadderOps ops = ladder_diffops(p);
    EXPECT_LT(max_coeff_diff(ops.H, compose(ops.Pstar, ops.P) + Complex(p.omega()) * DiffOp::identity(1)),
              1e-15L);
    for (const auto& e : Psi_eigen_report(p, 11)) EXPECT_LE(e.residual, 1e-10L) << e.n;
    const ComplexMatrix G = Psi_gram_normalized(p, 13);
    for (int m = 0; m < 13; ++m) {
      for (int n = 0; n < 13; ++n) {
        if (m != n) EXPECT_LT(std::abs(G(m, n)), 1e-10L);
      }
    }
    EXPECT_LT(std::abs(inner_product_line(Psi_n(p, 1), Psi_n(p, 2))), 1e-10L);
  }
}

TEST(BigPsi, IsAdjointTransformOfPsi) {
  for (auto [a, b] : {std::pair<Real, Real>{2, 0}, {2, 1}}) {
    const EllipseParams p = derived_constants(a, b);
    for (int n : {0, 1, 3}) {
      for (Real x : {-0.8L, -0.3L, 0.0L, 0.25L, 0.6L}) {
        const Complex q = adjoint_quad(ellipse_space(), psi_n(p, n), x).value;
        EXPECT_LT(std::abs(q - Psi_n(p, n)(x)), 1e-6L * std::max<Real>(1, std::abs(q))) << n << " " << x;
      }
    }
  }
}

TEST(Bridge, ParamsAndCollinearity) {
  const PhaseParams b20 = bridge_params(derived_constants(2, 0));
  EXPECT_LT(std::abs(b20.C - Complex(0, 4)), 1e-18L);
  const PhaseParams b11 = bridge_params(derived_constants(1, 1));
  EXPECT_LT(std::abs(b11.C - Complex(3, 1) / 2.0L), 1e-18L);
  for (auto [a, b] : kSets) {
    const EllipseParams p = derived_constants(a, b);
    const PhaseParams q = bridge_params(p);
    EXPECT_LT(std::abs(q.A - canonical_A(q.B, q.C)), 1e-15L);
    EXPECT_NEAR(static_cast<double>(q.C.imag()), static_cast<double>(p.omega()), 1e-15);
    const HermiteSystem sys(q);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_LT(std::abs(sys.eigenvalue(n) - Psi_eigenvalue(p, n)), 1e-14L);
      EXPECT_LT(bridge_collinearity_defect(p, n), 1e-10L);
    }
    EXPECT_LT(max_coeff_diff(ladder_diffops(p).H, sys.ladder_ops().H), 1e-14L);
  }
}

TEST(ZetaMap, ValuesAndRoundTrip) {
  const EllipseParams p = derived_constants(2, 0);
  EXPECT_LT(std::abs(zeta_map(p, 1.0L) - Complex(2)), 1e-18L);
  EXPECT_EQ(zeta_map(p, 0.0L), Complex(0));
  oracle::Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    const EllipseParams q = derived_constants(rng.uniform(0.2, 3), rng.uniform(-3, 3));
    const Complex z = rng.complex(3);
    EXPECT_LT(std::abs(zeta_inverse(q, zeta_map(q, z)) - z), 1e-12L);
    // z = x - i xi maps to alpha x - i(beta x + xi)
    const Real x = z.real(), xi = -z.imag();
    EXPECT_LT(std::abs(zeta_map(q, z) - Complex(q.alpha * x, -(q.beta * x + xi))), 1e-12L);
  }
}

TEST(Trace, PointsLieOnBoundary) {
  const EllipseParams p = derived_constants(2, 1);
  const auto tr = ellipse_trace(p, 1.5L, 64);
  ASSERT_EQ(tr.size(), 64u);
  for (const auto& [x, xi] : tr) {
    EXPECT_NEAR(static_cast<double>(std::abs(zeta_map(p, Complex(x, -xi)))), 1.5, 1e-15);
  }
  std::ostringstream os;
  write_trace_csv(os, tr);
  EXPECT_EQ(os.str().substr(0, 5), "x,xi\n");
}
