#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "blab/toeplitz.hpp"

using namespace blab;

TEST(DiskEigenvalue, Values) {
  EXPECT_NEAR(static_cast<double>(disk_eigenvalue(1, 0)), 1 - std::exp(-1.0), 1e-16);
  EXPECT_NEAR(static_cast<double>(disk_eigenvalue(1, 0)), 0.6321206, 1e-7);
  EXPECT_LT(disk_eigenvalue(1, 200), 1e-300L);
  EXPECT_GE(disk_eigenvalue(1, 200), 0);
  EXPECT_THROW(disk_eigenvalue(0, 1), DomainError);
}

TEST(DiskEigenvalue, MatchesIncompleteGamma) {
  // (1/n!) gamma(n+1, R) = P(n+1, R)
  for (Real R : {0.5L, 1.0L, 3.0L, 12.0L, 40.0L}) {
    for (int n = 0; n <= 30; ++n) {
      const Real p = boost::math::gamma_p(static_cast<Real>(n + 1), R);
      EXPECT_LT(std::abs(disk_eigenvalue(R, n) - p), 1e-15L * std::max<Real>(p, 1e-3L)) << R << " " << n;
    }
  }
}

TEST(DiskEigenvalue, Monotone) {
  for (Real R : {0.5L, 1.0L, 3.0L, 8.0L}) {
    for (int n = 0; n < 30; ++n) {
      const Real l = disk_eigenvalue(R, n);
      EXPECT_GT(l, 0);
      EXPECT_LT(l, 1);
      EXPECT_GT(l, disk_eigenvalue(R, n + 1));
      EXPECT_LT(l, disk_eigenvalue(R * 1.1L, n));
    }
  }
}

TEST(RadialEigenvalue, ConstantAndExponentialProfiles) {
  for (int n = 0; n < 8; ++n) {
    EXPECT_NEAR(static_cast<double>(radial_eigenvalue(RadialSymbol::constant(1), n)), 1.0, 1e-13);
    const RadialSymbol e = RadialSymbol::smooth([](Real s) { return std::exp(-s / 2); });
    EXPECT_NEAR(static_cast<double>(radial_eigenvalue(e, n)), std::pow(2.0, -(n + 1)), 1e-14);
  }
  EXPECT_NEAR(static_cast<double>(radial_eigenvalue(RadialSymbol::indicator(0.7L), 0)),
              1 - std::exp(-0.7), 1e-15);
}

TEST(RadialEigenvalue, DiskIdentity) {
  for (Real R : {0.5L, 1.0L, 3.0L}) {
    const RadialSymbol s = RadialSymbol::indicator(R);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_LT(std::abs(radial_eigenvalue(s, n) - disk_eigenvalue(R, n)), 1e-10L) << R << " " << n;
    }
  }
}

TEST(RadialEigenvalue, DivergentProfileReported) {
  const RadialSymbol grow = RadialSymbol::smooth([](Real s) { return std::exp(s); });
  EXPECT_ANY_THROW(radial_eigenvalue(grow, 0));
}

TEST(Radius, RoundTrip) {
  EXPECT_NEAR(static_cast<double>(radius_from_groundstate(1 - std::exp(-1.0L))), 1.0, 1e-15);
  EXPECT_LT(std::abs(radius_from_groundstate(disk_eigenvalue(2.5L, 0)) - 2.5L), 1e-12L);
  EXPECT_LT(radius_from_groundstate(1e-12L), 1.1e-12L);
  EXPECT_THROW(radius_from_groundstate(0), DomainError);
  EXPECT_THROW(radius_from_groundstate(1), DomainError);
}

TEST(ToeplitzMatrix, IndicatorIsDiagonal) {
  const RadialSymbol s = RadialSymbol::indicator(1);
  const QuadGrid g = toeplitz_grid(s, 10);
  EXPECT_LT(std::abs(toeplitz_matrix_quad(s, 0, 1, g)), 1e-6L);
  EXPECT_LT(std::abs(toeplitz_matrix_quad(s, 0, 0, g) - Complex(1 - std::exp(-1.0L))), 1e-5L);
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const Complex t = toeplitz_matrix_quad(s, m, n, g);
      if (m == n) {
        EXPECT_LT(std::abs(t - Complex(disk_eigenvalue(1, n))), 1e-5L);
      } else {
        EXPECT_LT(std::abs(t), 1e-6L);
      }
    }
  }
}

TEST(ToeplitzMatrix, ConstantSymbolIsIdentity) {
  const RadialSymbol one = RadialSymbol::constant(1);
  const QuadGrid g = toeplitz_grid(one, 8);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      EXPECT_LT(std::abs(toeplitz_matrix_quad(one, m, n, g) - Complex(m == n ? 1 : 0)), 1e-6L);
    }
  }
}

TEST(ToeplitzMatrix, DiagonalMatchesRadialForTwoProfiles) {
  const RadialSymbol ind = RadialSymbol::indicator(2);
  const RadialSymbol gau = RadialSymbol::smooth([](Real s) { return std::exp(-s / 3); });
  for (const RadialSymbol* s : {&ind, &gau}) {
    const QuadGrid g = toeplitz_grid(*s, 6);
    for (int n = 0; n <= 6; ++n) {
      EXPECT_LT(std::abs(toeplitz_matrix_quad(*s, n, n, g) - Complex(radial_eigenvalue(*s, n))), 1e-5L);
    }
  }
}

TEST(ToeplitzMatrix, SmallGridReportsTruncation) {
  const RadialSymbol one = RadialSymbol::constant(1);
  EXPECT_THROW(toeplitz_matrix_quad(one, 0, 0, polar_grid({0, 1}, 8, 8)), TruncationError);
}

TEST(SymbolConvolve, ConstantLargeDiskAndGaussian) {
  auto one = [](Complex) { return 1.0L; };
  EXPECT_NEAR(static_cast<double>(symbol_convolve(one, 0.3L, -1.2L, convolve_grid(0.3L, -1.2L))), 1.0, 1e-8);
  const RadialSymbol disk = RadialSymbol::indicator(50);  // |w| <= 10
  EXPECT_NEAR(static_cast<double>(symbol_convolve(disk, 0, 0, convolve_grid(0, 0))), 1.0, 1e-6);
  // b = e^{-|w|^2}: a = (1/2) e^{-(x^2 + xi^2)/2}
  auto gauss = [](Complex w) { return std::exp(-std::norm(w)); };
  for (auto [x, xi] : {std::pair<Real, Real>{0, 0}, {0.7L, -0.4L}, {1.5L, 1}}) {
    const Real a = symbol_convolve(gauss, x, xi, convolve_grid(x, xi));
    EXPECT_NEAR(static_cast<double>(a), 0.5 * std::exp(-(x * x + xi * xi) / 2), 1e-12);
    EXPECT_LE(a, 1);
  }
}

TEST(SpectrumCsv, Columns) {
  const auto rows = disk_spectrum(1, 5);
  ASSERT_EQ(rows.size(), 5u);
  std::ostringstream os;
  write_spectrum_csv(os, rows);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "n,lambda_formula,lambda_quadrature,abs_diff");
  EXPECT_NE(os.str().find("0,0.63212055882855767"), std::string::npos);
}
