#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "blab/parallel.hpp"
#include "blab/quadrature.hpp"

using namespace blab;

TEST(GaussHermite, IntegratesPolynomialsAgainstGaussian) {
  const auto rule = gauss_hermite_rule(20);
  Real m0 = 0, m2 = 0, m4 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real t = rule.nodes[i];
    m0 += rule.weights[i];
    m2 += rule.weights[i] * t * t;
    m4 += rule.weights[i] * t * t * t * t;
  }
  EXPECT_NEAR(static_cast<double>(m0), std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(static_cast<double>(m2), std::sqrt(M_PI) / 2, 1e-15);
  EXPECT_NEAR(static_cast<double>(m4), 3 * std::sqrt(M_PI) / 4, 1e-15);
}

TEST(GaussHermite, LargeRuleScaledWeights) {
  const QuadGrid g = gauss_hermite_grid_1d(200, 0.5L, 0.8L);
  const auto est = integrate(g, [](Complex x) { return std::exp(-(x - 0.5L) * (x - 0.5L) / 0.64L); });
  EXPECT_NEAR(static_cast<double>(est.value.real()), 0.8 * std::sqrt(M_PI), 1e-14);
}

TEST(GaussLegendre, ExactForLowDegree) {
  for (int n : {1, 2, 5, 33}) {
    const auto [x, w] = gauss_legendre_rule(n);
    Real s0 = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
      s0 += w[i];
      s2 += w[i] * x[i] * x[i];
    }
    EXPECT_NEAR(static_cast<double>(s0), 2.0, 1e-15) << n;
    if (n >= 2) EXPECT_NEAR(static_cast<double>(s2), 2.0 / 3, 1e-15) << n;
  }
}

TEST(GaussianGrid2D, AnisotropicRotatedGaussian) {
  // exp(-(3u^2 + v^2)) rotated and shifted: integral pi / sqrt(3).
  PlaneQuadratic e;
  const Complex c(0.4L, -0.3L);
  const Complex rot = std::exp(kI * 0.6L);
  // -(3u^2 + v^2) with (u + iv) = conj(rot) (z - c)
  // = -2|w|^2 + Re(w^2) ... built through zz/zbzb/zzb of w then shifted
  e.zzb = -2.0L;
  e.zz = -0.5L * std::conj(rot) * std::conj(rot);
  e.zbzb = std::conj(e.zz);
  // shift: w -> z - c
  e.lz = -2.0L * e.zz * c + 2.0L * std::conj(c);
  e.lzb = std::conj(e.lz);
  const Complex k0 = e.zz * c * c + e.zbzb * std::conj(c) * std::conj(c) - 2.0L * std::norm(c);
  ASSERT_TRUE(is_decaying(e));
  const QuadGrid g = gaussian_grid_2d(e, 40);
  const auto est = integrate(g, [&](Complex z) { return std::exp(e(z) + k0); });
  EXPECT_NEAR(static_cast<double>(est.value.real()), M_PI / std::sqrt(3.0), 1e-14);
  EXPECT_LT(est.tail, 1e-20L);
}

TEST(GaussianGrid2D, RejectsGrowingExponent) {
  PlaneQuadratic e;
  e.zzb = 1.0L;
  EXPECT_FALSE(is_decaying(e));
  EXPECT_THROW(gaussian_grid_2d(e, 10), DomainError);
}

TEST(TruncationReport, SmallGridFails) {
  const QuadGrid g = trapezoid_grid_2d(0.0L, 1.0L, 21);
  const auto est = integrate(g, [](Complex z) { return std::exp(-std::norm(z) / 4); });
  EXPECT_THROW(est.require(1e-10L), TruncationError);
  const QuadGrid big = trapezoid_grid_2d(0.0L, 14.0L, 141);
  const auto good = integrate(big, [](Complex z) { return std::exp(-std::norm(z)); });
  EXPECT_NO_THROW(good.require(1e-10L));
  EXPECT_NEAR(static_cast<double>(good.value.real()), M_PI, 1e-12);
}

TEST(PolarGrid, AreaAndGaussian) {
  const QuadGrid g = polar_grid({0, 1, 9}, 40, 32);
  const auto disk = integrate(g, [](Complex z) { return Complex(std::abs(z) <= 1 ? 1 : 0); });
  EXPECT_NEAR(static_cast<double>(disk.value.real()), M_PI, 1e-12);
  const auto gauss = integrate(g, [](Complex z) { return std::exp(-std::norm(z)); });
  EXPECT_NEAR(static_cast<double>(gauss.value.real()), M_PI, 1e-14);
  EXPECT_THROW(polar_grid({0.5L, 1}, 4, 4), DomainError);
}

TEST(PairwiseSum, DeterministicAcrossWorkerCounts) {
  std::vector<Complex> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(1.0L / (i + 1), std::sin(i * 1.0L));
  std::vector<Complex> a(64), b(64);
  parallel_for(64, [&](std::size_t k) { a[k] = pairwise_sum(v) * Complex(k); }, 1);
  parallel_for(64, [&](std::size_t k) { b[k] = pairwise_sum(v) * Complex(k); }, 4);
  EXPECT_EQ(a, b);
}

TEST(GridCsv, HeaderAndRowCount) {
  const GridFunction f = GridFunction::sample(polar_grid({0, 1}, 2, 3), [](Complex z) { return z; });
  std::ostringstream os;
  write_grid_csv(os, f);
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "re(node),im(node),weight,re(value),im(value)");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 7);
}

TEST(QuadGrid, ValidateRejectsBadWeights) {
  QuadGrid g;
  g.nodes = {0.0L};
  g.weights = {-1};
  g.outer = {false};
  EXPECT_THROW(g.validate(), DomainError);
}
