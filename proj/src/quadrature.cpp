#include "blab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <string>

#include <Eigen/Eigenvalues>

#include "blab/parallel.hpp"

namespace blab {

int worker_count() {
  const char* env = std::getenv("BARGMANN_LAB_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(std::min(v, 256L));
}

std::string_view to_string(GridKind kind) {
  switch (kind) {
    case GridKind::GaussHermite1D: return "gauss-hermite-1d";
    case GridKind::Tensor2D: return "tensor-2d";
    case GridKind::TrapezoidTruncated: return "trapezoid-truncated";
    case GridKind::Polar2D: return "polar-2d";
  }
  return "unknown";
}

void QuadGrid::validate() const {
  if (nodes.size() != weights.size() || nodes.size() != outer.size()) {
    throw DomainError("QuadGrid: nodes, weights and outer mask differ in length");
  }
  for (const Real w : weights) {
    if (!(w > 0)) throw DomainError("QuadGrid: weights must be positive");
  }
}

const QuadEstimate& QuadEstimate::require(Real tol) const {
  if (tail > tol * std::max<Real>(1, std::abs(value))) {
    throw TruncationError("quadrature tail mass " +
                          std::to_string(static_cast<double>(tail)) +
                          " exceeds tolerance " + std::to_string(static_cast<double>(tol)));
  }
  return *this;
}

GridFunction GridFunction::sample(QuadGrid grid, const std::function<Complex(Complex)>& f) {
  std::vector<Complex> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = f(grid.nodes[i]); });
  return {std::move(grid), std::move(values)};
}

// ------------------------------------------------------------------ 1D rules

GaussHermiteRule gauss_hermite_rule(int n) {
  if (n < 1) throw DomainError("Gauss-Hermite rule needs n >= 1");
  // Golub-Welsch for starting values, Newton in extended precision after.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  // Orthonormal polynomials for exp(-t^2); fills sum of squares of p_0..p_{n-1}.
  const Real p0 = 1.0L / std::sqrt(std::sqrt(kPi));
  auto eval = [&](Real t, Real& pn, Real& pn1, Real& sumsq) {
    Real prev = 0, cur = p0;
    sumsq = 0;
    for (int k = 0; k < n; ++k) {
      sumsq += cur * cur;
      const Real next = std::sqrt(2.0L / (k + 1)) * t * cur -
                        std::sqrt(static_cast<Real>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    pn = cur;    // p_n
    pn1 = prev;  // p_{n-1}
  };

  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.scaled_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    Real t = solver.eigenvalues()[i];
    for (int it = 0; it < 50; ++it) {
      Real pn, pn1, s;
      eval(t, pn, pn1, s);
      const Real dt = pn / (std::sqrt(2.0L * n) * pn1);
      t -= dt;
      if (std::abs(dt) <= 1e-19L * std::max<Real>(1, std::abs(t))) break;
    }
    Real pn, pn1, s;
    eval(t, pn, pn1, s);
    rule.nodes[i] = t;
    rule.weights[i] = 1.0L / s;
    // Orthonormal functions p_k e^{-t^2/2} stay bounded, so this avoids e^{t^2}.
    Real prev = 0, cur = p0 * std::exp(-t * t / 2), fsum = 0;
    for (int k = 0; k < n; ++k) {
      fsum += cur * cur;
      const Real next = std::sqrt(2.0L / (k + 1)) * t * cur -
                        std::sqrt(static_cast<Real>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    rule.scaled_weights[i] = 1.0L / fsum;
  }
  return rule;
}

std::pair<std::vector<Real>, std::vector<Real>> gauss_legendre_rule(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  std::vector<Real> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    Real t = std::cos(kPi * (i + 0.75L) / (n + 0.5L));
    Real dp = 1;
    for (int it = 0; it < 100; ++it) {
      Real p1 = 1, p2 = 0;
      for (int k = 1; k <= n; ++k) {
        const Real p3 = p2;
        p2 = p1;
        p1 = ((2 * k - 1) * t * p2 - (k - 1) * p3) / k;
      }
      dp = n * (t * p1 - p2) / (t * t - 1);
      const Real dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-19L) break;
    }
    x[n - 1 - i] = t;
    w[n - 1 - i] = 2 / ((1 - t * t) * dp * dp);
  }
  return {x, w};
}

QuadGrid gauss_hermite_grid_1d(int n, Real center, Real scale) {
  if (!(scale > 0)) throw DomainError("Gauss-Hermite grid needs scale > 0");
  const auto rule = gauss_hermite_rule(n);
  QuadGrid g;
  g.kind = GridKind::GaussHermite1D;
  g.nodes.resize(n);
  g.weights.resize(n);
  g.outer.assign(n, false);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = center + scale * rule.nodes[i];
    g.weights[i] = scale * rule.scaled_weights[i];
  }
  g.outer.front() = g.outer.back() = true;
  return g;
}

// ------------------------------------------------------------------ 2D grids

Complex PlaneQuadratic::operator()(Complex z) const {
  const Complex zb = std::conj(z);
  return zz * z * z + zbzb * zb * zb + zzb * z * zb + lz * z + lzb * zb;
}

PlaneQuadratic operator+(const PlaneQuadratic& a, const PlaneQuadratic& b) {
  return {a.zz + b.zz, a.zbzb + b.zbzb, a.zzb + b.zzb, a.lz + b.lz, a.lzb + b.lzb};
}

bool is_decaying(const PlaneQuadratic& e) {
  const Real m11 = -(e.zz.real() + e.zbzb.real() + e.zzb.real());
  const Real m22 = -(-e.zz.real() - e.zbzb.real() + e.zzb.real());
  const Real m12 = e.zz.imag() - e.zbzb.imag();
  return m11 > 0 && m11 * m22 - m12 * m12 > 0;
}

QuadGrid gaussian_grid_2d(const PlaneQuadratic& e, int n) {
  // Re E(u + iv) = -(m11 u^2 + 2 m12 uv + m22 v^2) + b1 u + b2 v
  const Real m11 = -(e.zz.real() + e.zbzb.real() + e.zzb.real());
  const Real m22 = -(-e.zz.real() - e.zbzb.real() + e.zzb.real());
  const Real m12 = e.zz.imag() - e.zbzb.imag();
  const Real b1 = e.lz.real() + e.lzb.real();
  const Real b2 = -e.lz.imag() + e.lzb.imag();

  const Real tr = m11 + m22;
  const Real det = m11 * m22 - m12 * m12;
  if (!(tr > 0 && det > 0)) {
    throw DomainError("gaussian_grid_2d: integrand exponent is not decaying");
  }
  const Real disc = std::sqrt(std::max<Real>(0, (m11 - m22) * (m11 - m22) / 4 + m12 * m12));
  const Real d1 = tr / 2 + disc;
  const Real d2 = det / d1;
  // Unit eigenvector for d1; the second is its rotation.
  Real ex, ey;
  if (std::abs(m12) > 0) {
    ex = m12;
    ey = d1 - m11;
  } else if (m11 >= m22) {
    ex = 1;
    ey = 0;
  } else {
    ex = 0;
    ey = 1;
  }
  const Real len = std::hypot(ex, ey);
  ex /= len;
  ey /= len;
  const Real cu = (m22 * b1 - m12 * b2) / (2 * det);
  const Real cv = (m11 * b2 - m12 * b1) / (2 * det);

  const auto rule = gauss_hermite_rule(n);
  const Real s1 = 1 / std::sqrt(d1);
  const Real s2 = 1 / std::sqrt(d2);
  QuadGrid g;
  g.kind = GridKind::Tensor2D;
  const std::size_t total = static_cast<std::size_t>(n) * n;
  g.nodes.resize(total);
  g.weights.resize(total);
  g.outer.resize(total);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Real a = s1 * rule.nodes[i];
      const Real b = s2 * rule.nodes[j];
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      g.nodes[k] = Complex(cu + ex * a - ey * b, cv + ey * a + ex * b);
      g.weights[k] = s1 * s2 * rule.scaled_weights[i] * rule.scaled_weights[j];
      g.outer[k] = i == 0 || j == 0 || i == n - 1 || j == n - 1;
    }
  }
  return g;
}

QuadGrid trapezoid_grid_2d(Complex center, Real half_width, int n) {
  if (n < 2 || !(half_width > 0)) throw DomainError("trapezoid grid needs n >= 2, width > 0");
  const Real step = 2 * half_width / (n - 1);
  QuadGrid g;
  g.kind = GridKind::TrapezoidTruncated;
  const std::size_t total = static_cast<std::size_t>(n) * n;
  g.nodes.resize(total);
  g.weights.resize(total);
  g.outer.resize(total);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      const bool ei = i == 0 || i == n - 1;
      const bool ej = j == 0 || j == n - 1;
      g.nodes[k] = center + Complex(-half_width + i * step, -half_width + j * step);
      g.weights[k] = step * step * (ei ? 0.5L : 1.0L) * (ej ? 0.5L : 1.0L);
      g.outer[k] = ei || ej;
    }
  }
  return g;
}

QuadGrid polar_grid(std::vector<Real> breaks, int n_radial, int n_angular) {
  if (breaks.size() < 2 || breaks.front() != 0) {
    throw DomainError("polar grid breaks must start at 0 and have a panel");
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] > breaks[i - 1])) throw DomainError("polar grid breaks must increase");
  }
  if (n_radial < 1 || n_angular < 1) throw DomainError("polar grid sizes must be positive");
  const auto [gx, gw] = gauss_legendre_rule(n_radial);
  QuadGrid g;
  g.kind = GridKind::Polar2D;
  const Real dtheta = 2 * kPi / n_angular;
  for (std::size_t p = 1; p < breaks.size(); ++p) {
    const Real lo = breaks[p - 1], hi = breaks[p];
    for (int r = 0; r < n_radial; ++r) {
      const Real rad = (lo + hi) / 2 + (hi - lo) / 2 * gx[r];
      const Real wr = (hi - lo) / 2 * gw[r] * rad;
      const bool last = p + 1 == breaks.size() && r == n_radial - 1;
      for (int a = 0; a < n_angular; ++a) {
        g.nodes.push_back(std::polar(rad, a * dtheta));
        g.weights.push_back(wr * dtheta);
        g.outer.push_back(last);
      }
    }
  }
  return g;
}

// --------------------------------------------------------------- integration

Complex pairwise_sum(std::span<const Complex> terms) {
  if (terms.size() <= 8) {
    Complex s = 0.0L;
    for (const auto& t : terms) s += t;
    return s;
  }
  const std::size_t mid = terms.size() / 2;
  return pairwise_sum(terms.first(mid)) + pairwise_sum(terms.subspan(mid));
}

QuadEstimate integrate(const QuadGrid& grid, std::span<const Complex> values) {
  if (values.size() != grid.size()) {
    throw DomainError("integrate: value count does not match grid");
  }
  std::vector<Complex> terms(values.size());
  Real tail = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    terms[i] = grid.weights[i] * values[i];
    if (grid.outer[i]) tail += std::abs(terms[i]);
  }
  return {pairwise_sum(terms), tail};
}

QuadEstimate integrate(const QuadGrid& grid, const std::function<Complex(Complex)>& f) {
  std::vector<Complex> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = f(grid.nodes[i]); });
  return integrate(grid, values);
}

QuadEstimate integrate(const GridFunction& f) { return integrate(f.grid, f.values); }

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  os << "re(node),im(node),weight,re(value),im(value)\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    os << static_cast<double>(f.grid.nodes[i].real()) << ','
       << static_cast<double>(f.grid.nodes[i].imag()) << ','
       << static_cast<double>(f.grid.weights[i]) << ','
       << static_cast<double>(f.values[i].real()) << ','
       << static_cast<double>(f.values[i].imag()) << '\n';
  }
}

}  // namespace blab
