#include "blab/ellipse.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "blab/bargmann.hpp"
#include "blab/parallel.hpp"
#include "blab/quadrature.hpp"

namespace blab {

namespace {

Real factorial(int n) { return std::tgamma(static_cast<Real>(n) + 1); }

}  // namespace

EllipseParams EllipseParams::make(Real alpha, Real beta) {
  if (!(alpha > 0) || !std::isfinite(beta)) throw DomainError("ellipse: need alpha > 0");
  if (alpha == 1 && beta == 0) {
    throw DomainError("ellipse: (1, 0) is the classic disk; use resolve_family");
  }
  EllipseParams p;
  p.alpha = alpha;
  p.beta = beta;
  const Real s = alpha * alpha + beta * beta;
  p.kappa = s + 1;
  p.a = Complex(s - 1, 2 * beta) / p.kappa;
  p.lambda = 2 * alpha * alpha / (p.kappa * Complex(s - 1, -2 * beta));
  const Complex ab = std::conj(p.a);
  p.C_ab = (1.0L - ab) / (2.0L * ab);
  p.A_ab = std::pow(kPi, 0.25L) * std::sqrt(p.kappa / Complex(1, -beta));

  if (!(std::abs(p.a) < 1)) throw InvariantError("ellipse: |a| must be below 1");
  if (std::abs(std::arg(p.A_ab)) >= kPi / 4) throw InvariantError("ellipse: A branch");
  return p;
}

Complex EllipseParams::E() const {
  return Complex(alpha * alpha, kappa * beta) / (1 + beta * beta);
}

Real EllipseParams::lambda_over_a() const {
  const Real s = alpha * alpha + beta * beta - 1;
  return 2 * alpha * alpha / (s * s + 4 * beta * beta);
}

FamilyResolution resolve_family(Real alpha, Real beta) {
  if (alpha == 1 && beta == 0) return {FamilyTag::ClassicDisk, std::nullopt, ellipse_space()};
  const EllipseParams p = EllipseParams::make(alpha, beta);
  return {FamilyTag::Ellipse, p, bridge_params(p)};
}

PhaseParams ellipse_space() { return PhaseParams::classic(1); }

HoloGauss psi_0(const EllipseParams& p) {
  return HoloGauss(ComplexPoly::constant(1.0L), -p.a / 4.0L);
}

HoloGauss psi_n(const EllipseParams& p, int n) {
  if (n < 0) throw DomainError("psi_n: n must be nonnegative");
  if (n > ComplexPoly::kDegreeCap) throw DegreeOverflow("psi_n: n exceeds the degree cap");
  HoloGauss g(ComplexPoly::constant(1.0L), p.lambda / 2.0L);
  for (int k = 0; k < n; ++k) g = g.differentiate();
  return g.multiply_exp(-p.lambda / 2.0L - p.a / 4.0L);
}

HoloGauss psi_n_ladder(const EllipseParams& p, int n) {
  if (n < 0) throw DomainError("psi_n_ladder: n must be nonnegative");
  HoloGauss g = psi_0(p);
  for (int k = 0; k < n; ++k) g = apply_ladder(p, Ladder::LambdaStar, g);
  return g;
}

Real psi_norm_sq(const EllipseParams& p, int n) {
  return factorial(n) * std::pow(p.lambda_over_a(), n) * p.kappa * kPi / p.alpha;
}

ComplexMatrix psi_gram_quad(const EllipseParams& p, int N, int nodes) {
  if (N < 1) throw DomainError("psi_gram_quad: N must be positive");
  const PhaseParams space = ellipse_space();
  std::vector<HoloGauss> psis;
  for (int n = 0; n < N; ++n) psis.push_back(psi_n(p, n));
  // Every product shares the exponent of |psi_0|^2 e^{-|z|^2/2}.
  const PlaneQuadratic e = [&] {
    PlaneQuadratic q = weight_exponent(space);
    q.zz += psis[0].c2();
    q.zbzb += std::conj(psis[0].c2());
    return q;
  }();
  const QuadGrid grid = gaussian_grid_2d(e, nodes);
  ComplexMatrix G(N, N);
  parallel_for(static_cast<std::size_t>(N) * N, [&](std::size_t k) {
    const int i = static_cast<int>(k) / N, j = static_cast<int>(k) % N;
    G(i, j) = inner_product_HPhi(space, psis[i], psis[j], grid).value;
  });
  return G;
}

PolyGauss Psi_n(const EllipseParams& p, int n) {
  if (n < 0) throw DomainError("Psi_n: n must be nonnegative");
  if (n > ComplexPoly::kDegreeCap) throw DegreeOverflow("Psi_n: n exceeds the degree cap");
  const DiffOp d = DiffOp::d_dx(1);
  PolyGauss g(ComplexPoly::constant(1.0L), -p.omega());
  for (int k = 0; k < n; ++k) g = d.apply(g);
  const Complex lead = p.A_ab * std::pow(-p.C_ab, n);
  return (lead * g).multiply_exp(std::conj(p.E()) / 2.0L);
}

Real Psi_eigenvalue(const EllipseParams& p, int n) { return p.omega() * (2 * n + 1); }

HoloGauss apply_ladder(const EllipseParams& p, Ladder which, const HoloGauss& f) {
  if (f.is_zero()) return f;
  switch (which) {
    case Ladder::Lambda:
      return f.differentiate().scale(1.0L / p.a) + f.multiply_by_z().scale(0.5L);
    case Ladder::LambdaStar:
      return f.differentiate() + f.multiply_by_z().scale((p.a + 2.0L * p.lambda) / 2.0L);
    default:
      throw DomainError("apply_ladder: P, P* and H act on functions of x");
  }
}

LadderOps ladder_diffops(const EllipseParams& p) {
  const DiffOp d = DiffOp::d_dx(1);
  const DiffOp x = DiffOp::x(1);
  DiffOp P = d + p.E() * x;
  DiffOp Pstar = Complex(-1) * d + std::conj(p.E()) * x;
  DiffOp H = compose(Pstar, P) + Complex(p.omega()) * DiffOp::identity(1);
  return {std::move(P), std::move(Pstar), std::move(H)};
}

PolyGauss apply_ladder(const EllipseParams& p, Ladder which, const PolyGauss& f) {
  const LadderOps ops = ladder_diffops(p);
  switch (which) {
    case Ladder::P:
      return ops.P.apply(f);
    case Ladder::Pstar:
      return ops.Pstar.apply(f);
    case Ladder::H:
      return ops.H.apply(f);
    default:
      throw DomainError("apply_ladder: Lambda and Lambda* act on entire functions");
  }
}

Real Psi_residual(const EllipseParams& p, int n) {
  const PolyGauss f = Psi_n(p, n);
  const PolyGauss r = apply_ladder(p, Ladder::H, f) - Complex(Psi_eigenvalue(p, n)) * f;
  return norm_line(r) / norm_line(f);
}

std::vector<EigenRecord> Psi_eigen_report(const EllipseParams& p, int count) {
  std::vector<EigenRecord> out(static_cast<std::size_t>(std::max(count, 0)));
  parallel_for(out.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    out[i] = {n, Psi_eigenvalue(p, n), Psi_residual(p, n)};
  });
  return out;
}

ComplexMatrix Psi_gram_normalized(const EllipseParams& p, int N) {
  if (N < 1) throw DomainError("Psi_gram_normalized: N must be positive");
  std::vector<PolyGauss> fs;
  for (int n = 0; n < N; ++n) {
    const PolyGauss f = Psi_n(p, n);
    fs.push_back(Complex(1.0L / norm_line(f)) * f);
  }
  ComplexMatrix G(N, N);
  parallel_for(static_cast<std::size_t>(N) * N, [&](std::size_t k) {
    const int i = static_cast<int>(k) / N, j = static_cast<int>(k) % N;
    G(i, j) = inner_product_line(fs[i], fs[j]);
  });
  return G;
}

PhaseParams bridge_params(const EllipseParams& p) {
  const Real b2 = 1 + p.beta * p.beta;
  const Complex A = kI * b2 / (2 * p.alpha * p.alpha);
  const Complex C = Complex(p.kappa * p.beta, p.alpha * p.alpha) / b2;
  return PhaseParams::make(A, -kI, C, 1);
}

Real bridge_collinearity_defect(const EllipseParams& p, int n) {
  const PolyGauss Psi = Psi_n(p, n);
  const PolyGauss phi = HermiteSystem(bridge_params(p)).hermite_phi(n);
  const Real a = inner_product_line(Psi, Psi).real();
  const Real b = inner_product_line(phi, phi).real();
  return std::abs(1.0L - std::norm(inner_product_line(Psi, phi)) / (a * b));
}

Complex zeta_map(const EllipseParams& p, Complex z) {
  const Complex u = Complex(p.alpha + 1, -p.beta) / 2.0L;
  const Complex v = Complex(p.alpha - 1, -p.beta) / 2.0L;
  return u * z + v * std::conj(z);
}

Complex zeta_inverse(const EllipseParams& p, Complex zeta) {
  const Complex u = Complex(p.alpha + 1, p.beta) / (2 * p.alpha);
  const Complex v = Complex(p.alpha - 1, -p.beta) / (2 * p.alpha);
  return u * zeta - v * std::conj(zeta);
}

std::vector<std::pair<Real, Real>> ellipse_trace(const EllipseParams& p, Real rho, int samples) {
  if (!(rho > 0) || samples < 1) throw DomainError("ellipse_trace: need rho > 0, samples >= 1");
  std::vector<std::pair<Real, Real>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const Real th = 2 * kPi * k / samples;
    const Real x = rho * std::cos(th) / p.alpha;
    out.emplace_back(x, -rho * std::sin(th) - p.beta * x);
  }
  return out;
}

void write_trace_csv(std::ostream& os, const std::vector<std::pair<Real, Real>>& trace) {
  os << "x,xi\n" << std::setprecision(17);
  for (const auto& [x, xi] : trace) {
    os << static_cast<double>(x) << ',' << static_cast<double>(xi) << '\n';
  }
}

}  // namespace blab
