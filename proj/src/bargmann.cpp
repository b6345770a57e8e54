#include "blab/bargmann.hpp"

#include <cmath>

namespace blab {

namespace {

Real transform_prefactor(const PhaseParams& p) {
  return p.c_phi() * std::pow(p.h, -0.75L);
}

// Exponent of e^{-i conj(phi(z,x))/h} as a function of z, without its
// z-independent part -i conj(C) x^2 / 2h.
PlaneQuadratic adjoint_kernel_exponent(const PhaseParams& p, Real x) {
  PlaneQuadratic e;
  e.zbzb = -kI * std::conj(p.A) / (2.0L * p.h);
  e.lzb = -kI * std::conj(p.B) * x / p.h;
  return e;
}

PlaneQuadratic holo_exponent(const HoloGauss& U) {
  PlaneQuadratic e;
  e.zz = U.c2();
  e.lz = U.c1();
  return e;
}

PlaneQuadratic conj_holo_exponent(const HoloGauss& V) {
  PlaneQuadratic e;
  e.zbzb = std::conj(V.c2());
  e.lzb = std::conj(V.c1());
  return e;
}

}  // namespace

HoloGauss transform(const PhaseParams& p, const PolyGauss& f) {
  const Real h = p.h;
  const Complex G2 = kI * p.C / (2.0L * h) + f.gamma2();
  if (!(G2.real() < 0)) throw DomainError("transform: x-integral diverges");
  const Complex c2 = kI * p.A / (2.0L * h) + p.B * p.B / (4.0L * h * h * G2);
  if (f.is_zero()) return HoloGauss(ComplexPoly(), c2, 0.0L);

  const Complex g1 = f.gamma1();
  const Complex c1 = -kI * p.B * g1 / (2.0L * h * G2);
  const Complex scale = transform_prefactor(p) * std::exp(-g1 * g1 / (4.0L * G2));

  // With x = y + s, s = -(iBz/h + g1)/(2 G2), each x^k integrates to
  // e^{-G1^2/4G2} sum_i C(k,i) s^(k-i) m_i with centered moments m_i.
  const int deg = f.poly().degree();
  const auto centered = gaussian_moments(G2, 0.0L, deg);
  std::vector<Complex> in_s(static_cast<std::size_t>(deg) + 1, Complex(0));
  for (int k = 0; k <= deg; ++k) {
    Real binom = 1;  // C(k, i)
    for (int i = 0; i <= k; ++i) {
      if (i % 2 == 0) in_s[k - i] += f.poly()[k] * binom * centered[i];
      binom = binom * static_cast<Real>(k - i) / static_cast<Real>(i + 1);
    }
  }
  const Complex s1 = -kI * p.B / (2.0L * h * G2);
  const Complex s0 = -g1 / (2.0L * G2);
  const ComplexPoly q = scale * ComplexPoly(std::move(in_s)).compose_linear(s1, s0);
  return HoloGauss(q, c2, c1);
}

PlaneQuadratic weight_exponent(const PhaseParams& p) {
  const auto [gamma, kappa] = weight_coefficients(p);
  // -2/h (gamma |z|^2 - (kappa z^2 + conj(kappa) conj(z)^2)/2)
  PlaneQuadratic e;
  e.zzb = -2.0L * gamma / p.h;
  e.zz = kappa / p.h;
  e.zbzb = std::conj(kappa) / p.h;
  return e;
}

QuadGrid weight_grid(const PhaseParams& p, int n) {
  return gaussian_grid_2d(weight_exponent(p), n);
}

bool in_weighted_space(const PhaseParams& p, const HoloGauss& U) {
  if (U.is_zero()) return true;
  return is_decaying(holo_exponent(U) + conj_holo_exponent(U) + weight_exponent(p));
}

QuadEstimate adjoint_quad(const PhaseParams& p, const HoloGauss& U, Real x,
                          const QuadGrid& grid, Real tail_tol) {
  if (U.is_zero()) return {0.0L, 0};
  const PlaneQuadratic e =
      adjoint_kernel_exponent(p, x) + holo_exponent(U) + weight_exponent(p);
  const Complex fixed = -kI * std::conj(p.C) * (x * x) / (2.0L * p.h);
  const Real pre = transform_prefactor(p);
  auto est = integrate(grid, [&](Complex z) {
    return U.poly()(z) * std::exp(e(z) + fixed);
  });
  est.value *= pre;
  est.tail *= pre;
  est.require(tail_tol);
  return est;
}

QuadEstimate adjoint_quad(const PhaseParams& p, const HoloGauss& U, Real x, int n,
                          Real tail_tol) {
  if (U.is_zero()) return {0.0L, 0};
  const PlaneQuadratic e =
      adjoint_kernel_exponent(p, x) + holo_exponent(U) + weight_exponent(p);
  return adjoint_quad(p, U, x, gaussian_grid_2d(e, n), tail_tol);
}

QuadEstimate projector_apply(const PhaseParams& p, const GridFunction& U, Complex z,
                             Real tail_tol) {
  const PlaneQuadratic w = weight_exponent(p);
  std::vector<Complex> vals(U.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const Complex zeta = U.grid.nodes[i];
    vals[i] = U.values[i] * std::exp(2.0L * kernel_Psi(p, z, std::conj(zeta)) / p.h + w(zeta));
  }
  auto est = integrate(U.grid, vals);
  const Real pre = p.c_Phi() / p.h;
  est.value *= pre;
  est.tail *= pre;
  est.require(tail_tol);
  return est;
}

QuadEstimate inner_product_HPhi(const PhaseParams& p, const HoloGauss& U, const HoloGauss& V,
                                const QuadGrid& grid, Real tail_tol) {
  if (U.is_zero() || V.is_zero()) return {0.0L, 0};
  const PlaneQuadratic e = holo_exponent(U) + conj_holo_exponent(V) + weight_exponent(p);
  auto est = integrate(grid, [&](Complex z) {
    return U.poly()(z) * std::conj(V.poly()(z)) * std::exp(e(z));
  });
  est.require(tail_tol);
  return est;
}

QuadEstimate inner_product_HPhi(const PhaseParams& p, const HoloGauss& U, const HoloGauss& V,
                                int n, Real tail_tol) {
  if (U.is_zero() || V.is_zero()) return {0.0L, 0};
  const PlaneQuadratic e = holo_exponent(U) + conj_holo_exponent(V) + weight_exponent(p);
  return inner_product_HPhi(p, U, V, gaussian_grid_2d(e, n), tail_tol);
}

}  // namespace blab
