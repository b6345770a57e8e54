#pragma once

// The elliptic family at h = 1: psi_n on the Bargmann space with weight
// e^{-|z|^2/2}, their real-line counterparts Psi_n, and the ladder
// operators Lambda, Lambda* and P_ab, P*_ab.

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "blab/gaussalg.hpp"
#include "blab/hermite.hpp"
#include "blab/phasecore.hpp"

namespace blab {

struct EllipseParams {
  Real alpha = 2;
  Real beta = 0;
  Real kappa = 5;  // alpha^2 + beta^2 + 1
  Complex a;
  Complex lambda;
  Complex C_ab;
  Complex A_ab;

  // alpha > 0, (alpha, beta) != (1, 0).
  static EllipseParams make(Real alpha, Real beta);

  // alpha^2 / (1 + beta^2), also Im C of the bridged phase.
  Real omega() const { return alpha * alpha / (1 + beta * beta); }
  // (alpha^2 + i kappa beta) / (1 + beta^2)
  Complex E() const;
  // 2 alpha^2 / ((alpha^2 + beta^2 - 1)^2 + 4 beta^2), the real value of lambda / a
  Real lambda_over_a() const;
};

inline EllipseParams derived_constants(Real alpha, Real beta) {
  return EllipseParams::make(alpha, beta);
}

enum class FamilyTag { Ellipse, ClassicDisk };

struct FamilyResolution {
  FamilyTag tag;
  std::optional<EllipseParams> ellipse;  // empty for ClassicDisk
  PhaseParams phase;                     // bridged phase, or the classic one
};

// (1, 0) is the usual disk and goes to the classic Bargmann transform.
FamilyResolution resolve_family(Real alpha, Real beta);

// The classical transform at h = 1, whose space carries psi_n.
PhaseParams ellipse_space();

HoloGauss psi_0(const EllipseParams& p);
// (e^{-lambda z^2/2} d^n/dz^n e^{lambda z^2/2}) times psi_0
HoloGauss psi_n(const EllipseParams& p, int n);
// (Lambda*)^n psi_0
HoloGauss psi_n_ladder(const EllipseParams& p, int n);
// n! (lambda/a)^n kappa pi / alpha
Real psi_norm_sq(const EllipseParams& p, int n);
// (psi_m, psi_n) for m, n < N by 2D quadrature.
ComplexMatrix psi_gram_quad(const EllipseParams& p, int N, int nodes = 120);

// A (-C)^n e^{conj(E) x^2/2} d^n/dx^n e^{-omega x^2}
PolyGauss Psi_n(const EllipseParams& p, int n);
// alpha^2 (2n + 1) / (1 + beta^2)
Real Psi_eigenvalue(const EllipseParams& p, int n);

enum class Ladder { Lambda, LambdaStar, P, Pstar, H };

// Lambda = (1/a) d/dz + z/2, Lambda* = d/dz + (a + 2 lambda) z/2.
HoloGauss apply_ladder(const EllipseParams& p, Ladder which, const HoloGauss& f);
// P = d/dx + E x, P* = -d/dx + conj(E) x, H = P* P + omega.
PolyGauss apply_ladder(const EllipseParams& p, Ladder which, const PolyGauss& f);
LadderOps ladder_diffops(const EllipseParams& p);

Real Psi_residual(const EllipseParams& p, int n);
std::vector<EigenRecord> Psi_eigen_report(const EllipseParams& p, int count);
// Gram of Psi_n / ||Psi_n||, n < N, in exact arithmetic.
ComplexMatrix Psi_gram_normalized(const EllipseParams& p, int N);

// A = i(1 + beta^2)/(2 alpha^2), B = -i, C = (kappa beta + i alpha^2)/(1 + beta^2), h = 1
PhaseParams bridge_params(const EllipseParams& p);

// 1 - |(Psi_n, phi_n)|^2 / (||Psi_n||^2 ||phi_n||^2), with phi_n from the bridged system.
Real bridge_collinearity_defect(const EllipseParams& p, int n);

// z = x - i xi  ->  zeta = alpha x - i(beta x + xi)
Complex zeta_map(const EllipseParams& p, Complex z);
Complex zeta_inverse(const EllipseParams& p, Complex zeta);

// Points (x, xi) on the boundary |zeta| = rho.
std::vector<std::pair<Real, Real>> ellipse_trace(const EllipseParams& p, Real rho, int samples);
void write_trace_csv(std::ostream& os, const std::vector<std::pair<Real, Real>>& trace);

}  // namespace blab
