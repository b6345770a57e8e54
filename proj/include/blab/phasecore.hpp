#pragma once

// Quadratic phase phi(z,x) = A z^2/2 + B z x + C x^2/2 and the objects it
// determines: the weight Phi, the reproducing-kernel exponent Psi, the
// canonical map kappa and the normalization constants.

#include <utility>

#include <nlohmann/json.hpp>

#include "blab/scalar.hpp"

namespace blab {

struct PhaseParams {
  Complex A;
  Complex B;
  Complex C;
  Real h = 1;

  // Validates B != 0, Im C > 0, h > 0.
  static PhaseParams make(Complex A, Complex B, Complex C, Real h);
  // A chosen by canonical_A(B, C).
  static PhaseParams canonical(Complex B, Complex C, Real h);
  // The classical Bargmann transform: (A, B, C) = (i/2, -i, i).
  static PhaseParams classic(Real h = 1);

  Complex phase(Complex z, Complex x) const;

  // C_phi = 2^{-1/2} pi^{-3/4} |B| (Im C)^{-1/4}
  Real c_phi() const;
  // C_Phi = |B|^2 / (2 pi Im C)
  Real c_Phi() const;
};

// A = -i B^2 / (2 Im C); makes Phi(z) = |Bz|^2 / (4 Im C).
Complex canonical_A(Complex B, Complex C);

Real weight_Phi(const PhaseParams& p, Complex z);

// Critical value over X in C of -(phi(z,X) - conj(phi(conj zeta, conj X)))/2i.
Complex kernel_Psi(const PhaseParams& p, Complex z, Complex zeta);

// (x, xi) -> (-(Cx + xi)/B, Bx - A(Cx + xi)/B)
std::pair<Complex, Complex> kappa_map(const PhaseParams& p, Real x, Real xi);

// Phi(z) = gamma |z|^2 - Re(kappa z^2); returns (gamma, kappa).
std::pair<Real, Complex> weight_coefficients(const PhaseParams& p);

// {"A":[re,im],"B":[re,im],"C":[re,im],"h":x}
void to_json(nlohmann::json& j, const PhaseParams& p);
void from_json(const nlohmann::json& j, PhaseParams& p);

nlohmann::json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace blab
