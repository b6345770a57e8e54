#include "blab/phasecore.hpp"

#include <cmath>

namespace blab {

PhaseParams PhaseParams::make(Complex A, Complex B, Complex C, Real h) {
  if (B == Complex(0)) throw DomainError("PhaseParams: B must be nonzero");
  if (!(C.imag() > 0)) throw DomainError("PhaseParams: Im C must be positive");
  if (!(h > 0)) throw DomainError("PhaseParams: h must be positive");
  return PhaseParams{A, B, C, h};
}

PhaseParams PhaseParams::canonical(Complex B, Complex C, Real h) {
  return make(canonical_A(B, C), B, C, h);
}

PhaseParams PhaseParams::classic(Real h) {
  return make(0.5L * kI, -kI, kI, h);
}

Complex PhaseParams::phase(Complex z, Complex x) const {
  return A * z * z / 2.0L + B * z * x + C * x * x / 2.0L;
}

Real PhaseParams::c_phi() const {
  return std::abs(B) / (std::sqrt(2.0L) * std::pow(kPi, 0.75L) *
                        std::pow(C.imag(), 0.25L));
}

Real PhaseParams::c_Phi() const {
  return std::norm(B) / (2.0L * kPi * C.imag());
}

Complex canonical_A(Complex B, Complex C) {
  if (B == Complex(0)) throw DomainError("canonical_A: B must be nonzero");
  if (!(C.imag() > 0)) throw DomainError("canonical_A: Im C must be positive");
  return -kI * B * B / (2.0L * C.imag());
}

std::pair<Real, Complex> weight_coefficients(const PhaseParams& p) {
  const Real imc = p.C.imag();
  // Re{(Bz)^2/(4 Im C) + A z^2/(2i)} = Re(kappa z^2)
  return {std::norm(p.B) / (4.0L * imc), p.B * p.B / (4.0L * imc) + p.A / (2.0L * kI)};
}

Real weight_Phi(const PhaseParams& p, Complex z) {
  const auto [gamma, kappa] = weight_coefficients(p);
  return gamma * std::norm(z) - (kappa * z * z).real();
}

Complex kernel_Psi(const PhaseParams& p, Complex z, Complex zeta) {
  // g(X) = phi(z,X) - conj(phi(conj zeta, conj X))
  //      = (A z^2 - conj(A) zeta^2)/2 + (B z - conj(B) zeta) X + i Im(C) X^2
  const Complex lin = p.B * z - std::conj(p.B) * zeta;
  const Complex quad = kI * p.C.imag();
  const Complex constant = (p.A * z * z - std::conj(p.A) * zeta * zeta) / 2.0L;
  const Complex X = -lin / (2.0L * quad);
  const Complex g = constant + lin * X + quad * X * X;
  return -g / (2.0L * kI);
}

std::pair<Complex, Complex> kappa_map(const PhaseParams& p, Real x, Real xi) {
  const Complex w = p.C * x + xi;
  return {-w / p.B, p.B * x - p.A * w / p.B};
}

nlohmann::json complex_to_json(Complex c) {
  return nlohmann::json::array({static_cast<double>(c.real()), static_cast<double>(c.imag())});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DomainError("complex JSON value must be [re, im]");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

void to_json(nlohmann::json& j, const PhaseParams& p) {
  j = nlohmann::json{{"A", complex_to_json(p.A)},
                     {"B", complex_to_json(p.B)},
                     {"C", complex_to_json(p.C)},
                     {"h", static_cast<double>(p.h)}};
}

void from_json(const nlohmann::json& j, PhaseParams& p) {
  p = PhaseParams::make(complex_from_json(j.at("A")), complex_from_json(j.at("B")),
                        complex_from_json(j.at("C")), j.at("h").get<double>());
}

}  // namespace blab
