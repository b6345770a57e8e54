#pragma once

// Exact algebra of polynomial-times-Gaussian functions.
//
//   PolyGauss  x -> p(x) exp(g2 x^2 + g1 x)   on the real line, Re g2 < 0
//   HoloGauss  z -> q(z) exp(c2 z^2 + c1 z)   entire functions on C
//
// Every eigenfunction in the library has one of these two forms, so
// eigen-relations and inner products can be checked without discretization.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blab/scalar.hpp"

namespace blab {

class ComplexPoly {
 public:
  static constexpr int kDegreeCap = 64;

  ComplexPoly() = default;
  // Coefficients are degree-ascending; trailing exact zeros are dropped.
  explicit ComplexPoly(std::vector<Complex> coeffs);

  static ComplexPoly constant(Complex c);
  static ComplexPoly monomial(int n, Complex c = 1.0L);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int k) const;

  Complex operator()(Complex z) const;

  ComplexPoly derivative() const;
  ComplexPoly conj() const;
  ComplexPoly times_x() const;
  // p(a z + b)
  ComplexPoly compose_linear(Complex a, Complex b) const;

  Real max_abs_coeff() const;

  friend ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q);
  friend ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q);
  friend ComplexPoly operator*(const ComplexPoly& p, const ComplexPoly& q);
  friend ComplexPoly operator*(Complex c, const ComplexPoly& p);

 private:
  std::vector<Complex> coeffs_;
};

// max_k |p_k - q_k|
Real max_coeff_diff(const ComplexPoly& p, const ComplexPoly& q);

class PolyGauss {
 public:
  // The zero function.
  PolyGauss();
  PolyGauss(ComplexPoly poly, Complex gamma2, Complex gamma1 = 0.0L);

  static PolyGauss zero_like(const PolyGauss& f);

  const ComplexPoly& poly() const { return poly_; }
  Complex gamma2() const { return gamma2_; }
  Complex gamma1() const { return gamma1_; }
  bool is_zero() const { return poly_.is_zero(); }

  Complex operator()(Real x) const;

  // f * exp(d2 x^2 + d1 x)
  PolyGauss multiply_exp(Complex d2, Complex d1 = 0.0L) const;
  PolyGauss multiply_poly(const ComplexPoly& q) const;
  // Complex conjugate on the real line.
  PolyGauss conj() const;

  // Sums require equal exponents unless one operand is zero.
  friend PolyGauss operator+(const PolyGauss& f, const PolyGauss& g);
  friend PolyGauss operator-(const PolyGauss& f, const PolyGauss& g);
  friend PolyGauss operator*(Complex c, const PolyGauss& f);

 private:
  ComplexPoly poly_;
  Complex gamma2_;
  Complex gamma1_;
};

// Coefficient-wise distance; exponents must agree (else +inf).
Real max_coeff_diff(const PolyGauss& f, const PolyGauss& g);

class HoloGauss {
 public:
  HoloGauss() = default;
  // member_h, when set, declares membership of the Bargmann space with weight
  // exp(-|z|^2/2h); every derived value is then checked against |c2| < 1/4h.
  HoloGauss(ComplexPoly poly, Complex c2, Complex c1 = 0.0L,
            std::optional<Real> member_h = std::nullopt);

  const ComplexPoly& poly() const { return poly_; }
  Complex c2() const { return c2_; }
  Complex c1() const { return c1_; }
  std::optional<Real> member_h() const { return member_h_; }
  bool is_zero() const { return poly_.is_zero(); }

  Complex operator()(Complex z) const;

  HoloGauss with_membership(std::optional<Real> h) const;

  HoloGauss differentiate() const;
  HoloGauss multiply_by_z() const;
  // f * exp(d2 z^2 + d1 z)
  HoloGauss multiply_exp(Complex d2, Complex d1 = 0.0L) const;
  HoloGauss multiply(const HoloGauss& g) const;
  HoloGauss scale(Complex s) const;

  friend HoloGauss operator+(const HoloGauss& f, const HoloGauss& g);
  friend HoloGauss operator-(const HoloGauss& f, const HoloGauss& g);

 private:
  void check_membership() const;

  ComplexPoly poly_;
  Complex c2_ = 0.0L;
  Complex c1_ = 0.0L;
  std::optional<Real> member_h_;
};

Real max_coeff_diff(const HoloGauss& f, const HoloGauss& g);

// Sum of coeff * x^j (hD_x)^k with hD_x = -i h d/dx and j + k <= 2.
// Each term differentiates first and multiplies by x^j afterwards.
class DiffOp {
 public:
  using Key = std::pair<int, int>;  // (j, k)
  static constexpr int kMaxOrder = 2;

  explicit DiffOp(Real h) : h_(h) {}
  DiffOp(Real h, std::map<Key, Complex> terms);

  static DiffOp identity(Real h);
  static DiffOp x(Real h);
  static DiffOp hD(Real h);
  // d/dx = (i/h) hD
  static DiffOp d_dx(Real h);

  Real h() const { return h_; }
  const std::map<Key, Complex>& terms() const { return terms_; }
  Complex coeff(int j, int k) const;

  PolyGauss apply(const PolyGauss& f) const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(Complex c, const DiffOp& a);

 private:
  void add_term(int j, int k, Complex c);

  Real h_;
  std::map<Key, Complex> terms_;
};

// a o b
DiffOp compose(const DiffOp& a, const DiffOp& b);
Real max_coeff_diff(const DiffOp& a, const DiffOp& b);

PolyGauss apply_diffop(const DiffOp& op, const PolyGauss& f);

// Integral over R of exp(-rho^2 e^{2 i theta} t^2) dt = sqrt(pi) / (rho e^{i theta}).
Complex gauss_integral(Real rho, Real theta);

// Integral over R of x^k exp(g2 x^2 + g1 x), Re g2 < 0.
Complex gaussian_moment(Complex g2, Complex g1, int k);
// All moments 0..kmax at once.
std::vector<Complex> gaussian_moments(Complex g2, Complex g1, int kmax);

// (f, g) = integral of f conj(g) over R.
Complex inner_product_line(const PolyGauss& f, const PolyGauss& g);
Real norm_line(const PolyGauss& f);

}  // namespace blab
