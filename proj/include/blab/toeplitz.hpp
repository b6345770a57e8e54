#pragma once

// Berezin-Toeplitz quantization on the classical Bargmann space (h = 1) and
// the Daubechies localization eigenvalues of radial symbols
// b(x - i xi) = c(x^2 + xi^2).

#include <functional>
#include <iosfwd>
#include <limits>
#include <vector>

#include "blab/quadrature.hpp"
#include "blab/scalar.hpp"

namespace blab {

struct RadialSymbol {
  enum class Kind { Indicator, Smooth };

  Kind kind = Kind::Smooth;
  std::function<Real(Real)> c;  // profile c(s), s >= 0
  // c vanishes for s > support
  Real support = std::numeric_limits<Real>::infinity();

  // c(2s) = 1 for s <= R, so the symbol is the disk |z|^2 <= 2R.
  static RadialSymbol indicator(Real R);
  static RadialSymbol smooth(std::function<Real(Real)> c,
                             Real support = std::numeric_limits<Real>::infinity());
  static RadialSymbol constant(Real v);

  Real operator()(Complex z) const { return c(std::norm(z)); }
};

// a(x, xi) = (1/pi) * integral of e^{-(x-y)^2 - (xi-eta)^2} b(y - i eta), with
// the grid laid over the node variable w = y - i eta.
Real symbol_convolve(const std::function<Real(Complex)>& b, Real x, Real xi, const QuadGrid& grid,
                     Real tail_tol = 1e-10L);
// Gauss-Hermite grid matched to the kernel at (x, xi).
QuadGrid convolve_grid(Real x, Real xi, int n = 80);

// (1/n!) * integral over s > 0 of c(2s) s^n e^{-s}
Real radial_eigenvalue(const RadialSymbol& sym, int n);

// e^{-R} sum_{k > n} R^k / k!
Real disk_eigenvalue(Real R, int n);

// R = -log(1 - lambda0)
Real radius_from_groundstate(Real lambda0);

// Polar grid for matrix elements up to index n_max; radial panels split at
// the indicator edge.
QuadGrid toeplitz_grid(const RadialSymbol& sym, int n_max, int n_radial = 64, int n_angular = 64);

// (b varphi_m, varphi_n) in L^2(C, e^{-|z|^2/2}), varphi_n = z^n / sqrt(pi 2^{n+1} n!).
Complex toeplitz_matrix_quad(const RadialSymbol& sym, int m, int n, const QuadGrid& grid,
                             Real tail_tol = 1e-10L);

struct SpectrumRow {
  int n;
  Real lambda_formula;
  Real lambda_quadrature;
  Real abs_diff;
};

// Disk formula against the radial integral, n = 0..count-1.
std::vector<SpectrumRow> disk_spectrum(Real R, int count);
// n,lambda_formula,lambda_quadrature,abs_diff
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

}  // namespace blab
