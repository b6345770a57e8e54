#pragma once

// Quadrature grids over R and C ~ R^2. These are the independent oracles for
// every closed-form result in the library, so they never use the moment
// formulas from gaussalg.

#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "blab/scalar.hpp"

namespace blab {

enum class GridKind { GaussHermite1D, Tensor2D, TrapezoidTruncated, Polar2D };

std::string_view to_string(GridKind kind);

// 1D grids store real nodes in the real part. Weights absorb any Gaussian
// factor removed by the rule, so an integral is sum(weights[i] * F(nodes[i])).
struct QuadGrid {
  GridKind kind = GridKind::GaussHermite1D;
  std::vector<Complex> nodes;
  std::vector<Real> weights;
  // Nodes on the outermost ring; their weighted mass estimates truncation.
  std::vector<bool> outer;

  std::size_t size() const { return nodes.size(); }
  void validate() const;
};

struct QuadEstimate {
  Complex value;
  Real tail = 0;  // absolute weighted integrand mass on the outer ring

  // Throws TruncationError when tail > tol * max(1, |value|).
  const QuadEstimate& require(Real tol) const;
};

struct GridFunction {
  QuadGrid grid;
  std::vector<Complex> values;

  static GridFunction sample(QuadGrid grid, const std::function<Complex(Complex)>& f);
};

// Gauss-Hermite rule for weight exp(-t^2). scaled_weights[i] = weights[i] e^{t_i^2}.
struct GaussHermiteRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
  std::vector<Real> scaled_weights;
};
GaussHermiteRule gauss_hermite_rule(int n);

// Gauss-Legendre on [-1, 1].
std::pair<std::vector<Real>, std::vector<Real>> gauss_legendre_rule(int n);

// Nodes center + scale * t_i, weights scale * w_i e^{t_i^2}: integrates
// functions decaying like exp(-((x - center)/scale)^2) over R.
QuadGrid gauss_hermite_grid_1d(int n, Real center = 0, Real scale = 1);

// Exponent E(z) = zz z^2 + zbzb conj(z)^2 + zzb |z|^2 + lz z + lzb conj(z).
struct PlaneQuadratic {
  Complex zz = 0.0L;
  Complex zbzb = 0.0L;
  Complex zzb = 0.0L;
  Complex lz = 0.0L;
  Complex lzb = 0.0L;

  Complex operator()(Complex z) const;
  friend PlaneQuadratic operator+(const PlaneQuadratic& a, const PlaneQuadratic& b);
};

// True when Re E is negative definite (so exp(E) is integrable over C).
bool is_decaying(const PlaneQuadratic& exponent);

// Tensor Gauss-Hermite grid aligned with the principal axes of Re E and
// centered at its maximum; Re E must be negative definite.
QuadGrid gaussian_grid_2d(const PlaneQuadratic& exponent, int n = 120);

// Truncated trapezoid on the square |Re z - Re c|, |Im z - Im c| <= half_width.
QuadGrid trapezoid_grid_2d(Complex center, Real half_width, int n);

// Polar grid around 0: Gauss-Legendre panels between consecutive radii in
// `breaks` (first must be 0), trapezoid in angle.
QuadGrid polar_grid(std::vector<Real> breaks, int n_radial, int n_angular);

// Sum in a fixed pairwise order; bit-stable for a given input.
Complex pairwise_sum(std::span<const Complex> terms);

QuadEstimate integrate(const QuadGrid& grid, std::span<const Complex> values);
QuadEstimate integrate(const QuadGrid& grid, const std::function<Complex(Complex)>& f);
QuadEstimate integrate(const GridFunction& f);

// CSV: re(node),im(node),weight,re(value),im(value)
void write_grid_csv(std::ostream& os, const GridFunction& f);

}  // namespace blab
