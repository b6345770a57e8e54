#include "blab/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "blab/parallel.hpp"

namespace blab {

RadialSymbol RadialSymbol::indicator(Real R) {
  if (!(R > 0)) throw DomainError("indicator: R must be positive");
  const Real edge = 2 * R;
  return {Kind::Indicator, [edge](Real s) { return s <= edge ? 1.0L : 0.0L; }, edge};
}

RadialSymbol RadialSymbol::smooth(std::function<Real(Real)> c, Real support) {
  if (!c) throw DomainError("smooth symbol needs a profile");
  return {Kind::Smooth, std::move(c), support};
}

RadialSymbol RadialSymbol::constant(Real v) {
  return smooth([v](Real) { return v; });
}

QuadGrid convolve_grid(Real x, Real xi, int n) {
  PlaneQuadratic e;
  // -|w - z0|^2 with z0 = x - i xi
  const Complex z0(x, -xi);
  e.zzb = -1.0L;
  e.lz = std::conj(z0);
  e.lzb = z0;
  return gaussian_grid_2d(e, n);
}

Real symbol_convolve(const std::function<Real(Complex)>& b, Real x, Real xi, const QuadGrid& grid,
                     Real tail_tol) {
  const Complex z0(x, -xi);
  const auto est = integrate(grid, [&](Complex w) {
    return Complex(std::exp(-std::norm(w - z0)) * b(w) / kPi);
  });
  est.require(tail_tol);
  return est.value.real();
}

Real radial_eigenvalue(const RadialSymbol& sym, int n) {
  if (n < 0) throw DomainError("radial_eigenvalue: n must be nonnegative");
  using boost::math::quadrature::gauss_kronrod;
  const Real lg = std::lgamma(static_cast<Real>(n) + 1);
  auto f = [&](Real s) -> Real {
    if (s <= 0) return n == 0 ? sym.c(0) : 0.0L;
    return sym.c(2 * s) * std::exp(n * std::log(s) - s - lg);
  };
  // s^n e^{-s} peaks at s = n; split there so each panel is unimodal.
  const Real end = sym.support / 2;
  std::vector<Real> cuts{0};
  const Real peak = static_cast<Real>(n);
  if (peak > 0 && peak < end) cuts.push_back(peak);
  const Real far = peak + 60 + 10 * std::sqrt(peak + 1);
  if (far < end) cuts.push_back(far);
  cuts.push_back(std::min(end, std::numeric_limits<Real>::infinity()));

  Real total = 0, err_total = 0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    Real err = 0;
    total += gauss_kronrod<Real, 61>::integrate(f, cuts[i - 1], cuts[i], 15, 1e-15L, &err);
    err_total += err;
  }
  if (!std::isfinite(total)) throw DomainError("radial_eigenvalue: integral diverges");
  if (err_total > 1e-10L) throw TruncationError("radial_eigenvalue: error estimate above 1e-10");
  return total;
}

Real disk_eigenvalue(Real R, int n) {
  if (!(R > 0)) throw DomainError("disk_eigenvalue: R must be positive");
  if (n < 0) throw DomainError("disk_eigenvalue: n must be nonnegative");
  if (n + 1 > R) {
    // Tail terms decrease from k = n + 1 on; sum them directly.
    int k = n + 1;
    Real term = std::exp(k * std::log(R) - R - std::lgamma(static_cast<Real>(k) + 1));
    Real sum = 0;
    while (term > sum * std::numeric_limits<Real>::epsilon() / 4 && term > 0) {
      sum += term;
      ++k;
      term *= R / k;
    }
    return sum;
  }
  // 1 - e^{-R} sum_{k <= n} R^k/k!, Neumaier-compensated.
  Real term = std::exp(-R), sum = term, comp = 0;
  for (int k = 1; k <= n; ++k) {
    term *= R / k;
    const Real t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return 1 - (sum + comp);
}

Real radius_from_groundstate(Real lambda0) {
  if (!(lambda0 > 0 && lambda0 < 1)) {
    throw DomainError("radius_from_groundstate: lambda0 must lie in (0, 1)");
  }
  return -std::log1p(-lambda0);
}

QuadGrid toeplitz_grid(const RadialSymbol& sym, int n_max, int n_radial, int n_angular) {
  if (n_max < 0) throw DomainError("toeplitz_grid: n_max must be nonnegative");
  // r^{2n} e^{-r^2/2} is below 1e-20 of its peak once r^2/2 > 2 n_max + 60.
  const Real rmax = std::sqrt(2 * (2.0L * n_max + 60));
  std::vector<Real> breaks{0};
  const Real edge = std::sqrt(sym.support);
  if (sym.kind == RadialSymbol::Kind::Indicator && edge < rmax) breaks.push_back(edge);
  breaks.push_back(rmax);
  return polar_grid(std::move(breaks), n_radial, n_angular);
}

Complex toeplitz_matrix_quad(const RadialSymbol& sym, int m, int n, const QuadGrid& grid,
                             Real tail_tol) {
  if (m < 0 || n < 0) throw DomainError("toeplitz_matrix_quad: negative index");
  if (std::max(m, n) > 64) throw DegreeOverflow("toeplitz_matrix_quad: index above degree cap");
  auto norm = [](int k) {
    return std::sqrt(kPi * std::pow(2.0L, k + 1) * std::tgamma(static_cast<Real>(k) + 1));
  };
  const Real nm = norm(m) * norm(n);
  const auto est = integrate(grid, [&](Complex z) {
    return sym(z) * std::pow(z, m) * std::pow(std::conj(z), n) * std::exp(-std::norm(z) / 2) / nm;
  });
  est.require(tail_tol);
  return est.value;
}

std::vector<SpectrumRow> disk_spectrum(Real R, int count) {
  const RadialSymbol sym = RadialSymbol::indicator(R);
  std::vector<SpectrumRow> rows(static_cast<std::size_t>(std::max(count, 0)));
  parallel_for(rows.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    const Real f = disk_eigenvalue(R, n);
    const Real q = radial_eigenvalue(sym, n);
    rows[i] = {n, f, q, std::abs(f - q)};
  });
  return rows;
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "n,lambda_formula,lambda_quadrature,abs_diff\n" << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.n << ',' << static_cast<double>(r.lambda_formula) << ','
       << static_cast<double>(r.lambda_quadrature) << ',' << static_cast<double>(r.abs_diff)
       << '\n';
  }
}

}  // namespace blab
