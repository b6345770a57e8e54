#include "blab/certify.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "blab/bargmann.hpp"
#include "blab/hermite.hpp"
#include "blab/quadrature.hpp"
#include "blab/toeplitz.hpp"

namespace blab {

namespace {

std::string indexed(const std::string& base, int n) { return base + "[" + std::to_string(n) + "]"; }

std::string indexed(const std::string& base, int m, int n) {
  return base + "[" + std::to_string(m) + "," + std::to_string(n) + "]";
}

// Random p(x) e^{g2 x^2 + g1 x} with deg p <= 3.
PolyGauss random_polygauss(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0, 1);
  std::vector<Complex> c;
  const int deg = static_cast<int>(ud(rng) * 4);
  for (int k = 0; k <= deg; ++k) c.emplace_back(nd(rng), nd(rng));
  const Complex g2(-0.3 - 1.2 * ud(rng), 2 * ud(rng) - 1);
  const Complex g1(0.6 * nd(rng), 0.6 * nd(rng));
  return PolyGauss(ComplexPoly(std::move(c)), g2, g1);
}

Real relative(Real measured, Real expected) { return std::abs(measured - expected) / std::abs(expected); }

}  // namespace

void SuiteReport::add(std::string name, Real measured, Real tolerance) {
  checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
}

void SuiteReport::fail(std::string name, const std::string& what) {
  checks.push_back({std::move(name) + ": " + what, std::numeric_limits<Real>::quiet_NaN(), 0, false});
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["params"] = r.params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json m = std::isfinite(c.measured) ? nlohmann::json(static_cast<double>(c.measured))
                                                 : nlohmann::json(nullptr);
    j["checks"].push_back({{"name", c.name},
                           {"measured", m},
                           {"tolerance", static_cast<double>(c.tolerance)},
                           {"pass", c.pass}});
  }
  return j;
}

std::vector<PhaseParams> reference_phase_sets() {
  return {
      PhaseParams::classic(1),
      PhaseParams::make(0.0L, 3.0L, Complex(1, 2), 0.5L),
      PhaseParams::make(Complex(0.3L, -0.2L), Complex(1, 1), Complex(0.5L, 0.8L), 1.0L),
      PhaseParams::make(Complex(-1, 0.5L), Complex(0, -2), Complex(-1, 1.5L), 0.7L),
      PhaseParams::make(Complex(0.2L, 0.1L), Complex(0.6L, -0.4L), Complex(2, 0.5L), 2.0L),
  };
}

SuiteReport certify_hermite(const PhaseParams& p, int N) {
  SuiteReport r{"hermite", p, {}};
  r.params["n"] = N;
  try {
    const HermiteSystem sys(p);
    for (const auto& e : sys.eigen_report(N)) r.add(indexed("residual", e.n), e.residual, 1e-10L);
    r.add("gram_exact_deviation", identity_deviation(sys.gram_matrix(N, GramMethod::Exact)), 1e-10L);
    r.add("gram_quadrature_deviation",
          identity_deviation(sys.gram_matrix(N, GramMethod::Quadrature)), 1e-6L);
    Real ladder = 0;
    for (int n = 0; n < N; ++n) {
      ladder = std::max(ladder, max_coeff_diff(sys.hermite_phi(n), sys.hermite_phi_ladder(n)));
    }
    r.add("rodrigues_vs_ladder", ladder, 1e-10L);
    r.add("monomial_gram_deviation", identity_deviation(sys.monomial_gram_quad(std::min(N, 11))),
          1e-6L);
  } catch (const std::exception& e) {
    r.fail("hermite", e.what());
  }
  return r;
}

SuiteReport certify_transform(const PhaseParams& p, int pairs, int points, std::uint64_t seed) {
  SuiteReport r{"transform", p, {}};
  r.params["pairs"] = pairs;
  r.params["points"] = points;
  r.params["seed"] = seed;
  std::mt19937_64 rng(seed);
  try {
    Real worst = 0;
    for (int k = 0; k < pairs; ++k) {
      const PolyGauss f = random_polygauss(rng);
      const PolyGauss g = random_polygauss(rng);
      const Complex lhs = inner_product_HPhi(p, transform(p, f), transform(p, g)).value;
      worst = std::max(worst, std::abs(lhs - inner_product_line(f, g)));
    }
    r.add("unitarity_max_abs", worst, 1e-6L);

    const HoloGauss U = transform(p, random_polygauss(rng));
    // Envelope of |U| e^{-Phi/h}.
    PlaneQuadratic e = weight_exponent(p);
    e.zz = (e.zz + U.c2()) / 2.0L;
    e.zbzb = (e.zbzb + std::conj(U.c2())) / 2.0L;
    e.zzb = e.zzb / 2.0L;
    e.lz = U.c1() / 2.0L;
    e.lzb = std::conj(U.c1()) / 2.0L;
    const GridFunction G = GridFunction::sample(gaussian_grid_2d(e, 160), [&](Complex z) { return U(z); });
    std::uniform_real_distribution<double> ud(-1, 1);
    Real repro = 0;
    for (int k = 0; k < points; ++k) {
      const Complex z(ud(rng), ud(rng));
      repro = std::max(repro, std::abs(projector_apply(p, G, z).value - U(z)));
    }
    r.add("reproducing_max_abs", repro, 1e-6L);
  } catch (const std::exception& e) {
    r.fail("transform", e.what());
  }
  return r;
}

SuiteReport certify_ncho(const NchoParams& p, int N) {
  SuiteReport r{"ncho", {{"alpha", static_cast<double>(p.alpha)}, {"h", static_cast<double>(p.h)}}, {}};
  r.params["n"] = N;
  try {
    for (const auto& e : spectrum_check(p, N)) {
      r.add(indexed(std::string("residual") + std::string(to_string(e.sign)), e.n), e.residual, 1e-10L);
    }
    r.add("combined_gram_deviation", identity_deviation(combined_gram(p, N)), 1e-10L);
  } catch (const std::exception& e) {
    r.fail("ncho", e.what());
  }
  return r;
}

SuiteReport certify_ellipse(const EllipseParams& p, int N, int N_quad) {
  SuiteReport r{"ellipse",
                {{"alpha", static_cast<double>(p.alpha)}, {"beta", static_cast<double>(p.beta)}},
                {}};
  r.params["n"] = N;
  try {
    const ComplexMatrix G = psi_gram_quad(p, N_quad);
    for (int m = 0; m < N_quad; ++m) {
      for (int n = 0; n < N_quad; ++n) {
        const Real scale = std::sqrt(psi_norm_sq(p, m) * psi_norm_sq(p, n));
        if (m == n) {
          r.add(indexed("psi_norm_rel", n), relative(G(n, n).real(), psi_norm_sq(p, n)), 1e-4L);
        } else {
          r.add(indexed("psi_offdiag_rel", m, n), std::abs(G(m, n)) / scale, 1e-4L);
        }
      }
    }
    for (const auto& e : Psi_eigen_report(p, N)) r.add(indexed("Psi_residual", e.n), e.residual, 1e-10L);
    for (int n = 0; n < N; ++n) {
      r.add(indexed("bridge_collinearity", n), bridge_collinearity_defect(p, n), 1e-10L);
    }
  } catch (const std::exception& e) {
    r.fail("ellipse", e.what());
  }
  return r;
}

SuiteReport certify_toeplitz(Real R, int N) {
  SuiteReport r{"toeplitz", {{"R", static_cast<double>(R)}, {"n", N}}, {}};
  try {
    for (const auto& row : disk_spectrum(R, N)) r.add(indexed("disk_vs_radial", row.n), row.abs_diff, 1e-10L);
    const RadialSymbol sym = RadialSymbol::indicator(R);
    const QuadGrid grid = toeplitz_grid(sym, N);
    Real off = 0, diag = 0;
    for (int m = 0; m < N; ++m) {
      for (int n = 0; n < N; ++n) {
        const Complex t = toeplitz_matrix_quad(sym, m, n, grid);
        if (m == n) {
          diag = std::max(diag, std::abs(t - Complex(disk_eigenvalue(R, n))));
        } else {
          off = std::max(off, std::abs(t));
        }
      }
    }
    r.add("toeplitz_offdiag_max", off, 1e-6L);
    r.add("toeplitz_diag_max", diag, 1e-5L);
    r.add("radius_roundtrip", std::abs(radius_from_groundstate(disk_eigenvalue(R, 0)) - R), 1e-12L);
  } catch (const std::exception& e) {
    r.fail("toeplitz", e.what());
  }
  return r;
}

SuiteReport certify_gaussint(const std::vector<Real>& rhos, const std::vector<Real>& thetas) {
  using boost::math::quadrature::gauss_kronrod;
  SuiteReport r{"gaussint", {{"rho", rhos}, {"theta", thetas}}, {}};
  try {
    for (Real rho : rhos) {
      for (Real th : thetas) {
        const Complex w = rho * rho * std::exp(2.0L * kI * th);
        auto re = [&](Real t) { return std::exp(-w * t * t).real(); };
        auto im = [&](Real t) { return std::exp(-w * t * t).imag(); };
        const Real inf = std::numeric_limits<Real>::infinity();
        const Complex q(2 * gauss_kronrod<Real, 61>::integrate(re, 0, inf, 20, 1e-16L),
                        2 * gauss_kronrod<Real, 61>::integrate(im, 0, inf, 20, 1e-16L));
        const Complex exact = gauss_integral(rho, th);
        r.add("rel_err[rho=" + std::to_string(static_cast<double>(rho)) +
                  ",theta=" + std::to_string(static_cast<double>(th)) + "]",
              std::abs(q - exact) / std::abs(exact), 1e-8L);
      }
    }
  } catch (const std::exception& e) {
    r.fail("gaussint", e.what());
  }
  return r;
}

}  // namespace blab
