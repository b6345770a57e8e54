#include "blab/hermite.hpp"

#include <cmath>
#include <mutex>

#include "blab/bargmann.hpp"
#include "blab/parallel.hpp"
#include "blab/quadrature.hpp"

namespace blab {

Real identity_deviation(const ComplexMatrix& G) {
  Real m = 0;
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      m = std::max(m, std::abs(G(i, j) - Complex(i == j ? 1 : 0)));
    }
  }
  return m;
}

nlohmann::json to_json(const std::vector<EigenRecord>& records) {
  auto out = nlohmann::json::array();
  for (const auto& r : records) {
    out.push_back({{"n", r.n},
                   {"eigenvalue", static_cast<double>(r.eigenvalue)},
                   {"residual", static_cast<double>(r.residual)}});
  }
  return out;
}

HermiteSystem::HermiteSystem(const PhaseParams& p)
    : params_(PhaseParams::canonical(p.B, p.C, p.h)),
      original_A_(p.A),
      cache_(std::make_shared<Cache>()) {}

Real HermiteSystem::level_spacing_half() const {
  return params_.h * params_.C.imag() / std::norm(params_.B);
}

Real HermiteSystem::eigenvalue(int n) const {
  return level_spacing_half() * (2 * n + 1);
}

HoloGauss HermiteSystem::monomial_basis(int n) const {
  if (n < 0) throw DomainError("monomial_basis: n must be nonnegative");
  const Real h = params_.h;
  const Real imc = params_.C.imag();
  const Complex ratio = params_.B / std::sqrt(2.0L * h * imc);
  const Real norm0 = std::abs(params_.B) / std::sqrt(2.0L * kPi * h * imc);
  const Complex c = norm0 * std::pow(ratio, n) / std::sqrt(std::tgamma(static_cast<Real>(n) + 1));
  return HoloGauss(ComplexPoly::monomial(n, c), 0.0L, 0.0L);
}

PolyGauss HermiteSystem::hermite_phi(int n) const {
  if (n < 0) throw DomainError("hermite_phi: n must be nonnegative");
  if (n > ComplexPoly::kDegreeCap) {
    throw DegreeOverflow("hermite_phi: n exceeds the degree cap");
  }
  {
    std::shared_lock lock(cache_->mu);
    const auto it = cache_->phi.find(n);
    if (it != cache_->phi.end()) return it->second;
  }
  const Real h = params_.h;
  const Real imc = params_.C.imag();
  const Real rec = params_.C.real();
  const DiffOp hD = DiffOp::hD(h);
  PolyGauss g(ComplexPoly::constant(1.0L), -imc / h);
  for (int k = 0; k < n; ++k) g = hD.apply(g);
  const Real lead = std::pow(imc / (kPi * h), 0.25L) /
                    std::sqrt(std::tgamma(static_cast<Real>(n) + 1)) *
                    std::pow(-1.0L / std::sqrt(2.0L * h * imc), n);
  PolyGauss phi = (Complex(lead) * g).multiply_exp((-kI * rec + imc) / (2.0L * h));

  std::unique_lock lock(cache_->mu);
  return cache_->phi.emplace(n, std::move(phi)).first->second;
}

PolyGauss HermiteSystem::hermite_phi_ladder(int n) const {
  if (n < 0) throw DomainError("hermite_phi_ladder: n must be nonnegative");
  const Real h = params_.h;
  const Real imc = params_.C.imag();
  const DiffOp Pstar = ladder_ops().Pstar;
  PolyGauss phi(ComplexPoly::constant(std::pow(imc / (kPi * h), 0.25L)),
                -kI * std::conj(params_.C) / (2.0L * h));
  for (int k = 0; k < n; ++k) {
    const Complex step = params_.B / std::sqrt(2.0L * h * imc * (k + 1));
    phi = step * Pstar.apply(phi);
  }
  return phi;
}

LadderOps HermiteSystem::ladder_ops() const {
  const Real h = params_.h;
  const Complex B = params_.B;
  const Complex C = params_.C;
  const DiffOp hD = DiffOp::hD(h);
  const DiffOp x = DiffOp::x(h);
  const DiffOp id = DiffOp::identity(h);
  DiffOp P = (-1.0L / std::conj(B)) * (hD + std::conj(C) * x);
  DiffOp Pstar = (-1.0L / B) * (hD + C * x);
  // Op^W(x xi) = x hD + h/(2i)
  const DiffOp weyl_x_xi = compose(x, hD) + (h / (2.0L * kI)) * id;
  DiffOp H = Complex(1.0L / std::norm(B)) *
             (compose(hD, hD) + Complex(std::norm(C)) * compose(x, x) +
              (C + std::conj(C)) * weyl_x_xi);
  return {std::move(P), std::move(Pstar), std::move(H)};
}

Real HermiteSystem::eigen_residual(int n) const {
  const PolyGauss phi = hermite_phi(n);
  const PolyGauss r = ladder_ops().H.apply(phi) - Complex(eigenvalue(n)) * phi;
  return norm_line(r) / norm_line(phi);
}

std::vector<EigenRecord> HermiteSystem::eigen_report(int count) const {
  std::vector<EigenRecord> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) hermite_phi(n);  // warm the cache in order
  parallel_for(out.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    out[i] = {n, eigenvalue(n), eigen_residual(n)};
  });
  return out;
}

ComplexMatrix HermiteSystem::gram_matrix(int N, GramMethod method) const {
  if (N < 1) throw DomainError("gram_matrix: N must be positive");
  std::vector<PolyGauss> phis;
  for (int n = 0; n < N; ++n) phis.push_back(hermite_phi(n));
  ComplexMatrix G(N, N);
  if (method == GramMethod::Exact) {
    parallel_for(static_cast<std::size_t>(N) * N, [&](std::size_t k) {
      const int i = static_cast<int>(k) / N, j = static_cast<int>(k) % N;
      G(i, j) = inner_product_line(phis[i], phis[j]);
    });
    return G;
  }
  // |phi_n|^2 decays like exp(-Im C x^2 / h).
  const QuadGrid grid = gauss_hermite_grid_1d(200, 0, std::sqrt(params_.h / params_.C.imag()));
  std::vector<std::vector<Complex>> vals(N, std::vector<Complex>(grid.size()));
  for (int n = 0; n < N; ++n) {
    for (std::size_t q = 0; q < grid.size(); ++q) vals[n][q] = phis[n](grid.nodes[q].real());
  }
  parallel_for(static_cast<std::size_t>(N) * N, [&](std::size_t k) {
    const int i = static_cast<int>(k) / N, j = static_cast<int>(k) % N;
    std::vector<Complex> prod(grid.size());
    for (std::size_t q = 0; q < grid.size(); ++q) prod[q] = vals[i][q] * std::conj(vals[j][q]);
    G(i, j) = integrate(grid, prod).value;
  });
  return G;
}

ComplexMatrix HermiteSystem::monomial_gram_quad(int N, int nodes) const {
  if (N < 1) throw DomainError("monomial_gram_quad: N must be positive");
  const QuadGrid grid = weight_grid(params_, nodes);
  const PlaneQuadratic w = weight_exponent(params_);
  std::vector<Complex> weight(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) weight[q] = std::exp(w(grid.nodes[q]));
  std::vector<std::vector<Complex>> vals(N, std::vector<Complex>(grid.size()));
  for (int n = 0; n < N; ++n) {
    const HoloGauss v = monomial_basis(n);
    for (std::size_t q = 0; q < grid.size(); ++q) vals[n][q] = v(grid.nodes[q]);
  }
  ComplexMatrix G(N, N);
  parallel_for(static_cast<std::size_t>(N) * N, [&](std::size_t k) {
    const int i = static_cast<int>(k) / N, j = static_cast<int>(k) % N;
    std::vector<Complex> prod(grid.size());
    for (std::size_t q = 0; q < grid.size(); ++q) {
      prod[q] = vals[i][q] * std::conj(vals[j][q]) * weight[q];
    }
    G(i, j) = integrate(grid, prod).require(kDefaultTailTol).value;
  });
  return G;
}

}  // namespace blab
