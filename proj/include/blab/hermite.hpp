#pragma once

// Generalized Hermite functions phi_n = T_h^* varphi_n, the monomial basis
// varphi_n of H_Phi, the ladder operators P, P* and the modified oscillator
// H = P*P + h Im C / |B|^2.

#include <map>
#include <memory>
#include <shared_mutex>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "blab/gaussalg.hpp"
#include "blab/phasecore.hpp"

namespace blab {

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// max |G - I| entrywise
Real identity_deviation(const ComplexMatrix& G);

struct LadderOps {
  DiffOp P;
  DiffOp Pstar;
  DiffOp H;
};

enum class GramMethod { Exact, Quadrature };

struct EigenRecord {
  int n;
  Real eigenvalue;
  Real residual;
};

nlohmann::json to_json(const std::vector<EigenRecord>& records);

class HermiteSystem {
 public:
  // A is replaced by canonical_A(B, C); the input A is kept for reference.
  explicit HermiteSystem(const PhaseParams& p);

  const PhaseParams& params() const { return params_; }
  Complex original_A() const { return original_A_; }
  Real h() const { return params_.h; }

  // h Im C / |B|^2
  Real level_spacing_half() const;
  // (h Im C / |B|^2)(2n + 1)
  Real eigenvalue(int n) const;

  // (|B| / sqrt(2 pi h Im C)) (B z / sqrt(2 h Im C))^n / sqrt(n!)
  HoloGauss monomial_basis(int n) const;

  // Rodrigues formula; cached.
  PolyGauss hermite_phi(int n) const;
  // (1/sqrt(n!)) (B / sqrt(2h Im C))^n (P*)^n phi_0, built step by step.
  PolyGauss hermite_phi_ladder(int n) const;

  LadderOps ladder_ops() const;

  // ||H phi_n - mu_n phi_n|| / ||phi_n|| in exact arithmetic.
  Real eigen_residual(int n) const;
  std::vector<EigenRecord> eigen_report(int count) const;

  // Gram matrix of phi_0..phi_{N-1}.
  ComplexMatrix gram_matrix(int N, GramMethod method) const;
  // Gram matrix of varphi_0..varphi_{N-1} in H_Phi by 2D quadrature.
  ComplexMatrix monomial_gram_quad(int N, int nodes = 120) const;

 private:
  struct Cache {
    std::shared_mutex mu;
    std::map<int, PolyGauss> phi;
  };

  PhaseParams params_;
  Complex original_A_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace blab
