#pragma once

// Certification suites: each runs a family of numerical checks and records
// measured value, tolerance and verdict per check.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blab/ellipse.hpp"
#include "blab/ncho.hpp"
#include "blab/phasecore.hpp"

namespace blab {

struct Check {
  std::string name;
  Real measured;
  Real tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params;
  std::vector<Check> checks;

  // measured <= tolerance; NaN fails.
  void add(std::string name, Real measured, Real tolerance);
  // Records a thrown error as a failed check.
  void fail(std::string name, const std::string& what);
  bool passed() const;
};

nlohmann::json to_json(const SuiteReport& r);

// Five phase sets: classic, (B, C, h) = (3, 1+2i, 0.5) and three more.
std::vector<PhaseParams> reference_phase_sets();

// Residuals n < N, Gram n < N (exact and quadrature), Rodrigues vs ladder,
// monomial Gram by 2D quadrature.
SuiteReport certify_hermite(const PhaseParams& p, int N);
// |(Tf, Tg) - (f, g)| on random pairs and the reproducing property at points.
SuiteReport certify_transform(const PhaseParams& p, int pairs, int points, std::uint64_t seed);
SuiteReport certify_ncho(const NchoParams& p, int N);
// psi norms and Gram by quadrature (m, n < N_quad), Psi residuals and bridge for n < N.
SuiteReport certify_ellipse(const EllipseParams& p, int N, int N_quad = 7);
SuiteReport certify_toeplitz(Real R, int N);
SuiteReport certify_gaussint(const std::vector<Real>& rhos, const std::vector<Real>& thetas);

}  // namespace blab
