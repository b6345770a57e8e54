#pragma once

// The commutative non-commutative harmonic oscillator
//   Q_alpha = (alpha/2) I Op(xi^2 + x^2) + J Op(i x xi),  J = [[0,-1],[1,0]],
// which the constant unitary U = (1/sqrt 2)[[1,-i],[1,i]] splits into two
// modified oscillators H_{alpha,+} and H_{alpha,-}.

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "blab/gaussalg.hpp"
#include "blab/hermite.hpp"
#include "blab/phasecore.hpp"

namespace blab {

enum class Sign { Plus, Minus };

inline Real sign_value(Sign s) { return s == Sign::Plus ? 1.0L : -1.0L; }
std::string_view to_string(Sign s);

struct NchoParams {
  Real alpha = 2;
  Real h = 1;

  // alpha > 1, h > 0
  static NchoParams make(Real alpha, Real h);
};

struct VecFun2 {
  PolyGauss upper;
  PolyGauss lower;

  bool is_zero() const { return upper.is_zero() && lower.is_zero(); }

  friend VecFun2 operator+(const VecFun2& f, const VecFun2& g);
  friend VecFun2 operator-(const VecFun2& f, const VecFun2& g);
  friend VecFun2 operator*(Complex c, const VecFun2& f);
};

// Sum of the component inner products.
Complex inner_product_vec(const VecFun2& f, const VecFun2& g);
Real norm_vec(const VecFun2& f);
Real max_coeff_diff(const VecFun2& f, const VecFun2& g);

// (+-1 + i sqrt(alpha^2 - 1)) / alpha
Complex nu(const NchoParams& p, Sign s);

// Scalar Rodrigues factor h_{alpha,n}.
PolyGauss h_alpha(const NchoParams& p, int n);

// h_{alpha,n} e^{-+ i x^2 / 2 alpha h} (1, +-i) / sqrt 2
VecFun2 eigenfunction_vec(const NchoParams& p, Sign s, int n);

// (sqrt(alpha^2 - 1) / 2) h (2n + 1)
Real ncho_eigenvalue(const NchoParams& p, int n);

VecFun2 apply_Q(const NchoParams& p, const VecFun2& F);

// Scalar blocks (alpha/2) Op(xi^2 + x^2) +- Op(x xi).
DiffOp H_pm(const NchoParams& p, Sign s);

// U F, and U* F.
VecFun2 apply_U(const VecFun2& F);
VecFun2 apply_Ustar(const VecFun2& F);

// Phase parameters B = sqrt(2/alpha) nu, C = nu (canonical A).
PhaseParams bridge(const NchoParams& p, Sign s);

struct SpectrumEntry {
  Sign sign;
  int n;
  Real lambda;
  Real residual;
};

// Both signs, n = 0..N-1, ordered by (n, sign).
std::vector<SpectrumEntry> spectrum_check(const NchoParams& p, int N);

// Gram of {Phi_{+,n}} then {Phi_{-,n}}, n < N.
ComplexMatrix combined_gram(const NchoParams& p, int N);

nlohmann::json spectrum_report(const NchoParams& p, const std::vector<SpectrumEntry>& entries);

}  // namespace blab
