#include "blab/ncho.hpp"

#include <cmath>

#include "blab/parallel.hpp"

namespace blab {

namespace {

Real root(const NchoParams& p) { return std::sqrt(p.alpha * p.alpha - 1.0L); }

// Op(x xi) = x hD + h/(2i)
DiffOp weyl_x_xi(Real h) {
  return compose(DiffOp::x(h), DiffOp::hD(h)) + (h / (2.0L * kI)) * DiffOp::identity(h);
}

}  // namespace

std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

NchoParams NchoParams::make(Real alpha, Real h) {
  if (!(alpha > 1)) throw DomainError("ncho: alpha must exceed 1");
  if (!(h > 0)) throw DomainError("ncho: h must be positive");
  return {alpha, h};
}

VecFun2 operator+(const VecFun2& f, const VecFun2& g) {
  return {f.upper + g.upper, f.lower + g.lower};
}

VecFun2 operator-(const VecFun2& f, const VecFun2& g) {
  return {f.upper - g.upper, f.lower - g.lower};
}

VecFun2 operator*(Complex c, const VecFun2& f) { return {c * f.upper, c * f.lower}; }

Complex inner_product_vec(const VecFun2& f, const VecFun2& g) {
  return inner_product_line(f.upper, g.upper) + inner_product_line(f.lower, g.lower);
}

Real norm_vec(const VecFun2& f) {
  return std::sqrt(std::max(inner_product_vec(f, f).real(), 0.0L));
}

Real max_coeff_diff(const VecFun2& f, const VecFun2& g) {
  return std::max(max_coeff_diff(f.upper, g.upper), max_coeff_diff(f.lower, g.lower));
}

Complex nu(const NchoParams& p, Sign s) {
  if (!(p.alpha > 1)) throw DomainError("nu: alpha must exceed 1");
  return Complex(sign_value(s), root(p)) / p.alpha;
}

PolyGauss h_alpha(const NchoParams& p, int n) {
  if (n < 0) throw DomainError("h_alpha: n must be nonnegative");
  if (n > ComplexPoly::kDegreeCap) throw DegreeOverflow("h_alpha: n exceeds the degree cap");
  const Real h = p.h;
  const Real k = root(p) / p.alpha;
  const DiffOp hD = DiffOp::hD(h);
  PolyGauss g(ComplexPoly::constant(1.0L), -k / h);
  for (int j = 0; j < n; ++j) g = hD.apply(g);
  const Real lead = std::pow(k / (kPi * h), 0.25L) /
                    std::sqrt(std::tgamma(static_cast<Real>(n) + 1)) *
                    std::pow(-std::sqrt(p.alpha / (2.0L * root(p) * h)), n);
  return (Complex(lead) * g).multiply_exp(k / (2.0L * h));
}

VecFun2 eigenfunction_vec(const NchoParams& p, Sign s, int n) {
  const Real sg = sign_value(s);
  const PolyGauss g =
      (Complex(1.0L / std::sqrt(2.0L)) * h_alpha(p, n))
          .multiply_exp(-sg * kI / (2.0L * p.alpha * p.h));
  return {g, sg * kI * g};
}

Real ncho_eigenvalue(const NchoParams& p, int n) {
  return root(p) / 2.0L * p.h * (2 * n + 1);
}

VecFun2 apply_Q(const NchoParams& p, const VecFun2& F) {
  const Real h = p.h;
  const DiffOp D0 = Complex(p.alpha / 2.0L) *
                    (compose(DiffOp::hD(h), DiffOp::hD(h)) + compose(DiffOp::x(h), DiffOp::x(h)));
  // Op(i x xi)
  const DiffOp K = kI * weyl_x_xi(h);
  return {D0.apply(F.upper) - K.apply(F.lower), D0.apply(F.lower) + K.apply(F.upper)};
}

DiffOp H_pm(const NchoParams& p, Sign s) {
  const Real h = p.h;
  return Complex(p.alpha / 2.0L) *
             (compose(DiffOp::hD(h), DiffOp::hD(h)) + compose(DiffOp::x(h), DiffOp::x(h))) +
         Complex(sign_value(s)) * weyl_x_xi(h);
}

VecFun2 apply_U(const VecFun2& F) {
  const Complex r = 1.0L / std::sqrt(2.0L);
  return {r * (F.upper - kI * F.lower), r * (F.upper + kI * F.lower)};
}

VecFun2 apply_Ustar(const VecFun2& F) {
  const Complex r = 1.0L / std::sqrt(2.0L);
  return {r * (F.upper + F.lower), r * (kI * F.upper - kI * F.lower)};
}

PhaseParams bridge(const NchoParams& p, Sign s) {
  const Complex v = nu(p, s);
  return PhaseParams::canonical(std::sqrt(2.0L / p.alpha) * v, v, p.h);
}

std::vector<SpectrumEntry> spectrum_check(const NchoParams& p, int N) {
  if (N < 1) throw DomainError("spectrum_check: N must be positive");
  std::vector<SpectrumEntry> out(2 * static_cast<std::size_t>(N));
  parallel_for(out.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i / 2);
    const Sign s = i % 2 == 0 ? Sign::Plus : Sign::Minus;
    const Real mu = ncho_eigenvalue(p, n);
    const VecFun2 F = eigenfunction_vec(p, s, n);
    const Real res = norm_vec(apply_Q(p, F) - Complex(mu) * F) / norm_vec(F);
    out[i] = {s, n, mu, res};
  });
  return out;
}

ComplexMatrix combined_gram(const NchoParams& p, int N) {
  if (N < 1) throw DomainError("combined_gram: N must be positive");
  std::vector<VecFun2> fs;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (int n = 0; n < N; ++n) fs.push_back(eigenfunction_vec(p, s, n));
  }
  const int M = 2 * N;
  ComplexMatrix G(M, M);
  parallel_for(static_cast<std::size_t>(M) * M, [&](std::size_t k) {
    const int i = static_cast<int>(k) / M, j = static_cast<int>(k) % M;
    G(i, j) = inner_product_vec(fs[i], fs[j]);
  });
  return G;
}

nlohmann::json spectrum_report(const NchoParams& p, const std::vector<SpectrumEntry>& entries) {
  nlohmann::json j;
  j["alpha"] = static_cast<double>(p.alpha);
  j["h"] = static_cast<double>(p.h);
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"sign", std::string(to_string(e.sign))},
                            {"n", e.n},
                            {"lambda", static_cast<double>(e.lambda)},
                            {"residual", static_cast<double>(e.residual)}});
  }
  return j;
}

}  // namespace blab
