#include "blab/gaussalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blab {

namespace {

void check_cap(std::size_t size) {
  if (size > static_cast<std::size_t>(ComplexPoly::kDegreeCap) + 1) {
    throw DegreeOverflow("polynomial degree " + std::to_string(size - 1) +
                         " exceeds cap " +
                         std::to_string(ComplexPoly::kDegreeCap));
  }
}

bool same_exponent(Complex a2, Complex a1, Complex b2, Complex b1) {
  return a2 == b2 && a1 == b1;
}

}  // namespace

// ---------------------------------------------------------------- ComplexPoly

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0)) coeffs_.pop_back();
  check_cap(coeffs_.size());
}

ComplexPoly ComplexPoly::constant(Complex c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(int n, Complex c) {
  if (n < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1, Complex(0));
  v.back() = c;
  return ComplexPoly(std::move(v));
}

Complex ComplexPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0.0L;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex ComplexPoly::operator()(Complex z) const {
  Complex acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<Real>(k) * coeffs_[k];
  }
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::conj() const {
  std::vector<Complex> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                 [](Complex v) { return std::conj(v); });
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::times_x() const {
  if (is_zero()) return {};
  std::vector<Complex> c(coeffs_.size() + 1, Complex(0));
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::compose_linear(Complex a, Complex b) const {
  // Horner in the polynomial ring: acc <- acc * (a z + b) + c_k
  const ComplexPoly lin({b, a});
  ComplexPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + ComplexPoly::constant(*it);
  }
  return acc;
}

Real ComplexPoly::max_abs_coeff() const {
  Real m = 0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q) {
  std::vector<Complex> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex(0));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[k] += q.coeffs_[k];
  return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q) {
  return p + Complex(-1.0L) * q;
}

ComplexPoly operator*(const ComplexPoly& p, const ComplexPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  check_cap(p.coeffs_.size() + q.coeffs_.size() - 1);
  std::vector<Complex> c(p.coeffs_.size() + q.coeffs_.size() - 1, Complex(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return ComplexPoly(std::move(c));
}

ComplexPoly operator*(Complex s, const ComplexPoly& p) {
  std::vector<Complex> c(p.coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.coeffs_[k];
  return ComplexPoly(std::move(c));
}

Real max_coeff_diff(const ComplexPoly& p, const ComplexPoly& q) {
  Real m = 0;
  const int n = std::max(p.degree(), q.degree());
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(p[k] - q[k]));
  return m;
}

// ------------------------------------------------------------------ PolyGauss

PolyGauss::PolyGauss() : gamma2_(-1.0L), gamma1_(0.0L) {}

PolyGauss::PolyGauss(ComplexPoly poly, Complex gamma2, Complex gamma1)
    : poly_(std::move(poly)), gamma2_(gamma2), gamma1_(gamma1) {
  if (!(gamma2_.real() < 0)) {
    throw DomainError("PolyGauss requires Re(gamma2) < 0");
  }
}

PolyGauss PolyGauss::zero_like(const PolyGauss& f) {
  return PolyGauss(ComplexPoly(), f.gamma2_, f.gamma1_);
}

Complex PolyGauss::operator()(Real x) const {
  if (is_zero()) return 0.0L;
  return poly_(Complex(x)) * std::exp(gamma2_ * (x * x) + gamma1_ * x);
}

PolyGauss PolyGauss::multiply_exp(Complex d2, Complex d1) const {
  return PolyGauss(poly_, gamma2_ + d2, gamma1_ + d1);
}

PolyGauss PolyGauss::multiply_poly(const ComplexPoly& q) const {
  return PolyGauss(poly_ * q, gamma2_, gamma1_);
}

PolyGauss PolyGauss::conj() const {
  return PolyGauss(poly_.conj(), std::conj(gamma2_), std::conj(gamma1_));
}

PolyGauss operator+(const PolyGauss& f, const PolyGauss& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (!same_exponent(f.gamma2_, f.gamma1_, g.gamma2_, g.gamma1_)) {
    throw DomainError("PolyGauss sum with mismatched exponents");
  }
  return PolyGauss(f.poly_ + g.poly_, f.gamma2_, f.gamma1_);
}

PolyGauss operator-(const PolyGauss& f, const PolyGauss& g) {
  return f + Complex(-1.0L) * g;
}

PolyGauss operator*(Complex c, const PolyGauss& f) {
  return PolyGauss(c * f.poly_, f.gamma2_, f.gamma1_);
}

Real max_coeff_diff(const PolyGauss& f, const PolyGauss& g) {
  if (f.is_zero() || g.is_zero() ||
      (f.gamma2() == g.gamma2() && f.gamma1() == g.gamma1())) {
    return max_coeff_diff(f.poly(), g.poly());
  }
  return std::numeric_limits<Real>::infinity();
}

// ------------------------------------------------------------------ HoloGauss

HoloGauss::HoloGauss(ComplexPoly poly, Complex c2, Complex c1,
                     std::optional<Real> member_h)
    : poly_(std::move(poly)), c2_(c2), c1_(c1), member_h_(member_h) {
  check_membership();
}

void HoloGauss::check_membership() const {
  if (!member_h_ || poly_.is_zero()) return;
  const Real h = *member_h_;
  if (!(h > 0)) throw DomainError("Bargmann weight parameter h must be positive");
  if (!(std::abs(c2_) < 1.0L / (4.0L * h))) {
    throw InvariantError("HoloGauss left the Bargmann growth class: |c2| = " +
                         std::to_string(static_cast<double>(std::abs(c2_))) +
                         " >= 1/(4h)");
  }
}

Complex HoloGauss::operator()(Complex z) const {
  if (is_zero()) return 0.0L;
  return poly_(z) * std::exp(c2_ * z * z + c1_ * z);
}

HoloGauss HoloGauss::with_membership(std::optional<Real> h) const {
  return HoloGauss(poly_, c2_, c1_, h);
}

HoloGauss HoloGauss::differentiate() const {
  // (q e^E)' = (q' + (2 c2 z + c1) q) e^E
  const ComplexPoly dq =
      poly_.derivative() + ComplexPoly({c1_, 2.0L * c2_}) * poly_;
  return HoloGauss(dq, c2_, c1_, member_h_);
}

HoloGauss HoloGauss::multiply_by_z() const {
  return HoloGauss(poly_.times_x(), c2_, c1_, member_h_);
}

HoloGauss HoloGauss::multiply_exp(Complex d2, Complex d1) const {
  return HoloGauss(poly_, c2_ + d2, c1_ + d1, member_h_);
}

HoloGauss HoloGauss::multiply(const HoloGauss& g) const {
  return HoloGauss(poly_ * g.poly_, c2_ + g.c2_, c1_ + g.c1_,
                   member_h_ ? member_h_ : g.member_h_);
}

HoloGauss HoloGauss::scale(Complex s) const {
  return HoloGauss(s * poly_, c2_, c1_, member_h_);
}

HoloGauss operator+(const HoloGauss& f, const HoloGauss& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (!same_exponent(f.c2_, f.c1_, g.c2_, g.c1_)) {
    throw DomainError("HoloGauss sum with mismatched exponents");
  }
  return HoloGauss(f.poly_ + g.poly_, f.c2_, f.c1_,
                   f.member_h_ ? f.member_h_ : g.member_h_);
}

HoloGauss operator-(const HoloGauss& f, const HoloGauss& g) {
  return f + g.scale(-1.0L);
}

Real max_coeff_diff(const HoloGauss& f, const HoloGauss& g) {
  if (f.is_zero() || g.is_zero() || (f.c2() == g.c2() && f.c1() == g.c1())) {
    return max_coeff_diff(f.poly(), g.poly());
  }
  return std::numeric_limits<Real>::infinity();
}

// --------------------------------------------------------------------- DiffOp

DiffOp::DiffOp(Real h, std::map<Key, Complex> terms) : h_(h) {
  if (!(h > 0)) throw DomainError("DiffOp requires h > 0");
  for (const auto& [key, c] : terms) add_term(key.first, key.second, c);
}

void DiffOp::add_term(int j, int k, Complex c) {
  if (j < 0 || k < 0) throw DomainError("DiffOp exponents must be nonnegative");
  if (j + k > kMaxOrder) {
    throw DomainError("DiffOp term x^" + std::to_string(j) + "(hD)^" +
                      std::to_string(k) + " exceeds order 2");
  }
  auto& slot = terms_[{j, k}];
  slot += c;
  if (slot == Complex(0)) terms_.erase({j, k});
}

DiffOp DiffOp::identity(Real h) { return DiffOp(h, {{{0, 0}, 1.0L}}); }
DiffOp DiffOp::x(Real h) { return DiffOp(h, {{{1, 0}, 1.0L}}); }
DiffOp DiffOp::hD(Real h) { return DiffOp(h, {{{0, 1}, 1.0L}}); }
DiffOp DiffOp::d_dx(Real h) { return DiffOp(h, {{{0, 1}, kI / h}}); }

Complex DiffOp::coeff(int j, int k) const {
  const auto it = terms_.find({j, k});
  return it == terms_.end() ? Complex(0) : it->second;
}

PolyGauss DiffOp::apply(const PolyGauss& f) const {
  if (f.is_zero()) return f;
  const Complex g2 = f.gamma2();
  const Complex g1 = f.gamma1();
  // hD (q e^E) = -i h (q' + (2 g2 x + g1) q) e^E
  const ComplexPoly slope({g1, 2.0L * g2});
  int order = 0;
  for (const auto& [key, c] : terms_) order = std::max(order, key.second);
  // Only build the derivatives the operator uses, so first order ops reach the cap.
  const ComplexPoly d0 = f.poly();
  const ComplexPoly d1 = order >= 1 ? (-kI * h_) * (d0.derivative() + slope * d0) : ComplexPoly();
  const ComplexPoly d2 = order >= 2 ? (-kI * h_) * (d1.derivative() + slope * d1) : ComplexPoly();
  const ComplexPoly* derivs[] = {&d0, &d1, &d2};

  ComplexPoly acc;
  for (const auto& [key, c] : terms_) {
    ComplexPoly t = c * *derivs[key.second];
    for (int j = 0; j < key.first; ++j) t = t.times_x();
    acc = acc + t;
  }
  return PolyGauss(acc, g2, g1);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  if (a.h_ != b.h_) throw DomainError("DiffOp sum with different h");
  DiffOp out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
  return out;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + Complex(-1.0L) * b; }

DiffOp operator*(Complex s, const DiffOp& a) {
  DiffOp out(a.h_);
  for (const auto& [key, c] : a.terms_) out.add_term(key.first, key.second, s * c);
  return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.h() != b.h()) throw DomainError("DiffOp composition with different h");
  const Real h = a.h();
  std::map<DiffOp::Key, Complex> acc;
  for (const auto& [ka, ca] : a.terms()) {
    const auto [ja, kda] = ka;
    for (const auto& [kb, cb] : b.terms()) {
      const auto [jb, kdb] = kb;
      // (hD)^kda x^jb = sum_i C(kda,i) (-ih)^i jb!/(jb-i)! x^(jb-i) (hD)^(kda-i)
      Complex binom = 1.0L;
      Complex falling = 1.0L;
      Complex mih = 1.0L;
      for (int i = 0; i <= std::min(kda, jb); ++i) {
        acc[{ja + jb - i, kda - i + kdb}] += ca * cb * binom * mih * falling;
        binom *= static_cast<Real>(kda - i) / static_cast<Real>(i + 1);
        falling *= static_cast<Real>(jb - i);
        mih *= -kI * h;
      }
    }
  }
  std::map<DiffOp::Key, Complex> nonzero;
  for (const auto& [key, c] : acc) {
    if (c != Complex(0)) nonzero.emplace(key, c);
  }
  return DiffOp(h, std::move(nonzero));
}

Real max_coeff_diff(const DiffOp& a, const DiffOp& b) {
  Real m = 0;
  for (const auto& [key, c] : a.terms()) {
    m = std::max(m, std::abs(c - b.coeff(key.first, key.second)));
  }
  for (const auto& [key, c] : b.terms()) {
    m = std::max(m, std::abs(c - a.coeff(key.first, key.second)));
  }
  return m;
}

PolyGauss apply_diffop(const DiffOp& op, const PolyGauss& f) { return op.apply(f); }

// ------------------------------------------------------------------ integrals

Complex gauss_integral(Real rho, Real theta) {
  if (!(rho > 0)) throw DomainError("gauss_integral requires rho > 0");
  if (!(std::abs(2.0L * theta) < kPi / 2)) {
    throw DomainError("gauss_integral requires |2 theta| < pi/2");
  }
  return kSqrtPi / rho * std::exp(-kI * theta);
}

std::vector<Complex> gaussian_moments(Complex g2, Complex g1, int kmax) {
  if (!(g2.real() < 0)) {
    throw DomainError("gaussian moment requires Re(gamma2) < 0");
  }
  if (kmax < 0) return {};
  // Centered even moments m_{2j} = Gamma(j + 1/2) (-g2)^{-j-1/2}.
  const Complex neg = -g2;
  std::vector<Complex> even(static_cast<std::size_t>(kmax / 2) + 1);
  even[0] = kSqrtPi / std::sqrt(neg);
  for (std::size_t j = 1; j < even.size(); ++j) {
    even[j] = even[j - 1] * (static_cast<Real>(2 * j - 1) / 2.0L) / neg;
  }
  const Complex shift = -g1 / (2.0L * g2);
  const Complex scale = std::exp(-g1 * g1 / (4.0L * g2));

  std::vector<Complex> out(static_cast<std::size_t>(kmax) + 1);
  std::vector<Complex> shift_pow(static_cast<std::size_t>(kmax) + 1);
  shift_pow[0] = 1.0L;
  for (int k = 1; k <= kmax; ++k) shift_pow[k] = shift_pow[k - 1] * shift;
  for (int k = 0; k <= kmax; ++k) {
    // x = y + shift: sum_i C(k,i) shift^(k-i) m_i, odd centered moments vanish
    Complex sum = 0.0L;
    Real binom = 1.0L;
    for (int i = 0; i <= k; ++i) {
      if (i % 2 == 0) sum += binom * shift_pow[k - i] * even[i / 2];
      binom = binom * static_cast<Real>(k - i) / static_cast<Real>(i + 1);
    }
    out[k] = scale * sum;
  }
  return out;
}

Complex gaussian_moment(Complex g2, Complex g1, int k) {
  if (k < 0) throw DomainError("moment order must be nonnegative");
  return gaussian_moments(g2, g1, k)[static_cast<std::size_t>(k)];
}

Complex inner_product_line(const PolyGauss& f, const PolyGauss& g) {
  if (f.is_zero() || g.is_zero()) return 0.0L;
  const Complex G2 = f.gamma2() + std::conj(g.gamma2());
  const Complex G1 = f.gamma1() + std::conj(g.gamma1());
  if (!(G2.real() < 0)) {
    throw DomainError("inner_product_line: product is not integrable");
  }
  const int df = f.poly().degree();
  const int dg = g.poly().degree();
  const auto m = gaussian_moments(G2, G1, df + dg);
  Complex acc = 0.0L;
  for (int i = 0; i <= df; ++i) {
    Complex row = 0.0L;
    for (int j = 0; j <= dg; ++j) row += std::conj(g.poly()[j]) * m[i + j];
    acc += f.poly()[i] * row;
  }
  return acc;
}

Real norm_line(const PolyGauss& f) {
  return std::sqrt(std::max<Real>(0, inner_product_line(f, f).real()));
}

}  // namespace blab
