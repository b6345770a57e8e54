#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace blab {

// Extended precision: monomial-basis Gram sums lose ~n*log10(3) digits.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Complex kI{0.0L, 1.0L};

inline const Real kSqrtPi = std::sqrt(kPi);

// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A value left a declared function class (e.g. the Bargmann growth class).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegreeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Quadrature grid too small for the integrand.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blab
