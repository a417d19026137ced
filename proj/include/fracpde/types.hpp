#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracpde {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

constexpr double kPi = 3.14159265358979323846;

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A stated precondition failed; carries the measured mismatch.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, double measured)
      : std::runtime_error(what + " (measured " + std::to_string(measured) + ")"),
        mismatch(measured) {}
  double mismatch;
};

/// An iterative/numerical procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Linear solve hit a (near-)singular pivot; carries the shift z that caused it.
class NearSingularError : public std::runtime_error {
 public:
  NearSingularError(const std::string& what, Complex shift)
      : std::runtime_error(what + " at z = (" + std::to_string(shift.real()) + ", " +
                           std::to_string(shift.imag()) + ")"),
        z(shift) {}
  Complex z;
};

inline double sup_norm(const CVector& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace fracpde
