#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace pbgbt {

using Complex = std::complex<double>;

// 50 decimal digits. Monomial-basis Gram sums of Hermite-Gauss functions
// cancel by ~1e12 at degree 30, which rules out double for the exact algebra.
using ExtReal = boost::multiprecision::cpp_bin_float_50;
using ExtComplex = boost::multiprecision::cpp_complex_50;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
};

template <>
struct ScalarTraits<ExtComplex> {
  using Real = ExtReal;
};

template <typename Scalar>
using RealOf = typename ScalarTraits<Scalar>::Real;

template <typename Real>
inline Real pi() {
  return boost::math::constants::pi<Real>();
}

/// Lossless widening of a double complex into any supported scalar.
template <typename Scalar>
inline Scalar from_complex(const Complex& z) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return z;
  } else {
    return Scalar(RealOf<Scalar>(z.real()), RealOf<Scalar>(z.imag()));
  }
}

inline Complex to_complex(const Complex& z) { return z; }

inline Complex to_complex(const ExtComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline double to_double(double x) { return x; }
inline double to_double(const ExtReal& x) { return static_cast<double>(x); }

// ---------------------------------------------------------------------------
// Errors. Every failure the library can report derives from Error so callers
// can catch at one level and still dispatch on the concrete category.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonIntegrableError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class DeterminantError : public Error {
 public:
  DeterminantError(const std::string& what, Complex det) : Error(what), det_(det) {}
  Complex determinant() const { return det_; }

 private:
  Complex det_;
};

class DegenerateExponentError : public Error {
 public:
  using Error::Error;
};

class OrderingError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NotPseudoBosonicError : public Error {
 public:
  NotPseudoBosonicError(const std::string& what, bool phi0_fails, bool psi0_fails)
      : Error(what), phi0_fails_(phi0_fails), psi0_fails_(psi0_fails) {}
  bool phi0_fails() const { return phi0_fails_; }
  bool psi0_fails() const { return psi0_fails_; }

 private:
  bool phi0_fails_;
  bool psi0_fails_;
};

class UseOracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbgbt
