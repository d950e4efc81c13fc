#pragma once

// ExactScalar: the coefficient type used everywhere.
//
// Exact values are Q(i)-linear combinations of real radicals (which covers
// plain rationals and Gaussian rationals); anything that leaves that family
// becomes a high-precision complex float. Mixing an exact value with a float
// yields a float at the float's precision, except that an exact zero factor
// stays an exact zero.

#include <optional>
#include <string>
#include <variant>

#include "zetalab/bigfloat.hpp"
#include "zetalab/radical.hpp"

namespace zetalab {

class ExactScalar {
 public:
  enum class Kind { Rational, Gaussian, Radical, Float };

  ExactScalar() = default;
  ExactScalar(long v) : v_(RadicalSum(v)) {}                  // NOLINT
  ExactScalar(int v) : v_(RadicalSum(static_cast<long>(v))) {}  // NOLINT
  ExactScalar(const Rational& q) : v_(RadicalSum(q)) {}       // NOLINT
  ExactScalar(const Gaussian& z) : v_(RadicalSum(z)) {}       // NOLINT
  ExactScalar(RadicalSum r) : v_(std::move(r)) {}             // NOLINT
  ExactScalar(BigComplex z) : v_(std::move(z)) {}             // NOLINT

  Kind kind() const;
  bool is_exact() const { return std::holds_alternative<RadicalSum>(v_); }
  bool is_float() const { return !is_exact(); }
  bool is_zero() const;
  bool is_real() const;
  std::optional<Rational> as_rational() const;
  std::optional<Gaussian> as_gaussian() const;
  const RadicalSum* exact() const { return std::get_if<RadicalSum>(&v_); }
  const BigComplex* flt() const { return std::get_if<BigComplex>(&v_); }

  // Working precision of a float value, 0 for exact values.
  long precision() const;
  // Error radius of a float value, 0 for exact values.
  double radius() const;
  BigComplex to_complex(long prec) const;
  double real() const;
  double imag() const;
  double magnitude() const;

  // Sign of the real part. Exact for exact values.
  int real_sign() const;
  ExactScalar conj() const;

  // Serialisation: "p/q", "p/q+r/s i", radical terms, or "<re>;<im>@<prec>".
  std::string to_string() const;
  static ExactScalar parse(const std::string& text);
  // Human-readable rendering; floats in decimal.
  std::string display(int digits = 20) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(const ExactScalar& a);
  // Structural equality: exact values compare by value, floats bitwise.
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

 private:
  std::variant<RadicalSum, BigComplex> v_;
};

// Exact integer power; zero base with a negative exponent is a DomainError.
ExactScalar exact_pow(const ExactScalar& base, long exp);

// x^p for a positive real x; exact for positive monomials, float otherwise.
ExactScalar real_power(const ExactScalar& x, const Rational& p, long prec = kDefaultPrecision);

// e^{i pi s}; exact for rational s whose denominator mod 2 lies in {1,2,3,4,6}.
ExactScalar exp_i_pi(const ExactScalar& s, long prec = kDefaultPrecision);

// Natural log of a positive real; exact zero for 1.
ExactScalar log_real(const ExactScalar& x, long prec = kDefaultPrecision);

ExactScalar to_float(const ExactScalar& x, long prec);

// |x| for a real x.
ExactScalar abs_real(const ExactScalar& x);

// True when x is exactly zero, or a float whose magnitude is within its
// error radius (or below 2^(16-prec) relative to scale).
bool numerically_zero(const ExactScalar& x, double scale = 1.0);

}  // namespace zetalab
