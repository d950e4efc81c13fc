#pragma once

// Dense polynomials with exact rational coefficients, Bernoulli numbers and
// Bernoulli polynomials.

#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);  // coeffs[i] multiplies x^i

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_zero() const { return c_.empty(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Lagrange interpolation through distinct nodes.
  static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  // Rational roots (with repetition removed) found by the rational root test.
  std::vector<Rational> rational_roots() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

using BernoulliPolynomial = Polynomial;

// B_n with B_1 = -1/2. Memoised; safe to call concurrently.
Rational bernoulli_number(long n);

// B_n(x) with exact rational coefficients.
BernoulliPolynomial bernoulli_poly(long n);

}  // namespace zetalab
