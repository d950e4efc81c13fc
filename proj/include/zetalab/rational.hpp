#pragma once

// Exact rationals (GMP) and Gaussian rationals.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zetalab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms; integers render without a denominator.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
int sign(const Rational& q);

// Integer power with q != 0 required for negative exponents.
Rational pow(const Rational& q, long exp);

// Generalised binomial coefficient binom(p, k) = p (p-1) ... (p-k+1) / k!.
Rational binomial(const Rational& p, long k);

Integer factorial(long n);

struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit lift from Q
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
};

Gaussian operator+(Gaussian a, const Gaussian& b);
Gaussian operator-(Gaussian a, const Gaussian& b);
Gaussian operator-(const Gaussian& a);
Gaussian operator*(Gaussian a, const Gaussian& b);
Gaussian operator/(const Gaussian& a, const Gaussian& b);
bool operator==(const Gaussian& a, const Gaussian& b);
inline bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

// "p/q+r/s i" (always both parts); real values render as a plain rational.
std::string to_string(const Gaussian& z);
Gaussian parse_gaussian(std::string_view text);

}  // namespace zetalab
