#pragma once

// Exact Q(i)-linear combinations of real radicals p1^r1 * p2^r2 * ...
//
// Each radical monomial is kept in a canonical form: bases are pairwise
// distinct integers > 1 (primes, or cofactors too large to split), exponents
// lie strictly in (0, 1), and integer parts are folded into the Gaussian
// coefficient. Distinct canonical monomials are linearly independent over Q,
// so structural equality is value equality.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/bigfloat.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

struct RadicalKey {
  std::vector<std::pair<Integer, Rational>> factors;  // sorted by base

  bool empty() const { return factors.empty(); }
  bool operator<(const RadicalKey& o) const { return factors < o.factors; }
  bool operator==(const RadicalKey& o) const { return factors == o.factors; }
};

class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(const Rational& q);   // NOLINT
  RadicalSum(const Gaussian& z);   // NOLINT
  RadicalSum(long v) : RadicalSum(Rational(v)) {}  // NOLINT

  // q^r for rational q > 0 and rational r.
  static RadicalSum rational_power(const Rational& q, const Rational& r);
  // e^{i pi x} when it is expressible (denominator of x mod 2 in {1,2,3,4,6}).
  static std::optional<RadicalSum> root_of_unity(const Rational& x);

  bool is_zero() const { return terms_.empty(); }
  bool is_gaussian() const;  // no radical factors
  bool is_rational() const;
  bool is_real() const;
  bool is_monomial() const { return terms_.size() <= 1; }
  std::optional<Rational> as_rational() const;
  std::optional<Gaussian> as_gaussian() const;
  const std::map<RadicalKey, Gaussian>& terms() const { return terms_; }

  RadicalSum conj() const;
  // Defined for monomials and for pure Gaussians.
  std::optional<RadicalSum> inverse() const;
  RadicalSum pow(long exp) const;
  // Real power of a positive real monomial.
  std::optional<RadicalSum> real_power(const Rational& r) const;

  // Sign of a real value; resolved exactly for monomials, numerically otherwise.
  int real_sign() const;

  BigComplex to_complex(long prec) const;

  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const RadicalSum& o);

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const RadicalSum& b) { return a *= b; }
  friend RadicalSum operator-(const RadicalSum& a);
  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

  // Rational/Gaussian values use their plain forms; radical terms render as
  // "coef*2^(1/2)*3^(1/3)" joined by " + ".
  std::string to_string() const;
  static RadicalSum parse(const std::string& text);

 private:
  void add_term(const RadicalKey& key, const Gaussian& coef);
  std::map<RadicalKey, Gaussian> terms_;
};

// Prime-power factorisation by trial division; a large unsplit cofactor is
// returned as a single base.
std::vector<std::pair<Integer, long>> factorize(const Integer& n);

}  // namespace zetalab
