#pragma once

// Hurwitz zeta function: exact residue, exact values at non-positive integers,
// Euler-Maclaurin evaluation elsewhere (complex s allowed).

#include <vector>

#include "zetalab/scalar.hpp"

namespace zetalab {

struct HurwitzValue {
  ExactScalar s;
  Rational alpha;
  ExactScalar value;
  bool exact = false;
};

// Residue of zeta_H(s, alpha) at s = 1. Always 1.
ExactScalar hurwitz_residue(const Rational& alpha);

// zeta_H(s, alpha) for 0 < alpha <= 1, s != 1.
HurwitzValue hurwitz_value(const ExactScalar& s, const Rational& alpha, long prec = kDefaultPrecision);

// sum_{k >= k0} k^{-s}.
HurwitzValue truncated_zeta(const ExactScalar& s, long k0, long prec = kDefaultPrecision);

// zeta_H(s + j, a) for j = 0 .. count-1 and any rational a > 0. Entries where
// s + j is exactly 1 hold the constant Laurent coefficient -psi(a) instead of
// a value. Entries at non-positive integers are exact.
std::vector<ExactScalar> hurwitz_ladder(const ExactScalar& s, const Rational& a, long count,
                                        long prec = kDefaultPrecision);

// Digamma function at a positive rational.
ExactScalar digamma(const Rational& a, long prec = kDefaultPrecision);

}  // namespace zetalab
