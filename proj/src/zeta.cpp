#include "zetalab/zeta.hpp"

#include <cmath>
#include <mutex>

#include "zetalab/errors.hpp"
#include "zetalab/polynomial.hpp"

namespace zetalab {

namespace {

BigComplex scale(const BigComplex& z, const BigFloat& r) { return BigComplex(z.re() * r, z.im() * r); }

double mag(const BigComplex& z) { return z.magnitude(); }

// B_{2i}/(2i)! at the given precision, i = 1..count.
std::vector<BigFloat> em_coefficients(long count, long prec) {
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 1; i <= count; ++i) {
    out.emplace_back(bernoulli_number(2 * i) / Rational(factorial(2 * i)), prec);
  }
  return out;
}

// Euler-Maclaurin ladder zeta_H(s + j, a), j = 0..count-1. Entries flagged in
// skip are left at zero.
std::vector<BigComplex> em_ladder(const BigComplex& s, const Rational& a, long count, long prec,
                                  const std::vector<bool>& skip) {
  double smag = s.magnitude() + static_cast<double>(count);
  double target = smag + static_cast<double>(prec) / 2 + 10;
  long M = std::max(0L, static_cast<long>(std::ceil(target - a.get_d())));
  Rational X = a + M;
  double neg = std::max(0.0, -s.re().to_double());
  long wp = prec + 32 + static_cast<long>(std::ceil(neg * std::log2(X.get_d() + 1)));

  BigComplex sw(s.re() + BigFloat(wp), s.im() + BigFloat(wp));
  std::vector<BigComplex> cur;
  std::vector<BigFloat> inv;
  cur.reserve(static_cast<std::size_t>(M));
  inv.reserve(static_cast<std::size_t>(M));
  for (long k = 0; k < M; ++k) {
    BigFloat ak(a + k, wp);
    BigFloat l = log(ak);
    cur.push_back(exp(BigComplex(-(sw.re() * l), -(sw.im() * l))));
    inv.push_back(BigFloat(Rational(1), wp) / ak);
  }
  BigFloat Xf(X, wp);
  BigFloat invX = BigFloat(Rational(1), wp) / Xf;
  BigFloat lX = log(Xf);
  BigComplex Xw = exp(BigComplex(-(sw.re() * lX), -(sw.im() * lX)));

  long imax = wp / 2 + 8;
  static std::mutex mu;
  static std::vector<BigFloat> coeffs;
  static long coeff_prec = 0;
  std::vector<BigFloat> em;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (coeff_prec < wp || static_cast<long>(coeffs.size()) < imax) {
      coeffs = em_coefficients(imax, wp);
      coeff_prec = wp;
    }
    em.assign(coeffs.begin(), coeffs.begin() + imax);
  }

  double eps = std::ldexp(1.0, static_cast<int>(-wp));
  std::vector<BigComplex> out;
  out.reserve(static_cast<std::size_t>(count));
  BigFloat invX2 = invX * invX;
  for (long j = 0; j < count; ++j) {
    if (j > 0) {
      for (long k = 0; k < M; ++k) cur[static_cast<std::size_t>(k)] = scale(cur[static_cast<std::size_t>(k)], inv[static_cast<std::size_t>(k)]);
      Xw = scale(Xw, invX);
    }
    if (skip[static_cast<std::size_t>(j)]) {
      out.emplace_back(prec);
      continue;
    }
    BigComplex w(sw.re() + BigFloat(Rational(j), wp), sw.im());
    BigComplex sum(wp);
    for (const auto& c : cur) sum = BigComplex(sum.re() + c.re(), sum.im() + c.im());
    BigComplex wm1(w.re() - BigFloat(Rational(1), wp), w.im());
    BigComplex tail = scale(Xw, Xf) / wm1;
    BigComplex half = scale(Xw, BigFloat(Rational(1, 2), wp));
    sum = BigComplex(sum.re() + tail.re() + half.re(), sum.im() + tail.im() + half.im());
    // Correction terms: B_{2i}/(2i)! (w)_{2i-1} X^{-w-2i+1}
    BigComplex poch = w;
    BigComplex pw = scale(Xw, invX);
    double last = 0;
    for (long i = 1; i <= imax; ++i) {
      if (i > 1) {
        BigComplex f1(w.re() + BigFloat(Rational(2 * i - 3), wp), w.im());
        BigComplex f2(w.re() + BigFloat(Rational(2 * i - 2), wp), w.im());
        poch = poch * f1 * f2;
        pw = scale(pw, invX2);
      }
      BigComplex term = scale(poch * pw, em[static_cast<std::size_t>(i - 1)]);
      sum = BigComplex(sum.re() + term.re(), sum.im() + term.im());
      last = mag(term);
      if (last <= eps * mag(sum)) break;
    }
    BigFloat re(prec), im(prec);
    mpfr_set(re.get(), sum.re().get(), MPFR_RNDN);
    mpfr_set(im.get(), sum.im().get(), MPFR_RNDN);
    BigComplex v(re, im);
    out.push_back(v.with_radius(last + (4 + s.radius()) * v.magnitude() * unit_roundoff(prec) +
                                s.radius() * v.magnitude() * std::log(X.get_d() + 2)));
  }
  return out;
}

bool is_nonpositive_integer(const std::optional<Rational>& q) { return q && is_integer(*q) && sgn(*q) <= 0; }

}  // namespace

ExactScalar hurwitz_residue(const Rational& alpha) {
  if (sgn(alpha) <= 0 || alpha > 1) throw DomainError("hurwitz_residue needs 0 < alpha <= 1");
  return ExactScalar(1);
}

ExactScalar digamma(const Rational& a, long prec) {
  if (sgn(a) <= 0) throw DomainError("digamma needs a positive argument");
  long wp = prec + 32;
  long M = std::max(0L, static_cast<long>(std::ceil(static_cast<double>(wp) / 2 + 10 - a.get_d())));
  BigFloat X(a + M, wp);
  BigFloat acc = log(X) - BigFloat(Rational(1, 2), wp) / X;
  BigFloat invX2 = BigFloat(Rational(1), wp) / (X * X);
  BigFloat p = invX2;
  double eps = std::ldexp(1.0, static_cast<int>(-wp));
  for (long i = 1; i <= wp; ++i) {
    BigFloat term = BigFloat(bernoulli_number(2 * i) / (2 * i), wp) * p;
    acc = acc - term;
    if (std::fabs(term.to_double()) < eps * std::fabs(acc.to_double())) break;
    p = p * invX2;
  }
  for (long k = 0; k < M; ++k) acc = acc - BigFloat(Rational(1), wp) / BigFloat(a + k, wp);
  BigFloat r(prec);
  mpfr_set(r.get(), acc.get(), MPFR_RNDN);
  BigComplex z(r, BigFloat(prec));
  return ExactScalar(z.with_radius(4 * z.magnitude() * unit_roundoff(prec)));
}

std::vector<ExactScalar> hurwitz_ladder(const ExactScalar& s, const Rational& a, long count, long prec) {
  if (sgn(a) <= 0) throw DomainError("Hurwitz parameter must be positive");
  std::vector<ExactScalar> out(static_cast<std::size_t>(count));
  std::vector<bool> skip(static_cast<std::size_t>(count), false);
  auto sq = s.as_rational();
  bool any_numeric = false;
  for (long j = 0; j < count; ++j) {
    std::optional<Rational> w;
    if (sq) w = *sq + j;
    if (is_nonpositive_integer(w)) {
      long n = -w->get_num().get_si();
      out[static_cast<std::size_t>(j)] = ExactScalar(-bernoulli_poly(n + 1)(a) / (n + 1));
      skip[static_cast<std::size_t>(j)] = true;
    } else if (w && *w == 1) {
      out[static_cast<std::size_t>(j)] = -digamma(a, prec);
      skip[static_cast<std::size_t>(j)] = true;
    } else {
      any_numeric = true;
    }
  }
  if (!any_numeric) return out;
  long sp = std::max(prec, s.precision());
  auto num = em_ladder(s.to_complex(sp + 32), a, count, prec, skip);
  for (long j = 0; j < count; ++j) {
    if (!skip[static_cast<std::size_t>(j)]) out[static_cast<std::size_t>(j)] = ExactScalar(num[static_cast<std::size_t>(j)]);
  }
  return out;
}

HurwitzValue hurwitz_value(const ExactScalar& s, const Rational& alpha, long prec) {
  if (sgn(alpha) <= 0 || alpha > 1) throw DomainError("hurwitz_value needs 0 < alpha <= 1");
  if (auto q = s.as_rational(); q && *q == 1) throw PoleError("zeta_H has a pole at s = 1");
  ExactScalar v = hurwitz_ladder(s, alpha, 1, prec)[0];
  return {s, alpha, v, v.is_exact()};
}

HurwitzValue truncated_zeta(const ExactScalar& s, long k0, long prec) {
  if (k0 < 1) throw DomainError("truncated_zeta needs k0 >= 1");
  if (auto q = s.as_rational(); q && *q == 1) throw PoleError("zeta has a pole at s = 1");
  ExactScalar v = hurwitz_ladder(s, Rational(k0), 1, prec)[0];
  return {s, Rational(1), v, v.is_exact()};
}

}  // namespace zetalab
