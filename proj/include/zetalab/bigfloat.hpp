#pragma once

// Arbitrary-precision reals (MPFR) and complex numbers carrying an error radius.
//
// The radius is a running (non-rigorous) estimate of the absolute error
// accumulated by rounding and by propagation of input radii. It shrinks as the
// working precision grows, which is what the numeric checks rely on.

#include <mpfr.h>

#include <string>

#include "zetalab/rational.hpp"

namespace zetalab {

inline constexpr long kDefaultPrecision = 256;

class BigFloat {
 public:
  explicit BigFloat(long prec = kDefaultPrecision);
  BigFloat(double x, long prec);
  BigFloat(const Rational& q, long prec);
  BigFloat(const Integer& z, long prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

  // Hexadecimal significand, e.g. "0x1.8p+1".
  std::string to_hex() const;
  std::string to_decimal(int digits = 20) const;
  static BigFloat from_hex(const std::string& text, long prec);

  static BigFloat pi(long prec);
  static BigFloat euler_gamma(long prec);

 private:
  mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
BigFloat abs(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& a, const BigFloat& b);

class BigComplex {
 public:
  explicit BigComplex(long prec = kDefaultPrecision);
  BigComplex(BigFloat re, BigFloat im, double radius = 0.0);
  BigComplex(const Gaussian& z, long prec);
  BigComplex(double re, double im, long prec);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  double radius() const { return radius_; }
  long prec() const { return re_.prec(); }
  double magnitude() const;  // |z| as a double
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  BigComplex with_radius(double r) const;
  BigComplex conj() const;

  // "<re hex>;<im hex>@<prec>"
  std::string to_string() const;
  static BigComplex parse(const std::string& text);

 private:
  BigFloat re_;
  BigFloat im_;
  double radius_ = 0.0;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
// x^z for real x > 0.
BigComplex pow(const BigFloat& base, const BigComplex& z);
// e^{i pi z}
BigComplex exp_i_pi(const BigComplex& z);

// Unit roundoff 2^(1-prec).
double unit_roundoff(long prec);

}  // namespace zetalab
