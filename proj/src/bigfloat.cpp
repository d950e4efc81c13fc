#include "zetalab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& z, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 4;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string BigFloat::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::from_hex(const std::string& text, long prec) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 0, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') throw ParseError("malformed float '" + text + "'");
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma(long prec) {
  BigFloat r(prec);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

#define ZETALAB_UNARY(name, fn)                  \
  BigFloat name(const BigFloat& a) {             \
    BigFloat r(a.prec());                        \
    fn(r.get(), a.get(), MPFR_RNDN);             \
    return r;                                    \
  }
ZETALAB_UNARY(abs, mpfr_abs)
ZETALAB_UNARY(exp, mpfr_exp)
ZETALAB_UNARY(log, mpfr_log)
ZETALAB_UNARY(sin, mpfr_sin)
ZETALAB_UNARY(cos, mpfr_cos)
ZETALAB_UNARY(sqrt, mpfr_sqrt)
#undef ZETALAB_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

double unit_roundoff(long prec) { return std::ldexp(1.0, static_cast<int>(1 - prec)); }

BigComplex::BigComplex(long prec) : re_(prec), im_(prec) {}

BigComplex::BigComplex(BigFloat re, BigFloat im, double radius)
    : re_(std::move(re)), im_(std::move(im)), radius_(radius) {
  if (im_.prec() != re_.prec()) {
    long p = std::max(re_.prec(), im_.prec());
    re_ = re_ + BigFloat(p);
    im_ = im_ + BigFloat(p);
  }
}

BigComplex::BigComplex(const Gaussian& z, long prec) : re_(z.re, prec), im_(z.im, prec) {
  radius_ = magnitude() * unit_roundoff(prec);
}

BigComplex::BigComplex(double re, double im, long prec) : re_(re, prec), im_(im, prec) {}

double BigComplex::magnitude() const { return std::hypot(re_.to_double(), im_.to_double()); }

BigComplex BigComplex::with_radius(double r) const {
  BigComplex c = *this;
  c.radius_ = r;
  return c;
}

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_, radius_); }

std::string BigComplex::to_string() const {
  return re_.to_hex() + ";" + im_.to_hex() + "@" + std::to_string(prec());
}

BigComplex BigComplex::parse(const std::string& text) {
  auto at = text.rfind('@');
  auto semi = text.find(';');
  if (at == std::string::npos || semi == std::string::npos || semi > at) {
    throw ParseError("malformed complex float '" + text + "'");
  }
  long prec = std::stol(text.substr(at + 1));
  BigFloat re = BigFloat::from_hex(text.substr(0, semi), prec);
  BigFloat im = BigFloat::from_hex(text.substr(semi + 1, at - semi - 1), prec);
  BigComplex z(re, im);
  z.radius_ = z.magnitude() * unit_roundoff(prec);
  return z;
}

namespace {

double rounding(const BigComplex& z) { return z.magnitude() * unit_roundoff(z.prec()); }

}  // namespace

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re() + b.re(), a.im() + b.im());
  return r.with_radius(a.radius() + b.radius() + rounding(r));
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re() - b.re(), a.im() - b.im());
  return r.with_radius(a.radius() + b.radius() + rounding(r));
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re(), -a.im(), a.radius()); }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
  double rad = a.magnitude() * b.radius() + b.magnitude() * a.radius() + a.radius() * b.radius();
  return r.with_radius(rad + 2 * rounding(r));
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat den = b.re() * b.re() + b.im() * b.im();
  if (den.is_zero()) throw DomainError("complex division by zero");
  BigComplex r((a.re() * b.re() + a.im() * b.im()) / den, (a.im() * b.re() - a.re() * b.im()) / den);
  double bm = b.magnitude();
  double rad = (a.radius() + r.magnitude() * b.radius()) / bm;
  return r.with_radius(rad + 3 * rounding(r));
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  BigComplex r(m * cos(z.im()), m * sin(z.im()));
  return r.with_radius(r.magnitude() * z.radius() + 2 * rounding(r));
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  BigComplex r(log(hypot(z.re(), z.im())), atan2(z.im(), z.re()));
  return r.with_radius(z.radius() / z.magnitude() + 2 * rounding(r));
}

BigComplex pow(const BigFloat& base, const BigComplex& z) {
  if (base.sign() <= 0) throw DomainError("pow requires a positive real base");
  BigFloat lb = log(base);
  BigComplex e(z.re() * lb, z.im() * lb, z.radius() * std::fabs(lb.to_double()));
  return exp(e);
}

BigComplex exp_i_pi(const BigComplex& z) {
  BigFloat pi = BigFloat::pi(z.prec());
  // i pi z = -pi Im z + i pi Re z
  BigComplex w(-(pi * z.im()), pi * z.re(), z.radius() * M_PI);
  return exp(w);
}

}  // namespace zetalab
