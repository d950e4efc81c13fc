#include "zetalab/scalar.hpp"

#include <cmath>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

long float_prec(const ExactScalar& a, const ExactScalar& b) {
  return std::max({a.precision(), b.precision(), kDefaultPrecision});
}

}  // namespace

ExactScalar::Kind ExactScalar::kind() const {
  if (const auto* r = exact()) {
    if (r->is_rational()) return Kind::Rational;
    if (r->is_gaussian()) return Kind::Gaussian;
    return Kind::Radical;
  }
  return Kind::Float;
}

bool ExactScalar::is_zero() const {
  if (const auto* r = exact()) return r->is_zero();
  return flt()->is_zero();
}

bool ExactScalar::is_real() const {
  if (const auto* r = exact()) return r->is_real();
  return flt()->im().is_zero();
}

std::optional<Rational> ExactScalar::as_rational() const {
  if (const auto* r = exact()) return r->as_rational();
  return std::nullopt;
}

std::optional<Gaussian> ExactScalar::as_gaussian() const {
  if (const auto* r = exact()) return r->as_gaussian();
  return std::nullopt;
}

long ExactScalar::precision() const { return is_exact() ? 0 : flt()->prec(); }

double ExactScalar::radius() const { return is_exact() ? 0.0 : flt()->radius(); }

BigComplex ExactScalar::to_complex(long prec) const {
  if (const auto* r = exact()) return r->to_complex(prec);
  const BigComplex& z = *flt();
  if (z.prec() == prec) return z;
  BigFloat re(prec), im(prec);
  mpfr_set(re.get(), z.re().get(), MPFR_RNDN);
  mpfr_set(im.get(), z.im().get(), MPFR_RNDN);
  return BigComplex(re, im, z.radius());
}

double ExactScalar::real() const { return to_complex(64).re().to_double(); }
double ExactScalar::imag() const { return to_complex(64).im().to_double(); }
double ExactScalar::magnitude() const { return to_complex(64).magnitude(); }

int ExactScalar::real_sign() const {
  if (const auto* r = exact()) {
    RadicalSum re = (*r + r->conj()) * RadicalSum(Rational(1, 2));
    return re.real_sign();
  }
  return flt()->re().sign();
}

ExactScalar ExactScalar::conj() const {
  if (const auto* r = exact()) return ExactScalar(r->conj());
  return ExactScalar(flt()->conj());
}

std::string ExactScalar::to_string() const {
  if (const auto* r = exact()) return r->to_string();
  return flt()->to_string();
}

ExactScalar ExactScalar::parse(const std::string& text) {
  if (text.find('@') != std::string::npos) return ExactScalar(BigComplex::parse(text));
  if (text.find("^(") != std::string::npos) return ExactScalar(RadicalSum::parse(text));
  return ExactScalar(parse_gaussian(text));
}

std::string ExactScalar::display(int digits) const {
  if (kind() != Kind::Radical && kind() != Kind::Float) return to_string();
  BigComplex z = to_complex(std::max(precision(), 64L));
  std::string out = z.re().to_decimal(digits);
  if (!z.im().is_zero()) {
    std::string im = z.im().to_decimal(digits);
    out += (im.front() == '-' ? "" : "+") + im + " i";
  }
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<RadicalSum>(v_) += *o.exact();
  } else if (o.is_zero() && o.is_exact()) {
    return *this;
  } else if (is_zero() && is_exact()) {
    *this = o;
  } else {
    long p = float_prec(*this, o);
    v_ = to_complex(p) + o.to_complex(p);
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<RadicalSum>(v_) *= *o.exact();
  } else if ((is_exact() && is_zero()) || (o.is_exact() && o.is_zero())) {
    v_ = RadicalSum();
  } else {
    long p = float_prec(*this, o);
    v_ = to_complex(p) * o.to_complex(p);
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_exact() && o.is_zero()) throw DomainError("division by exact zero");
  if (is_exact() && is_zero()) return *this;
  if (is_exact() && o.is_exact()) {
    if (auto inv = o.exact()->inverse()) {
      std::get<RadicalSum>(v_) *= *inv;
      return *this;
    }
    // (a / b) = a * conj(b) / |b|^2 stays exact when |b|^2 is invertible.
    RadicalSum nb = *o.exact() * o.exact()->conj();
    if (auto inv = nb.inverse()) {
      std::get<RadicalSum>(v_) *= o.exact()->conj() * *inv;
      return *this;
    }
  }
  long p = float_prec(*this, o);
  v_ = to_complex(p) / o.to_complex(p);
  return *this;
}

ExactScalar operator-(const ExactScalar& a) {
  if (const auto* r = a.exact()) return ExactScalar(-*r);
  return ExactScalar(-*a.flt());
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return *a.exact() == *b.exact();
  const BigComplex& x = *a.flt();
  const BigComplex& y = *b.flt();
  return x.prec() == y.prec() && mpfr_equal_p(x.re().get(), y.re().get()) &&
         mpfr_equal_p(x.im().get(), y.im().get());
}

ExactScalar exact_pow(const ExactScalar& base, long exp) {
  if (exp == 0) return ExactScalar(1);
  if (base.is_zero()) {
    if (exp < 0) throw DomainError("zero raised to a negative power");
    return base;
  }
  if (const auto* r = base.exact()) {
    if (exp > 0 || r->inverse()) return ExactScalar(r->pow(exp));
    ExactScalar inv = ExactScalar(1) / base;
    return exact_pow(inv, -exp);
  }
  ExactScalar result(1);
  ExactScalar b = exp < 0 ? ExactScalar(1) / base : base;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

ExactScalar real_power(const ExactScalar& x, const Rational& p, long prec) {
  if (is_integer(p)) return exact_pow(x, p.get_num().get_si());
  if (const auto* r = x.exact()) {
    if (auto v = r->real_power(p)) return ExactScalar(*v);
  }
  if (x.real_sign() <= 0) throw DomainError("real_power needs a positive base");
  long wp = std::max(prec, x.precision());
  BigComplex z = x.to_complex(wp + 16);
  BigFloat v = exp(BigFloat(p, wp + 16) * log(z.re()));
  BigComplex out(v, BigFloat(wp + 16));
  double rel = z.radius() / z.magnitude();
  return ExactScalar(out.with_radius(out.magnitude() * (std::fabs(p.get_d()) * rel + unit_roundoff(wp))));
}

ExactScalar exp_i_pi(const ExactScalar& s, long prec) {
  if (auto q = s.as_rational()) {
    if (auto r = RadicalSum::root_of_unity(*q)) return ExactScalar(*r);
  }
  long wp = std::max(prec, s.precision());
  return ExactScalar(exp_i_pi(s.to_complex(wp)));
}

ExactScalar log_real(const ExactScalar& x, long prec) {
  if (auto q = x.as_rational(); q && *q == 1) return ExactScalar(0);
  if (x.real_sign() <= 0) throw DomainError("log of a non-positive value");
  long wp = std::max(prec, x.precision());
  BigComplex z = x.to_complex(wp);
  BigFloat l = log(z.re());
  BigComplex out(l, BigFloat(wp));
  return ExactScalar(out.with_radius(z.radius() / z.magnitude() + std::fabs(l.to_double()) * unit_roundoff(wp)));
}

ExactScalar to_float(const ExactScalar& x, long prec) { return ExactScalar(x.to_complex(prec)); }

ExactScalar abs_real(const ExactScalar& x) { return x.real_sign() < 0 ? -x : x; }

bool numerically_zero(const ExactScalar& x, double scale) {
  if (x.is_exact()) return x.is_zero();
  double m = x.magnitude();
  return m <= 8 * x.radius() || m <= std::ldexp(scale, static_cast<int>(16 - x.precision()));
}

}  // namespace zetalab
