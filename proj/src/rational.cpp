#include "zetalab/rational.hpp"

#include <cctype>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& q, long exp) {
  if (exp < 0) {
    if (sgn(q) == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -exp);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(exp));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational binomial(const Rational& p, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (p - i);
    r /= (i + 1);
  }
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DomainError("inverse of zero");
  return {re / n, -im / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re);
  std::string out = to_string(z.re);
  if (sgn(z.im) < 0) {
    out += "-" + to_string(Rational(-z.im));
  } else {
    out += "+" + to_string(z.im);
  }
  return out + " i";
}

Gaussian parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty() || s.back() != 'i') return Gaussian(parse_rational(s));
  s.remove_suffix(1);
  s = trim(s);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    std::string_view im = trim(s);
    if (im.empty() || im == "+") return {Rational(0), Rational(1)};
    if (im == "-") return {Rational(0), Rational(-1)};
    return {Rational(0), parse_rational(im)};
  }
  Rational re = parse_rational(s.substr(0, split));
  std::string_view im = trim(s.substr(split + 1));
  Rational imv = im.empty() ? Rational(1) : parse_rational(im);
  if (s[split] == '-') imv = -imv;
  return {re, imv};
}

}  // namespace zetalab
