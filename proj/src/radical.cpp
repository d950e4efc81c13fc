#include "zetalab/radical.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr unsigned long kTrialDivisionBound = 1UL << 20;

// Fractional part in [0, 1) and integer part of a rational.
std::pair<Integer, Rational> split_integer(const Rational& e) {
  Integer fl = floor(e);
  return {fl, e - Rational(fl)};
}

Rational integer_power(const Integer& base, const Integer& exp) {
  long e = exp.get_si();
  return zetalab::pow(Rational(base), e);
}

// Multiply two canonical keys; integer carries go to the returned rational.
std::pair<Rational, RadicalKey> multiply_keys(const RadicalKey& a, const RadicalKey& b) {
  Rational carry = 1;
  RadicalKey out;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      out.factors.push_back(*ib++);
    } else {
      Rational e = ia->second + ib->second;
      auto [whole, frac] = split_integer(e);
      if (whole != 0) carry *= integer_power(ia->first, whole);
      if (sgn(frac) != 0) out.factors.emplace_back(ia->first, frac);
      ++ia;
      ++ib;
    }
  }
  return {carry, out};
}

// key^r, canonicalised.
std::pair<Rational, RadicalKey> power_key(const RadicalKey& k, const Rational& r) {
  Rational carry = 1;
  RadicalKey out;
  for (const auto& [base, e] : k.factors) {
    auto [whole, frac] = split_integer(e * r);
    if (whole != 0) carry *= integer_power(base, whole);
    if (sgn(frac) != 0) out.factors.emplace_back(base, frac);
  }
  return {carry, out};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::pair<Integer, long>> factorize(const Integer& n_in) {
  std::vector<std::pair<Integer, long>> out;
  Integer n = n_in;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (unsigned long p = 2; p < kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      long mult = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++mult;
      }
      out.emplace_back(Integer(p), mult);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  std::sort(out.begin(), out.end());
  return out;
}

RadicalSum::RadicalSum(const Rational& q) {
  if (sgn(q) != 0) terms_.emplace(RadicalKey{}, Gaussian(q));
}

RadicalSum::RadicalSum(const Gaussian& z) {
  if (!z.is_zero()) terms_.emplace(RadicalKey{}, z);
}

RadicalSum RadicalSum::rational_power(const Rational& q, const Rational& r) {
  if (sgn(q) <= 0) throw DomainError("rational_power needs a positive base");
  if (is_integer(r)) return RadicalSum(zetalab::pow(q, r.get_num().get_si()));
  Rational carry = 1;
  RadicalKey key;
  auto absorb = [&](const Integer& n, long sign) {
    for (const auto& [p, v] : factorize(n)) {
      auto [whole, frac] = split_integer(Rational(sign * v) * r);
      if (whole != 0) carry *= integer_power(p, whole);
      if (sgn(frac) != 0) key.factors.emplace_back(p, frac);
    }
  };
  absorb(q.get_num(), 1);
  absorb(q.get_den(), -1);
  std::sort(key.factors.begin(), key.factors.end());
  RadicalSum out;
  out.add_term(key, Gaussian(carry));
  return out;
}

std::optional<RadicalSum> RadicalSum::root_of_unity(const Rational& x_in) {
  // Reduce to [0, 2).
  Rational x = x_in - Rational(2 * floor(x_in / 2));
  const Integer& den = x.get_den();
  if (den == 1) return RadicalSum(x == 0 ? 1 : -1);
  if (den == 2) return RadicalSum(Gaussian(0, x == Rational(1, 2) ? 1 : -1));
  if (den != 3 && den != 4 && den != 6) return std::nullopt;
  int cos_sign = (x < Rational(1, 2) || x > Rational(3, 2)) ? 1 : -1;
  int sin_sign = x < 1 ? 1 : -1;
  RadicalSum half_sqrt3 = rational_power(3, Rational(1, 2)) * RadicalSum(Rational(1, 2));
  RadicalSum half_sqrt2 = rational_power(2, Rational(1, 2)) * RadicalSum(Rational(1, 2));
  RadicalSum c, s;
  if (den == 3) {
    c = RadicalSum(Rational(1, 2));
    s = half_sqrt3;
  } else if (den == 4) {
    c = half_sqrt2;
    s = half_sqrt2;
  } else {
    c = half_sqrt3;
    s = RadicalSum(Rational(1, 2));
  }
  return c * RadicalSum(cos_sign) + s * RadicalSum(Gaussian(0, sin_sign));
}

bool RadicalSum::is_gaussian() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool RadicalSum::is_rational() const { return is_gaussian() && is_real(); }

bool RadicalSum::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

std::optional<Rational> RadicalSum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second.re;
}

std::optional<Gaussian> RadicalSum::as_gaussian() const {
  if (!is_gaussian()) return std::nullopt;
  return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

RadicalSum RadicalSum::conj() const {
  RadicalSum out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

std::optional<RadicalSum> RadicalSum::inverse() const {
  if (terms_.empty()) throw DomainError("inverse of zero");
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, coef] = *terms_.begin();
  // p^e = p * p^(e-1)  =>  p^-e = p^(1-e) / p
  auto [carry, inv_key] = power_key(key, Rational(-1));
  RadicalSum out;
  out.add_term(inv_key, coef.inverse() * Gaussian(carry));
  return out;
}

RadicalSum RadicalSum::pow(long exp) const {
  if (exp < 0) {
    auto inv = inverse();
    if (!inv) throw DomainError("negative power of a non-invertible radical sum");
    return inv->pow(-exp);
  }
  RadicalSum result(1);
  RadicalSum base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return result;
}

std::optional<RadicalSum> RadicalSum::real_power(const Rational& r) const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, coef] = *terms_.begin();
  if (!coef.is_real() || sgn(coef.re) <= 0) return std::nullopt;
  auto [carry, pk] = power_key(key, r);
  RadicalSum coef_part = rational_power(coef.re, r);
  RadicalSum key_part;
  key_part.add_term(pk, Gaussian(carry));
  return coef_part * key_part;
}

int RadicalSum::real_sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second.re);
  for (long prec = 128; prec <= 16384; prec *= 2) {
    BigComplex v = to_complex(prec);
    double m = std::fabs(v.re().to_double());
    if (m > 8 * v.radius() && !v.re().is_zero()) return v.re().sign();
  }
  throw DomainError("unable to resolve sign of " + to_string());
}

BigComplex RadicalSum::to_complex(long prec) const {
  long wp = prec + 16;
  BigComplex acc(wp);
  for (const auto& [key, coef] : terms_) {
    BigFloat m(Rational(1), wp);
    for (const auto& [base, e] : key.factors) {
      m = m * exp(BigFloat(e, wp) * log(BigFloat(base, wp)));
    }
    BigComplex term(BigFloat(coef.re, wp) * m, BigFloat(coef.im, wp) * m);
    acc = acc + term.with_radius(term.magnitude() * unit_roundoff(wp) * (2 + key.factors.size()));
  }
  // Round to the requested precision.
  BigFloat re(prec), im(prec);
  mpfr_set(re.get(), acc.re().get(), MPFR_RNDN);
  mpfr_set(im.get(), acc.im().get(), MPFR_RNDN);
  BigComplex r(re, im);
  return r.with_radius(acc.radius() + r.magnitude() * unit_roundoff(prec));
}

void RadicalSum::add_term(const RadicalKey& key, const Gaussian& coef) {
  if (coef.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) {
  RadicalSum out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      auto [carry, key] = multiply_keys(ka, kb);
      out.add_term(key, ca * cb * Gaussian(carry));
    }
  }
  *this = std::move(out);
  return *this;
}

RadicalSum operator-(const RadicalSum& a) {
  RadicalSum out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coef] : terms_) {
    if (!out.empty()) out += " + ";
    if (key.empty()) {
      out += zetalab::to_string(coef);
      continue;
    }
    out += coef.is_real() ? zetalab::to_string(coef.re) : "(" + zetalab::to_string(coef) + ")";
    for (const auto& [base, e] : key.factors) {
      out += "*" + base.get_str() + "^(" + zetalab::to_string(e) + ")";
    }
  }
  return out;
}

RadicalSum RadicalSum::parse(const std::string& text) {
  RadicalSum out;
  std::string_view rest(text);
  while (true) {
    auto pos = rest.find(" + ");
    std::string_view term = trim(rest.substr(0, pos));
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    auto star = term.find('*');
    std::string_view coef_text = star == std::string_view::npos ? term : term.substr(0, star);
    coef_text = trim(coef_text);
    if (!coef_text.empty() && coef_text.front() == '(' && coef_text.back() == ')') {
      coef_text = coef_text.substr(1, coef_text.size() - 2);
    }
    RadicalSum value(parse_gaussian(coef_text));
    while (star != std::string_view::npos) {
      std::string_view tail = term.substr(star + 1);
      star = tail.find('*');
      std::string_view factor = trim(star == std::string_view::npos ? tail : tail.substr(0, star));
      term = tail;
      auto caret = factor.find("^(");
      if (caret == std::string_view::npos || factor.back() != ')') {
        throw ParseError("malformed radical factor in '" + text + "'");
      }
      Integer base(std::string(factor.substr(0, caret)), 10);
      Rational e = parse_rational(factor.substr(caret + 2, factor.size() - caret - 3));
      value *= rational_power(Rational(base), e);
    }
    out += value;
    if (pos == std::string_view::npos) break;
    rest = rest.substr(pos + 3);
  }
  return out;
}

}  // namespace zetalab
