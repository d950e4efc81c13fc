#include "zetalab/polynomial.hpp"

#include <algorithm>
#include <mutex>

#include "zetalab/errors.hpp"
#include "zetalab/radical.hpp"

namespace zetalab {

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, v] : factorize(n)) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (long k = 1; k <= v; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis({Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw DomainError("interpolate: repeated node");
      basis = basis * Polynomial({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    out = out + basis * Polynomial({ys[i] / denom});
  }
  return out;
}

std::vector<Rational> Polynomial::rational_roots() const {
  std::vector<Rational> roots;
  if (c_.size() <= 1) return roots;
  // Clear denominators.
  Integer l = 1;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& q : c_) z.push_back(Integer(q * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == z.size()) return roots;
  for (const auto& p : divisors(z[low])) {
    for (const auto& q : divisors(z.back())) {
      for (int s : {1, -1}) {
        Rational cand(s * p, q);
        cand.canonicalize();
        if (sgn((*this)(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Rational mag = abs(c_[i]);
    if (out.empty()) {
      if (sgn(c_[i]) < 0) out += "-";
    } else {
      out += sgn(c_[i]) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out += zetalab::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Rational bernoulli_number(long n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  if (n < 0) throw DomainError("negative Bernoulli index");
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k<=m} binom(m+1, k) B_k = 0
  while (static_cast<long>(memo.size()) <= n) {
    long m = static_cast<long>(memo.size());
    Rational acc = 0;
    Integer binom = 1;
    for (long k = 0; k < m; ++k) {
      acc += Rational(binom) * memo[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    memo.push_back(-acc / (m + 1));
  }
  return memo[static_cast<std::size_t>(n)];
}

BernoulliPolynomial bernoulli_poly(long n) {
  if (n < 0) throw DomainError("negative Bernoulli degree");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  Integer binom = 1;
  for (long k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(n - k)] = Rational(binom) * bernoulli_number(k);
    binom = binom * (n - k) / (k + 1);
  }
  return Polynomial(std::move(c));
}

}  // namespace zetalab
