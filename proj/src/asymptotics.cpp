#include "zetalab/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr long kUnbounded = std::numeric_limits<long>::max() / 4;

// Signed coefficients a_j of k^{e-j}; valid through index `last`, or all
// further coefficients vanish when `terminating`.
struct Raw {
  Rational e;
  std::vector<ExactScalar> a;
  long last = 0;
  bool terminating = true;

  ExactScalar at(long j) const {
    if (j >= 0 && j < static_cast<long>(a.size())) return a[static_cast<std::size_t>(j)];
    return ExactScalar(0);
  }
};

Raw to_raw(const AsymptoticSeries& u) {
  Raw r;
  r.e = u.e();
  ExactScalar lead = u.sign() < 0 ? -u.A() : u.A();
  r.a.push_back(lead);
  for (const auto& bj : u.b()) r.a.push_back(lead * bj);
  r.terminating = u.terminating();
  r.last = u.terminating() ? kUnbounded : u.depth();
  return r;
}

AsymptoticSeries from_raw(const Raw& r) {
  long n = static_cast<long>(r.a.size());
  double scale = 0;
  for (const auto& x : r.a) scale = std::max(scale, x.magnitude());
  long j0 = 0;
  while (j0 < n && j0 <= r.last && numerically_zero(r.a[static_cast<std::size_t>(j0)], scale)) ++j0;
  if (j0 >= n || j0 > r.last) throw DomainError("series vanishes identically to the available depth");
  const ExactScalar& lead = r.a[static_cast<std::size_t>(j0)];
  if (!lead.is_real()) throw DomainError("leading coefficient is not real");
  int sign = lead.real_sign();
  std::vector<ExactScalar> b;
  long stop = r.terminating ? n - 1 : std::min(n - 1, r.last);
  for (long j = j0 + 1; j <= stop; ++j) b.push_back(r.a[static_cast<std::size_t>(j)] / lead);
  if (r.terminating) {
    while (!b.empty() && b.back().is_exact() && b.back().is_zero()) b.pop_back();
    return AsymptoticSeries::exact(sign, sign < 0 ? -lead : lead, r.e - j0, std::move(b));
  }
  long depth = r.last - j0;
  b.resize(static_cast<std::size_t>(depth));
  return AsymptoticSeries::truncated(sign, sign < 0 ? -lead : lead, r.e - j0, std::move(b), depth);
}

}  // namespace

SpectralMapSpec SpectralMapSpec::shift(const Rational& a) {
  SpectralMapSpec m;
  m.kind = Kind::Shift;
  m.a = a;
  return m;
}

SpectralMapSpec SpectralMapSpec::scale(const Rational& eps) {
  if (zetalab::abs(eps) >= 1) throw ParameterError("epsilon must lie in (-1, 1)");
  SpectralMapSpec m;
  m.kind = Kind::Scale;
  m.epsilon = eps;
  return m;
}

SpectralMapSpec SpectralMapSpec::add_inv_pow(const Rational& c, long n) {
  SpectralMapSpec m;
  m.kind = Kind::AddInvPow;
  m.c = c;
  m.n = n;
  return m;
}

SpectralMapSpec SpectralMapSpec::f_eps_c(const Rational& eps, const Rational& c, long n) {
  if (zetalab::abs(eps) >= 1) throw ParameterError("epsilon must lie in (-1, 1)");
  SpectralMapSpec m;
  m.kind = Kind::FEpsC;
  m.epsilon = eps;
  m.c = c;
  m.n = n;
  return m;
}

SpectralMapSpec SpectralMapSpec::abs() {
  SpectralMapSpec m;
  m.kind = Kind::Abs;
  return m;
}

SpectralMapSpec SpectralMapSpec::sign_pow(const Rational& p) {
  SpectralMapSpec m;
  m.kind = Kind::SignPow;
  m.p = p;
  return m;
}

std::string SpectralMapSpec::describe() const {
  switch (kind) {
    case Kind::Shift: return "shift(" + zetalab::to_string(a) + ")";
    case Kind::Scale: return "scale(" + zetalab::to_string(epsilon) + ")";
    case Kind::AddInvPow: return "add_inv_pow(" + zetalab::to_string(c) + "," + std::to_string(n) + ")";
    case Kind::FEpsC:
      return "f_eps_c(" + zetalab::to_string(epsilon) + "," + zetalab::to_string(c) + "," + std::to_string(n) + ")";
    case Kind::Abs: return "abs";
    case Kind::SignPow: return "sign_pow(" + zetalab::to_string(p) + ")";
  }
  return "?";
}

bool operator==(const SpectralMapSpec& x, const SpectralMapSpec& y) {
  return x.kind == y.kind && x.a == y.a && x.epsilon == y.epsilon && x.c == y.c && x.n == y.n && x.p == y.p;
}

AsymptoticSeries AsymptoticSeries::exact(int sign, ExactScalar A, Rational e, std::vector<ExactScalar> b) {
  if (sign != 1 && sign != -1) throw DomainError("series sign must be +1 or -1");
  if (!A.is_real() || A.real_sign() <= 0) throw DomainError("series leading coefficient must be positive");
  AsymptoticSeries s;
  s.sign_ = sign;
  s.A_ = std::move(A);
  s.e_ = std::move(e);
  s.b_ = std::move(b);
  s.depth_ = static_cast<long>(s.b_.size());
  s.terminating_ = true;
  return s;
}

AsymptoticSeries AsymptoticSeries::truncated(int sign, ExactScalar A, Rational e, std::vector<ExactScalar> b,
                                             long depth) {
  AsymptoticSeries s = exact(sign, std::move(A), std::move(e), std::move(b));
  if (depth < 0 || static_cast<long>(s.b_.size()) != depth) throw DomainError("series depth mismatch");
  s.terminating_ = false;
  return s;
}

AsymptoticSeries AsymptoticSeries::monomial(int sign, const Rational& e) { return exact(sign, ExactScalar(1), e); }

ExactScalar AsymptoticSeries::coefficient(long j) const {
  if (j == 0) return ExactScalar(1);
  if (j < 0) return ExactScalar(0);
  if (j <= static_cast<long>(b_.size())) return b_[static_cast<std::size_t>(j - 1)];
  if (terminating_) return ExactScalar(0);
  throw TruncationError("series coefficient beyond the truncation depth");
}

ExactScalar AsymptoticSeries::value(const ExactScalar& k, long prec) const {
  ExactScalar inv = ExactScalar(1) / k;
  ExactScalar acc(0);
  for (auto it = b_.rbegin(); it != b_.rend(); ++it) acc = (acc + *it) * inv;
  acc += ExactScalar(1);
  ExactScalar ke = real_power(k, e_, prec);
  ExactScalar v = A_ * ke * acc;
  return sign_ < 0 ? -v : v;
}

double AsymptoticSeries::correction_radius() const {
  double r = 0;
  for (std::size_t j = 0; j < b_.size(); ++j) {
    double m = b_[j].magnitude();
    if (m > 0) r = std::max(r, std::pow(m, 1.0 / static_cast<double>(j + 1)));
  }
  return r;
}

AsymptoticSeries AsymptoticSeries::with_sign(int s) const {
  AsymptoticSeries out = *this;
  out.sign_ = s;
  return out;
}

std::string AsymptoticSeries::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  out += "(" + A_.display() + ")*k^(" + zetalab::to_string(e_) + ")*(1";
  for (std::size_t j = 0; j < b_.size(); ++j) {
    if (b_[j].is_exact() && b_[j].is_zero()) continue;
    out += " + (" + b_[j].display() + ")*k^-" + std::to_string(j + 1);
  }
  if (!terminating_) out += " + O(k^-" + std::to_string(depth_ + 1) + ")";
  return out + ")";
}

bool operator==(const AsymptoticSeries& x, const AsymptoticSeries& y) {
  return x.sign_ == y.sign_ && x.A_ == y.A_ && x.e_ == y.e_ && x.b_ == y.b_ && x.depth_ == y.depth_ &&
         x.terminating_ == y.terminating_;
}

std::vector<ExactScalar> binomial_series(const std::vector<ExactScalar>& b, const ExactScalar& p, long T) {
  std::vector<ExactScalar> w, dw;
  w.reserve(static_cast<std::size_t>(T + 1));
  w.emplace_back(1);
  ExactScalar p1 = p + ExactScalar(1);
  long L = static_cast<long>(b.size());
  for (long n = 1; n <= T; ++n) {
    ExactScalar acc(0);
    for (long j = 1; j <= std::min(n, L); ++j) {
      const ExactScalar& bj = b[static_cast<std::size_t>(j - 1)];
      if (bj.is_exact() && bj.is_zero()) continue;
      acc += (p1 * ExactScalar(j) - ExactScalar(n)) * bj * w[static_cast<std::size_t>(n - j)];
    }
    w.push_back(acc / ExactScalar(n));
  }
  return w;
}

void binomial_series_dp(const std::vector<ExactScalar>& b, const ExactScalar& p, long T, std::vector<ExactScalar>& w,
                        std::vector<ExactScalar>& dw) {
  w.assign(1, ExactScalar(1));
  dw.assign(1, ExactScalar(0));
  ExactScalar p1 = p + ExactScalar(1);
  long L = static_cast<long>(b.size());
  for (long n = 1; n <= T; ++n) {
    ExactScalar acc(0), dacc(0);
    for (long j = 1; j <= std::min(n, L); ++j) {
      const ExactScalar& bj = b[static_cast<std::size_t>(j - 1)];
      if (bj.is_exact() && bj.is_zero()) continue;
      const ExactScalar& wn = w[static_cast<std::size_t>(n - j)];
      acc += (p1 * ExactScalar(j) - ExactScalar(n)) * bj * wn;
      dacc += ExactScalar(j) * bj * wn + (p1 * ExactScalar(j) - ExactScalar(n)) * bj * dw[static_cast<std::size_t>(n - j)];
    }
    w.push_back(acc / ExactScalar(n));
    dw.push_back(dacc / ExactScalar(n));
  }
}

AsymptoticSeries series_add(const AsymptoticSeries& u, const AsymptoticSeries& v) {
  Rational delta = u.e() - v.e();
  if (!is_integer(delta)) {
    throw LadderMisalignmentError("exponents " + to_string(u.e()) + " and " + to_string(v.e()) +
                                  " differ by a non-integer");
  }
  Raw ru = to_raw(u), rv = to_raw(v);
  Rational E = std::max(u.e(), v.e());
  long su = Integer(E - u.e()).get_si();
  long sv = Integer(E - v.e()).get_si();
  Raw r;
  r.e = E;
  r.terminating = ru.terminating && rv.terminating;
  long lu = ru.terminating ? kUnbounded : ru.last + su;
  long lv = rv.terminating ? kUnbounded : rv.last + sv;
  r.last = std::min(lu, lv);
  long len = std::max(static_cast<long>(ru.a.size()) + su, static_cast<long>(rv.a.size()) + sv);
  if (!r.terminating) len = std::min(len, r.last + 1);
  for (long j = 0; j < len; ++j) r.a.push_back(ru.at(j - su) + rv.at(j - sv));
  if (!r.terminating) {
    while (static_cast<long>(r.a.size()) <= r.last) r.a.emplace_back(0);
  }
  return from_raw(r);
}

AsymptoticSeries series_scale(const AsymptoticSeries& u, const ExactScalar& factor) {
  if (!factor.is_real() || factor.is_zero()) throw DomainError("series scale factor must be real and nonzero");
  int s = factor.real_sign();
  ExactScalar mag = s < 0 ? -factor : factor;
  if (u.terminating()) return AsymptoticSeries::exact(u.sign() * s, u.A() * mag, u.e(), u.b());
  return AsymptoticSeries::truncated(u.sign() * s, u.A() * mag, u.e(), u.b(), u.depth());
}

AsymptoticSeries series_pow(const AsymptoticSeries& u, const Rational& p, long max_depth) {
  if (u.sign() < 0) throw DomainError("series_pow needs a positive series; take the absolute value first");
  ExactScalar Ap = real_power(u.A(), p);
  Rational e = u.e() * p;
  bool finite = u.terminating() && is_integer(p) && sgn(p) >= 0;
  if (finite) {
    long T = p.get_num().get_si() * static_cast<long>(u.b().size());
    auto w = binomial_series(u.b(), ExactScalar(p), T);
    return AsymptoticSeries::exact(1, Ap, e, std::vector<ExactScalar>(w.begin() + 1, w.end()));
  }
  long T = u.terminating() ? max_depth : u.depth();
  auto w = binomial_series(u.b(), ExactScalar(p), T);
  return AsymptoticSeries::truncated(1, Ap, e, std::vector<ExactScalar>(w.begin() + 1, w.end()), T);
}

AsymptoticSeries series_compose_map(const AsymptoticSeries& u, const SpectralMapSpec& map, long max_depth) {
  using K = SpectralMapSpec::Kind;
  switch (map.kind) {
    case K::Shift: {
      if (sgn(map.a) == 0) return u;
      auto c = AsymptoticSeries::exact(sgn(map.a), ExactScalar(abs(map.a)), Rational(0));
      return series_add(u, c);
    }
    case K::Scale: return series_scale(u, ExactScalar(Rational(1) + map.epsilon * u.sign()));
    case K::AddInvPow: {
      if (sgn(map.c) == 0) return u;
      auto w = series_pow(u.with_sign(1), Rational(-map.n), max_depth);
      return series_add(u, series_scale(w, ExactScalar(map.c * u.sign())));
    }
    case K::FEpsC: {
      auto scaled = series_compose_map(u, SpectralMapSpec::scale(map.epsilon), max_depth);
      return series_compose_map(scaled, SpectralMapSpec::add_inv_pow(map.c, map.n), max_depth);
    }
    case K::Abs: return u.with_sign(1);
    case K::SignPow: return series_pow(u.with_sign(1), map.p, max_depth).with_sign(u.sign());
  }
  return u;
}

ExactScalar apply_map(const ExactScalar& lambda, const SpectralMapSpec& map, long prec) {
  using K = SpectralMapSpec::Kind;
  int s = lambda.real_sign();
  switch (map.kind) {
    case K::Shift: return lambda + ExactScalar(map.a);
    case K::Scale: return lambda * ExactScalar(Rational(1) + map.epsilon * s);
    case K::AddInvPow: {
      if (sgn(map.c) == 0) return lambda;
      if (s == 0) throw DomainError("add_inv_pow applied to a zero eigenvalue");
      return lambda + ExactScalar(map.c * s) * exact_pow(abs_real(lambda), -map.n);
    }
    case K::FEpsC: {
      ExactScalar mid = apply_map(lambda, SpectralMapSpec::scale(map.epsilon), prec);
      return apply_map(mid, SpectralMapSpec::add_inv_pow(map.c, map.n), prec);
    }
    case K::Abs: return abs_real(lambda);
    case K::SignPow: {
      if (s == 0) return lambda;
      ExactScalar m = real_power(abs_real(lambda), map.p, prec);
      return s < 0 ? -m : m;
    }
  }
  return lambda;
}

}  // namespace zetalab
