#include "zetalab/symbol.hpp"

#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

// ---------------------------------------------------------------- TrigPoly

TrigPoly TrigPoly::mode(long freq, const Gaussian& c) {
  TrigPoly p;
  p.add(freq, c);
  return p;
}

Gaussian TrigPoly::coeff(long freq) const {
  auto it = c_.find(freq);
  return it == c_.end() ? Gaussian() : it->second;
}

void TrigPoly::add(long f, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.emplace(f, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

TrigPoly TrigPoly::dx() const {
  TrigPoly out;
  for (const auto& [f, c] : c_) out.add(f, Gaussian(f) * c);
  return out;
}

TrigPoly TrigPoly::conj() const {
  TrigPoly out;
  for (const auto& [f, c] : c_) out.add(-f, c.conj());
  return out;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [f, c] : o.c_) add(f, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  for (const auto& [f, c] : o.c_) add(f, -c);
  return *this;
}

TrigPoly operator-(const TrigPoly& a) {
  TrigPoly out;
  for (const auto& [f, c] : a.c_) out.add(f, -c);
  return out;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out;
  for (const auto& [f, c] : a.c_)
    for (const auto& [g, d] : b.c_) out.add(f + g, c * d);
  return out;
}

TrigPoly operator*(const Gaussian& s, const TrigPoly& a) {
  TrigPoly out;
  if (s.is_zero()) return out;
  for (const auto& [f, c] : a.c_) out.add(f, s * c);
  return out;
}

std::string TrigPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [f, c] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + zetalab::to_string(c) + ")";
    if (f != 0) out += "e^{" + std::to_string(f) + "ix}";
  }
  return out;
}

// --------------------------------------------------------------- SymMatrix

SymMatrix SymMatrix::identity(long rank) { return scalar(rank, TrigPoly(1)); }

SymMatrix SymMatrix::scalar(long rank, const TrigPoly& p) {
  SymMatrix m(rank);
  for (long i = 0; i < rank; ++i) m.at(i, i) = p;
  return m;
}

bool SymMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool SymMatrix::is_constant() const {
  for (const auto& p : e_)
    if (!p.is_constant()) return false;
  return true;
}

TrigPoly SymMatrix::trace() const {
  TrigPoly t;
  for (long i = 0; i < r_; ++i) t += at(i, i);
  return t;
}

SymMatrix SymMatrix::dx() const {
  SymMatrix out(r_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].dx();
  return out;
}

SymMatrix SymMatrix::conj_transpose() const {
  SymMatrix out(r_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < r_; ++j) out.at(i, j) = at(j, i).conj();
  return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (r_ == 0) return *this = o;
  if (o.r_ == 0) return *this;
  if (o.r_ != r_) throw DomainError("matrix rank mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

SymMatrix operator-(const SymMatrix& a) { return Gaussian(-1) * a; }

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return a + (-b); }

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.r_ != b.r_) throw DomainError("matrix rank mismatch");
  SymMatrix out(a.r_);
  for (long i = 0; i < a.r_; ++i)
    for (long j = 0; j < a.r_; ++j) {
      TrigPoly s;
      for (long k = 0; k < a.r_; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      out.at(i, j) = std::move(s);
    }
  return out;
}

SymMatrix operator*(const Gaussian& s, const SymMatrix& a) {
  SymMatrix out(a.r_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = s * a.e_[i];
  return out;
}

// --------------------------------------------------------- SymbolExpansion

SymbolExpansion::SymbolExpansion(long order, long truncation, long rank) : order_(order), N_(truncation), rank_(rank) {
  if (truncation < 0) throw DomainError("truncation must be non-negative");
  if (rank < 1) throw DomainError("rank must be positive");
}

SymbolExpansion::Mode SymbolExpansion::mode() const {
  for (const auto& [d, c] : comps_)
    if (!c.plus.is_constant() || !c.minus.is_constant()) return Mode::TrigFourier;
  return Mode::ConstantExact;
}

RayComponent SymbolExpansion::component(long degree) const {
  if (degree < lowest_degree())
    throw TruncationError("symbol component of degree " + std::to_string(degree) + " lies below the truncation " +
                          std::to_string(lowest_degree()));
  auto it = comps_.find(degree);
  if (it != comps_.end()) return it->second;
  return {SymMatrix(rank_), SymMatrix(rank_)};
}

void SymbolExpansion::set_component(long degree, RayComponent c) {
  if (degree > order_ || degree < lowest_degree())
    throw DomainError("degree " + std::to_string(degree) + " outside the symbol range");
  if (c.plus.rank() == 0) c.plus = SymMatrix(rank_);
  if (c.minus.rank() == 0) c.minus = SymMatrix(rank_);
  if (c.plus.rank() != rank_ || c.minus.rank() != rank_) throw DomainError("component rank mismatch");
  if (c.plus.is_zero() && c.minus.is_zero())
    comps_.erase(degree);
  else
    comps_[degree] = std::move(c);
}

SymbolExpansion SymbolExpansion::truncated(long truncation) const {
  SymbolExpansion out(order_, truncation, rank_);
  for (const auto& [d, c] : comps_)
    if (d >= out.lowest_degree()) out.comps_[d] = c;
  return out;
}

bool operator==(const SymbolExpansion& a, const SymbolExpansion& b) {
  return a.order_ == b.order_ && a.N_ == b.N_ && a.rank_ == b.rank_ && a.comps_ == b.comps_;
}

std::string SymbolExpansion::to_string() const {
  std::ostringstream os;
  os << "symbol(order=" << order_ << ", N=" << N_ << ", rank=" << rank_ << ")";
  for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
    os << "\n  deg " << it->first << ":";
    for (int ray = 0; ray < 2; ++ray) {
      const SymMatrix& m = ray == 0 ? it->second.plus : it->second.minus;
      os << (ray == 0 ? " [+] " : " [-] ");
      for (long i = 0; i < rank_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < rank_; ++j) os << (j ? ", " : "") << m.at(i, j).to_string();
      }
    }
  }
  return os.str();
}

// --------------------------------------------------------------- builders

SymbolExpansion symbol_xi_power(long d, long truncation, const Gaussian& c) {
  SymbolExpansion s(d, truncation, 1);
  s.set_component(d, {SymMatrix::scalar(1, c), SymMatrix::scalar(1, d % 2 == 0 ? c : -c)});
  return s;
}

SymbolExpansion symbol_abs_xi_power(long d, long truncation, const Gaussian& c) {
  SymbolExpansion s(d, truncation, 1);
  s.set_component(d, {SymMatrix::scalar(1, c), SymMatrix::scalar(1, c)});
  return s;
}

SymbolExpansion symbol_identity(long rank, long truncation) {
  SymbolExpansion s(0, truncation, rank);
  s.set_component(0, {SymMatrix::identity(rank), SymMatrix::identity(rank)});
  return s;
}

SymbolExpansion symbol_differential(const std::vector<TrigPoly>& coeffs, long truncation) {
  long order = static_cast<long>(coeffs.size()) - 1;
  while (order > 0 && coeffs[static_cast<std::size_t>(order)].is_zero()) --order;
  SymbolExpansion s(std::max(order, 0L), truncation, 1);
  for (long d = 0; d <= order && d - s.order() >= -truncation; ++d) {
    const TrigPoly& a = coeffs[static_cast<std::size_t>(d)];
    s.set_component(d, {SymMatrix::scalar(1, a), SymMatrix::scalar(1, d % 2 == 0 ? a : -a)});
  }
  return s;
}

// ------------------------------------------------------------- operations

namespace {

// Components of the formal product, degrees >= low; A and B are taken as
// exact (zero below their stored components).
std::map<long, RayComponent> compose_raw(const SymbolExpansion& A, const SymbolExpansion& B, long low) {
  std::map<long, RayComponent> out;
  const long r = A.rank();
  for (const auto& [da, ca] : A.components()) {
    for (const auto& [db, cb] : B.components()) {
      SymMatrix bp = cb.plus, bm = cb.minus;
      for (long j = 0; da - j + db >= low; ++j) {
        Rational coef = binomial(Rational(da), j);
        if (sgn(coef) == 0) break;
        if (j > 0) {
          bp = bp.dx();
          bm = bm.dx();
          if (bp.is_zero() && bm.is_zero()) break;
        }
        const long d = da - j + db;
        auto [it, fresh] = out.try_emplace(d, RayComponent{SymMatrix(r), SymMatrix(r)});
        it->second.plus += Gaussian(coef) * (ca.plus * bp);
        it->second.minus += Gaussian(j % 2 == 0 ? coef : Rational(-coef)) * (ca.minus * bm);
      }
    }
  }
  return out;
}

void check_compatible(const SymbolExpansion& A, const SymbolExpansion& B) {
  if (A.rank() != B.rank()) throw DomainError("symbol ranks differ");
}

Gaussian trig_constant(const TrigPoly& p, const char* what) {
  if (!p.is_constant()) throw RepresentationError(std::string(what) + " is not constant in x");
  return p.coeff(0);
}

// det and adjugate of a small matrix of trig polynomials by cofactor expansion.
TrigPoly det_of(const SymMatrix& m, std::vector<long> rows, std::vector<long> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  TrigPoly out;
  const long r0 = rows[0];
  std::vector<long> rest(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const TrigPoly& x = m.at(r0, cols[k]);
    if (x.is_zero()) continue;
    std::vector<long> sub = cols;
    sub.erase(sub.begin() + static_cast<long>(k));
    TrigPoly t = x * det_of(m, rest, sub);
    if (k % 2 == 0)
      out += t;
    else
      out -= t;
  }
  return out;
}

SymMatrix invert(const SymMatrix& m) {
  const long r = m.rank();
  std::vector<long> idx(static_cast<std::size_t>(r));
  for (long i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  TrigPoly det = det_of(m, idx, idx);
  if (det.is_zero()) throw EllipticityError("principal symbol is not invertible");
  if (!det.is_monomial())
    throw RepresentationError("principal determinant " + det.to_string() + " is not a unit times a Fourier monomial");
  const auto& [f, c] = *det.coeffs().begin();
  TrigPoly det_inv = TrigPoly::mode(-f, c.inverse());
  SymMatrix out(r);
  if (r == 1) {
    out.at(0, 0) = det_inv;
    return out;
  }
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      std::vector<long> rows, cols;
      for (long k = 0; k < r; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      TrigPoly cof = det_of(m, rows, cols);
      out.at(i, j) = (i + j) % 2 == 0 ? det_inv * cof : -(det_inv * cof);
    }
  return out;
}

// Solves P X + X P = Y for the positive principal part P of |A| on one ray.
struct RayRoot {
  enum class Kind { Scalar, Diagonal } kind = Kind::Scalar;
  std::vector<Rational> p;  // diagonal entries (one entry for Scalar)
  SymMatrix matrix(long r) const {
    SymMatrix m(r);
    for (long i = 0; i < r; ++i) m.at(i, i) = TrigPoly(Gaussian(kind == Kind::Scalar ? p[0] : p[static_cast<std::size_t>(i)]));
    return m;
  }
  SymMatrix solve(const SymMatrix& Y) const {
    const long r = Y.rank();
    SymMatrix X(r);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < r; ++j) {
        Rational den = kind == Kind::Scalar ? Rational(2 * p[0])
                                            : Rational(p[static_cast<std::size_t>(i)] + p[static_cast<std::size_t>(j)]);
        X.at(i, j) = Gaussian(Rational(1) / den) * Y.at(i, j);
      }
    return X;
  }
};

RayRoot principal_root(const SymMatrix& M) {
  const long r = M.rank();
  RayRoot root;
  if (r == 1) {
    Gaussian a = trig_constant(M.at(0, 0), "principal coefficient");
    if (a.is_zero()) throw EllipticityError("principal symbol vanishes");
    if (!a.is_real()) throw DomainError("principal symbol is not selfadjoint");
    root.p = {abs(a.re)};
    return root;
  }
  std::vector<std::vector<Gaussian>> m(static_cast<std::size_t>(r), std::vector<Gaussian>(static_cast<std::size_t>(r)));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = trig_constant(M.at(i, j), "matrix symbol entry");
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].conj())
        throw DomainError("principal symbol is not hermitian");
  bool diagonal = true;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      if (i != j && !m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) diagonal = false;
  if (diagonal) {
    root.kind = RayRoot::Kind::Diagonal;
    for (long i = 0; i < r; ++i) {
      const Rational& v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].re;
      if (sgn(v) == 0) throw EllipticityError("principal symbol is singular");
      root.p.push_back(abs(v));
    }
    return root;
  }
  SymMatrix sq = M * M;
  Gaussian c = trig_constant(sq.at(0, 0), "squared principal symbol");
  if (!(sq == SymMatrix::scalar(r, TrigPoly(c))) || !c.is_real() || sgn(c.re) <= 0)
    throw RepresentationError("matrix absolute value needs a diagonal symbol or one squaring to a scalar");
  mpz_class num = c.re.get_num(), den = c.re.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw RepresentationError("scalar square " + zetalab::to_string(c.re) + " is not a rational square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root.p = {Rational(rn, rd)};
  root.p[0].canonicalize();
  return root;
}

}  // namespace

SymbolExpansion symbol_add(const SymbolExpansion& A, const SymbolExpansion& B) {
  check_compatible(A, B);
  const long order = std::max(A.order(), B.order());
  const long low = std::max(A.lowest_degree(), B.lowest_degree());
  SymbolExpansion out(order, order - low, A.rank());
  for (long d = order; d >= low; --d) {
    RayComponent a = d <= A.order() ? A.component(d) : RayComponent{SymMatrix(A.rank()), SymMatrix(A.rank())};
    RayComponent b = d <= B.order() ? B.component(d) : RayComponent{SymMatrix(A.rank()), SymMatrix(A.rank())};
    out.set_component(d, {a.plus + b.plus, a.minus + b.minus});
  }
  return out;
}

SymbolExpansion symbol_scale(const SymbolExpansion& A, const Gaussian& c) {
  SymbolExpansion out(A.order(), A.truncation(), A.rank());
  for (const auto& [d, comp] : A.components()) out.set_component(d, {c * comp.plus, c * comp.minus});
  return out;
}

SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B) {
  check_compatible(A, B);
  const long order = A.order() + B.order();
  const long low = std::max(A.lowest_degree() + B.order(), B.lowest_degree() + A.order());
  SymbolExpansion out(order, order - low, A.rank());
  for (auto& [d, c] : compose_raw(A, B, low)) out.set_component(d, std::move(c));
  return out;
}

SymbolExpansion parametrix(const SymbolExpansion& A) {
  const long m = A.order();
  const long N = A.truncation();
  RayComponent principal = A.component(m);
  RayComponent inv{invert(principal.plus), invert(principal.minus)};
  SymbolExpansion B(-m, N, A.rank());
  B.set_component(-m, inv);
  for (long j = 1; j <= N; ++j) {
    auto prod = compose_raw(A, B, -j);
    auto it = prod.find(-j);
    if (it == prod.end()) continue;
    B.set_component(-m - j, {-(inv.plus * it->second.plus), -(inv.minus * it->second.minus)});
  }
  return B;
}

SymbolExpansion power_int(const SymbolExpansion& A, long k) {
  if (k == 0) return symbol_identity(A.rank(), A.truncation());
  SymbolExpansion base = k < 0 ? parametrix(A) : A;
  SymbolExpansion out = base;
  for (long i = 1; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

std::pair<SymbolExpansion, SymbolExpansion> abs_and_sign(const SymbolExpansion& A) {
  const long m = A.order();
  const long N = A.truncation();
  const long r = A.rank();
  if (m < 1) throw DomainError("absolute value needs a symbol of positive order");
  if (r > 1 && A.mode() != SymbolExpansion::Mode::ConstantExact)
    throw RepresentationError("matrix absolute value is limited to constant coefficients");
  RayComponent principal = A.component(m);
  RayRoot rp = principal_root(principal.plus), rm = principal_root(principal.minus);
  SymbolExpansion S = compose(A, A);
  SymbolExpansion absA(m, N, r);
  absA.set_component(m, {rp.matrix(r), rm.matrix(r)});
  for (long i = 1; i <= N; ++i) {
    const long d = 2 * m - i;
    auto prod = compose_raw(absA, absA, d);
    RayComponent target = S.component(d);
    auto it = prod.find(d);
    SymMatrix yp = target.plus, ym = target.minus;
    if (it != prod.end()) {
      yp = yp - it->second.plus;
      ym = ym - it->second.minus;
    }
    absA.set_component(m - i, {rp.solve(yp), rm.solve(ym)});
  }
  SymbolExpansion F = compose(A, parametrix(absA));
  return {absA, F};
}

SymMatrix residue_density(const SymbolExpansion& A) {
  if (A.lowest_degree() > -1) throw TruncationError("symbol truncation does not reach degree -1");
  if (A.order() < -1) return SymMatrix(A.rank());
  RayComponent c = A.component(-1);
  return c.plus + c.minus;
}

ExactScalar ncr(const SymbolExpansion& A) { return ExactScalar(residue_density(A).trace().coeff(0)); }

bool is_odd_class(const SymbolExpansion& A) {
  for (const auto& [d, c] : A.components()) {
    if (d % 2 == 0 ? c.minus != c.plus : c.minus != -c.plus) return false;
  }
  return true;
}

bool is_differential(const SymbolExpansion& A) {
  if (!is_odd_class(A)) return false;
  for (const auto& [d, c] : A.components())
    if (d < 0) return false;
  return true;
}

}  // namespace zetalab
