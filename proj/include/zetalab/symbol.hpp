#pragma once

// Classical pseudodifferential symbols on the circle.
//
// A symbol of order m is kept as homogeneous components p_d(x, xi) for
// d = m, m-1, ..., m-N. On each ray (xi > 0, xi < 0) the component is
// p_d^{+/-}(x) |xi|^d, where p_d^{+/-} is an r x r matrix of trigonometric
// polynomials sum_f c_f e^{i f x} with Gaussian-rational c_f.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/scalar.hpp"

namespace zetalab {

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const Gaussian& c) { if (!c.is_zero()) c_[0] = c; }  // NOLINT
  TrigPoly(long c) : TrigPoly(Gaussian(c)) {}  // NOLINT
  static TrigPoly mode(long freq, const Gaussian& c);

  const std::map<long, Gaussian>& coeffs() const { return c_; }
  Gaussian coeff(long freq) const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  // c e^{i f x} with c != 0.
  bool is_monomial() const { return c_.size() == 1; }

  // D_x = -i d/dx: e^{ifx} -> f e^{ifx}.
  TrigPoly dx() const;
  TrigPoly conj() const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator-(const TrigPoly& a);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const Gaussian& s, const TrigPoly& a);
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add(long f, const Gaussian& c);
  std::map<long, Gaussian> c_;
};

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(long rank) : r_(rank), e_(static_cast<std::size_t>(rank * rank)) {}
  static SymMatrix identity(long rank);
  static SymMatrix scalar(long rank, const TrigPoly& p);

  long rank() const { return r_; }
  TrigPoly& at(long i, long j) { return e_[static_cast<std::size_t>(i * r_ + j)]; }
  const TrigPoly& at(long i, long j) const { return e_[static_cast<std::size_t>(i * r_ + j)]; }
  bool is_zero() const;
  bool is_constant() const;
  TrigPoly trace() const;
  SymMatrix dx() const;
  SymMatrix conj_transpose() const;

  SymMatrix& operator+=(const SymMatrix& o);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a);
  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(const Gaussian& s, const SymMatrix& a);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.r_ == b.r_ && a.e_ == b.e_; }
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

 private:
  long r_ = 0;
  std::vector<TrigPoly> e_;
};

struct RayComponent {
  SymMatrix plus;   // xi > 0
  SymMatrix minus;  // xi < 0
  friend bool operator==(const RayComponent& a, const RayComponent& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
};

inline constexpr long kDefaultTruncation = 6;

class SymbolExpansion {
 public:
  enum class Mode { ConstantExact, TrigFourier };

  SymbolExpansion(long order, long truncation, long rank);

  long order() const { return order_; }
  long truncation() const { return N_; }
  long rank() const { return rank_; }
  long lowest_degree() const { return order_ - N_; }
  // Derived from the stored coefficients.
  Mode mode() const;

  // Zero for degrees without a stored component; TruncationError below the
  // lowest degree.
  RayComponent component(long degree) const;
  void set_component(long degree, RayComponent c);
  const std::map<long, RayComponent>& components() const { return comps_; }

  SymbolExpansion truncated(long truncation) const;
  friend bool operator==(const SymbolExpansion& a, const SymbolExpansion& b);

  std::string to_string() const;

 private:
  long order_;
  long N_;
  long rank_;
  std::map<long, RayComponent> comps_;
};

// Builders for common scalar symbols.
// c * xi^d on both rays (a differential symbol when d >= 0).
SymbolExpansion symbol_xi_power(long d, long truncation = kDefaultTruncation, const Gaussian& c = Gaussian(1));
// c * |xi|^d.
SymbolExpansion symbol_abs_xi_power(long d, long truncation = kDefaultTruncation, const Gaussian& c = Gaussian(1));
SymbolExpansion symbol_identity(long rank = 1, long truncation = kDefaultTruncation);
// sum_j a_j(x) D_x^j with coefficient functions a_j; a differential operator.
SymbolExpansion symbol_differential(const std::vector<TrigPoly>& coeffs, long truncation = kDefaultTruncation);

SymbolExpansion symbol_add(const SymbolExpansion& A, const SymbolExpansion& B);
SymbolExpansion symbol_scale(const SymbolExpansion& A, const Gaussian& c);
SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B);
SymbolExpansion parametrix(const SymbolExpansion& A);
SymbolExpansion power_int(const SymbolExpansion& A, long k);
std::pair<SymbolExpansion, SymbolExpansion> abs_and_sign(const SymbolExpansion& A);

// p_{-1}(x, +1) + p_{-1}(x, -1); the residue density is this matrix over 2 pi.
SymMatrix residue_density(const SymbolExpansion& A);
ExactScalar ncr(const SymbolExpansion& A);
bool is_odd_class(const SymbolExpansion& A);
bool is_differential(const SymbolExpansion& A);

}  // namespace zetalab
