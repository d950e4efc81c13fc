#pragma once

// Truncated expansions sign * A * k^e * (1 + sum_j b_j k^{-j}) of eigenvalue
// laws, and the maps that perturbations apply to them.

#include <string>
#include <vector>

#include "zetalab/scalar.hpp"

namespace zetalab {

inline constexpr long kDefaultSeriesDepth = 12;

struct SpectralMapSpec {
  enum class Kind { Shift, Scale, AddInvPow, FEpsC, Abs, SignPow };

  Kind kind = Kind::Shift;
  Rational a;        // Shift
  Rational epsilon;  // Scale, FEpsC
  Rational c;        // AddInvPow, FEpsC
  long n = 0;        // AddInvPow, FEpsC
  Rational p;        // SignPow

  // lambda -> lambda + a
  static SpectralMapSpec shift(const Rational& a);
  // lambda -> lambda + eps |lambda|
  static SpectralMapSpec scale(const Rational& eps);
  // lambda -> lambda + c sign(lambda) |lambda|^{-n}
  static SpectralMapSpec add_inv_pow(const Rational& c, long n);
  // f_{eps,c}(lambda) = lambda + eps |lambda| + c sign(lambda) |lambda + eps |lambda||^{-n}
  static SpectralMapSpec f_eps_c(const Rational& eps, const Rational& c, long n);
  static SpectralMapSpec abs();
  // lambda -> sign(lambda) |lambda|^p
  static SpectralMapSpec sign_pow(const Rational& p);

  std::string describe() const;
  friend bool operator==(const SpectralMapSpec& x, const SpectralMapSpec& y);
};

class AsymptoticSeries {
 public:
  AsymptoticSeries() = default;
  // A law that is exactly sign * A * k^e * (1 + sum b_j k^{-j}) with finitely many terms.
  static AsymptoticSeries exact(int sign, ExactScalar A, Rational e, std::vector<ExactScalar> b = {});
  // A truncated expansion valid through k^{-depth}.
  static AsymptoticSeries truncated(int sign, ExactScalar A, Rational e, std::vector<ExactScalar> b, long depth);
  // sign * k^e
  static AsymptoticSeries monomial(int sign, const Rational& e);

  int sign() const { return sign_; }
  const ExactScalar& A() const { return A_; }
  const Rational& e() const { return e_; }
  const std::vector<ExactScalar>& b() const { return b_; }
  // Number of justified correction terms. Terminating laws report the
  // length of b but every further coefficient is known to be zero.
  long depth() const { return depth_; }
  bool terminating() const { return terminating_; }

  // b_j with b_0 = 1; TruncationError past the depth of a non-terminating series.
  ExactScalar coefficient(long j) const;
  // The (truncated) series evaluated at k; exact for exact data and integer k.
  ExactScalar value(const ExactScalar& k, long prec = kDefaultPrecision) const;
  // max_j |b_j|^{1/j} over the stored coefficients.
  double correction_radius() const;

  AsymptoticSeries with_sign(int s) const;

  std::string to_string() const;
  friend bool operator==(const AsymptoticSeries& x, const AsymptoticSeries& y);

 private:
  int sign_ = 1;
  ExactScalar A_ = ExactScalar(1);
  Rational e_ = 1;
  std::vector<ExactScalar> b_;
  long depth_ = 0;
  bool terminating_ = true;
};

// Coefficients w_0..w_T of (1 + sum_j b_j x^j)^p.
std::vector<ExactScalar> binomial_series(const std::vector<ExactScalar>& b, const ExactScalar& p, long T);
// The same together with dw/dp.
void binomial_series_dp(const std::vector<ExactScalar>& b, const ExactScalar& p, long T,
                        std::vector<ExactScalar>& w, std::vector<ExactScalar>& dw);

AsymptoticSeries series_add(const AsymptoticSeries& u, const AsymptoticSeries& v);
AsymptoticSeries series_pow(const AsymptoticSeries& u, const Rational& p, long max_depth = kDefaultSeriesDepth);
AsymptoticSeries series_scale(const AsymptoticSeries& u, const ExactScalar& factor);
AsymptoticSeries series_compose_map(const AsymptoticSeries& u, const SpectralMapSpec& map,
                                    long max_depth = kDefaultSeriesDepth);

// The map applied to one exact eigenvalue.
ExactScalar apply_map(const ExactScalar& lambda, const SpectralMapSpec& map, long prec = kDefaultPrecision);

}  // namespace zetalab
