#pragma once

// Perturbations of spectral models and symbols: P + a, P + eps|P|,
// P_eps + c F |P_eps|^{-n}, order reduction and its inverse.

#include <utility>

#include "zetalab/spectral.hpp"
#include "zetalab/symbol.hpp"

namespace zetalab {

struct PerturbationParams {
  Rational a;
  Rational epsilon;
  Rational c;
  long m = 0;  // 0 means the order of the model
  // Skip the gap condition of power_op; the result carries a note.
  bool force = false;

  void validate() const;
};

// Eigenvalues that change sign are moved to the exceptional list, exact
// zero landings to the kernel.
SpectralModel shift(const SpectralModel& model, const Rational& a);
SpectralModel epsilon_scale(const SpectralModel& model, const Rational& epsilon);
SpectralModel ec_perturb(const SpectralModel& model, const Rational& epsilon, const Rational& c);
// F(P)|P|^{1/m}; the result has order 1.
SpectralModel root_op(const SpectralModel& model);
// F(P)|P|^{p}; the inverse of root_op for p = m.
SpectralModel sign_power(const SpectralModel& model, long p);
// F(Q_{eps,c} + a)|Q_{eps,c} + a|^m with Q the root of the model.
SpectralModel power_op(const SpectralModel& model, const PerturbationParams& params);

// Smallest nonzero |lambda|.
ExactScalar spectral_gap(const SpectralModel& model);

struct UV {
  Rational u;
  Rational v;
};
UV u_v(const Rational& epsilon, long n);

SymbolExpansion symbol_shift(const SymbolExpansion& A, const Rational& a);

}  // namespace zetalab
