#pragma once

// Built-in spectral models and symbols. Derivations live in docs/models.md.

#include <random>
#include <string>
#include <vector>

#include "zetalab/spectral.hpp"
#include "zetalab/symbol.hpp"

namespace zetalab {

// -i d/dtheta on the circle: spectrum Z.
SpectralModel circle_dirac();
SpectralModel circle_dirac_shift(const Rational& a);
// -d^2/dtheta^2: k^2 twice for k >= 1, kernel of dimension 1.
SpectralModel circle_laplacian();
// Dirac operator of the round 2-sphere: +-k with multiplicity 2k.
SpectralModel sphere2_dirac();
// Dirac operator of the round 3-sphere: +-(k + 1/2) with multiplicity k(k+1).
SpectralModel sphere3_dirac();

struct LibraryEntry {
  std::string name;
  std::string description;
  long dimension;
  long order;
};

const std::vector<LibraryEntry>& library_entries();
// Accepts the entry names; circle_dirac_shift takes its parameter from `a`.
SpectralModel library_model(const std::string& name, const Rational& a = Rational(0));

// Symbol of -i d/dx + a.
SymbolExpansion circle_symbol(const Rational& a = Rational(0), long truncation = kDefaultTruncation);

// Scalar trig-Fourier symbol with every component in [order - truncation, order]
// filled from small random Gaussian rationals at frequencies |f| <= max_freq.
SymbolExpansion random_trig_symbol(std::mt19937_64& rng, long order, long truncation, long max_freq = 2);

}  // namespace zetalab
