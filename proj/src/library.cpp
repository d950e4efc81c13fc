#include "zetalab/library.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/perturb.hpp"

namespace zetalab {

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

// +-law on two branches sharing a multiplicity.
std::vector<Branch> symmetric(const AsymptoticSeries& law, const Polynomial& mult, long k0) {
  return {Branch(law.with_sign(1), mult, k0), Branch(law.with_sign(-1), mult, k0)};
}

}  // namespace

SpectralModel circle_dirac() {
  SpectralModel m;
  m.name = "circle_dirac";
  m.branches = symmetric(AsymptoticSeries::monomial(1, 1), poly({1}), 1);
  m.kernel_dim = 1;
  m.order = 1;
  m.dimension = 1;
  return m;
}

SpectralModel circle_dirac_shift(const Rational& a) { return shift(circle_dirac(), a); }

SpectralModel circle_laplacian() {
  SpectralModel m;
  m.name = "circle_laplacian";
  m.branches = {Branch(AsymptoticSeries::monomial(1, 2), poly({2}), 1)};
  m.kernel_dim = 1;
  m.order = 2;
  m.dimension = 1;
  return m;
}

SpectralModel sphere2_dirac() {
  SpectralModel m;
  m.name = "sphere2_dirac";
  m.branches = symmetric(AsymptoticSeries::monomial(1, 1), poly({0, 2}), 1);
  m.order = 1;
  m.dimension = 2;
  return m;
}

SpectralModel sphere3_dirac() {
  SpectralModel m;
  m.name = "sphere3_dirac";
  m.branches = symmetric(AsymptoticSeries::exact(1, ExactScalar(1), 1, {ExactScalar(Rational(1, 2))}), poly({0, 1, 1}), 1);
  m.order = 1;
  m.dimension = 3;
  return m;
}

const std::vector<LibraryEntry>& library_entries() {
  static const std::vector<LibraryEntry> entries = {
      {"circle_dirac", "-i d/dtheta on S^1: eigenvalues k in Z, each once", 1, 1},
      {"circle_dirac_shift", "-i d/dtheta + a on S^1: eigenvalues k + a", 1, 1},
      {"circle_laplacian", "-d^2/dtheta^2 on S^1: k^2 twice for k >= 1, kernel 1", 1, 2},
      {"sphere2_dirac", "Dirac operator on S^2: +-k with multiplicity 2k", 2, 1},
      {"sphere3_dirac", "Dirac operator on S^3: +-(k+1/2) with multiplicity k(k+1)", 3, 1},
  };
  return entries;
}

SpectralModel library_model(const std::string& name, const Rational& a) {
  if (name == "circle_dirac") return circle_dirac();
  if (name == "circle_dirac_shift") return circle_dirac_shift(a);
  if (name == "circle_laplacian") return circle_laplacian();
  if (name == "sphere2_dirac") return sphere2_dirac();
  if (name == "sphere3_dirac") return sphere3_dirac();
  std::string known;
  for (const auto& e : library_entries()) known += (known.empty() ? "" : ", ") + e.name;
  throw ParseError("unknown model '" + name + "' (known: " + known + ")");
}

SymbolExpansion circle_symbol(const Rational& a, long truncation) {
  return symbol_shift(symbol_xi_power(1, truncation), a);
}

SymbolExpansion random_trig_symbol(std::mt19937_64& rng, long order, long truncation, long max_freq) {
  auto pick = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  auto poly = [&]() {
    TrigPoly p;
    for (long f = -max_freq; f <= max_freq; ++f) {
      if (pick(0, 2) == 0) continue;
      p += TrigPoly::mode(f, Gaussian(make_rational(pick(-5, 5), pick(1, 4)), make_rational(pick(-3, 3), pick(1, 3))));
    }
    return p;
  };
  SymbolExpansion s(order, truncation, 1);
  for (long d = order; d >= order - truncation; --d)
    s.set_component(d, {SymMatrix::scalar(1, poly()), SymMatrix::scalar(1, poly())});
  return s;
}

}  // namespace zetalab
