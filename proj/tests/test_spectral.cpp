#include <doctest.h>

#include <cmath>
#include <complex>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/spectral.hpp"

using namespace zetalab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::complex<double> cd(const ExactScalar& x) { return {x.real(), x.imag()}; }

std::map<Rational, ExactScalar> poles_of(const SpectralModel& m, SpectralFunction f) {
  return make_function(m, f).nonzero_poles();
}

}  // namespace

TEST_CASE("half zeta pole tables of the basic models") {
  auto c = half_zeta(circle_dirac(), +1).nonzero_poles();
  REQUIRE(c.size() == 1);
  CHECK(c.at(q(1)) == ExactScalar(1));

  auto s = half_zeta(sphere2_dirac(), +1).nonzero_poles();
  REQUIRE(s.size() == 1);
  CHECK(s.at(q(2)) == ExactScalar(2));

  auto t = half_zeta(shift(sphere2_dirac(), q(1, 3)), +1).nonzero_poles();
  REQUIRE(t.size() == 2);
  CHECK(t.at(q(2)) == ExactScalar(2));
  CHECK(t.at(q(1)) == ExactScalar(q(-2, 3)));
}

TEST_CASE("shifted sphere residues") {
  for (Rational a : {q(1, 4), q(1, 3), q(1, 2)}) {
    SpectralModel m = shift(sphere2_dirac(), a);
    auto eta = make_function(m, SpectralFunction::Eta);
    auto za = make_function(m, SpectralFunction::ZetaAbs);
    CHECK(eta.residue(q(1)) == ExactScalar(Rational(-4 * a)));
    CHECK(eta.residue(q(2)) == ExactScalar(0));
    CHECK(za.residue(q(2)) == ExactScalar(4));
    CHECK(za.residue(q(1)) == ExactScalar(0));
  }
}

TEST_CASE("residues below the validity floor are refused") {
  auto f = make_function(sphere2_dirac(), SpectralFunction::ZetaAbs, 2);
  CHECK_THROWS_AS(f.residue(f.validity_floor()), InsufficientDepthError);
  CHECK_THROWS_AS(f.residue(f.validity_floor() - 1), InsufficientDepthError);
}

TEST_CASE("eta at the origin") {
  auto eta = make_function(circle_dirac_shift(q(1, 3)), SpectralFunction::Eta);
  CHECK(evaluate(eta, ExactScalar(0)) == ExactScalar(q(1, 3)));
  // symmetric spectra have vanishing eta
  CHECK(evaluate(make_function(circle_dirac(), SpectralFunction::Eta), ExactScalar(0)).is_zero());
  // eta(-i d/dtheta + a; 0) = 1 - 2a for 0 < a < 1
  auto e2 = make_function(circle_dirac_shift(q(1, 4)), SpectralFunction::Eta);
  CHECK(evaluate(e2, ExactScalar(0)) == ExactScalar(q(1, 2)));
}

TEST_CASE("zeta of the circle at 2") {
  auto za = make_function(circle_dirac(), SpectralFunction::ZetaAbs);
  ExactScalar v = evaluate(za, ExactScalar(2));
  CHECK(std::fabs(v.real() - M_PI * M_PI / 3) < 1e-14);
  CHECK_THROWS_AS(evaluate(za, ExactScalar(1)), PoleError);
}

TEST_CASE("circle laplacian pole") {
  auto p = poles_of(circle_laplacian(), SpectralFunction::ZetaAbs);
  REQUIRE(p.size() == 1);
  CHECK(p.at(q(1, 2)) == ExactScalar(1));
}

TEST_CASE("epsilon scaling residue closed form") {
  for (Rational e : {q(1, 10), q(1, 2), q(-1, 3)}) {
    auto eta = make_function(epsilon_scale(circle_dirac(), e), SpectralFunction::Eta);
    CHECK(eta.residue(q(1)) == ExactScalar(Rational(-2 * e / (1 - e * e))));
  }
}

TEST_CASE("zeta up minus zeta down") {
  SpectralModel m = circle_dirac_shift(q(1, 3));
  auto fs = spectral_functions(m);
  auto zm = half_zeta(m, -1);
  for (Rational s : {q(37, 100), q(5, 2), q(-7, 3)}) {
    ExactScalar S(s);
    auto up = cd(evaluate(fs.zeta_up, S)), down = cd(evaluate(fs.zeta_down, S));
    auto minus = cd(zm.laurent(S).value);
    double x = s.get_d();
    std::complex<double> rhs = std::complex<double>(0, 2 * std::sin(M_PI * x)) * minus;
    CHECK(std::abs(up - down - rhs) < 1e-12 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("odd-dimension entire combinations") {
  // n = 1: zeta_up and zeta_down have no poles on the circle
  for (Rational a : {q(0), q(1, 3), q(-2, 5)}) {
    SpectralModel m = shift(circle_dirac(), a);
    CHECK(poles_of(m, SpectralFunction::ZetaUp).empty());
    CHECK(poles_of(m, SpectralFunction::ZetaDown).empty());
  }
}

TEST_CASE("direct sums approach the continuation") {
  for (const auto& entry : library_entries()) {
    SpectralModel m = library_model(entry.name, q(1, 3));
    Rational s0 = make_rational(m.dimension, m.order) + 2;
    for (auto fn : {SpectralFunction::ZetaAbs, SpectralFunction::Eta}) {
      auto data = make_function(m, fn);
      auto v = cd(evaluate(data, ExactScalar(s0)));
      auto direct = truncated_spectral_sum(m, fn, s0.get_d(), 1e4);
      INFO(entry.name << " " << function_name(fn));
      CHECK(std::abs(std::complex<double>(direct) - v) < 1e-6);
    }
  }
}

TEST_CASE("sphere3 residues") {
  // sum 2 k(k+1) (k+1/2)^{-s}: k(k+1) = (k+1/2)^2 - 1/4
  auto za = poles_of(sphere3_dirac(), SpectralFunction::ZetaAbs);
  CHECK(za.at(q(3)) == ExactScalar(2));
  CHECK(za.at(q(1)) == ExactScalar(q(-1, 2)));
  CHECK(poles_of(sphere3_dirac(), SpectralFunction::Eta).empty());
}
