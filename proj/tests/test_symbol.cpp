#include <doctest.h>

#include <random>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/symbol.hpp"

using namespace zetalab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

SymMatrix s1(const TrigPoly& p) { return SymMatrix::scalar(1, p); }

// scalar entry of one ray
TrigPoly at(const SymbolExpansion& A, long d, int ray) {
  RayComponent c = A.component(d);
  return (ray > 0 ? c.plus : c.minus).at(0, 0);
}

SymbolExpansion coeff_times_xi(const TrigPoly& a, long N = kDefaultTruncation) {
  SymbolExpansion s(1, N, 1);
  s.set_component(1, {s1(a), s1(-a)});
  return s;
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(compose(symbol_xi_power(1), symbol_xi_power(1)) == symbol_xi_power(2));

  TrigPoly a = TrigPoly::mode(1, Gaussian(2)) + TrigPoly(Gaussian(q(1, 3)));
  TrigPoly b = TrigPoly::mode(-2, Gaussian(q(1), q(1)));
  auto ab = compose(coeff_times_xi(a), coeff_times_xi(b));
  CHECK(at(ab, 2, +1) == a * b);
  CHECK(at(ab, 2, -1) == a * b);
  CHECK(at(ab, 1, +1) == a * b.dx());
  CHECK(at(ab, 1, -1) == -(a * b.dx()));
  CHECK(at(ab, 0, +1).is_zero());

  std::mt19937_64 rng(7);
  auto B = random_trig_symbol(rng, 2, 4);
  CHECK(compose(symbol_identity(1, 4), B) == B);
  CHECK(compose(B, symbol_identity(1, 4)) == B);
}

TEST_CASE("constant coefficient composition is pointwise") {
  auto A = symbol_shift(symbol_xi_power(1), q(2, 3));
  auto B = symbol_abs_xi_power(-2, kDefaultTruncation, Gaussian(q(5)));
  auto AB = compose(A, B);
  CHECK(AB.mode() == SymbolExpansion::Mode::ConstantExact);
  CHECK(at(AB, -1, +1) == TrigPoly(Gaussian(5)));
  CHECK(at(AB, -1, -1) == TrigPoly(Gaussian(-5)));
  CHECK(at(AB, -2, +1) == TrigPoly(Gaussian(q(10, 3))));
  CHECK(AB.truncation() == kDefaultTruncation);
}

TEST_CASE("parametrix examples") {
  CHECK(parametrix(symbol_xi_power(1)) == symbol_xi_power(-1));
  CHECK(parametrix(symbol_xi_power(1, kDefaultTruncation, Gaussian(2))) ==
        symbol_xi_power(-1, kDefaultTruncation, Gaussian(q(1, 2))));

  Rational a = q(-2, 7);
  auto P = parametrix(symbol_shift(symbol_xi_power(1), a));
  for (long j = 0; j <= kDefaultTruncation; ++j) {
    Rational c = pow(-a, j);
    CHECK(at(P, -1 - j, +1) == TrigPoly(Gaussian(c)));
    CHECK(at(P, -1 - j, -1) == TrigPoly(Gaussian((j % 2 == 0) ? Rational(-c) : c)));
  }
}

TEST_CASE("parametrix of trig symbols") {
  // e^{ix} xi + cos x: unit times monomial principal part
  TrigPoly cosx = TrigPoly::mode(1, Gaussian(q(1, 2))) + TrigPoly::mode(-1, Gaussian(q(1, 2)));
  auto A = symbol_add(coeff_times_xi(TrigPoly::mode(1, Gaussian(1))), symbol_differential({cosx}));
  auto Q = parametrix(A);
  CHECK(compose(A, Q) == symbol_identity(1, kDefaultTruncation));

  auto bad = coeff_times_xi(TrigPoly(Gaussian(2)) + cosx);
  CHECK_THROWS_AS(parametrix(bad), RepresentationError);

  SymbolExpansion degenerate(1, 3, 1);
  degenerate.set_component(0, {s1(TrigPoly(1)), s1(TrigPoly(1))});
  CHECK_THROWS_AS(parametrix(degenerate), EllipticityError);
}

TEST_CASE("integer powers") {
  CHECK(power_int(symbol_xi_power(1), -3) == symbol_xi_power(-3));
  Rational a = q(3, 5);
  auto A = symbol_shift(symbol_xi_power(1), a);
  CHECK(power_int(A, -1) == parametrix(A));
  auto inv2 = power_int(A, -2);
  CHECK(inv2.order() == -2);
  CHECK(at(inv2, -2, +1) == TrigPoly(1));
  CHECK(at(inv2, -3, +1) == TrigPoly(Gaussian(-2 * a)));
  CHECK(at(inv2, -3, -1) == TrigPoly(Gaussian(2 * a)));
  CHECK(power_int(A, 0) == symbol_identity(1, kDefaultTruncation));
  CHECK(power_int(A, 2) == compose(A, A));
}

TEST_CASE("absolute value and sign") {
  auto [absx, F] = abs_and_sign(symbol_xi_power(1));
  CHECK(absx == symbol_abs_xi_power(1));
  CHECK(at(F, 0, +1) == TrigPoly(1));
  CHECK(at(F, 0, -1) == TrigPoly(-1));

  Rational a = q(1, 3);
  auto [absA, FA] = abs_and_sign(symbol_shift(symbol_xi_power(1), a));
  CHECK(at(absA, 1, +1) == TrigPoly(1));
  CHECK(at(absA, 1, -1) == TrigPoly(1));
  CHECK(at(absA, 0, +1) == TrigPoly(Gaussian(a)));
  CHECK(at(absA, 0, -1) == TrigPoly(Gaussian(-a)));
  for (long d = -1; d >= absA.lowest_degree(); --d) CHECK(absA.component(d) == RayComponent{s1({}), s1({})});
  CHECK(compose(FA, FA) == symbol_identity(1, kDefaultTruncation));

  auto [absm, Fm] = abs_and_sign(symbol_xi_power(1, kDefaultTruncation, Gaussian(-1)));
  CHECK(absm == symbol_abs_xi_power(1));
  CHECK(at(Fm, 0, +1) == TrigPoly(-1));
  CHECK(at(Fm, 0, -1) == TrigPoly(1));
}

TEST_CASE("absolute value with a potential") {
  TrigPoly V = TrigPoly::mode(1, Gaussian(q(1, 2))) + TrigPoly::mode(-1, Gaussian(q(1, 2))) + TrigPoly(Gaussian(q(1, 4)));
  auto A = symbol_add(symbol_xi_power(1), symbol_differential({V}));
  auto [absA, F] = abs_and_sign(A);
  CHECK(compose(absA, absA) == compose(A, A));
  CHECK(compose(F, F) == symbol_identity(1, kDefaultTruncation));
  ExactScalar r = ncr(power_int(absA, -1));
  CHECK(r == ExactScalar(2));
  CHECK(ncr(F).is_zero());
}

TEST_CASE("matrix absolute values") {
  SymbolExpansion D(1, 4, 2);
  SymMatrix sigma(2);
  sigma.at(0, 1) = TrigPoly(1);
  sigma.at(1, 0) = TrigPoly(1);
  D.set_component(1, {sigma, -sigma});
  SymMatrix mass(2);
  mass.at(0, 0) = TrigPoly(Gaussian(q(1, 2)));
  mass.at(1, 1) = TrigPoly(Gaussian(q(-1, 2)));
  D.set_component(0, {mass, mass});
  auto [absD, F] = abs_and_sign(D);
  CHECK(compose(absD, absD) == compose(D, D));
  CHECK(compose(F, F) == symbol_identity(2, 4));
  CHECK(ncr(power_int(absD, -1)) == ExactScalar(4));

  SymbolExpansion diag(1, 4, 2);
  SymMatrix d(2);
  d.at(0, 0) = TrigPoly(2);
  d.at(1, 1) = TrigPoly(-3);
  diag.set_component(1, {d, -d});
  auto [absG, G] = abs_and_sign(diag);
  CHECK(compose(absG, absG) == compose(diag, diag));

  SymbolExpansion awkward(1, 4, 2);
  SymMatrix w(2);
  w.at(0, 0) = TrigPoly(1);
  w.at(0, 1) = TrigPoly(1);
  w.at(1, 0) = TrigPoly(1);
  awkward.set_component(1, {w, -w});
  CHECK_THROWS_AS(abs_and_sign(awkward), RepresentationError);
}

TEST_CASE("residue density and noncommutative residue") {
  auto inv_abs = symbol_abs_xi_power(-1);
  CHECK(residue_density(inv_abs) == s1(TrigPoly(2)));
  CHECK(ncr(inv_abs) == ExactScalar(2));
  CHECK(residue_density(symbol_xi_power(-1)).is_zero());
  CHECK(ncr(symbol_xi_power(1)).is_zero());
  CHECK_THROWS_AS(ncr(symbol_abs_xi_power(1, 1)), TruncationError);
}

TEST_CASE("odd class predicate") {
  CHECK(is_odd_class(symbol_xi_power(1)));
  CHECK_FALSE(is_odd_class(symbol_abs_xi_power(1)));
  CHECK(is_odd_class(symbol_xi_power(-1)));
  CHECK(is_differential(symbol_xi_power(2)));
  CHECK_FALSE(is_differential(symbol_xi_power(-1)));
}

TEST_CASE("trace property on random pairs") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 20; ++i) {
    long oa = static_cast<long>(rng() % 5) - 2;
    long ob = static_cast<long>(rng() % 4) - 1 - (oa > 1 ? oa : 0);
    auto A = random_trig_symbol(rng, oa, 5);
    auto B = random_trig_symbol(rng, ob, 5);
    CHECK(ncr(compose(A, B)) == ncr(compose(B, A)));
  }
  // a(x) xi against xi^{-2}, truncation 4
  TrigPoly a = TrigPoly::mode(2, Gaussian(3)) + TrigPoly::mode(-1, Gaussian(q(1), q(-2)));
  auto A = coeff_times_xi(a, 4);
  auto B = symbol_xi_power(-2, 4);
  CHECK(ncr(compose(A, B)) == ncr(compose(B, A)));
}

TEST_CASE("differential symbols have zero residue") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10; ++i) {
    auto R = random_trig_symbol(rng, 3, 3);
    std::vector<TrigPoly> coeffs;
    for (long d = 0; d <= 3; ++d) coeffs.push_back(at(R, d, +1));
    auto D = symbol_differential(coeffs);
    CHECK(is_differential(D));
    CHECK(ncr(D).is_zero());
  }
}

TEST_CASE("odd class closure") {
  TrigPoly V = TrigPoly::mode(1, Gaussian(q(1, 2), q(1, 3))) + TrigPoly(Gaussian(q(2)));
  auto A = symbol_add(coeff_times_xi(TrigPoly::mode(-1, Gaussian(3))), symbol_differential({V}));
  auto B = symbol_differential({TrigPoly(1), TrigPoly::mode(2, Gaussian(q(1, 5))), TrigPoly(1)});
  CHECK(is_odd_class(compose(A, B)));
  CHECK(is_odd_class(parametrix(A)));
  for (long k = 1; k <= 3; ++k) CHECK(ncr(power_int(A, -k)).is_zero());
}

TEST_CASE("binomial expansion") {
  for (long k : {1L, 2L, 3L}) {
    for (Rational a : {q(1, 2), q(-1, 3), q(2)}) {
      const long J = 4;
      auto lhs = power_int(symbol_shift(symbol_xi_power(1), a), -k);
      for (long d = -k; d >= -k - J; --d) {
        RayComponent expect{s1({}), s1({})};
        for (long j = 0; j <= J; ++j) {
          auto term = power_int(symbol_xi_power(1), -(k + j));
          if (d > term.order()) continue;
          RayComponent c = term.component(d);
          Gaussian w(binomial(Rational(-k), j) * pow(a, j));
          expect.plus += w * c.plus;
          expect.minus += w * c.minus;
        }
        CHECK(lhs.component(d) == expect);
      }
    }
  }
}

TEST_CASE("positivity of the residue of |P|^{-1}") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    // xi + V with V real
    auto R = random_trig_symbol(rng, 0, 0, 2);
    TrigPoly v = at(R, 0, +1);
    TrigPoly V = v + v.conj();
    auto A = symbol_add(symbol_xi_power(1, 4), symbol_differential({V}, 4));
    auto [absA, F] = abs_and_sign(A);
    ExactScalar r = ncr(power_int(absA, -1));
    CHECK(r.real_sign() > 0);
  }
}
