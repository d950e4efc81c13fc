#include <doctest.h>

#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"

using namespace zetalab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

ExactScalar res(const SpectralModel& m, SpectralFunction f, const Rational& s) { return make_function(m, f).residue(s); }

bool same_spectrum(const SpectralModel& x, const SpectralModel& y) {
  return x.branches == y.branches && x.exceptional == y.exceptional && x.kernel_dim == y.kernel_dim &&
         x.order == y.order && x.dimension == y.dimension;
}

}  // namespace

TEST_CASE("shift without crossings") {
  SpectralModel m = shift(circle_dirac(), q(1, 3));
  REQUIRE(m.branches.size() == 2);
  CHECK(m.branches[0].eigenvalue(1) == ExactScalar(q(4, 3)));
  CHECK(m.branches[1].eigenvalue(1) == ExactScalar(q(-2, 3)));
  CHECK(m.kernel_dim == 0);
  REQUIRE(m.exceptional.size() == 1);
  CHECK(m.exceptional[0] == ExceptionalEigenvalue{ExactScalar(q(1, 3)), 1});
  CHECK(shift(circle_dirac(), q(0)) == circle_dirac());
  for (const auto& br : m.branches) CHECK(br.k0() == 1);
}

TEST_CASE("shift with crossings") {
  SpectralModel m = shift(circle_dirac(), q(3, 2));
  CHECK(m.kernel_dim == 0);
  REQUIRE(m.exceptional.size() == 2);
  CHECK(m.exceptional[0] == ExceptionalEigenvalue{ExactScalar(q(3, 2)), 1});
  CHECK(m.exceptional[1] == ExceptionalEigenvalue{ExactScalar(q(1, 2)), 1});
  CHECK(m.branches[1].k0() == 2);
  CHECK(m.branches[1].eigenvalue(2) == ExactScalar(q(-1, 2)));
  CHECK(m.branches[0].sign() == 1);
  CHECK(m.branches[1].sign() == -1);
  m.validate();

  SpectralModel z = shift(circle_dirac(), q(-1));
  CHECK(z.kernel_dim == 1);
  REQUIRE(z.exceptional.size() == 1);
  CHECK(z.exceptional[0].value == ExactScalar(-1));

  // the whole spectrum moves: eta(0) of -i d/dtheta + a depends only on a mod 1 away from crossings
  auto e = evaluate(make_function(m, SpectralFunction::Eta), ExactScalar(0));
  auto e2 = evaluate(make_function(circle_dirac_shift(q(1, 2)), SpectralFunction::Eta), ExactScalar(0));
  CHECK(e == e2);
}

TEST_CASE("epsilon scaling") {
  Rational eps = q(1, 2);
  SpectralModel m = epsilon_scale(circle_dirac(), eps);
  CHECK(res(m, SpectralFunction::Eta, q(1)) == ExactScalar(q(-4, 3)));
  CHECK(epsilon_scale(sphere2_dirac(), q(0)) == sphere2_dirac());
  UV uv = u_v(eps, 1);
  CHECK(res(m, SpectralFunction::Eta, q(1)) == ExactScalar(uv.v) * res(circle_dirac(), SpectralFunction::ZetaAbs, q(1)));
  CHECK(m.kernel_dim == 1);
  CHECK_THROWS_AS(epsilon_scale(circle_dirac(), q(1)), ParameterError);
}

TEST_CASE("eps-scaling residue identity") {
  for (auto base : {circle_dirac(), sphere2_dirac(), sphere3_dirac(), shift(sphere2_dirac(), q(1, 3))}) {
    const Rational n(base.dimension);
    for (Rational eps : {q(1, 10), q(1, 2)}) {
      UV uv = u_v(eps, base.dimension);
      SpectralModel pe = epsilon_scale(base, eps);
      ExactScalar lhs = res(pe, SpectralFunction::Eta, n);
      ExactScalar rhs = ExactScalar(uv.u) * res(base, SpectralFunction::Eta, n) +
                        ExactScalar(uv.v) * res(base, SpectralFunction::ZetaAbs, n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("ec perturbation") {
  Rational c = q(1, 5);
  SpectralModel m = ec_perturb(circle_dirac(), q(0), c);
  AsymptoticSeries law = m.branches[0].law(6);
  CHECK(law.A() == ExactScalar(1));
  CHECK(law.coefficient(1).is_zero());
  CHECK(law.coefficient(2) == ExactScalar(c));
  CHECK(law.coefficient(3).is_zero());
  CHECK(m.branches[0].eigenvalue(2) == ExactScalar(q(2) + c / 2));
  CHECK(m.branches[1].eigenvalue(2) == ExactScalar(q(-2) - c / 2));

  CHECK(ec_perturb(sphere2_dirac(), q(1, 3), q(0)) == epsilon_scale(sphere2_dirac(), q(1, 3)));

  // |P_{eps,c}| = |P_eps| + c |P_eps|^{-n}
  Rational eps = q(-1, 4);
  SpectralModel base = sphere2_dirac();
  SpectralModel pec = ec_perturb(base, eps, c);
  SpectralModel pe = epsilon_scale(base, eps);
  for (std::size_t b = 0; b < 2; ++b) {
    auto abs_pe = series_compose_map(pe.branches[b].law(8), SpectralMapSpec::abs(), 8);
    auto expect = series_add(abs_pe, series_scale(series_pow(abs_pe, q(-2), 8), ExactScalar(c)));
    auto got = series_compose_map(pec.branches[b].law(8), SpectralMapSpec::abs(), 8);
    CHECK(got.A() == expect.A());
    for (long j = 1; j <= 8; ++j) CHECK(got.coefficient(j) == expect.coefficient(j));
  }

  CHECK_THROWS_AS(ec_perturb(circle_dirac(), q(0), q(-1)), ParameterError);
  CHECK_THROWS_AS(ec_perturb(circle_dirac(), q(0), q(10)), ParameterError);
}

TEST_CASE("sign stability") {
  for (auto base : {circle_dirac(), sphere2_dirac(), sphere3_dirac()}) {
    SpectralModel a = epsilon_scale(base, q(2, 5));
    SpectralModel b = ec_perturb(base, q(-1, 3), q(1, 10));
    for (std::size_t i = 0; i < base.branches.size(); ++i) {
      CHECK(a.branches[i].sign() == base.branches[i].sign());
      CHECK(b.branches[i].sign() == base.branches[i].sign());
    }
    CHECK(a.exceptional.size() == base.exceptional.size());
    CHECK(b.kernel_dim == base.kernel_dim);
  }
}

TEST_CASE("root and power") {
  SpectralModel r = root_op(circle_laplacian());
  CHECK(r.order == 1);
  AsymptoticSeries law = r.branches[0].law(6);
  CHECK(law.e() == 1);
  CHECK(law.A() == ExactScalar(1));
  for (long j = 1; j <= 6; ++j) CHECK(law.coefficient(j).is_zero());
  for (long k = 1; k < 6; ++k) CHECK(r.branches[0].eigenvalue(k) == ExactScalar(k));
  r.validate();

  SpectralModel sq;
  sq.name = "sphere2_dirac_squared";
  sq.branches = {Branch(AsymptoticSeries::monomial(1, 2), Polynomial({0, 4}), 1)};
  sq.order = 2;
  sq.dimension = 2;
  sq.validate();
  SpectralModel sr = root_op(sq);
  for (long k = 1; k < 6; ++k) CHECK(sr.branches[0].eigenvalue(k) == ExactScalar(k));

  SpectralModel back = sign_power(r, 2);
  AsymptoticSeries again = back.branches[0].law(6);
  CHECK(again.e() == 2);
  for (long j = 1; j <= 6; ++j) CHECK(again.coefficient(j).is_zero());
}

TEST_CASE("order reduction preserves the pole correspondence") {
  SpectralModel lap = circle_laplacian();
  SpectralModel q1 = root_op(lap);
  auto big = make_function(lap, SpectralFunction::ZetaAbs, 12);
  auto small = make_function(q1, SpectralFunction::ZetaAbs, 12);
  CHECK(big.residue(q(1, 2)) == ExactScalar(1));
  CHECK(small.residue(q(1)) == ExactScalar(2));
  for (long k = 1; k >= -2; --k) {
    if (k == 0) continue;
    ExactScalar rb = big.residue(make_rational(k, 2));
    ExactScalar rs = small.residue(Rational(k));
    CHECK(rs == ExactScalar(2) * rb);
  }
}

TEST_CASE("power_op") {
  CHECK(power_op(sphere2_dirac(), {q(0), q(0), q(0), 1}) == sphere2_dirac());

  Rational a = q(1, 3), eps = q(1, 5), c = q(1, 7);
  SpectralModel composite = shift(ec_perturb(circle_dirac(), eps, c), a);
  CHECK(same_spectrum(power_op(circle_dirac(), {a, eps, c, 1}), composite));

  SpectralModel cube = power_op(circle_dirac(), {q(1, 2), q(0), q(0), 3});
  CHECK(cube.order == 3);
  CHECK(cube.kernel_dim == 0);
  REQUIRE(cube.exceptional.size() == 1);
  CHECK(cube.exceptional[0] == ExceptionalEigenvalue{ExactScalar(q(1, 8)), 1});
  CHECK(cube.branches[1].eigenvalue(1) == ExactScalar(q(-1, 8)));

  CHECK_THROWS_AS(power_op(circle_dirac(), {q(1), q(0), q(0), 1}), ParameterError);
  CHECK_THROWS_AS(power_op(circle_dirac(), {q(3, 4), q(1, 2), q(0), 1}), ParameterError);
  CHECK_THROWS_AS(power_op(circle_dirac(), {q(-1, 4), q(0), q(0), 1}), ParameterError);
  PerturbationParams forced{q(3, 2), q(0), q(0), 1, true};
  SpectralModel f = power_op(circle_dirac(), forced);
  CHECK_FALSE(f.notes.empty());
  CHECK(f.exceptional.size() == 2);

  // laplacian reduction: P_{eps,c,a} = F(Q_{eps,c}+a)|Q_{eps,c}+a|^2
  SpectralModel pl = power_op(circle_laplacian(), {q(1, 2), q(1, 4), q(0), 0});
  CHECK(pl.order == 2);
  CHECK(pl.branches[0].eigenvalue(1) == ExactScalar(q(7, 4) * q(7, 4)));
  CHECK(pl.exceptional[0].value == ExactScalar(q(1, 4)));
}

TEST_CASE("u and v") {
  UV z = u_v(q(0), 4);
  CHECK(z.u == 1);
  CHECK(z.v == 0);
  UV w = u_v(q(1, 10), 2);
  CHECK(w.u == (q(100, 121) + q(100, 81)) / 2);
  CHECK(w.v == (q(100, 121) - q(100, 81)) / 2);
  for (long n = 1; n <= 4; ++n)
    for (long i = -10; i <= 10; ++i) {
      Rational eps = q(i, 20);
      UV uv = u_v(eps, n);
      CHECK(uv.u + uv.v == pow(1 + eps, -n));
      CHECK(abs(uv.v + n * eps) <= 2 * n * n * n * abs(eps * eps * eps));
    }
  CHECK_THROWS_AS(u_v(q(-1), 1), ParameterError);
}

TEST_CASE("symbol shift") {
  CHECK(symbol_shift(symbol_xi_power(1), q(0)) == symbol_xi_power(1));
  auto s = symbol_shift(symbol_xi_power(1), q(2, 3));
  CHECK(s.component(0).plus == SymMatrix::scalar(1, TrigPoly(Gaussian(q(2, 3)))));
  CHECK(s.component(0).minus == SymMatrix::scalar(1, TrigPoly(Gaussian(q(2, 3)))));
  CHECK(s.component(1) == symbol_xi_power(1).component(1));
}

TEST_CASE("first-order polynomial structure") {
  // sphere2 at k = 1 (eta) and k = 2 (zeta_abs)
  std::vector<Rational> as = {q(1, 4), q(1, 3), q(1, 2)};
  std::vector<Rational> r1, r2;
  for (const auto& a : as) {
    SpectralModel m = shift(sphere2_dirac(), a);
    r1.push_back(res(m, SpectralFunction::Eta, q(1)).as_rational().value());
    r2.push_back(res(m, SpectralFunction::ZetaAbs, q(2)).as_rational().value());
  }
  Polynomial p1 = Polynomial::interpolate(as, r1);
  CHECK(p1.degree() == 1);
  CHECK(p1.leading() == binomial(q(-1), 1) * 4);
  Polynomial p2 = Polynomial::interpolate({as[0], as[1]}, {r2[0], r2[1]});
  CHECK(p2.degree() == 0);
  CHECK(p2.leading() == 4);

  // sphere3 at k = 1: zeta_abs, degree 2
  std::vector<Rational> bs = {q(1, 5), q(1, 4), q(1, 3), q(2, 5)};
  std::vector<Rational> r3;
  for (const auto& a : bs) r3.push_back(res(shift(sphere3_dirac(), a), SpectralFunction::ZetaAbs, q(1)).as_rational().value());
  Polynomial p3 = Polynomial::interpolate(bs, r3);
  CHECK(p3.degree() == 2);
  CHECK(p3.leading() == binomial(q(-1), 2) * res(sphere3_dirac(), SpectralFunction::ZetaAbs, q(3)).as_rational().value());
}
