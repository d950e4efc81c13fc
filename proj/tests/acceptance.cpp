// Acceptance criteria 1-10, one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/suite.hpp"

using namespace zetalab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

ExactScalar res(const SpectralModel& m, SpectralFunction f, const Rational& s) { return make_function(m, f).residue(s); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

Outcome criterion1() {
  Outcome o;
  for (Rational a : {q(1, 4), q(1, 3), q(1, 2)}) {
    SpectralModel m = shift(sphere2_dirac(), a);
    std::string t = " at a=" + to_string(a);
    o.require(res(m, SpectralFunction::Eta, q(1)) == ExactScalar(-4 * a), "Res_1 eta" + t);
    o.require(res(m, SpectralFunction::ZetaAbs, q(2)) == ExactScalar(4), "Res_2 zeta_abs" + t);
    o.require(res(m, SpectralFunction::Eta, q(2)) == ExactScalar(0), "Res_2 eta" + t);
    o.require(res(m, SpectralFunction::ZetaAbs, q(1)) == ExactScalar(0), "Res_1 zeta_abs" + t);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<Rational> as = {q(1, 8), q(1, 4), q(3, 8)};
  std::vector<Rational> rs;
  for (const auto& a : as) {
    auto r = res(shift(sphere2_dirac(), a), SpectralFunction::Eta, q(1)).as_rational();
    o.require(r.has_value(), "residue not rational");
    if (!r) return o;
    rs.push_back(*r);
  }
  Polynomial p = Polynomial::interpolate(as, rs);
  ExactScalar top = res(sphere2_dirac(), SpectralFunction::ZetaAbs, q(2));
  o.require(p.degree() == 1, "degree " + std::to_string(p.degree()));
  o.require(ExactScalar(p.leading()) == ExactScalar(binomial(q(-1), 1)) * top, "leading " + to_string(p.leading()));
  o.require(p.leading() == -4, "leading coefficient is not -4");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (Rational a : {q(0), q(1, 3)}) {
    SpectralModel m = circle_dirac_shift(a);
    ExactScalar spectral = ExactScalar(m.order) * res(m, SpectralFunction::ZetaAbs, q(1));
    ExactScalar symbolic = ncr(power_int(abs_and_sign(circle_symbol(a)).first, -1));
    o.require(spectral == symbolic, "engines differ at a=" + to_string(a));
    o.require(spectral == ExactScalar(2), "spectral residue is " + spectral.display());
  }
  return o;
}

Outcome from_verdict(const CheckVerdict& v) {
  Outcome o;
  o.require(v.pass, v.detail);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& base : {circle_dirac(), sphere2_dirac(), sphere3_dirac(), shift(sphere2_dirac(), q(1, 3))}) {
    const Rational n(base.dimension);
    for (Rational eps : {q(1, 10), q(1, 2)}) {
      UV uv = u_v(eps, base.dimension);
      ExactScalar lhs = res(epsilon_scale(base, eps), SpectralFunction::Eta, n);
      ExactScalar rhs = ExactScalar(uv.u) * res(base, SpectralFunction::Eta, n) +
                        ExactScalar(uv.v) * res(base, SpectralFunction::ZetaAbs, n);
      o.require(lhs == rhs, base.name + " eps=" + to_string(eps));
    }
  }
  for (Rational eps : {q(1, 10), q(1, 2)})
    o.require(res(epsilon_scale(circle_dirac(), eps), SpectralFunction::Eta, q(1)) == ExactScalar(-2 * eps / (1 - eps * eps)),
              "circle closed form eps=" + to_string(eps));
  return o;
}

Outcome criterion7() {
  Outcome o;
  SpectralModel lap = circle_laplacian();
  SpectralModel root = root_op(lap);
  auto big = make_function(lap, SpectralFunction::ZetaAbs);
  auto small = make_function(root, SpectralFunction::ZetaAbs);
  o.require(big.residue(q(1, 2)) == ExactScalar(1), "Res_1/2 zeta_abs(laplacian)");
  o.require(small.residue(q(1)) == ExactScalar(2), "Res_1 zeta_abs(root)");
  for (long k = lap.dimension; k >= -2; --k) {
    if (k == 0) continue;
    ExactScalar rb = big.residue(make_rational(k, 2)), rs = small.residue(Rational(k));
    o.require(rb.is_zero() == rs.is_zero(), "vanishing differs at k=" + std::to_string(k));
    o.require(ExactScalar(2) * rb == rs, "m Res mismatch at k=" + std::to_string(k));
  }
  return o;
}

Outcome criterion8() {
  CheckVerdict v = check_branch_identity({circle_dirac_shift(q(1, 3)), shift(sphere2_dirac(), q(1, 4))}, 20240611, 256);
  Outcome o = from_verdict(v);
  o.require(v.tolerance == "1e-25", "tolerance " + v.tolerance);
  for (Rational a : {q(0), q(1, 3), q(1, 4)}) {
    auto eta = make_function(circle_dirac_shift(a), SpectralFunction::Eta, 10);
    for (long k : {-2L, -4L})
      o.require(eta.residue(Rational(k)) == ExactScalar(0), "circle eta residue at " + std::to_string(k));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const auto& e : library_entries()) {
    SpectralModel m = library_model(e.name, q(1, 3));
    ExactScalar v = evaluate(make_function(m, SpectralFunction::Eta), ExactScalar(0));
    o.require(std::isfinite(v.magnitude()), "eta(0) of " + e.name);
  }
  o.require(evaluate(make_function(circle_dirac_shift(q(1, 3)), SpectralFunction::Eta), ExactScalar(0)) == ExactScalar(q(1, 3)),
            "eta(0) of circle + 1/3");
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& e : library_entries()) {
    SpectralModel m = library_model(e.name, q(1, 3));
    Rational s = make_rational(m.dimension, m.order) + 2;
    for (SpectralFunction f : {SpectralFunction::ZetaAbs, SpectralFunction::Eta}) {
      ExactScalar val = evaluate(make_function(m, f), ExactScalar(s));
      auto direct = truncated_spectral_sum(m, f, s.get_d(), 1e4);
      double diff = std::abs(std::complex<double>(val.real(), val.imag()) -
                             std::complex<double>(static_cast<double>(direct.real()), static_cast<double>(direct.imag())));
      std::ostringstream os;
      os << e.name << " " << function_name(f) << " differs by " << diff;
      o.require(diff <= 1e-6, os.str());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    const char* tolerance;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact sphere-Dirac perturbation residues", "exact", criterion1},
      {2, "leading-coefficient law at k=1 on the sphere", "exact", criterion2},
      {3, "circle cross-engine equality", "exact", criterion3},
      {4, "binomial expansion on symbols", "exact", [] { return from_verdict(check_binomial_expansion()); }},
      {5, "trace property and vanishing on differential symbols", "exact", [] { return from_verdict(check_residue_trace(20240611)); }},
      {6, "u(eps), v(eps) identity and circle closed form", "exact", criterion6},
      {7, "order-m reduction for the circle Laplacian", "exact", criterion7},
      {8, "zeta_up - zeta_down identity and even-integer regularity", "1e-25 at 256 bits", criterion8},
      {9, "eta regular at the origin", "exact", criterion9},
      {10, "direct spectral sums against the evaluator", "1e-6 at cutoff 1e4", criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [tol " << c.tolerance << "] ("
              << std::fixed << std::setprecision(2) << secs << "s)";
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
