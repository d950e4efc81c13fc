#include "zetalab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"

namespace zetalab {

namespace {

constexpr const char* kNumericTolerance = "1e-25";
constexpr double kNumericTol = 1e-25;
constexpr double kDirectSumTol = 1e-6;
constexpr double kDirectSumCutoff = 1e4;

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string claim_of(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return c.claim;
  return {};
}

// Accumulates one verdict; any failure clears the pass flag.
class Verdict {
 public:
  Verdict(const std::string& id, std::string tolerance) {
    v_.id = id;
    v_.claim = claim_of(id);
    v_.tolerance = std::move(tolerance);
    v_.pass = true;
  }
  void inputs(const std::string& s) { v_.inputs += (v_.inputs.empty() ? "" : "; ") + s; }
  void value(const std::string& label, const ExactScalar& x) { v_.values.push_back({label, x.to_string(), decimal(x)}); }
  void value(const std::string& label, const std::string& text) { v_.values.push_back({label, text, text}); }
  void fail(const std::string& why) {
    v_.pass = false;
    note(why);
  }
  void note(const std::string& s) { v_.detail += (v_.detail.empty() ? "" : "; ") + s; }
  // Exact equality, recorded as a value.
  void expect_eq(const std::string& label, const ExactScalar& got, const ExactScalar& want) {
    value(label, got);
    if (!(got.is_exact() && want.is_exact()) || got != want) fail(label + " = " + got.display() + ", expected " + want.display());
  }
  void expect_zero(const std::string& label, const ExactScalar& got) {
    if (!got.is_exact() || !got.is_zero()) {
      value(label, got);
      fail(label + " = " + got.display() + ", expected exactly 0");
    }
  }
  // |got - want| <= tol * max(1, |want|).
  void expect_close(const std::string& label, const ExactScalar& got, const ExactScalar& want, double tol) {
    double r = (got - want).magnitude();
    double scale = std::max(1.0, want.magnitude());
    if (!(r <= tol * scale)) {
      value(label, got);
      std::ostringstream os;
      os << label << ": residual " << r << " exceeds " << tol * scale;
      fail(os.str());
    }
  }
  CheckVerdict done() { return std::move(v_); }

 private:
  CheckVerdict v_;
};

std::string rat(const Rational& x) { return to_string(x); }

ExactScalar residue(const SpectralModel& m, SpectralFunction f, const Rational& s, long depth = -1) {
  return make_function(m, f, depth).residue(s);
}

ExactScalar i_pi(long prec) { return ExactScalar(BigComplex(BigFloat(prec), BigFloat::pi(prec))); }

std::vector<SpectralModel> library_models() {
  std::vector<SpectralModel> out;
  for (const auto& e : library_entries()) out.push_back(library_model(e.name, q(1, 3)));
  return out;
}

std::vector<SpectralModel> library_and_shifts() {
  std::vector<SpectralModel> out = library_models();
  for (const auto& e : library_entries()) {
    if (e.name == "circle_dirac_shift") continue;
    for (Rational a : {q(1, 4), q(-2, 5)}) out.push_back(shift(library_model(e.name), a));
  }
  return out;
}

// Admissible sigma = k/m with floor <= k <= n, k != 0.
std::vector<Rational> admissible(const SpectralModel& m, long floor) {
  std::vector<Rational> out;
  for (long k = m.dimension; k >= floor; --k)
    if (k != 0) out.push_back(make_rational(k, m.order));
  return out;
}

// The function whose residue at k carries the first-order structure.
SpectralFunction first_order_function(long n, long k) {
  bool k_odd = (k % 2) != 0;
  if (n % 2 == 0) return k_odd ? SpectralFunction::Eta : SpectralFunction::ZetaAbs;
  return k_odd ? SpectralFunction::ZetaAbs : SpectralFunction::Eta;
}

SymbolExpansion coeff_times_xi(const TrigPoly& a, long N) {
  SymbolExpansion s(1, N, 1);
  s.set_component(1, {SymMatrix::scalar(1, a), SymMatrix::scalar(1, -a)});
  return s;
}

SymbolExpansion random_differential(std::mt19937_64& rng, long order) {
  SymbolExpansion R = random_trig_symbol(rng, order, order);
  std::vector<TrigPoly> coeffs;
  for (long d = 0; d <= order; ++d) coeffs.push_back(R.component(d).plus.at(0, 0));
  return symbol_differential(coeffs);
}

void first_order_polynomial_into(Verdict& v, const SpectralModel& model, const std::vector<long>& ks) {
  const long n = model.dimension;
  v.inputs(model.name + " k in {" + [&] {
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
    return s;
  }() + "}");
  if (model.order != 1) {
    v.note(model.name + ": not applicable (order " + std::to_string(model.order) + ")");
    return;
  }
  ExactScalar top = residue(model, SpectralFunction::ZetaAbs, Rational(n));
  if (top.real_sign() <= 0) v.fail(model.name + ": Res_n zeta_abs is not positive");
  for (long k : ks) {
    std::string tag = model.name + " k=" + std::to_string(k);
    if (k < 1 || k > n) {
      v.note(tag + ": not applicable");
      continue;
    }
    SpectralFunction f = first_order_function(n, k);
    const long deg = n - k;
    std::vector<Rational> as, rs;
    for (long i = 1; i <= deg + 2; ++i) {
      Rational a = make_rational(i, 2 * (deg + 3));
      auto r = residue(shift(model, a), f, Rational(k)).as_rational();
      if (!r) {
        v.fail(tag + ": residue is not rational");
        return;
      }
      as.push_back(a);
      rs.push_back(*r);
    }
    Polynomial p = Polynomial::interpolate(as, rs);
    v.value(tag + " " + function_name(f) + " polynomial", p.to_string("a"));
    if (p.degree() != deg) v.fail(tag + ": degree " + std::to_string(p.degree()) + ", expected " + std::to_string(deg));
    ExactScalar lead_expected = ExactScalar(binomial(Rational(-k), deg)) * top;
    v.expect_eq(tag + " leading coefficient", ExactScalar(p.leading()), lead_expected);
    if (p.leading() == 0) v.fail(tag + ": vanishing leading coefficient");
    auto roots = p.rational_roots();
    std::string rs_text;
    for (std::size_t i = 0; i < roots.size(); ++i) rs_text += (i ? "," : "") + rat(roots[i]);
    v.value(tag + " exceptional a", "{" + rs_text + "}");
    Rational t = q(1, 7);
    for (long j = 1; std::find(roots.begin(), roots.end(), t) != roots.end(); ++j) t = make_rational(j, 7 + j);
    ExactScalar at_t = residue(shift(model, t), f, Rational(k));
    v.expect_eq(tag + " residue at a=" + rat(t), at_t, ExactScalar(p(t)));
    if (at_t.is_zero()) v.fail(tag + ": residue vanishes at a generic point");
  }
}

void eps_identity_into(Verdict& v, const SpectralModel& base, const std::vector<Rational>& epsilons) {
  if (base.order != 1) {
    v.note(base.name + ": not applicable (order " + std::to_string(base.order) + ")");
    return;
  }
  const Rational n(base.dimension);
  ExactScalar eta_n = residue(base, SpectralFunction::Eta, n);
  ExactScalar abs_n = residue(base, SpectralFunction::ZetaAbs, n);
  for (const auto& eps : epsilons) {
    UV uv = u_v(eps, base.dimension);
    if (uv.u + uv.v != pow(Rational(1) + eps, -base.dimension)) v.fail("u + v != (1+eps)^-n at eps=" + rat(eps));
    ExactScalar lhs = residue(epsilon_scale(base, eps), SpectralFunction::Eta, n);
    ExactScalar rhs = ExactScalar(uv.u) * eta_n + ExactScalar(uv.v) * abs_n;
    v.expect_eq(base.name + " eps=" + rat(eps) + " Res eta(P_eps)", lhs, rhs);
  }
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"residue_trace", "the noncommutative residue is a trace and vanishes on differential operators", true},
      {"parity_tables", "first-order Dirac-type: even n poles of eta only at odd k and of zeta_abs only at even k; odd n zeta_up and zeta_down entire", true},
      {"sphere_perturbation", "sphere Dirac + a: Res_1 eta = -4a, Res_2 zeta_abs = 4, parity-forbidden residues 0", true},
      {"first_order_polynomial", "residue at k is a polynomial in a of degree n-k with leading coefficient binom(-k,n-k) m Res_n zeta_abs, nonzero for all but finitely many a", true},
      {"eps_identity", "m Res_n eta(P_eps) = u(eps) m Res_n eta(P) + v(eps) m Res_n zeta_abs(P)", true},
      {"perturbed_conditions", "P_{eps,c} has nonzero Res F|P|^-n, Res P and Res |P|", true},
      {"branch_identity", "zeta_up - zeta_down = (1 - e^{-i pi s})(zeta_up - eta); eta regular at even integers; limit relation at even k", false},
      {"halves", "zeta_abs + eta = 2 zeta_plus and zeta_abs - eta = 2 zeta_minus", false},
      {"decomposition", "zeta_up/down = e^{+-i pi s/2}(cos(pi s/2) zeta_abs -+ i sin(pi s/2) eta) at every residue", true},
      {"real_residues", "residues of zeta_abs and eta are real and zeta_down residues conjugate those of zeta_up", true},
      {"binomial_expansion", "(P + a)^{-k} = sum_j binom(-k,j) a^j P^{-(k+j)} on symbols", true},
      {"cross_engine", "m Res_sigma zeta(|P|) equals Res |P|^{-sigma} for the circle operator", true},
      {"regularity", "eta is regular at the origin", true},
      {"order_reduction", "m Res_{k/m} of an order-m operator equals Res_k of its first-order root", true},
      {"direct_sums", "truncated spectral sums agree with the continued functions in the convergent range", false},
      {"odd_class", "odd-class operators in odd dimension have vanishing residue", true},
  };
  return catalog;
}

CheckVerdict check_residue_trace(std::uint64_t seed) {
  Verdict v("residue_trace", "0");
  v.inputs("20 random trig-Fourier pairs, seed " + std::to_string(seed));
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  for (int i = 0; i < 20; ++i) {
    long oa = static_cast<long>(rng() % 5) - 2;
    long ob = static_cast<long>(rng() % 4) - 1 - (oa > 1 ? oa : 0);
    auto A = random_trig_symbol(rng, oa, 5);
    auto B = random_trig_symbol(rng, ob, 5);
    ExactScalar d = ncr(compose(A, B)) - ncr(compose(B, A));
    if (!d.is_zero()) {
      ++mismatches;
      v.fail("pair " + std::to_string(i) + ": ncr(AB) - ncr(BA) = " + d.display());
    }
  }
  v.value("random pairs with nonzero commutator residue", ExactScalar(mismatches));

  v.inputs("a(x) xi with xi^-2 at truncation 4");
  TrigPoly a = TrigPoly::mode(2, Gaussian(3)) + TrigPoly::mode(-1, Gaussian(q(1), q(-2)));
  auto A = coeff_times_xi(a, 4);
  auto B = symbol_xi_power(-2, 4);
  v.expect_eq("a(x)xi, xi^-2: ncr(AB) - ncr(BA)", ncr(compose(A, B)) - ncr(compose(B, A)), ExactScalar(0));

  auto C1 = symbol_abs_xi_power(1, 5, Gaussian(q(2, 3)));
  auto C2 = symbol_add(symbol_xi_power(-3, 5), symbol_abs_xi_power(-2, 5, Gaussian(q(1), q(1))));
  v.expect_eq("constant-coefficient pair: ncr(AB) - ncr(BA)", ncr(compose(C1, C2)) - ncr(compose(C2, C1)), ExactScalar(0));

  v.inputs("10 random differential pairs, seed " + std::to_string(seed + 1));
  std::mt19937_64 drng(seed + 1);
  for (int i = 0; i < 10; ++i) {
    auto D1 = random_differential(drng, 1 + i % 3);
    auto D2 = random_differential(drng, 2);
    v.expect_zero("ncr(D1) pair " + std::to_string(i), ncr(D1));
    v.expect_zero("ncr(D1 D2) pair " + std::to_string(i), ncr(compose(D1, D2)));
    v.expect_zero("ncr(D2 D1) pair " + std::to_string(i), ncr(compose(D2, D1)));
  }
  return v.done();
}

CheckVerdict check_parity_tables(const std::vector<SpectralModel>& models) {
  Verdict v("parity_tables", "0");
  for (const auto& m : models) {
    v.inputs(m.name + " down to floor -2");
    if (m.order != 1) {
      v.note(m.name + ": not applicable (order " + std::to_string(m.order) + ")");
      continue;
    }
    auto adm = residues_at_admissible(m, -2);
    for (const auto& r : adm.rows) {
      long k = r.sigma.get_num().get_si();
      std::string at = m.name + " @" + rat(r.sigma);
      if (m.dimension % 2 == 0) {
        if (k % 2 == 0) {
          v.expect_zero("eta" + at, r.eta);
          if (!r.zeta_abs.is_zero()) v.value("zeta_abs" + at, r.zeta_abs);
        } else {
          v.expect_zero("zeta_abs" + at, r.zeta_abs);
          if (!r.eta.is_zero()) v.value("eta" + at, r.eta);
        }
      } else {
        v.expect_zero("zeta_up" + at, r.zeta_up);
        v.expect_zero("zeta_down" + at, r.zeta_down);
      }
    }
  }
  return v.done();
}

CheckVerdict check_sphere_perturbation() {
  Verdict v("sphere_perturbation", "0");
  v.inputs("sphere2_dirac + a, a in {1/4, 1/3, 1/2}");
  for (Rational a : {q(1, 4), q(1, 3), q(1, 2)}) {
    SpectralModel m = shift(sphere2_dirac(), a);
    auto fns = spectral_functions(m);
    std::string tag = " a=" + rat(a);
    v.expect_eq("Res_1 eta" + tag, fns.eta.residue(q(1)), ExactScalar(-4 * a));
    v.expect_eq("Res_2 zeta_abs" + tag, fns.zeta_abs.residue(q(2)), ExactScalar(4));
    v.expect_eq("Res_2 eta" + tag, fns.eta.residue(q(2)), ExactScalar(0));
    v.expect_eq("Res_1 zeta_abs" + tag, fns.zeta_abs.residue(q(1)), ExactScalar(0));
  }
  return v.done();
}

CheckVerdict check_first_order_polynomial(const SpectralModel& model, const std::vector<long>& ks) {
  Verdict v("first_order_polynomial", "0");
  first_order_polynomial_into(v, model, ks);
  return v.done();
}

CheckVerdict check_eps_identity(const std::vector<SpectralModel>& models) {
  Verdict v("eps_identity", "0");
  v.inputs("eps in {1/10, 1/2}");
  for (const auto& m : models) {
    v.inputs(m.name);
    eps_identity_into(v, m, {q(1, 10), q(1, 2)});
  }
  for (Rational eps : {q(1, 10), q(1, 2)}) {
    ExactScalar got = residue(epsilon_scale(circle_dirac(), eps), SpectralFunction::Eta, q(1));
    v.expect_eq("circle closed form eps=" + rat(eps), got, ExactScalar(-2 * eps / (1 - eps * eps)));
  }
  return v.done();
}

CheckVerdict check_perturbed_conditions(const SpectralModel& model, const Rational& epsilon, const std::vector<Rational>& cs) {
  Verdict v("perturbed_conditions", "0");
  v.inputs(model.name + ", eps=" + rat(epsilon));
  if (model.order != 1) {
    v.note("not applicable (order " + std::to_string(model.order) + ")");
    return v.done();
  }
  const Rational n(model.dimension);
  eps_identity_into(v, model, {epsilon});
  if (model == circle_dirac() && epsilon == q(1, 2))
    v.expect_eq("Res_1 eta(P_eps)", residue(epsilon_scale(model, epsilon), SpectralFunction::Eta, q(1)), ExactScalar(q(-4, 3)));
  ExactScalar abs_n = residue(model, SpectralFunction::ZetaAbs, n);
  ExactScalar abs_m1 = residue(model, SpectralFunction::ZetaAbs, q(-1));
  for (const auto& c : cs) {
    std::string tag = " c=" + rat(c);
    v.inputs("c=" + rat(c));
    SpectralModel p = ec_perturb(model, epsilon, c);
    ExactScalar r1 = residue(p, SpectralFunction::Eta, n);
    ExactScalar r2 = residue(p, SpectralFunction::ZetaUp, q(-1));
    ExactScalar r3 = residue(p, SpectralFunction::ZetaAbs, q(-1));
    v.value("Res F|P|^-n" + tag, r1);
    v.value("Res P" + tag, r2);
    v.value("Res |P|" + tag, r3);
    if (numerically_zero(r1) || numerically_zero(r2) || numerically_zero(r3)) v.fail("a condition vanishes at" + tag);
    ExactScalar r0 = residue(ec_perturb(model, q(0), c), SpectralFunction::ZetaAbs, q(-1));
    v.expect_eq("Res_-1 zeta_abs(P_{0,c})" + tag, r0, abs_m1 + ExactScalar(c) * abs_n);
  }
  return v.done();
}

CheckVerdict check_branch_identity(const std::vector<SpectralModel>& models, std::uint64_t seed, long prec) {
  Verdict v("branch_identity", kNumericTolerance);
  v.inputs("20 sampled s per model, seed " + std::to_string(seed) + ", " + std::to_string(prec) + " bits");
  const ExactScalar ipi = i_pi(prec + 32);
  for (const auto& m : models) {
    v.inputs(m.name);
    auto fns = spectral_functions(m);
    for (const auto& sigma : admissible(m, -4)) {
      if (!is_integer(sigma) || sigma.get_num().get_si() % 2 != 0) continue;
      if (sigma <= fns.eta.validity_floor()) continue;
      std::string at = m.name + " @" + rat(sigma);
      v.expect_zero("Res eta" + at, fns.eta.residue(sigma));
      // m lim (zeta_up - zeta_down) = i pi m Res zeta_abs - i pi m Res eta
      ExactScalar s(sigma);
      Laurent up = fns.zeta_up.laurent(s, prec), down = fns.zeta_down.laurent(s, prec);
      ExactScalar mm(m.order);
      ExactScalar lhs = mm * (up.value - down.value);
      ExactScalar rhs = ipi * mm * fns.zeta_abs.residue(sigma) - ipi * mm * fns.eta.residue(sigma);
      v.value("m lim(zeta_up - zeta_down)" + at, lhs);
      v.expect_close("limit relation" + at, lhs, rhs, kNumericTol);
    }
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int i = 0; i < 20;) {
      long den = std::vector<long>{3, 4, 5, 7}[rng() % 4];
      long num = static_cast<long>(rng() % static_cast<std::uint64_t>(8 * den)) - 3 * den;
      Rational s = make_rational(num, den);
      if (is_integer(s * m.order)) continue;
      ++i;
      ExactScalar x(s);
      ExactScalar up = evaluate(fns.zeta_up, x, prec), down = evaluate(fns.zeta_down, x, prec);
      ExactScalar eta = evaluate(fns.eta, x, prec);
      ExactScalar lhs = up - down;
      ExactScalar rhs = (ExactScalar(1) - exp_i_pi(-x, prec)) * (up - eta);
      worst = std::max(worst, (lhs - rhs).magnitude() / std::max(1.0, rhs.magnitude()));
      v.expect_close("identity " + m.name + " s=" + rat(s), lhs, rhs, kNumericTol);
    }
    std::ostringstream os;
    os << worst;
    v.value(m.name + " worst relative residual", os.str());
  }
  return v.done();
}

CheckVerdict check_halves(const std::vector<SpectralModel>& models, long prec) {
  Verdict v("halves", kNumericTolerance);
  for (const auto& m : models) {
    v.inputs(m.name);
    auto plus = half_zeta(m, 1), minus = half_zeta(m, -1);
    auto abs = make_function(m, SpectralFunction::ZetaAbs), eta = make_function(m, SpectralFunction::Eta);
    for (const auto& sigma : admissible(m, -2)) {
      std::string at = m.name + " @" + rat(sigma);
      v.expect_eq("Res(zeta_abs + eta)" + at, abs.residue(sigma) + eta.residue(sigma), ExactScalar(2) * plus.residue(sigma));
      v.expect_eq("Res(zeta_abs - eta)" + at, abs.residue(sigma) - eta.residue(sigma), ExactScalar(2) * minus.residue(sigma));
    }
    for (Rational s : {make_rational(2 * m.dimension + 1, 2 * m.order), q(1, 3), q(-5, 3)}) {
      ExactScalar x(s);
      ExactScalar a = evaluate(abs, x, prec), e = evaluate(eta, x, prec);
      ExactScalar p = evaluate(plus, x, prec), n = evaluate(minus, x, prec);
      v.expect_close("zeta_abs + eta " + m.name + " s=" + rat(s), a + e, ExactScalar(2) * p, kNumericTol);
      v.expect_close("zeta_abs - eta " + m.name + " s=" + rat(s), a - e, ExactScalar(2) * n, kNumericTol);
    }
  }
  return v.done();
}

CheckVerdict check_decomposition(const std::vector<SpectralModel>& models) {
  Verdict v("decomposition", "0");
  for (const auto& m : models) {
    v.inputs(m.name);
    auto fns = spectral_functions(m);
    for (const auto& sigma : admissible(m, -2)) {
      std::string at = m.name + " @" + rat(sigma);
      ExactScalar h = exp_i_pi(ExactScalar(sigma / 2));
      ExactScalar cos_h = (h + h.conj()) / ExactScalar(2);
      ExactScalar isin_h = (h - h.conj()) / ExactScalar(2);
      ExactScalar ra = fns.zeta_abs.residue(sigma), re = fns.eta.residue(sigma);
      v.expect_eq("Res zeta_up" + at, fns.zeta_up.residue(sigma), h * (cos_h * ra - isin_h * re));
      v.expect_eq("Res zeta_down" + at, fns.zeta_down.residue(sigma), h.conj() * (cos_h * ra + isin_h * re));
    }
  }
  return v.done();
}

CheckVerdict check_real_residues(const std::vector<SpectralModel>& models) {
  Verdict v("real_residues", "0");
  for (const auto& m : models) {
    v.inputs(m.name);
    auto fns = spectral_functions(m);
    for (const auto& sigma : admissible(m, -2)) {
      std::string at = m.name + " @" + rat(sigma);
      ExactScalar ra = fns.zeta_abs.residue(sigma), re = fns.eta.residue(sigma);
      if (!ra.is_exact() || !ra.is_real()) v.fail("zeta_abs" + at + " is not real: " + ra.display());
      if (!re.is_exact() || !re.is_real()) v.fail("eta" + at + " is not real: " + re.display());
      v.expect_eq("Res zeta_down" + at, fns.zeta_down.residue(sigma), fns.zeta_up.residue(sigma).conj());
    }
  }
  return v.done();
}

CheckVerdict check_binomial_expansion() {
  Verdict v("binomial_expansion", "0");
  v.inputs("k in {1,2,3}, a in {1/2,-1/3,2}, degrees -k..-k-4");
  const long J = 4;
  long mismatches = 0;
  for (long k : {1L, 2L, 3L}) {
    for (Rational a : {q(1, 2), q(-1, 3), q(2)}) {
      auto lhs = power_int(symbol_shift(symbol_xi_power(1), a), -k);
      for (long d = -k; d >= -k - J; --d) {
        RayComponent expect{SymMatrix(1), SymMatrix(1)};
        for (long j = 0; j <= J; ++j) {
          auto term = power_int(symbol_xi_power(1), -(k + j));
          if (d > term.order()) continue;
          RayComponent c = term.component(d);
          Gaussian w(binomial(Rational(-k), j) * pow(a, j));
          expect.plus += w * c.plus;
          expect.minus += w * c.minus;
        }
        if (!(lhs.component(d) == expect) && ++mismatches)
          v.fail("k=" + std::to_string(k) + " a=" + rat(a) + " degree " + std::to_string(d));
      }
    }
  }
  v.value("mismatched components", ExactScalar(mismatches));
  return v.done();
}

CheckVerdict check_cross_engine() {
  Verdict v("cross_engine", "0");
  v.inputs("-i d/dtheta + a on the circle, a in {0, 1/3}");
  for (Rational a : {q(0), q(1, 3)}) {
    SpectralModel model = circle_dirac_shift(a);
    ExactScalar spectral = ExactScalar(model.order) * residue(model, SpectralFunction::ZetaAbs, q(1));
    auto abs_p = abs_and_sign(circle_symbol(a)).first;
    ExactScalar symbolic = ncr(power_int(abs_p, -1));
    v.expect_eq("m Res_1 zeta_abs a=" + rat(a), spectral, ExactScalar(2));
    v.expect_eq("Res |P|^-1 a=" + rat(a), symbolic, ExactScalar(2));
  }
  return v.done();
}

CheckVerdict check_regularity(const std::vector<SpectralModel>& models) {
  Verdict v("regularity", "0");
  for (const auto& m : models) {
    v.inputs(m.name);
    ExactScalar e = evaluate(make_function(m, SpectralFunction::Eta), ExactScalar(0));
    v.value("eta(0) " + m.name, e);
    if (!std::isfinite(e.magnitude())) v.fail("eta(0) of " + m.name + " is not finite");
  }
  ExactScalar c = evaluate(make_function(circle_dirac_shift(q(1, 3)), SpectralFunction::Eta), ExactScalar(0));
  v.expect_eq("eta(0) circle + 1/3", c, ExactScalar(q(1, 3)));
  return v.done();
}

CheckVerdict check_order_reduction() {
  Verdict v("order_reduction", "0");
  v.inputs("circle_laplacian and its root, floor -2");
  auto compare = [&](const SpectralModel& big, const SpectralModel& small) {
    for (SpectralFunction f : {SpectralFunction::ZetaAbs, SpectralFunction::Eta}) {
      auto fb = make_function(big, f), fs = make_function(small, f);
      for (long k = big.dimension; k >= -2; --k) {
        if (k == 0) continue;
        Rational sigma = make_rational(k, big.order);
        ExactScalar rb = ExactScalar(big.order) * fb.residue(sigma), rs = fs.residue(Rational(k));
        v.expect_eq(function_name(f) + " " + big.name + " k=" + std::to_string(k), rb, rs);
        if (rb.is_zero() != rs.is_zero()) v.fail("vanishing mismatch at k=" + std::to_string(k));
      }
    }
  };
  SpectralModel lap = circle_laplacian();
  v.expect_eq("Res_1/2 zeta_abs(laplacian)", residue(lap, SpectralFunction::ZetaAbs, q(1, 2)), ExactScalar(1));
  SpectralModel root = root_op(lap);
  v.expect_eq("Res_1 zeta_abs(root)", residue(root, SpectralFunction::ZetaAbs, q(1)), ExactScalar(2));
  compare(lap, root);

  PerturbationParams pp{q(1, 4), q(1, 5), q(1, 7), 0, false};
  v.inputs("power_op a=1/4 eps=1/5 c=1/7");
  SpectralModel big = power_op(lap, pp);
  SpectralModel small = shift(ec_perturb(root, pp.epsilon, pp.c), pp.a);
  compare(big, small);
  return v.done();
}

CheckVerdict check_direct_sums(const std::vector<SpectralModel>& models) {
  Verdict v("direct_sums", "1e-6");
  v.inputs("cutoff 1e4 at s = n/m + 2");
  for (const auto& m : models) {
    Rational s = make_rational(m.dimension, m.order) + 2;
    for (SpectralFunction f : {SpectralFunction::ZetaAbs, SpectralFunction::Eta, SpectralFunction::ZetaUp}) {
      ExactScalar val = evaluate(make_function(m, f), ExactScalar(s));
      auto direct = truncated_spectral_sum(m, f, s.get_d(), kDirectSumCutoff);
      double diff = std::abs(std::complex<double>(val.real(), val.imag()) -
                             std::complex<double>(static_cast<double>(direct.real()), static_cast<double>(direct.imag())));
      std::string tag = function_name(f) + " " + m.name + " s=" + rat(s);
      v.value(tag, val);
      if (!(diff <= kDirectSumTol)) {
        std::ostringstream os;
        os << tag << ": direct sum differs by " << diff;
        v.fail(os.str());
      }
    }
  }
  return v.done();
}

CheckVerdict check_odd_class() {
  Verdict v("odd_class", "0");
  v.inputs("circle symbols a in {0, 1/3, -5/2}; random differential symbols, seed 7");
  std::vector<SymbolExpansion> ops;
  for (Rational a : {q(0), q(1, 3), q(-5, 2)}) ops.push_back(circle_symbol(a));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4; ++i) {
    // real principal part keeps the operator elliptic
    auto D = random_differential(rng, 1);
    SymbolExpansion E = symbol_add(symbol_xi_power(1), D.truncated(kDefaultTruncation));
    RayComponent top = E.component(1);
    if (!top.plus.at(0, 0).is_constant() || top.plus.at(0, 0).coeff(0).re == 0) continue;
    ops.push_back(E);
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& A = ops[i];
    std::string tag = " op " + std::to_string(i);
    if (!is_odd_class(A)) v.fail("not odd class:" + tag);
    for (long k = 1; k <= 3; ++k) {
      SymbolExpansion P = power_int(A, -k);
      if (!is_odd_class(P)) v.fail("A^-" + std::to_string(k) + " not odd class:" + tag);
      v.expect_zero("ncr A^-" + std::to_string(k) + tag, ncr(P));
    }
    if (i < 3) v.expect_zero("ncr F" + tag, ncr(abs_and_sign(A).second));
  }
  v.value("operators", ExactScalar(static_cast<long>(ops.size())));
  return v.done();
}

std::vector<CheckVerdict> run_all(const SuiteConfig& config) {
  std::optional<SpectralModel> user = config.model;
  if (config.model_file) user = model_from_text(read_file(*config.model_file));

  std::vector<std::string> ids = config.ids;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (const auto& c : check_catalog())
      if (!config.exact_only || c.exact) ids.push_back(c.id);
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(check_catalog().begin(), check_catalog().end(), [&](const CheckInfo& c) { return c.id == id; });
      if (it == check_catalog().end()) {
        std::string known;
        for (const auto& c : check_catalog()) known += (known.empty() ? "" : ", ") + c.id;
        throw DomainError("unknown check '" + id + "'; valid checks: " + known);
      }
    }
    if (config.exact_only) {
      std::vector<std::string> kept;
      for (const auto& id : ids)
        for (const auto& c : check_catalog())
          if (c.id == id && c.exact) kept.push_back(id);
      ids = kept;
    }
  }

  auto pick = [&](std::vector<SpectralModel> defaults) {
    return user ? std::vector<SpectralModel>{*user} : defaults;
  };
  std::vector<SpectralModel> parity = {circle_dirac_shift(q(1, 3)), shift(sphere2_dirac(), q(1, 4)), shift(sphere3_dirac(), q(1, 3))};
  std::vector<SpectralModel> eps_models = {circle_dirac(), sphere2_dirac(), sphere3_dirac(), shift(sphere2_dirac(), q(1, 3))};
  std::vector<SpectralModel> branch_models = {circle_dirac(), circle_dirac_shift(q(1, 3)), shift(sphere2_dirac(), q(1, 4))};

  std::vector<CheckVerdict> out;
  for (const auto& id : ids) {
    try {
      if (id == "residue_trace") {
        out.push_back(check_residue_trace(config.seed));
      } else if (id == "parity_tables") {
        out.push_back(check_parity_tables(pick(parity)));
      } else if (id == "sphere_perturbation") {
        out.push_back(check_sphere_perturbation());
      } else if (id == "first_order_polynomial") {
        Verdict v("first_order_polynomial", "0");
        if (user) {
          std::vector<long> ks;
          for (long k = 1; k <= user->dimension; ++k) ks.push_back(k);
          first_order_polynomial_into(v, *user, ks);
        } else {
          first_order_polynomial_into(v, sphere2_dirac(), {1, 2});
          first_order_polynomial_into(v, sphere3_dirac(), {1, 2, 3});
          first_order_polynomial_into(v, circle_dirac(), {1});
        }
        out.push_back(v.done());
      } else if (id == "eps_identity") {
        out.push_back(check_eps_identity(pick(eps_models)));
      } else if (id == "perturbed_conditions") {
        out.push_back(check_perturbed_conditions(user ? *user : circle_dirac(), q(1, 2), {q(1, 10), q(1, 5), q(1, 3)}));
      } else if (id == "branch_identity") {
        out.push_back(check_branch_identity(pick(branch_models), config.seed, config.prec));
      } else if (id == "halves") {
        out.push_back(check_halves(pick(library_models()), config.prec));
      } else if (id == "decomposition") {
        out.push_back(check_decomposition(pick(library_and_shifts())));
      } else if (id == "real_residues") {
        out.push_back(check_real_residues(pick(library_and_shifts())));
      } else if (id == "binomial_expansion") {
        out.push_back(check_binomial_expansion());
      } else if (id == "cross_engine") {
        out.push_back(check_cross_engine());
      } else if (id == "regularity") {
        out.push_back(check_regularity(pick(library_and_shifts())));
      } else if (id == "order_reduction") {
        out.push_back(check_order_reduction());
      } else if (id == "direct_sums") {
        out.push_back(check_direct_sums(pick(library_models())));
      } else if (id == "odd_class") {
        out.push_back(check_odd_class());
      }
    } catch (const std::exception& e) {
      CheckVerdict v;
      v.id = id;
      v.claim = claim_of(id);
      for (const auto& c : check_catalog())
        if (c.id == id) v.tolerance = c.exact ? "0" : (id == "direct_sums" ? "1e-6" : kNumericTolerance);
      v.pass = false;
      v.detail = std::string("error: ") + e.what();
      out.push_back(std::move(v));
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) { return v.pass; });
}

Json report_json(const std::vector<CheckVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json values = Json::array();
    for (const auto& c : v.values) values.push_back({{"label", c.label}, {"exact", c.exact}, {"approx", c.approx}});
    out.push_back({{"id", v.id},
                   {"claim", v.claim},
                   {"inputs", v.inputs},
                   {"values", values},
                   {"pass", v.pass},
                   {"tolerance", v.tolerance},
                   {"detail", v.detail}});
  }
  return out;
}

std::string report_text(const std::vector<CheckVerdict>& verdicts) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& v : verdicts) {
    passed += v.pass;
    os << (v.pass ? "PASS " : "FAIL ") << v.id << "  [tol " << v.tolerance << "]  " << v.claim << "\n";
    if (!v.detail.empty()) os << "     " << v.detail << "\n";
  }
  os << passed << "/" << verdicts.size() << " checks passed\n";
  return os.str();
}

}  // namespace zetalab
