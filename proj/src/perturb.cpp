#include "zetalab/perturb.hpp"

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

bool exact_le(const ExactScalar& x, const ExactScalar& y) { return (x - y).real_sign() <= 0; }

std::string suffix(const std::string& op, const std::vector<Rational>& args) {
  std::string s = "|" + op + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + to_string(args[i]);
  return s + ")";
}

void check_epsilon(const Rational& eps) {
  if (abs(eps) >= 1) throw ParameterError("epsilon must lie in (-1, 1), got " + to_string(eps));
}

SpectralModel map_all(const SpectralModel& model, const SpectralMapSpec& map) {
  SpectralModel out = model;
  out.branches.clear();
  for (const auto& br : model.branches) out.branches.push_back(br.with_map(map));
  for (auto& ev : out.exceptional) ev.value = apply_map(ev.value, map);
  return out;
}

}  // namespace

void PerturbationParams::validate() const {
  check_epsilon(epsilon);
  if (sgn(c) < 0) throw ParameterError("c must be non-negative, got " + to_string(c));
  if (m < 0) throw ParameterError("m must be positive");
}

SpectralModel shift(const SpectralModel& model, const Rational& a) {
  if (sgn(a) == 0) return model;
  SpectralModel out = model;
  out.name += suffix("shift", {a});
  out.branches.clear();
  out.exceptional.clear();
  out.kernel_dim = 0;
  const ExactScalar abs_a(abs(a));
  std::vector<ExceptionalEigenvalue> crossed;
  long new_kernel = 0;
  for (const auto& br : model.branches) {
    long k = br.k0();
    if (br.sign() * sgn(a) < 0) {
      while (exact_le(abs_real(br.eigenvalue(k)), abs_a)) {
        ExactScalar v = br.eigenvalue(k) + ExactScalar(a);
        Rational mult = br.multiplicity_at(k);
        long mu = mult.get_num().get_si();
        if (v.is_zero())
          new_kernel += mu;
        else
          crossed.push_back({v, mu});
        ++k;
      }
    }
    out.branches.push_back(br.with_k0(k).with_map(SpectralMapSpec::shift(a)));
  }
  for (const auto& ev : model.exceptional) {
    ExactScalar v = ev.value + ExactScalar(a);
    if (v.is_zero())
      new_kernel += ev.multiplicity;
    else
      out.exceptional.push_back({v, ev.multiplicity});
  }
  if (model.kernel_dim > 0) out.exceptional.push_back({ExactScalar(a), model.kernel_dim});
  for (auto& ev : crossed) out.exceptional.push_back(std::move(ev));
  out.kernel_dim = new_kernel;
  return out;
}

SpectralModel epsilon_scale(const SpectralModel& model, const Rational& epsilon) {
  check_epsilon(epsilon);
  if (sgn(epsilon) == 0) return model;
  SpectralModel out = map_all(model, SpectralMapSpec::scale(epsilon));
  out.name += suffix("eps", {epsilon});
  return out;
}

SpectralModel ec_perturb(const SpectralModel& model, const Rational& epsilon, const Rational& c) {
  check_epsilon(epsilon);
  if (sgn(c) < 0) throw ParameterError("c must be non-negative, got " + to_string(c));
  if (sgn(c) == 0) return epsilon_scale(model, epsilon);
  SpectralModel out = map_all(model, SpectralMapSpec::f_eps_c(epsilon, c, model.dimension));
  out.name += suffix("eps_c", {epsilon, c});
  // Signs are preserved for c >= 0; what can fail is monotonicity near the bottom.
  try {
    out.validate();
  } catch (const DomainError& e) {
    throw ParameterError(std::string("c too large for this model: ") + e.what());
  }
  return out;
}

SpectralModel sign_power(const SpectralModel& model, long p) {
  if (p < 1) throw ParameterError("power must be positive");
  if (p == 1) return model;
  SpectralModel out = map_all(model, SpectralMapSpec::sign_pow(Rational(p)));
  out.order = model.order * p;
  out.name += suffix("pow", {Rational(p)});
  return out;
}

SpectralModel root_op(const SpectralModel& model) {
  if (model.order < 1) throw ParameterError("order must be positive");
  if (model.order == 1) return model;
  SpectralModel out = map_all(model, SpectralMapSpec::sign_pow(make_rational(1, model.order)));
  out.order = 1;
  out.name += suffix("root", {Rational(model.order)});
  return out;
}

ExactScalar spectral_gap(const SpectralModel& model) {
  bool have = false;
  ExactScalar best;
  auto consider = [&](const ExactScalar& v) {
    ExactScalar a = abs_real(v);
    if (!have || (a - best).real_sign() < 0) best = a;
    have = true;
  };
  for (const auto& br : model.branches) consider(br.eigenvalue(br.k0()));
  for (const auto& ev : model.exceptional) consider(ev.value);
  if (!have) throw DomainError("model has no nonzero spectrum");
  return best;
}

SpectralModel power_op(const SpectralModel& model, const PerturbationParams& params) {
  params.validate();
  const long m = params.m > 0 ? params.m : model.order;
  SpectralModel q = root_op(model);
  ExactScalar bound = ExactScalar(Rational(1) - abs(params.epsilon)) * spectral_gap(q);
  bool in_gap = sgn(params.a) >= 0 && (ExactScalar(params.a) - bound).real_sign() < 0;
  if (!in_gap && !params.force)
    throw ParameterError("a = " + to_string(params.a) + " violates 0 <= a < (1-|eps|) * gap = " + bound.display());
  SpectralModel out = ec_perturb(q, params.epsilon, params.c);
  out = shift(out, params.a);
  out = sign_power(out, m);
  if (!in_gap) out.notes.push_back("outside the gap regime 0 <= a < (1-|eps|) * gap; crossings handled spectrally");
  return out;
}

UV u_v(const Rational& epsilon, long n) {
  check_epsilon(epsilon);
  if (n < 1) throw ParameterError("dimension must be positive");
  Rational p = pow(Rational(1) + epsilon, -n), q = pow(Rational(1) - epsilon, -n);
  return {(p + q) / 2, (p - q) / 2};
}

SymbolExpansion symbol_shift(const SymbolExpansion& A, const Rational& a) {
  if (sgn(a) == 0) return A;
  if (A.order() < 0) throw DomainError("symbol_shift needs a symbol of non-negative order");
  SymbolExpansion out = A;
  RayComponent c = A.component(0);
  SymMatrix id = SymMatrix::scalar(A.rank(), TrigPoly(Gaussian(a)));
  out.set_component(0, {c.plus + id, c.minus + id});
  return out;
}

}  // namespace zetalab
