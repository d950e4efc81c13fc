#include "zetalab/spectral.hpp"

#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr long kTailStart = 24;
constexpr long kTailMax = 768;

ExactScalar i_pi(long prec) { return ExactScalar(BigComplex(BigFloat(prec), BigFloat::pi(prec))); }

// x^{-s} for a positive real x.
ExactScalar pow_neg(const ExactScalar& x, const ExactScalar& s, bool exact_mode, long wp) {
  if (exact_mode) return exact_pow(x, -s.as_rational()->get_num().get_si());
  if (auto q = x.as_rational(); q && *q == 1) return ExactScalar(1);
  BigComplex z = x.to_complex(wp);
  return ExactScalar(pow(z.re(), -s.to_complex(wp)));
}

struct BranchTerms {
  ExactScalar residue;
  ExactScalar value;
};

// Residue and finite part at s of sum_{k >= k0} mult(k) |lambda(k)|^{-s}.
BranchTerms branch_laurent(const Branch& br, const ExactScalar& s, long prec) {
  long wp = prec + 32;
  auto sq = s.as_rational();
  bool exact_mode = sq && is_integer(*sq) && sgn(*sq) <= 0;
  ExactScalar S = exact_mode ? s : to_float(s, wp);
  const Polynomial& mu = br.multiplicity();
  long D = mu.degree();
  BranchTerms out{ExactScalar(0), ExactScalar(0)};
  if (D < 0) return out;

  AsymptoticSeries probe = br.law(kTailStart);
  double rho = probe.correction_radius();
  long K = std::max(br.k0(), 32L + static_cast<long>(std::ceil(8 * rho)) +
                                 static_cast<long>(std::ceil(S.magnitude())));

  for (long k = br.k0(); k < K; ++k) {
    Rational m = br.multiplicity_at(k);
    if (sgn(m) == 0) continue;
    ExactScalar lam = abs_real(br.eigenvalue(k, wp));
    out.value += ExactScalar(m) * pow_neg(lam, S, exact_mode, wp);
  }

  const Rational e = probe.e();
  const ExactScalar& A = probe.A();
  ExactScalar Apow = pow_neg(A, S, exact_mode, wp);
  ExactScalar logA = log_real(A, wp);
  ExactScalar P = -S;

  // Ladder base e*s - D, kept exact when s is exact so poles are detected.
  ExactScalar base = sq ? ExactScalar(e * *sq - D) : ExactScalar(e) * S - ExactScalar(D);

  auto pole_t = [&](long d) -> long {
    if (!sq) return -1;
    Rational t = Rational(1 + d) - e * *sq;
    if (!is_integer(t) || sgn(t) < 0) return -1;
    return t.get_num().get_si();
  };

  long T = kTailStart;
  bool single_pass = false;
  if (exact_mode && probe.terminating()) {
    long n = -sq->get_num().get_si();
    T = n * static_cast<long>(probe.b().size());
    for (long d = 0; d <= D; ++d) T = std::max(T, pole_t(d));
    single_pass = true;
  }
  double tol = std::ldexp(1.0, static_cast<int>(-(prec + 8)));

  while (true) {
    AsymptoticSeries law = br.law(T);
    std::vector<ExactScalar> b = law.b();
    if (!law.terminating() && static_cast<long>(b.size()) > T) b.resize(static_cast<std::size_t>(T));
    std::vector<ExactScalar> g, dg;
    binomial_series_dp(b, P, T, g, dg);
    auto ladder = hurwitz_ladder(base, Rational(K), T + D + 1, prec);

    ExactScalar residue(0), value(0);
    std::vector<double> mags(static_cast<std::size_t>(T + 1), 0.0);
    for (long t = 0; t <= T; ++t) {
      for (long d = 0; d <= D; ++d) {
        Rational c = mu.coeff(d);
        if (sgn(c) == 0) continue;
        const ExactScalar& z = ladder[static_cast<std::size_t>(t - d + D)];
        if (pole_t(d) == t) {
          // Exact Taylor data of h(s) = c A^{-s} g_t(s) at the pole.
          std::vector<ExactScalar> ge, dge;
          binomial_series_dp(b, ExactScalar(-*sq), t, ge, dge);
          ExactScalar Ae = real_power(A, -*sq, wp);
          ExactScalar h = ExactScalar(c) * Ae * ge[static_cast<std::size_t>(t)];
          ExactScalar dh = ExactScalar(c) * Ae * (-(logA * ge[static_cast<std::size_t>(t)]) - dge[static_cast<std::size_t>(t)]);
          residue += h / ExactScalar(e);
          value += dh / ExactScalar(e) + h * z;
          mags[static_cast<std::size_t>(t)] += (h * z).magnitude();
        } else {
          ExactScalar term = ExactScalar(c) * Apow * g[static_cast<std::size_t>(t)] * z;
          value += term;
          mags[static_cast<std::size_t>(t)] += term.magnitude();
        }
      }
    }
    bool converged = single_pass;
    if (!converged) {
      double scale = std::max(1.0, value.magnitude());
      converged = true;
      for (long t = std::max(0L, T - 3); t <= T; ++t) {
        if (mags[static_cast<std::size_t>(t)] > tol * scale) converged = false;
      }
    }
    if (converged) {
      out.residue += residue;
      out.value += value;
      return out;
    }
    if (T >= kTailMax) throw TruncationError("tail expansion did not converge");
    T *= 2;
  }
}

Laurent half_laurent(const SpectralModel& model, int sign, const ExactScalar& s, long prec) {
  long wp = prec + 32;
  auto sq = s.as_rational();
  bool exact_mode = sq && is_integer(*sq) && sgn(*sq) <= 0;
  ExactScalar S = exact_mode ? s : to_float(s, wp);
  Laurent out{ExactScalar(0), ExactScalar(0)};
  for (const auto& ev : model.exceptional) {
    if (ev.value.real_sign() != sign) continue;
    out.value += ExactScalar(ev.multiplicity) * pow_neg(abs_real(ev.value), S, exact_mode, wp);
  }
  for (const auto& br : model.branches) {
    if (br.sign() != sign) continue;
    auto t = branch_laurent(br, s, prec);
    out.residue += t.residue;
    out.value += t.value;
  }
  if (out.value.is_float()) out.value = to_float(out.value, prec);
  if (out.residue.is_float()) out.residue = to_float(out.residue, prec);
  return out;
}

std::map<Rational, ExactScalar> half_residues(const SpectralModel& model, int sign, long T) {
  std::map<Rational, ExactScalar> res;
  for (const auto& br : model.branches) {
    if (br.sign() != sign) continue;
    AsymptoticSeries law = br.law(T);
    long Teff = law.terminating() ? T : std::min(T, law.depth());
    std::vector<ExactScalar> b = law.b();
    if (!law.terminating() && static_cast<long>(b.size()) > Teff) b.resize(static_cast<std::size_t>(Teff));
    const Polynomial& mu = br.multiplicity();
    std::map<Rational, std::vector<ExactScalar>> gcache;
    for (long t = 0; t <= Teff; ++t) {
      for (long d = 0; d <= mu.degree(); ++d) {
        Rational c = mu.coeff(d);
        if (sgn(c) == 0) continue;
        Rational sigma = Rational(1 + d - t) / law.e();
        auto it = gcache.find(sigma);
        if (it == gcache.end()) it = gcache.emplace(sigma, binomial_series(b, ExactScalar(-sigma), Teff)).first;
        ExactScalar r = ExactScalar(c) * real_power(law.A(), -sigma) * it->second[static_cast<std::size_t>(t)] /
                        ExactScalar(law.e());
        auto [pos, inserted] = res.emplace(sigma, r);
        if (!inserted) pos->second += r;
      }
    }
  }
  return res;
}

Rational model_floor(const SpectralModel& model, long T) {
  bool any = false;
  Rational floor;
  for (const auto& br : model.branches) {
    AsymptoticSeries law = br.law(T);
    long Teff = law.terminating() ? T : std::min(T, law.depth());
    Rational f = Rational(br.multiplicity().degree() - Teff) / law.e();
    if (!any || f > floor) floor = f;
    any = true;
  }
  return any ? floor : Rational(-T);
}

long resolve_depth(const SpectralModel& model, long depth) { return depth < 0 ? model.default_depth() : depth; }

}  // namespace

Branch::Branch(AsymptoticSeries base, Polynomial multiplicity, long k0, std::vector<SpectralMapSpec> maps)
    : base_(std::move(base)), mult_(std::move(multiplicity)), k0_(k0), maps_(std::move(maps)),
      cache_(std::make_shared<Cache>()) {
  if (!base_.terminating()) throw DomainError("branch base law must be exact");
  if (sgn(base_.e()) <= 0) throw DomainError("branch law must grow");
}

int Branch::sign() const {
  int s = base_.sign();
  for (const auto& m : maps_) {
    if (m.kind == SpectralMapSpec::Kind::Abs) s = 1;
  }
  return s;
}

AsymptoticSeries Branch::law(long depth) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->laws.find(depth);
  if (it != cache_->laws.end()) return it->second;
  long work = depth + 4;
  AsymptoticSeries u = base_;
  while (true) {
    u = base_;
    for (const auto& m : maps_) u = series_compose_map(u, m, work);
    if (u.terminating() || u.depth() >= depth) break;
    work *= 2;
  }
  cache_->laws.emplace(depth, u);
  return u;
}

ExactScalar Branch::eigenvalue(long k, long prec) const {
  ExactScalar v = base_.value(ExactScalar(k), prec);
  for (const auto& m : maps_) v = apply_map(v, m, prec);
  return v;
}

Branch Branch::with_map(const SpectralMapSpec& map) const {
  auto maps = maps_;
  maps.push_back(map);
  return Branch(base_, mult_, k0_, std::move(maps));
}

Branch Branch::with_k0(long k0) const { return Branch(base_, mult_, k0, maps_); }

bool operator==(const Branch& x, const Branch& y) {
  return x.base_ == y.base_ && x.mult_ == y.mult_ && x.k0_ == y.k0_ && x.maps_ == y.maps_;
}

void SpectralModel::validate() const {
  if (order < 1 || dimension < 1) throw DomainError("order and dimension must be positive");
  if (kernel_dim < 0) throw DomainError("kernel dimension must be non-negative");
  for (const auto& ev : exceptional) {
    if (ev.value.is_zero()) throw DomainError("exceptional eigenvalue 0 belongs to the kernel");
    if (!ev.value.is_real()) throw DomainError("exceptional eigenvalue must be real");
    if (ev.multiplicity < 1) throw DomainError("exceptional multiplicity must be positive");
  }
  for (const auto& br : branches) {
    AsymptoticSeries law = br.law(2);
    if (Rational(br.multiplicity().degree() + 1) / law.e() != make_rational(dimension, order)) {
      throw DomainError("branch growth does not match dimension/order");
    }
    double prev = 0;
    for (long k = br.k0(); k <= br.k0() + 64; ++k) {
      Rational m = br.multiplicity_at(k);
      if (sgn(m) <= 0 || !is_integer(m)) throw DomainError("multiplicity must be a positive integer");
      ExactScalar lam = br.eigenvalue(k);
      if (lam.real_sign() != br.sign()) throw DomainError("eigenvalue sign differs from the branch sign");
      double a = std::fabs(lam.real());
      if (a <= prev) throw DomainError("branch eigenvalues are not increasing");
      prev = a;
    }
  }
}

bool operator==(const SpectralModel& x, const SpectralModel& y) {
  return x.name == y.name && x.branches == y.branches && x.exceptional == y.exceptional &&
         x.kernel_dim == y.kernel_dim && x.order == y.order && x.dimension == y.dimension && x.notes == y.notes;
}

std::string function_name(SpectralFunction f) {
  switch (f) {
    case SpectralFunction::ZetaPlus: return "zeta_plus";
    case SpectralFunction::ZetaMinus: return "zeta_minus";
    case SpectralFunction::ZetaUp: return "zeta_up";
    case SpectralFunction::ZetaDown: return "zeta_down";
    case SpectralFunction::ZetaAbs: return "zeta_abs";
    case SpectralFunction::Eta: return "eta";
  }
  return "?";
}

SpectralFunction parse_function_name(const std::string& name) {
  for (auto f : {SpectralFunction::ZetaPlus, SpectralFunction::ZetaMinus, SpectralFunction::ZetaUp,
                 SpectralFunction::ZetaDown, SpectralFunction::ZetaAbs, SpectralFunction::Eta}) {
    if (function_name(f) == name) return f;
  }
  throw ParseError("unknown spectral function '" + name + "'");
}

MeromorphicData::MeromorphicData(SpectralFunction fn, std::shared_ptr<const SpectralModel> model, long depth,
                                 std::map<Rational, ExactScalar> poles, Rational validity_floor)
    : fn_(fn), model_(std::move(model)), depth_(depth), poles_(std::move(poles)), floor_(std::move(validity_floor)) {}

std::map<Rational, ExactScalar> MeromorphicData::nonzero_poles() const {
  std::map<Rational, ExactScalar> out;
  for (const auto& [s, r] : poles_) {
    if (!numerically_zero(r)) out.emplace(s, r);
  }
  return out;
}

ExactScalar MeromorphicData::residue(const Rational& sigma) const {
  if (sigma <= floor_) {
    throw InsufficientDepthError("residue at " + to_string(sigma) + " lies at or below the validity floor " +
                                 to_string(floor_) + "; increase the depth");
  }
  auto it = poles_.find(sigma);
  return it == poles_.end() ? ExactScalar(0) : it->second;
}

Laurent MeromorphicData::laurent(const ExactScalar& s, long prec) const {
  long wp = prec + 32;
  if (fn_ == SpectralFunction::ZetaPlus) return half_laurent(*model_, 1, s, prec);
  if (fn_ == SpectralFunction::ZetaMinus) return half_laurent(*model_, -1, s, prec);
  Laurent lp = half_laurent(*model_, 1, s, prec);
  Laurent lm = half_laurent(*model_, -1, s, prec);
  ExactScalar c(1), dc(0);
  switch (fn_) {
    case SpectralFunction::ZetaAbs: break;
    case SpectralFunction::Eta: c = ExactScalar(-1); break;
    case SpectralFunction::ZetaUp:
      c = exp_i_pi(s, wp);
      if (!lm.residue.is_zero()) dc = i_pi(wp) * c;
      break;
    case SpectralFunction::ZetaDown:
      c = exp_i_pi(-s, wp);
      if (!lm.residue.is_zero()) dc = -(i_pi(wp) * c);
      break;
    default: break;
  }
  Laurent out{lp.residue + c * lm.residue, lp.value + c * lm.value + dc * lm.residue};
  if (out.value.is_float()) out.value = to_float(out.value, prec);
  if (out.residue.is_float()) out.residue = to_float(out.residue, prec);
  return out;
}

MeromorphicData half_zeta(const SpectralModel& model, int sign, long depth) {
  long T = resolve_depth(model, depth);
  Rational floor = model_floor(model, T);
  auto res = half_residues(model, sign, T);
  std::map<Rational, ExactScalar> poles;
  for (auto& [s, r] : res) {
    if (s > floor) poles.emplace(s, r);
  }
  return MeromorphicData(sign > 0 ? SpectralFunction::ZetaPlus : SpectralFunction::ZetaMinus,
                         std::make_shared<const SpectralModel>(model), T, std::move(poles), floor);
}

MeromorphicData make_function(const SpectralModel& model, SpectralFunction fn, long depth) {
  if (fn == SpectralFunction::ZetaPlus) return half_zeta(model, 1, depth);
  if (fn == SpectralFunction::ZetaMinus) return half_zeta(model, -1, depth);
  long T = resolve_depth(model, depth);
  Rational floor = model_floor(model, T);
  auto rp = half_residues(model, 1, T);
  auto rm = half_residues(model, -1, T);
  std::map<Rational, ExactScalar> poles;
  auto get = [](const std::map<Rational, ExactScalar>& m, const Rational& s) {
    auto it = m.find(s);
    return it == m.end() ? ExactScalar(0) : it->second;
  };
  std::vector<Rational> sigmas;
  for (const auto& [s, r] : rp) sigmas.push_back(s);
  for (const auto& [s, r] : rm) sigmas.push_back(s);
  for (const auto& s : sigmas) {
    if (s <= floor || poles.count(s)) continue;
    ExactScalar p = get(rp, s), m = get(rm, s);
    ExactScalar r;
    switch (fn) {
      case SpectralFunction::ZetaAbs: r = p + m; break;
      case SpectralFunction::Eta: r = p - m; break;
      case SpectralFunction::ZetaUp: r = p + exp_i_pi(ExactScalar(s)) * m; break;
      case SpectralFunction::ZetaDown: r = p + exp_i_pi(ExactScalar(-s)) * m; break;
      default: break;
    }
    poles.emplace(s, r);
  }
  return MeromorphicData(fn, std::make_shared<const SpectralModel>(model), T, std::move(poles), floor);
}

SpectralFunctions spectral_functions(const SpectralModel& model, long depth) {
  return {make_function(model, SpectralFunction::ZetaUp, depth), make_function(model, SpectralFunction::ZetaDown, depth),
          make_function(model, SpectralFunction::ZetaAbs, depth), make_function(model, SpectralFunction::Eta, depth)};
}

AdmissibleResidues residues_at_admissible(const SpectralModel& model, long floor, long depth, long prec) {
  if (floor > model.dimension) throw DomainError("floor must not exceed the dimension");
  auto fns = spectral_functions(model, depth);
  AdmissibleResidues out;
  for (long k = model.dimension; k >= floor; --k) {
    if (k == 0) continue;
    Rational sigma(k, model.order);
    sigma.canonicalize();
    out.rows.push_back({sigma, fns.zeta_up.residue(sigma), fns.zeta_down.residue(sigma),
                        fns.zeta_abs.residue(sigma), fns.eta.residue(sigma)});
  }
  out.eta_at_zero = evaluate(fns.eta, ExactScalar(0), prec);
  return out;
}

ExactScalar evaluate(const MeromorphicData& fn, const ExactScalar& s, long prec) {
  Laurent l = fn.laurent(s, prec);
  if (!numerically_zero(l.residue, std::max(1.0, l.value.magnitude()))) {
    throw PoleError(function_name(fn.function()) + " has a pole at s = " + s.display() + " with residue " +
                    l.residue.display());
  }
  return l.value;
}

std::complex<long double> truncated_spectral_sum(const SpectralModel& model, SpectralFunction fn, double s,
                                                 double cutoff) {
  using C = std::complex<long double>;
  const long double pi = 3.141592653589793238462643383279502884L;
  auto weight = [&](int sign) -> C {
    switch (fn) {
      case SpectralFunction::ZetaPlus: return sign > 0 ? 1 : 0;
      case SpectralFunction::ZetaMinus: return sign < 0 ? 1 : 0;
      case SpectralFunction::ZetaAbs: return 1;
      case SpectralFunction::Eta: return static_cast<long double>(sign);
      case SpectralFunction::ZetaUp: return sign > 0 ? C(1) : std::polar(1.0L, pi * s);
      case SpectralFunction::ZetaDown: return sign > 0 ? C(1) : std::polar(1.0L, -pi * s);
    }
    return 0;
  };
  C acc = 0;
  for (const auto& ev : model.exceptional) {
    long double a = std::fabs(static_cast<long double>(ev.value.real()));
    if (a <= cutoff) acc += weight(ev.value.real_sign()) * static_cast<long double>(ev.multiplicity) * std::pow(a, -static_cast<long double>(s));
  }
  for (const auto& br : model.branches) {
    C w = weight(br.sign());
    long double part = 0;
    for (long k = br.k0();; ++k) {
      long double a = std::fabs(static_cast<long double>(br.eigenvalue(k, 64).real()));
      if (a > cutoff) break;
      part += static_cast<long double>(br.multiplicity_at(k).get_d()) * std::pow(a, -static_cast<long double>(s));
    }
    acc += w * part;
  }
  return acc;
}

}  // namespace zetalab
