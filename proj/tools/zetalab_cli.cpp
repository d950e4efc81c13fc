// zetalab: pole tables, parameter sweeps, suite runs, evaluation and
// perturbed-model emission.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "zetalab/errors.hpp"
#include "zetalab/io.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/suite.hpp"

using namespace zetalab;

namespace {

struct ModelOptions {
  std::string ref;
  std::string file;
  std::string shift = "0";
  std::string epsilon = "0";
  std::string c = "0";
  long power = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("ref", ref, "library model name or model file");
    cmd->add_option("--model", file, "library model name or model file (overrides the positional argument)");
    cmd->add_option("--shift,-a", shift, "add a to the operator (exact rational)");
    cmd->add_option("--epsilon,-e", epsilon, "P + eps |P|, |eps| < 1");
    cmd->add_option("--c", c, "add c F |P|^-n, c >= 0");
  }
};

bool is_library_name(const std::string& s) {
  for (const auto& e : library_entries())
    if (e.name == s) return true;
  return false;
}

SpectralModel load_ref(const std::string& ref) {
  if (is_library_name(ref)) return library_model(ref);
  return model_from_text(read_file(ref));
}

// P_{eps,c} + a, then F|.|^power when power > 1.
SpectralModel apply_params(SpectralModel m, const Rational& a, const Rational& eps, const Rational& c, long power) {
  if (sgn(eps) != 0 || sgn(c) != 0) m = ec_perturb(m, eps, c);
  m = shift(m, a);
  if (power > 1) m = sign_power(m, power);
  return m;
}

SpectralModel resolve(const ModelOptions& o) {
  std::string ref = o.file.empty() ? o.ref : o.file;
  if (ref.empty()) throw ParseError("no model given; use a library name or a model file");
  return apply_params(load_ref(ref), parse_rational(o.shift), parse_rational(o.epsilon), parse_rational(o.c), o.power);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// Exact id, else a unique prefix.
std::string resolve_check_id(const std::string& id) {
  std::vector<std::string> hits;
  for (const auto& c : check_catalog()) {
    if (c.id == id) return id;
    if (c.id.rfind(id, 0) == 0) hits.push_back(c.id);
  }
  if (hits.size() == 1) return hits[0];
  return id;  // run_all reports it with the list of valid ids
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta and eta functions of operator spectra, and symbol-level residues"};
  app.require_subcommand(1);
  long prec = kDefaultPrecision;
  long depth = -1;
  long floor = -2;
  std::string format = "csv";
  app.add_option("--prec", prec, "working precision in bits")->capture_default_str();

  // poles
  auto* poles = app.add_subcommand("poles", "residue table over the admissible set");
  ModelOptions poles_opt;
  poles_opt.add_to(poles);
  poles->add_option("--floor", floor, "lowest k of the admissible set")->capture_default_str();
  poles->add_option("--depth", depth, "asymptotic depth T (default n + m + 4)");
  poles->add_option("--prec", prec, "working precision in bits")->capture_default_str();
  poles->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "residue trajectories along a parameter");
  ModelOptions sweep_opt;
  sweep_opt.add_to(sweep);
  std::string param = "a", lo = "0", hi = "0", sigma_filter, fn_filter;
  long samples = 5;
  sweep->add_option("--param,-p", param, "a, epsilon or c")->check(CLI::IsMember({"a", "epsilon", "c"}))->capture_default_str();
  sweep->add_option("--from", lo, "start of the range (exact rational)")->capture_default_str();
  sweep->add_option("--to", hi, "end of the range (exact rational)")->capture_default_str();
  sweep->add_option("--samples,-n", samples, "number of equally spaced samples")->capture_default_str();
  sweep->add_option("--sigma", sigma_filter, "restrict to one admissible point");
  sweep->add_option("--function", fn_filter, "restrict to one of zeta_up, zeta_down, zeta_abs, eta");
  sweep->add_option("--floor", floor, "lowest k of the admissible set")->capture_default_str();
  sweep->add_option("--depth", depth, "asymptotic depth T");
  sweep->add_option("--prec", prec, "working precision in bits")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "run suite checks");
  std::vector<std::string> ids;
  std::string check_model, check_shift = "0", check_format = "text";
  bool exact_only = false;
  std::uint64_t seed = 20240611;
  check->add_option("ids", ids, "check ids, or 'all'");
  check->add_option("--model", check_model, "library model name or model file to check instead of the defaults");
  check->add_option("--shift,-a", check_shift, "shift applied to --model");
  check->add_flag("--exact-only", exact_only, "run only the exact checks");
  check->add_option("--seed", seed, "seed for randomised inputs")->capture_default_str();
  check->add_option("--prec", prec, "working precision in bits")->capture_default_str();
  check->add_option("--format", check_format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  bool list_checks = false;
  check->add_flag("--list", list_checks, "list the available checks");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a spectral function at s");
  ModelOptions eval_opt;
  eval_opt.add_to(eval);
  std::string fn_name = "eta", s_text = "0";
  eval->add_option("--function,-f", fn_name, "zeta_plus, zeta_minus, zeta_up, zeta_down, zeta_abs or eta")->capture_default_str();
  eval->add_option("--s,-s", s_text, "evaluation point (exact rational)")->capture_default_str();
  eval->add_option("--depth", depth, "asymptotic depth T");
  eval->add_option("--prec", prec, "working precision in bits")->capture_default_str();

  // perturb
  auto* perturb = app.add_subcommand("perturb", "write a perturbed model file");
  ModelOptions perturb_opt;
  perturb_opt.add_to(perturb);
  std::string out_path;
  perturb->add_option("--power", perturb_opt.power, "then take F|.|^m");
  perturb->add_option("--output,-o", out_path, "output file (default stdout)");

  // models
  auto* models = app.add_subcommand("models", "list the built-in models");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*poles) {
      SpectralModel m = resolve(poles_opt);
      auto rows = pole_table(m, floor, depth, prec);
      if (format == "json")
        std::cout << pole_table_json(rows).dump(2) << "\n";
      else
        std::cout << pole_table_csv(rows);
      return 0;
    }

    if (*sweep) {
      std::string ref = sweep_opt.file.empty() ? sweep_opt.ref : sweep_opt.file;
      if (ref.empty()) throw ParseError("no model given");
      SpectralModel base = load_ref(ref);
      Rational a = parse_rational(sweep_opt.shift), eps = parse_rational(sweep_opt.epsilon), c = parse_rational(sweep_opt.c);
      Rational from = parse_rational(lo), to = parse_rational(hi);
      if (samples < 0) throw ParameterError("samples must be non-negative");
      std::optional<Rational> only_sigma;
      if (!sigma_filter.empty()) only_sigma = parse_rational(sigma_filter);
      std::optional<SpectralFunction> only_fn;
      if (!fn_filter.empty()) only_fn = parse_function_name(fn_filter);
      std::vector<std::pair<Rational, SpectralModel>> points;
      for (long i = 0; from <= to && i < samples; ++i) {
        Rational t = samples == 1 ? from : from + (to - from) * make_rational(i, samples - 1);
        Rational pa = a, pe = eps, pc = c;
        (param == "a" ? pa : param == "epsilon" ? pe : pc) = t;
        points.emplace_back(t, apply_params(base, pa, pe, pc, 0));
      }
      std::ostringstream out;
      out << "param,value,sigma,function,residue_exact,residue_float\n";
      for (const auto& [t, m] : points) {
        for (const auto& r : pole_table(m, floor, depth, prec)) {
          if (only_sigma && r.sigma != *only_sigma) continue;
          if (only_fn && r.function != *only_fn) continue;
          out << param << "," << to_string(t) << "," << to_string(r.sigma) << "," << function_name(r.function) << ","
              << csv_field(r.residue.to_string()) << "," << csv_field(decimal(r.residue)) << "\n";
        }
      }
      std::cout << out.str();
      return 0;
    }

    if (*check) {
      if (list_checks) {
        for (const auto& c : check_catalog())
          std::cout << c.id << (c.exact ? "  [exact]  " : "  [numeric]  ") << c.claim << "\n";
        return 0;
      }
      SuiteConfig cfg;
      cfg.exact_only = exact_only;
      cfg.prec = prec;
      cfg.seed = seed;
      for (const auto& id : ids) cfg.ids.push_back(id == "all" ? id : resolve_check_id(id));
      if (!check_model.empty())
        cfg.model = apply_params(load_ref(check_model), parse_rational(check_shift), Rational(0), Rational(0), 0);
      auto verdicts = run_all(cfg);
      if (check_format == "json")
        std::cout << report_json(verdicts).dump(2) << "\n";
      else
        std::cout << report_text(verdicts);
      return all_pass(verdicts) ? 0 : 1;
    }

    if (*eval) {
      SpectralModel m = resolve(eval_opt);
      SpectralFunction f = parse_function_name(fn_name);
      ExactScalar v = evaluate(make_function(m, f, depth), ExactScalar(parse_rational(s_text)), prec);
      std::cout << function_name(f) << "(" << s_text << ") = " << v.to_string() << "\n";
      std::cout << "~ " << decimal(v, 30) << "\n";
      return 0;
    }

    if (*perturb) {
      SpectralModel m = resolve(perturb_opt);
      std::string text = model_to_text(m);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return 0;
    }

    if (*models) {
      for (const auto& e : library_entries())
        std::cout << e.name << "  n=" << e.dimension << " m=" << e.order << "  " << e.description << "\n";
      return 0;
    }
  } catch (const InsufficientDepthError& e) {
    std::cerr << "error: " << e.what() << "\nhint: raise --depth or the --floor\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
