#pragma once

// Named, machine-checked assertions over the model and symbol library.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/io.hpp"
#include "zetalab/spectral.hpp"
#include "zetalab/symbol.hpp"

namespace zetalab {

struct ComputedValue {
  std::string label;
  std::string exact;  // serialised exact value (or hex float)
  std::string approx;
};

struct CheckVerdict {
  std::string id;
  std::string claim;   // the statement being checked
  std::string inputs;
  std::vector<ComputedValue> values;
  bool pass = false;
  std::string tolerance;  // "0" for exact checks
  std::string detail;     // failure reason or error text
};

struct SuiteConfig {
  std::vector<std::string> ids;  // empty: every check
  bool exact_only = false;
  long prec = kDefaultPrecision;
  std::uint64_t seed = 20240611;
  // Replaces the default instances of model-driven checks when set.
  std::optional<SpectralModel> model;
  // Loaded (and validated) before any check runs.
  std::optional<std::string> model_file;
};

struct CheckInfo {
  std::string id;
  std::string claim;
  bool exact;
};

const std::vector<CheckInfo>& check_catalog();

CheckVerdict check_residue_trace(std::uint64_t seed = 20240611);
CheckVerdict check_parity_tables(const std::vector<SpectralModel>& models);
CheckVerdict check_sphere_perturbation();
CheckVerdict check_first_order_polynomial(const SpectralModel& model, const std::vector<long>& ks);
CheckVerdict check_eps_identity(const std::vector<SpectralModel>& models);
CheckVerdict check_perturbed_conditions(const SpectralModel& model, const Rational& epsilon, const std::vector<Rational>& cs);
CheckVerdict check_branch_identity(const std::vector<SpectralModel>& models, std::uint64_t seed = 20240611,
                              long prec = kDefaultPrecision);
CheckVerdict check_halves(const std::vector<SpectralModel>& models, long prec = kDefaultPrecision);
CheckVerdict check_decomposition(const std::vector<SpectralModel>& models);
CheckVerdict check_real_residues(const std::vector<SpectralModel>& models);
CheckVerdict check_binomial_expansion();
CheckVerdict check_cross_engine();
CheckVerdict check_regularity(const std::vector<SpectralModel>& models);
CheckVerdict check_order_reduction();
CheckVerdict check_direct_sums(const std::vector<SpectralModel>& models);
CheckVerdict check_odd_class();

// Deterministic order; unknown ids raise DomainError listing the valid ones.
// A model file that fails to load raises ParseError before any check runs.
std::vector<CheckVerdict> run_all(const SuiteConfig& config = {});

bool all_pass(const std::vector<CheckVerdict>& verdicts);
Json report_json(const std::vector<CheckVerdict>& verdicts);
std::string report_text(const std::vector<CheckVerdict>& verdicts);

}  // namespace zetalab
