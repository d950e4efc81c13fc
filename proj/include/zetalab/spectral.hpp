#pragma once

// Operators described by their spectra, and the meromorphic continuation of
// their zeta and eta functions.

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zetalab/asymptotics.hpp"
#include "zetalab/polynomial.hpp"

namespace zetalab {

// One family of eigenvalues lambda(k), k >= k0, each repeated mult(k) times.
// The law is an exact base expansion followed by a chain of maps.
class Branch {
 public:
  Branch(AsymptoticSeries base, Polynomial multiplicity, long k0, std::vector<SpectralMapSpec> maps = {});

  int sign() const;
  const AsymptoticSeries& base() const { return base_; }
  const Polynomial& multiplicity() const { return mult_; }
  const std::vector<SpectralMapSpec>& maps() const { return maps_; }
  long k0() const { return k0_; }

  // Expansion of the signed eigenvalue law with at least `depth` justified terms
  // (terminating laws are exact).
  AsymptoticSeries law(long depth) const;
  ExactScalar eigenvalue(long k, long prec = kDefaultPrecision) const;
  Rational multiplicity_at(long k) const { return mult_(Rational(k)); }

  Branch with_map(const SpectralMapSpec& map) const;
  Branch with_k0(long k0) const;

  friend bool operator==(const Branch& x, const Branch& y);

 private:
  struct Cache {
    std::mutex mu;
    std::map<long, AsymptoticSeries> laws;
  };
  AsymptoticSeries base_;
  Polynomial mult_;
  long k0_ = 1;
  std::vector<SpectralMapSpec> maps_;
  std::shared_ptr<Cache> cache_;
};

struct ExceptionalEigenvalue {
  ExactScalar value;
  long multiplicity = 1;
  friend bool operator==(const ExceptionalEigenvalue& x, const ExceptionalEigenvalue& y) {
    return x.value == y.value && x.multiplicity == y.multiplicity;
  }
};

struct SpectralModel {
  std::string name;
  std::vector<Branch> branches;
  std::vector<ExceptionalEigenvalue> exceptional;
  long kernel_dim = 0;
  long order = 1;      // m
  long dimension = 1;  // n
  std::vector<std::string> notes;

  long default_depth() const { return dimension + order + 4; }
  // DomainError when an invariant fails.
  void validate() const;
  friend bool operator==(const SpectralModel& x, const SpectralModel& y);
};

enum class SpectralFunction { ZetaPlus, ZetaMinus, ZetaUp, ZetaDown, ZetaAbs, Eta };

std::string function_name(SpectralFunction f);
SpectralFunction parse_function_name(const std::string& name);

// Residue and finite part of a function at a point.
struct Laurent {
  ExactScalar residue;
  ExactScalar value;
};

class MeromorphicData {
 public:
  MeromorphicData(SpectralFunction fn, std::shared_ptr<const SpectralModel> model, long depth,
                  std::map<Rational, ExactScalar> poles, Rational validity_floor);

  SpectralFunction function() const { return fn_; }
  long depth() const { return depth_; }
  // Candidate pole locations strictly above the validity floor and their
  // residues; a zero residue means the point is regular.
  const std::map<Rational, ExactScalar>& poles() const { return poles_; }
  std::map<Rational, ExactScalar> nonzero_poles() const;
  const Rational& validity_floor() const { return floor_; }
  const SpectralModel& model() const { return *model_; }

  // Residue at sigma; InsufficientDepthError at or below the validity floor.
  ExactScalar residue(const Rational& sigma) const;
  Laurent laurent(const ExactScalar& s, long prec = kDefaultPrecision) const;

 private:
  SpectralFunction fn_;
  std::shared_ptr<const SpectralModel> model_;
  long depth_;
  std::map<Rational, ExactScalar> poles_;
  Rational floor_;
};

// sign = +1: sum over positive eigenvalues of |lambda|^{-s}; -1: negative ones.
MeromorphicData half_zeta(const SpectralModel& model, int sign, long depth = -1);
MeromorphicData make_function(const SpectralModel& model, SpectralFunction fn, long depth = -1);

struct SpectralFunctions {
  MeromorphicData zeta_up;
  MeromorphicData zeta_down;
  MeromorphicData zeta_abs;
  MeromorphicData eta;
};

SpectralFunctions spectral_functions(const SpectralModel& model, long depth = -1);

struct AdmissibleRow {
  Rational sigma;
  ExactScalar zeta_up;
  ExactScalar zeta_down;
  ExactScalar zeta_abs;
  ExactScalar eta;
};

struct AdmissibleResidues {
  std::vector<AdmissibleRow> rows;  // sigma = k/m, floor <= k <= n, k != 0, descending
  ExactScalar eta_at_zero;
};

AdmissibleResidues residues_at_admissible(const SpectralModel& model, long floor, long depth = -1,
                                          long prec = kDefaultPrecision);

// Value at a regular point; PoleError when the residue at s is nonzero.
ExactScalar evaluate(const MeromorphicData& fn, const ExactScalar& s, long prec = kDefaultPrecision);

// sum over eigenvalues with |lambda| <= cutoff of the summand of fn at real s.
std::complex<long double> truncated_spectral_sum(const SpectralModel& model, SpectralFunction fn, double s,
                                                 double cutoff);

}  // namespace zetalab
