#include <doctest.h>

#include <cstdio>
#include <set>

#include "zetalab/errors.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/suite.hpp"

using namespace zetalab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string failures(const std::vector<CheckVerdict>& vs) {
  std::string out;
  for (const auto& v : vs)
    if (!v.pass) out += v.id + ": " + v.detail + "\n";
  return out;
}

}  // namespace

TEST_CASE("default suite passes") {
  auto verdicts = run_all();
  INFO(failures(verdicts));
  CHECK(verdicts.size() >= 12);
  CHECK(all_pass(verdicts));
  std::set<std::string> ids;
  for (const auto& v : verdicts) {
    ids.insert(v.id);
    CHECK(!v.claim.empty());
    CHECK(!v.tolerance.empty());
  }
  CHECK(ids.size() == verdicts.size());
  CHECK(report_json(verdicts).size() == verdicts.size());
  CHECK(report_text(verdicts).find("FAIL") == std::string::npos);
}

TEST_CASE("suite is reproducible") {
  SuiteConfig cfg;
  cfg.ids = {"residue_trace", "branch_identity"};
  CHECK(report_json(run_all(cfg)) == report_json(run_all(cfg)));
}

TEST_CASE("exact-only selection") {
  SuiteConfig cfg;
  cfg.exact_only = true;
  auto verdicts = run_all(cfg);
  CHECK(!verdicts.empty());
  for (const auto& v : verdicts) CHECK(v.tolerance == "0");
}

TEST_CASE("suite configuration errors") {
  SuiteConfig bad;
  bad.ids = {"no_such_check"};
  CHECK_THROWS_AS(run_all(bad), DomainError);

  std::string path = "suite_corrupt_model.json";
  write_file(path, "{\"order\": 1, \"dimension\": ");
  SuiteConfig cfg;
  cfg.model_file = path;
  CHECK_THROWS_AS(run_all(cfg), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("suite on a user model") {
  SuiteConfig cfg;
  cfg.model = shift(sphere2_dirac(), q(2, 7));
  cfg.ids = {"parity_tables", "first_order_polynomial", "eps_identity", "regularity", "halves"};
  auto verdicts = run_all(cfg);
  INFO(failures(verdicts));
  CHECK(verdicts.size() == 5);
  CHECK(all_pass(verdicts));
}

TEST_CASE("individual checks detect violations") {
  // a model with an asymmetric first-order term breaks the odd-n parity rule
  SpectralModel m = ec_perturb(sphere3_dirac(), q(1, 3), q(0));
  CHECK_FALSE(check_parity_tables({m}).pass);
  CHECK(check_first_order_polynomial(circle_dirac(), {1}).pass);
  CHECK(check_perturbed_conditions(circle_dirac(), q(1, 2), {q(1, 10)}).pass);
}
