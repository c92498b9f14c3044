#pragma once

#include <optional>
#include <string>
#include <vector>

#include "truthlab/json_io.hpp"
#include "truthlab/principles.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// ---------------------------------------------------------------------------
// deterministic generators and reference oracles shared by the check suite
// and the test binaries

namespace gen {

Term random_term(Rng& rng, uint32_t depth, uint32_t max_var);
Formula random_formula(Rng& rng, uint32_t depth, uint32_t max_var);

// Sentences whose quantifiers resolve below value 8 whenever they resolve
// at all; shaped to avoid the evaluator's bounded-witness special case so
// the reference enumerator sees the same search problem.
Formula small_value_sentence(Rng& rng);

// decidable at any budget >= 8, truth value known by construction
Formula decidable_sentence(Rng& rng, bool want_true);
Formula decidable_sentence(Rng& rng);

std::vector<Formula> decidable_sequence(Rng& rng, size_t max_len);

// sentences that evaluate true, for hypothesis-satisfying chains
std::vector<Formula> true_chain(Rng& rng, size_t max_len);

SatScenario random_scenario(Rng& rng);

CutModel random_cut_model(Rng& rng, uint64_t size, uint64_t cut,
                          size_t sequences, size_t max_len);

}  // namespace gen

// Reference truth by direct enumeration of assignments up to the bound.
// Independent of the Evaluator: own term arithmetic, no cache, no bounded
// search special case. nullopt when enumeration cannot decide.
std::optional<bool> enumerate_truth(Formula sentence, uint64_t bound);

// Truth over the finite universe [0, value_bound]: every quantifier ranges
// over it. This is the satisfaction notion the scenario generator seeds
// bases with.
bool desk_sat(Formula f, const Assignment& alpha, uint64_t value_bound);

// ---------------------------------------------------------------------------
// the acceptance checks

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  // failed because the evaluation budget could not decide, not because a
  // property was violated
  bool undetermined = false;
  std::string detail;
  double seconds = 0;        // wall time; not part of the JSON report
  double limit_seconds = 0;  // documented budget for this check
};

struct SuiteConfig {
  uint64_t seed = 7;
  uint64_t budget = 64;
  std::string only;  // run only checks whose id starts with this prefix
  std::function<void(const CheckResult&)> progress;  // called per check
};

struct SuiteReport {
  std::vector<CheckResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  bool any_violation() const {
    for (const auto& r : results)
      if (!r.pass && !r.undetermined) return true;
    return false;
  }
};

SuiteReport run_suite(const SuiteConfig& config);

// timing excluded so that equal seeds give byte-identical reports
Json suite_report_json(const SuiteReport& report);

}  // namespace truthlab
