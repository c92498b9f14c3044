#pragma once

#include <functional>
#include <optional>
#include <set>

#include "truthlab/disjunctions.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Three-valued truth source: nullopt means "the source does not decide".
using TruthOracle = std::function<std::optional<bool>(Formula)>;

// oracle backed by budgeted evaluation (one shared evaluator per oracle)
TruthOracle evaluation_oracle(uint64_t budget);

// Finite truth valuation, total on its closure set.
class TruthValuation {
 public:
  void set(Formula f, bool value) { map_[f] = value; }
  std::optional<bool> get(Formula f) const {
    auto it = map_.find(f);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(Formula f) const { return map_.count(f) > 0; }
  const std::map<Formula, bool>& entries() const { return map_; }

  TruthOracle as_oracle() const {
    return [this](Formula f) { return get(f); };
  }

  // Valuation agreeing with budgeted evaluation on the given sentences;
  // throws when a sentence is undetermined at the budget.
  static TruthValuation from_evaluation(const std::vector<Formula>& closure,
                                        uint64_t budget);

 private:
  std::map<Formula, bool> map_;
};

struct PrincipleViolation {
  std::string instance;
  std::string explanation;
};

struct PrincipleReport {
  std::string principle;
  uint64_t instances_checked = 0;
  std::vector<PrincipleViolation> violations;
  std::vector<std::string> undetermined;
  std::vector<std::string> notes;

  enum class Outcome { Pass, Fail, Undetermined };
  Outcome verdict() const {
    if (!violations.empty()) return Outcome::Fail;
    if (!undetermined.empty()) return Outcome::Undetermined;
    return Outcome::Pass;
  }
};

enum class QuantifierVariant { Numeral, ClosedTerm };

// Audits the compositional truth clauses on the valuation's closure:
// sentencehood of true elements, closed equations by value, negation,
// disjunction, conjunction, the quantifier clauses in the selected variant
// (numeral instantiation x <= budget, or closed terms of code <= budget),
// and value-regularity. Instances whose instantiations leave the closure
// are reported as undetermined, never as violations.
PrincipleReport check_ct_minus(const TruthValuation& v,
                               QuantifierVariant variant, uint64_t budget);

enum class DcDirection { In, Out, Both };

// Disjunctive correctness over left-grouped disjunctions of the given
// sequences. Throws a closure-miss error naming any needed sentence the
// valuation does not cover.
PrincipleReport check_dc(const TruthValuation& v,
                         const std::vector<SentenceSeq>& seqs,
                         DcDirection direction);

// Sequence induction over bare naturals: if s0 is in T and every adjacent
// implication holds, all entries must lie in T.
PrincipleReport check_seqind(const std::set<uint64_t>& t,
                             const std::vector<std::vector<uint64_t>>& seqs);

// Order variant: a progressive sequence (each prefix in T forces the next
// entry) must lie in T entirely.
PrincipleReport check_seqoind(const std::set<uint64_t>& t,
                              const std::vector<std::vector<uint64_t>>& seqs);

// Bounded audit of the induction principle for the set defined by phi
// (at most one free variable) through the truth source.
PrincipleReport check_int(const TruthOracle& truth, Formula phi,
                          uint64_t budget);

// Quantifier-free correctness: a quantifier-free sentence that evaluates
// true must be true in the valuation.
PrincipleReport check_qfc(const TruthValuation& v, uint64_t budget);

struct OuterContractReport {
  PrincipleReport truth;  // append clause, out direction, biconditional
  // sample indices where build(phis + [psi]) != build(phis) | psi as ASTs
  std::vector<size_t> structural_append_failures;
  bool structural_append_ok() const {
    return structural_append_failures.empty();
  }
};

// Checks the outer-disjunction contract for a builder against a truth
// oracle on each sample: truth-level append clause over every prefix, the
// out direction, the full biconditional, plus the structural form of the
// append clause (reported separately; balanced grouping fails it while
// still satisfying the truth-level biconditional at this scale).
OuterContractReport check_outer_contract(const DisjunctionBuilder& builder,
                                         const TruthOracle& oracle,
                                         const std::vector<SentenceSeq>& samples);

bool is_quantifier_free(Formula f);

}  // namespace truthlab
