#pragma once

#include <optional>

#include "truthlab/disjunctions.hpp"
#include "truthlab/principles.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Proofs in the premises-plus-modus-ponens normal form. An implication is
// always the desugared !antecedent | conclusion; the proof's conclusion is
// its last line.
struct PropProof {
  struct Line {
    Formula sentence;
    enum class Kind { Premise, ModusPonens } kind = Kind::Premise;
    size_t antecedent = 0;   // cited line holding the antecedent
    size_t implication = 0;  // cited line holding !antecedent | this line
  };
  std::vector<Line> lines;
};

struct ProofReport {
  bool well_formed = false;
  std::optional<size_t> bad_line;
  std::string bad_reason;
  std::vector<size_t> premises;
  std::optional<Formula> conclusion;
  // no premises: the conclusion is a pure propositional derivation
  bool pure = false;
  enum class PremiseStatus { None, AllTrue, SomeFalse, Undetermined };
  PremiseStatus premise_status = PremiseStatus::None;
};

// Validates every justification (cited lines must be earlier, the cited
// implication must be exactly !antecedent | conclusion) and classifies the
// premises through the oracle.
ProofReport check_proof(const PropProof& p, const TruthOracle& oracle);

// Propositional tautology by truth table after abstracting maximal
// non-Boolean subformulas (equations and quantified subformulas) as atoms
// by structural identity. Throws above 20 distinct atoms.
bool is_tautology(Formula f);

// The source sentences phi_j together with the transformed sentences
//   psi_0 = phi_0
//   psi_{j+1} = !!phi_{j+1} | (!psi_0 | ... | !psi_j)   (left-grouped)
// Shared prefixes keep the DAG linear while the tree size doubles per step.
struct YabloSequence {
  SentenceSeq source;
  SentenceSeq derived;
};

YabloSequence yablo_transform(const SentenceSeq& phis);

struct YabloReport {
  // hypotheses: the first sentence is true and truth propagates along the
  // sequence; failures are reported, never silently skipped
  bool hypotheses_ok = false;
  std::optional<size_t> hypothesis_failure;
  std::string hypothesis_detail;
  // structural audit: derived really follows the append-law recursion
  bool structure_ok = false;
  std::optional<size_t> structure_failure;
  // the claim: every derived and every source sentence evaluates true
  bool all_true = false;
  std::optional<size_t> first_false_derived;
  std::optional<size_t> first_false_source;

  bool ok() const { return hypotheses_ok && structure_ok && all_true; }
};

YabloReport check_yablo_claim(const YabloSequence& ys, uint64_t budget);

// Replays the prefix-chain argument: once some disjunct is true, every
// longer left-grouped prefix disjunction must be true, compositionally,
// up to the full disjunction.
struct PrefixChainReport {
  enum class Outcome {
    Confirmed,
    HypothesisEmpty,       // no true disjunct: nothing to chain
    OracleUndetermined,
    NonCompositional       // oracle broke the | clause on a chain step
  };
  Outcome outcome = Outcome::HypothesisEmpty;
  std::optional<size_t> first_true;
  uint64_t steps_checked = 0;
  std::string detail;
};

PrefixChainReport replay_prefix_chain(const SentenceSeq& phis,
                                      const TruthOracle& oracle);

}  // namespace truthlab
