#pragma once

#include <vector>

#include "truthlab/nat.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// standard-model value of a closed term
Nat val(Term t);
// value of t with variables read from alpha; agrees with val on closed terms
Nat term_eval(Term t, const Assignment& alpha);
// element-wise val of a sequence of closed terms
std::vector<Nat> val_seq(const std::vector<Term>& ts);

// Result of budgeted sentence evaluation. True/False are sound for the
// standard model; Unknown means the budget ran out on an unbounded
// quantifier. The certificate records quantifier witnesses/counterexamples
// along the path that decided the verdict, outermost first.
struct Verdict {
  enum class Kind { True, False, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::pair<VarIndex, Nat>> certificate;

  bool is_true() const { return kind == Kind::True; }
  bool is_false() const { return kind == Kind::False; }
  bool is_unknown() const { return kind == Kind::Unknown; }
  bool determined() const { return kind != Kind::Unknown; }
};

// The bounded comparison lhs <= bound, rendered as E z.((z+lhs)=bound);
// the language has no order symbol. z must not occur in lhs or bound.
Formula bounded_le(Term lhs, Term bound, VarIndex z);

// Compositional evaluation over the standard model. Exists searches
// witnesses 0..budget, Forall searches counterexamples 0..budget; an
// unresolved non-vacuous quantifier yields Unknown, and Unknown propagates
// through the connectives Kleene-style. One special case is decided
// exactly: an existential of the bounded shape
//     E v.((E z.((z+v)=t)) & body)      with t closed
// caps its own witnesses at val(t), so an exhaustive search below that cap
// may soundly answer False.
//
// The class keeps a verdict cache for closed subformulas, which makes
// evaluation linear over shared DAGs; reuse one instance when evaluating
// many related sentences at the same budget.
class Evaluator {
 public:
  explicit Evaluator(uint64_t budget = 64) : budget_(budget) {}
  uint64_t budget() const { return budget_; }

  // requires a sentence
  Verdict operator()(Formula sentence);

 private:
  Verdict eval(Formula f, Assignment& env);
  Verdict eval_exists(Formula f, Assignment& env);
  Verdict eval_forall(Formula f, Assignment& env);

  uint64_t budget_;
  std::map<NodeId, Verdict> closed_cache_;
};

struct EvalOptions {
  uint64_t budget = 64;
};

Verdict evaluate(Formula sentence, const EvalOptions& opts = {});

}  // namespace truthlab
