#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "truthlab/error.hpp"
#include "truthlab/nat.hpp"

namespace truthlab {

// Terms and formulas of the first-order language {S, +, *, 0, =} with
// indexed variables x0, x1, ... Values are handles into a process-wide
// interning table: structurally equal trees always share one node, so
// handle equality is structural equality and common subtrees (for
// instance the shared tails of the sentence sequences built in
// derivations.hpp) cost one node each.
using VarIndex = uint32_t;
using NodeId = uint32_t;

enum class TermKind : uint8_t { Zero, Succ, Add, Mul, Var };
enum class FormulaKind : uint8_t { Eq, Not, Or, And, Exists, Forall };

struct Term {
  NodeId id{};
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct Formula {
  NodeId id{};
  bool operator==(const Formula&) const = default;
  auto operator<=>(const Formula&) const = default;
};

// constructors
Term zero();
Term succ(Term t);
Term add(Term a, Term b);
Term mul(Term a, Term b);
Term var(VarIndex v);

Formula eq(Term a, Term b);
Formula neg(Formula f);
Formula disj(Formula a, Formula b);
Formula conj(Formula a, Formula b);
Formula exists(VarIndex v, Formula body);
Formula forall(VarIndex v, Formula body);

// observers
TermKind term_kind(Term t);
FormulaKind formula_kind(Formula f);
Term succ_arg(Term t);
std::pair<Term, Term> add_args(Term t);
std::pair<Term, Term> mul_args(Term t);
VarIndex var_index(Term t);
std::pair<Term, Term> eq_args(Formula f);
Formula not_arg(Formula f);
std::pair<Formula, Formula> or_args(Formula f);
std::pair<Formula, Formula> and_args(Formula f);
VarIndex quant_var(Formula f);
Formula quant_body(Formula f);

// free variables, sorted ascending
const std::vector<VarIndex>& free_vars(Term t);
const std::vector<VarIndex>& free_vars(Formula f);
bool is_closed(Term t);
bool is_sentence(Formula f);

std::vector<Formula> direct_subformulas(Formula f);

// A variable assignment. Operations that instantiate a target require the
// domain to cover the target's free variables.
using Assignment = std::map<VarIndex, Nat>;

// Substitution of closed terms for free variables; bound occurrences are
// untouched. Rejects open replacement terms (the language never needs
// capture-avoiding substitution).
Term substitute(Term t, const std::map<VarIndex, Term>& repl);
Formula substitute(Formula f, const std::map<VarIndex, Term>& repl);

// phi[alpha]: replace each free variable v by the numeral of alpha(v).
// Result is a sentence; throws Error when alpha misses a free variable.
Formula instantiate(Formula f, const Assignment& alpha);

// concrete syntax:
//   terms     0 | S(t) | (t+t) | (t*t) | x<digits>
//   formulas  t=t | !f | (f|f) | (f&f) | E x<digits>.f | A x<digits>.f
// The parser additionally accepts redundant parentheses around formulas;
// the printer never emits them.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
std::string to_string(Term t);
std::string to_string(Formula f);

// number of nodes when the DAG is expanded to a tree
Nat tree_node_count(Formula f);
Nat tree_node_count(Term t);
// number of distinct interned nodes reachable from the given roots
size_t dag_node_count(std::span<const Formula> roots);

// connective depth; atoms have depth 1
size_t formula_depth(Formula f);

// the disjuncts of a maximal left-grouped or-spine, in order; a non-Or
// formula is its own single disjunct
std::vector<Formula> or_spine(Formula f);

}  // namespace truthlab
