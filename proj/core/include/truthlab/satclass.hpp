#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Canonical skeleton of a formula with its term content extracted.
// Every maximal subterm containing no bound variable becomes a slot,
// replaced by a fresh variable; bound variables are renamed by binder
// order. Slot variables and binders draw indices from one counter in
// traversal order, so structurally equal skeletons mean "similar".
struct SyntacticTemplate {
  Formula skeleton;
  std::vector<Term> slots;
};

SyntacticTemplate make_template(Formula f);

// Substitutes the slots back into the skeleton. Inverse of make_template
// up to the canonical renaming of bound variables (exact when the input's
// binders were already canonical, as in every instantiated sentence and in
// formulas whose binder indices do not collide with slot-term variables).
Formula reconstruct(const SyntacticTemplate& t);

bool similar(Formula a, Formula b);  // same template skeleton

// Witness that (phi, alpha) and (psi, beta) instantiate one shared
// skeleton with slot sequences of equal values.
struct EquivWitness {
  Formula shared_template;
  std::vector<Term> left_slots;
  std::vector<Term> right_slots;
};

std::optional<EquivWitness> ext_equiv(
    const std::pair<Formula, Assignment>& p,
    const std::pair<Formula, Assignment>& q);

// Partition of a subformula-closed environment into similarity classes,
// ordered by "contains a direct subformula of", with longest-chain ranks.
struct ClassGraph {
  std::vector<std::vector<Formula>> members;  // per class, sorted
  std::vector<Formula> skeletons;             // template of each class
  std::vector<std::set<size_t>> preds;        // edges: preds[c] below c
  std::vector<size_t> ranks;
  size_t max_rank = 0;
  std::map<Formula, size_t> index;

  size_t class_of(Formula f) const { return index.at(f); }
};

ClassGraph class_graph(const std::set<Formula>& env);

// Pairs are kept canonical: assignment domains equal the formula's free
// variables exactly.
struct PartialSatClass {
  std::set<std::pair<Formula, Assignment>> pairs;
  std::set<Formula> domain;

  void insert(Formula f, const Assignment& alpha);
  bool contains(Formula f, const Assignment& alpha) const;
};

// Desk-scale surrogate for the assignment space: values range over
// [0, value_bound], domains equal the free variables.
std::vector<Assignment> bounded_assignments(const std::vector<VarIndex>& vars,
                                            uint64_t value_bound);

struct SatCheckOptions {
  uint64_t value_bound = 6;
  bool check_regularity = false;
};

struct SatViolation {
  std::string clause;
  std::string detail;
};

struct SatClassReport {
  std::vector<SatViolation> violations;
  size_t formulas_checked = 0;
  bool ok() const { return violations.empty(); }
};

SatClassReport validate_sat_class(const PartialSatClass& s,
                                  const SatCheckOptions& opts = {});

// One-step completion of compositional data on a subformula-closed domain:
// adds (!phi, alpha) for every undecided (phi, alpha) with phi in the
// domain, then recomputes the maximal domain by greatest fixed point.
// Throws Error naming the violated clause when the input is not
// pre-satisfaction data.
PartialSatClass complete_presat(const PartialSatClass& s,
                                const SatCheckOptions& opts = {});

struct SatScenario {
  std::set<Formula> environment;  // closed under direct subformulas
  PartialSatClass base;
  std::vector<Formula> targets;
  uint64_t long_cut = 4;     // spine length counting as "long"
  uint64_t value_bound = 6;  // assignment value range
};

struct SchemeAudit {
  std::string scheme;
  bool vacuous = false;
  bool passed = true;
  uint64_t instances = 0;
  std::string detail;
};

struct ConstructionReport {
  size_t class_count = 0;
  size_t stage_count = 0;
  std::vector<SchemeAudit> audits;
  bool ok() const {
    for (const auto& a : audits)
      if (!a.passed) return false;
    return stage_count <= class_count;
  }
};

// Stagewise construction over the environment's class graph: rank-0
// classes get true closed-term equations, preserved base pairs and long
// disjunctions, closed under value-equivalence; higher ranks follow the
// compositional clauses; the result is negatively completed on the
// environment. The report audits compositionality on targets, preservation
// of the base, value-regularity over the environment, and the
// all-assignments property of long disjunction targets.
std::pair<PartialSatClass, ConstructionReport> build_sat_class(
    const SatScenario& sc);

struct InternalInductionReport {
  bool applicable = true;          // false for closed formulas
  bool base_holds = false;
  std::vector<uint64_t> broken_steps;    // x with member(x) and not member(x+1)
  std::vector<uint64_t> gaps;            // x <= budget with not member(x)
  bool hypothesis_holds = false;
  std::vector<std::string> violations;   // hypothesis true but a gap exists
  std::string note;
  bool ok() const { return violations.empty(); }
};

// Audit of the induction condition for a formula with at most one free
// variable against a satisfaction class, bounded at the given budget.
InternalInductionReport check_internal_induction(const PartialSatClass& s,
                                                 Formula phi, uint64_t budget);

}  // namespace truthlab
