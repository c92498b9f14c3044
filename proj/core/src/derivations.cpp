#include "truthlab/derivations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "truthlab/error.hpp"
#include "truthlab/semantics.hpp"

namespace truthlab {

ProofReport check_proof(const PropProof& p, const TruthOracle& oracle) {
  ProofReport report;
  if (p.lines.empty()) {
    report.bad_reason = "empty proof";
    return report;
  }
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    if (line.kind == PropProof::Line::Kind::Premise) {
      report.premises.push_back(i);
      continue;
    }
    if (line.antecedent >= i || line.implication >= i) {
      report.bad_line = i;
      report.bad_reason = "modus ponens cites a line that is not earlier";
      return report;
    }
    Formula impl = p.lines[line.implication].sentence;
    if (formula_kind(impl) != FormulaKind::Or) {
      report.bad_line = i;
      report.bad_reason = "cited implication line is not a disjunction";
      return report;
    }
    auto [lhs, rhs] = or_args(impl);
    if (formula_kind(lhs) != FormulaKind::Not ||
        not_arg(lhs) != p.lines[line.antecedent].sentence ||
        rhs != line.sentence) {
      report.bad_line = i;
      report.bad_reason =
          "cited line is not the implication from the cited antecedent to "
          "this line";
      return report;
    }
  }
  report.well_formed = true;
  report.conclusion = p.lines.back().sentence;
  report.pure = report.premises.empty();
  if (report.pure) {
    report.premise_status = ProofReport::PremiseStatus::None;
    return report;
  }
  bool all_true = true, undetermined = false;
  for (size_t i : report.premises) {
    auto value = oracle(p.lines[i].sentence);
    if (!value)
      undetermined = true;
    else if (!*value)
      all_true = false;
  }
  report.premise_status = !all_true ? ProofReport::PremiseStatus::SomeFalse
                          : undetermined
                              ? ProofReport::PremiseStatus::Undetermined
                              : ProofReport::PremiseStatus::AllTrue;
  return report;
}

namespace {

void collect_atoms(Formula f, std::set<Formula>& atoms,
                   std::set<NodeId>& seen) {
  if (!seen.insert(f.id).second) return;
  switch (formula_kind(f)) {
    case FormulaKind::Eq:
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      atoms.insert(f);
      return;
    case FormulaKind::Not:
      collect_atoms(not_arg(f), atoms, seen);
      return;
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      collect_atoms(a, atoms, seen);
      collect_atoms(b, atoms, seen);
      return;
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      collect_atoms(a, atoms, seen);
      collect_atoms(b, atoms, seen);
      return;
    }
  }
}

bool eval_skeleton(Formula f, const std::map<Formula, bool>& atoms,
                   std::map<NodeId, bool>& memo) {
  auto at = atoms.find(f);
  if (at != atoms.end()) return at->second;
  auto it = memo.find(f.id);
  if (it != memo.end()) return it->second;
  bool value = false;
  switch (formula_kind(f)) {
    case FormulaKind::Not:
      value = !eval_skeleton(not_arg(f), atoms, memo);
      break;
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      value = eval_skeleton(a, atoms, memo) || eval_skeleton(b, atoms, memo);
      break;
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      value = eval_skeleton(a, atoms, memo) && eval_skeleton(b, atoms, memo);
      break;
    }
    default:
      throw Error("is_tautology: atom escaped abstraction");
  }
  memo.emplace(f.id, value);
  return value;
}

}  // namespace

bool is_tautology(Formula f) {
  std::set<Formula> atom_set;
  std::set<NodeId> seen;
  collect_atoms(f, atom_set, seen);
  if (atom_set.size() > 20)
    throw Error("is_tautology: more than 20 distinct atoms (" +
                std::to_string(atom_set.size()) + ")");
  std::vector<Formula> atoms(atom_set.begin(), atom_set.end());
  for (uint64_t mask = 0; mask < (uint64_t{1} << atoms.size()); ++mask) {
    std::map<Formula, bool> valuation;
    for (size_t i = 0; i < atoms.size(); ++i)
      valuation.emplace(atoms[i], (mask >> i) & 1);
    std::map<NodeId, bool> memo;
    if (!eval_skeleton(f, valuation, memo)) return false;
  }
  return true;
}

YabloSequence yablo_transform(const SentenceSeq& phis) {
  if (phis.empty()) throw Error("yablo_transform: empty sequence");
  YabloSequence ys;
  ys.source = phis;
  ys.derived.reserve(phis.size());
  ys.derived.push_back(phis[0]);
  Formula prefix_negs = neg(phis[0]);  // !psi_0 | ... | !psi_j, left-grouped
  for (size_t j = 1; j < phis.size(); ++j) {
    if (j > 1) prefix_negs = disj(prefix_negs, neg(ys.derived[j - 1]));
    ys.derived.push_back(disj(neg(neg(phis[j])), prefix_negs));
  }
  return ys;
}

YabloReport check_yablo_claim(const YabloSequence& ys, uint64_t budget) {
  YabloReport report;
  if (ys.source.empty() || ys.source.size() != ys.derived.size()) {
    report.structure_failure = 0;
    report.hypothesis_detail = "source and derived lengths differ";
    return report;
  }

  // structural audit: the derived sentences must follow the append-law
  // recursion over the actual derived prefix
  report.structure_ok = ys.derived[0] == ys.source[0];
  if (!report.structure_ok) report.structure_failure = 0;
  SentenceSeq negs;
  for (size_t j = 1; j < ys.source.size() && report.structure_ok; ++j) {
    negs.push_back(neg(ys.derived[j - 1]));
    Formula expected = disj(neg(neg(ys.source[j])), bigvee(negs));
    if (ys.derived[j] != expected) {
      report.structure_ok = false;
      report.structure_failure = j;
    }
  }

  Evaluator ev(budget);
  report.hypotheses_ok = true;
  Verdict first = ev(ys.source[0]);
  if (!first.is_true()) {
    report.hypotheses_ok = false;
    report.hypothesis_failure = 0;
    report.hypothesis_detail = first.is_false()
                                   ? "first sentence is false"
                                   : "first sentence undetermined at budget";
  }
  for (size_t i = 0; report.hypotheses_ok && i + 1 < ys.source.size(); ++i) {
    Verdict cur = ev(ys.source[i]);
    if (cur.is_unknown()) {
      report.hypotheses_ok = false;
      report.hypothesis_failure = i;
      report.hypothesis_detail = "sentence undetermined at budget";
      break;
    }
    if (!cur.is_true()) continue;
    Verdict nxt = ev(ys.source[i + 1]);
    if (!nxt.is_true()) {
      report.hypotheses_ok = false;
      report.hypothesis_failure = i + 1;
      report.hypothesis_detail =
          "truth fails to propagate from a true predecessor";
    }
  }
  if (!report.hypotheses_ok) return report;

  report.all_true = true;
  for (size_t j = 0; j < ys.derived.size(); ++j) {
    if (!ev(ys.derived[j]).is_true()) {
      report.all_true = false;
      report.first_false_derived = j;
      break;
    }
  }
  for (size_t j = 0; report.all_true && j < ys.source.size(); ++j) {
    if (!ev(ys.source[j]).is_true()) {
      report.all_true = false;
      report.first_false_source = j;
      break;
    }
  }
  return report;
}

PrefixChainReport replay_prefix_chain(const SentenceSeq& phis,
                                      const TruthOracle& oracle) {
  PrefixChainReport report;
  if (phis.empty()) {
    report.detail = "empty sequence";
    return report;
  }
  std::optional<size_t> first_true;
  for (size_t i = 0; i < phis.size(); ++i) {
    auto value = oracle(phis[i]);
    if (!value) {
      report.outcome = PrefixChainReport::Outcome::OracleUndetermined;
      report.detail = "oracle undecided on disjunct " + std::to_string(i);
      return report;
    }
    if (*value && !first_true) first_true = i;
  }
  if (!first_true) {
    report.outcome = PrefixChainReport::Outcome::HypothesisEmpty;
    report.detail = "no true disjunct";
    return report;
  }
  report.first_true = first_true;

  auto prefix = [&](size_t k) {  // disjunction of phis[0..k] inclusive
    return bigvee(SentenceSeq(phis.begin(), phis.begin() + k + 1));
  };
  auto need = [&](Formula f) -> std::optional<bool> { return oracle(f); };

  auto base = need(prefix(*first_true));
  if (!base) {
    report.outcome = PrefixChainReport::Outcome::OracleUndetermined;
    report.detail = "oracle undecided on the base prefix";
    return report;
  }
  if (!*base) {
    report.outcome = PrefixChainReport::Outcome::NonCompositional;
    report.detail = "prefix containing the true disjunct is not true";
    return report;
  }
  for (size_t k = *first_true; k + 1 < phis.size(); ++k) {
    auto prev = need(prefix(k));
    auto next = need(prefix(k + 1));
    auto last = need(phis[k + 1]);
    if (!prev || !next || !last) {
      report.outcome = PrefixChainReport::Outcome::OracleUndetermined;
      report.detail = "oracle undecided on a chain step";
      return report;
    }
    ++report.steps_checked;
    if (*next != (*prev || *last)) {
      report.outcome = PrefixChainReport::Outcome::NonCompositional;
      report.detail = "the | clause fails at prefix length " +
                      std::to_string(k + 1);
      return report;
    }
    if (!*next) {
      report.outcome = PrefixChainReport::Outcome::NonCompositional;
      report.detail = "chain truth lost at prefix length " +
                      std::to_string(k + 1);
      return report;
    }
  }
  report.outcome = PrefixChainReport::Outcome::Confirmed;
  report.detail = "full disjunction confirmed true";
  return report;
}

}  // namespace truthlab
