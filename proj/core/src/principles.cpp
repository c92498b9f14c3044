#include "truthlab/principles.hpp"

#include <memory>

#include "truthlab/coding.hpp"
#include "truthlab/error.hpp"
#include "truthlab/satclass.hpp"

namespace truthlab {

TruthOracle evaluation_oracle(uint64_t budget) {
  auto ev = std::make_shared<Evaluator>(budget);
  return [ev](Formula f) -> std::optional<bool> {
    Verdict v = (*ev)(f);
    if (v.is_unknown()) return std::nullopt;
    return v.is_true();
  };
}

TruthValuation TruthValuation::from_evaluation(
    const std::vector<Formula>& closure, uint64_t budget) {
  TruthValuation v;
  Evaluator ev(budget);
  for (Formula f : closure) {
    Verdict verdict = ev(f);
    if (verdict.is_unknown())
      throw Error("from_evaluation: undetermined at budget " +
                  std::to_string(budget) + ": " + to_string(f));
    v.set(f, verdict.is_true());
  }
  return v;
}

bool is_quantifier_free(Formula f) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq:
      return true;
    case FormulaKind::Not:
      return is_quantifier_free(not_arg(f));
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return is_quantifier_free(a) && is_quantifier_free(b);
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return is_quantifier_free(a) && is_quantifier_free(b);
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return false;
  }
  return false;
}

namespace {

std::string describe(Formula f) { return to_string(f); }

// closed terms whose code is at most `budget`, ascending by code
std::vector<Term> closed_terms_below(uint64_t budget) {
  std::vector<Term> out;
  for (uint64_t c = 0; c <= budget; ++c) {
    try {
      Syntax s = decode(Nat{c});
      if (auto* t = std::get_if<Term>(&s)) {
        if (is_closed(*t)) out.push_back(*t);
      }
    } catch (const Error&) {
      // not a code; skip
    }
  }
  return out;
}

}  // namespace

PrincipleReport check_ct_minus(const TruthValuation& v,
                               QuantifierVariant variant, uint64_t budget) {
  PrincipleReport report;
  report.principle = "ctminus";
  auto violate = [&](Formula f, std::string why) {
    report.violations.push_back({describe(f), std::move(why)});
  };

  std::vector<Term> term_witnesses;
  if (variant == QuantifierVariant::ClosedTerm)
    term_witnesses = closed_terms_below(budget);

  for (const auto& [phi, value] : v.entries()) {
    ++report.instances_checked;
    if (value && !is_sentence(phi)) {
      violate(phi, "true element is not a sentence");
      continue;
    }
    if (!is_sentence(phi)) continue;

    switch (formula_kind(phi)) {
      case FormulaKind::Eq: {
        auto [l, r] = eq_args(phi);
        bool truth = val(l) == val(r);
        if (value != truth)
          violate(phi, truth ? "true closed equation valued false"
                             : "false closed equation valued true");
        break;
      }
      case FormulaKind::Not: {
        Formula psi = not_arg(phi);
        auto inner = v.get(psi);
        if (!inner) {
          report.undetermined.push_back(describe(phi) +
                                        ": negatum outside the closure");
        } else if (value == *inner) {
          violate(phi, "negation clause: agrees with its negatum");
        }
        break;
      }
      case FormulaKind::Or: {
        auto [a, b] = or_args(phi);
        auto va = v.get(a), vb = v.get(b);
        if (!va || !vb) {
          report.undetermined.push_back(describe(phi) +
                                        ": disjunct outside the closure");
        } else if (value != (*va || *vb)) {
          violate(phi, "disjunction clause fails");
        }
        break;
      }
      case FormulaKind::And: {
        auto [a, b] = and_args(phi);
        auto va = v.get(a), vb = v.get(b);
        if (!va || !vb) {
          report.undetermined.push_back(describe(phi) +
                                        ": conjunct outside the closure");
        } else if (value != (*va && *vb)) {
          violate(phi, "conjunction clause fails");
        }
        break;
      }
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        bool is_exists = formula_kind(phi) == FormulaKind::Exists;
        VarIndex qv = quant_var(phi);
        Formula body = quant_body(phi);
        bool missing = false;
        bool found_true = false, found_false = false;
        auto probe = [&](Term witness) {
          std::map<VarIndex, Term> repl{{qv, witness}};
          Formula inst = substitute(body, repl);
          auto vi = v.get(inst);
          if (!vi) {
            missing = true;
          } else if (*vi) {
            found_true = true;
          } else {
            found_false = true;
          }
        };
        if (variant == QuantifierVariant::Numeral) {
          for (uint64_t x = 0; x <= budget && !(is_exists ? found_true
                                                          : found_false);
               ++x)
            probe(num(x));
        } else {
          for (const Term& t : term_witnesses) {
            if (is_exists ? found_true : found_false) break;
            probe(t);
          }
        }
        if (is_exists) {
          if (value && !found_true)
            report.undetermined.push_back(
                describe(phi) + ": no witness inside closure and budget");
          if (!value && found_true)
            violate(phi, "existential clause: a true instance exists");
        } else {
          if (!value && !found_false)
            report.undetermined.push_back(
                describe(phi) +
                ": no counterexample inside closure and budget");
          if (value && found_false)
            violate(phi, "universal clause: a false instance exists");
        }
        break;
      }
    }
  }

  // value-regularity across the closure
  std::map<std::string, std::pair<Formula, bool>> seen;
  for (const auto& [phi, value] : v.entries()) {
    if (!is_sentence(phi)) continue;
    SyntacticTemplate t = make_template(phi);
    std::string key = std::to_string(t.skeleton.id);
    for (const Nat& n : val_seq(t.slots)) {
      key += ':';
      key += n.to_decimal();
    }
    auto [it, fresh] = seen.emplace(key, std::make_pair(phi, value));
    if (!fresh && it->second.second != value)
      violate(phi, "regularity: disagrees with value-equivalent " +
                       describe(it->second.first));
  }
  return report;
}

PrincipleReport check_dc(const TruthValuation& v,
                         const std::vector<SentenceSeq>& seqs,
                         DcDirection direction) {
  PrincipleReport report;
  report.principle = direction == DcDirection::In    ? "dcin"
                     : direction == DcDirection::Out ? "dcout"
                                                     : "dc";
  for (const SentenceSeq& seq : seqs) {
    Formula whole = bigvee(seq);
    auto get = [&](Formula f) {
      auto val = v.get(f);
      if (!val) throw Error("closure-miss: " + describe(f));
      return *val;
    };
    bool lhs = get(whole);
    bool any = false;
    for (Formula f : seq) any = any || get(f);
    ++report.instances_checked;
    if ((direction == DcDirection::In || direction == DcDirection::Both) &&
        any && !lhs)
      report.violations.push_back(
          {describe(whole), "a disjunct is true but the disjunction is not"});
    if ((direction == DcDirection::Out || direction == DcDirection::Both) &&
        lhs && !any)
      report.violations.push_back(
          {describe(whole), "the disjunction is true without a true disjunct"});
  }
  return report;
}

PrincipleReport check_seqind(const std::set<uint64_t>& t,
                             const std::vector<std::vector<uint64_t>>& seqs) {
  PrincipleReport report;
  report.principle = "seqind";
  for (const auto& s : seqs) {
    ++report.instances_checked;
    if (s.empty()) continue;
    bool hypothesis = t.count(s[0]) > 0;
    for (size_t i = 0; hypothesis && i + 1 < s.size(); ++i) {
      if (t.count(s[i]) && !t.count(s[i + 1])) hypothesis = false;
    }
    if (!hypothesis) continue;
    for (size_t j = 0; j < s.size(); ++j) {
      if (!t.count(s[j])) {
        report.violations.push_back(
            {"sequence entry " + std::to_string(j),
             "induction hypothesis holds but entry " + std::to_string(s[j]) +
                 " is outside T"});
        break;
      }
    }
  }
  return report;
}

PrincipleReport check_seqoind(const std::set<uint64_t>& t,
                              const std::vector<std::vector<uint64_t>>& seqs) {
  PrincipleReport report;
  report.principle = "seqoind";
  for (const auto& s : seqs) {
    ++report.instances_checked;
    bool progressive = true;
    for (size_t j = 0; progressive && j < s.size(); ++j) {
      bool prefix_in = true;
      for (size_t i = 0; i < j; ++i)
        if (!t.count(s[i])) prefix_in = false;
      if (prefix_in && !t.count(s[j])) progressive = false;
    }
    if (!progressive) continue;
    for (size_t l = 0; l < s.size(); ++l) {
      if (!t.count(s[l])) {
        report.violations.push_back(
            {"sequence entry " + std::to_string(l),
             "progressive sequence has entry " + std::to_string(s[l]) +
                 " outside T"});
        break;
      }
    }
  }
  return report;
}

PrincipleReport check_int(const TruthOracle& truth, Formula phi,
                          uint64_t budget) {
  PrincipleReport report;
  report.principle = "int";
  const auto& fv = free_vars(phi);
  if (fv.size() > 1)
    throw Error("check_int: formula has more than one free variable: " +
                describe(phi));
  if (fv.empty()) {
    ++report.instances_checked;
    auto value = truth(phi);
    if (!value)
      report.undetermined.push_back(describe(phi) + ": source undecided");
    else
      report.notes.push_back("closed formula, single truth check: " +
                             std::string(*value ? "true" : "false"));
    return report;
  }
  VarIndex v = fv[0];
  auto at = [&](uint64_t x) {
    Assignment a;
    a.emplace(v, Nat{x});
    return truth(instantiate(phi, a));
  };
  ++report.instances_checked;
  auto base = at(0);
  if (!base) {
    report.undetermined.push_back("base instance undecided");
    return report;
  }
  bool hypothesis = *base;
  std::optional<uint64_t> broken_step;
  for (uint64_t x = 0; x < budget && hypothesis; ++x) {
    auto cur = at(x), nxt = at(x + 1);
    if (!cur || !nxt) {
      report.undetermined.push_back("step instance undecided at x = " +
                                    std::to_string(x));
      return report;
    }
    if (*cur && !*nxt) {
      hypothesis = false;
      broken_step = x;
    }
  }
  if (!hypothesis) {
    report.notes.push_back(
        *base ? "vacuous: step fails at x = " + std::to_string(*broken_step)
              : "vacuous: base instance is false");
    return report;
  }
  for (uint64_t x = 0; x <= budget; ++x) {
    auto cur = at(x);
    if (!cur) {
      report.undetermined.push_back("conclusion instance undecided at x = " +
                                    std::to_string(x));
      return report;
    }
    if (!*cur) {
      report.violations.push_back(
          {describe(phi), "hypothesis holds but instance fails at x = " +
                              std::to_string(x)});
      return report;
    }
  }
  return report;
}

PrincipleReport check_qfc(const TruthValuation& v, uint64_t budget) {
  PrincipleReport report;
  report.principle = "qfc";
  Evaluator ev(budget);
  for (const auto& [phi, value] : v.entries()) {
    if (!is_sentence(phi) || !is_quantifier_free(phi)) continue;
    ++report.instances_checked;
    Verdict truth = ev(phi);
    if (truth.is_true() && !value)
      report.violations.push_back(
          {describe(phi), "quantifier-free sentence evaluates true but is "
                          "valued false"});
  }
  return report;
}

OuterContractReport check_outer_contract(
    const DisjunctionBuilder& builder, const TruthOracle& oracle,
    const std::vector<SentenceSeq>& samples) {
  OuterContractReport out;
  out.truth.principle = "outer:" + builder.name;
  auto& report = out.truth;

  auto query = [&](Formula f) -> std::optional<bool> { return oracle(f); };

  for (size_t si = 0; si < samples.size(); ++si) {
    const SentenceSeq& sample = samples[si];
    if (sample.empty()) continue;

    // structural append clause
    bool structural = true;
    for (size_t k = 1; k < sample.size() && structural; ++k) {
      SentenceSeq prefix(sample.begin(), sample.begin() + k);
      SentenceSeq extended(sample.begin(), sample.begin() + k + 1);
      if (builder.apply(extended) != disj(builder.apply(prefix), sample[k]))
        structural = false;
    }
    if (!structural) out.structural_append_failures.push_back(si);

    // truth-level append clause over every prefix
    bool undetermined = false;
    for (size_t k = 1; k < sample.size(); ++k) {
      SentenceSeq prefix(sample.begin(), sample.begin() + k);
      SentenceSeq extended(sample.begin(), sample.begin() + k + 1);
      ++report.instances_checked;
      auto lhs = query(builder.apply(extended));
      auto prev = query(builder.apply(prefix));
      auto last = query(sample[k]);
      if (!lhs || !prev || !last) {
        report.undetermined.push_back("sample " + std::to_string(si) +
                                      ": oracle undecided on an append "
                                      "instance");
        undetermined = true;
        break;
      }
      if (*lhs != (*prev || *last)) {
        report.violations.push_back(
            {"sample " + std::to_string(si),
             "append clause fails at prefix length " + std::to_string(k)});
        break;
      }
    }
    if (undetermined) continue;

    // out direction and the biconditional
    ++report.instances_checked;
    auto whole = query(builder.apply(sample));
    bool any = false;
    bool any_undetermined = false;
    for (Formula f : sample) {
      auto value = query(f);
      if (!value) {
        any_undetermined = true;
      } else {
        any = any || *value;
      }
    }
    if (!whole || (any_undetermined && !any)) {
      report.undetermined.push_back("sample " + std::to_string(si) +
                                    ": oracle undecided on the full "
                                    "disjunction or a disjunct");
      continue;
    }
    if (*whole && !any) {
      report.violations.push_back(
          {"sample " + std::to_string(si),
           "out direction fails: disjunction true without a true disjunct"});
    }
    if (*whole != any) {
      report.violations.push_back(
          {"sample " + std::to_string(si), "truth biconditional fails"});
    }
  }
  return out;
}

}  // namespace truthlab
