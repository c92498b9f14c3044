#include "truthlab/satclass.hpp"

#include <algorithm>
#include <map>

#include "truthlab/error.hpp"

namespace truthlab {

// ---------------------------------------------------------------------------
// syntactic templates

namespace {

struct TemplateBuilder {
  VarIndex next = 0;
  std::vector<Term> slots;
  std::vector<std::pair<VarIndex, VarIndex>> bound;  // (original, renamed)

  bool mentions_bound(Term t) const {
    for (VarIndex v : free_vars(t)) {
      for (const auto& [orig, renamed] : bound)
        if (orig == v) return true;
    }
    return false;
  }

  VarIndex renamed_of(VarIndex v) const {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error("template: free variable escaped slot extraction");
  }

  Term walk(Term t) {
    if (!mentions_bound(t)) {
      slots.push_back(t);
      return var(next++);
    }
    switch (term_kind(t)) {
      case TermKind::Var:
        return var(renamed_of(var_index(t)));
      case TermKind::Succ:
        return succ(walk(succ_arg(t)));
      case TermKind::Add: {
        auto [a, b] = add_args(t);
        Term wa = walk(a);
        return add(wa, walk(b));
      }
      case TermKind::Mul: {
        auto [a, b] = mul_args(t);
        Term wa = walk(a);
        return mul(wa, walk(b));
      }
      case TermKind::Zero:
        break;  // closed, already extracted above
    }
    throw Error("template: unreachable term shape");
  }

  Formula walk(Formula f) {
    switch (formula_kind(f)) {
      case FormulaKind::Eq: {
        auto [a, b] = eq_args(f);
        Term wa = walk(a);
        return eq(wa, walk(b));
      }
      case FormulaKind::Not:
        return neg(walk(not_arg(f)));
      case FormulaKind::Or: {
        auto [a, b] = or_args(f);
        Formula wa = walk(a);
        return disj(wa, walk(b));
      }
      case FormulaKind::And: {
        auto [a, b] = and_args(f);
        Formula wa = walk(a);
        return conj(wa, walk(b));
      }
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        VarIndex fresh = next++;
        bound.emplace_back(quant_var(f), fresh);
        Formula body = walk(quant_body(f));
        bound.pop_back();
        return formula_kind(f) == FormulaKind::Exists ? exists(fresh, body)
                                                      : forall(fresh, body);
      }
    }
    throw Error("template: unreachable formula shape");
  }
};

// mechanical replacement of free variable occurrences; replacements may be
// open (canonical slot variables never collide with binder indices)
Term subst_free(Term t, const std::map<VarIndex, Term>& repl,
                const std::set<VarIndex>& shadowed) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      return t;
    case TermKind::Var: {
      VarIndex v = var_index(t);
      if (shadowed.count(v)) return t;
      auto it = repl.find(v);
      return it == repl.end() ? t : it->second;
    }
    case TermKind::Succ:
      return succ(subst_free(succ_arg(t), repl, shadowed));
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      return add(subst_free(a, repl, shadowed), subst_free(b, repl, shadowed));
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      return mul(subst_free(a, repl, shadowed), subst_free(b, repl, shadowed));
    }
  }
  return t;
}

Formula subst_free(Formula f, const std::map<VarIndex, Term>& repl,
                   std::set<VarIndex>& shadowed) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      return eq(subst_free(a, repl, shadowed), subst_free(b, repl, shadowed));
    }
    case FormulaKind::Not:
      return neg(subst_free(not_arg(f), repl, shadowed));
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return disj(subst_free(a, repl, shadowed),
                  subst_free(b, repl, shadowed));
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return conj(subst_free(a, repl, shadowed),
                  subst_free(b, repl, shadowed));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      VarIndex v = quant_var(f);
      bool fresh = shadowed.insert(v).second;
      Formula body = subst_free(quant_body(f), repl, shadowed);
      if (fresh) shadowed.erase(v);
      return formula_kind(f) == FormulaKind::Exists ? exists(v, body)
                                                    : forall(v, body);
    }
  }
  return f;
}

}  // namespace

SyntacticTemplate make_template(Formula f) {
  TemplateBuilder b;
  Formula skeleton = b.walk(f);
  return {skeleton, std::move(b.slots)};
}

Formula reconstruct(const SyntacticTemplate& t) {
  const auto& fv = free_vars(t.skeleton);
  if (fv.size() != t.slots.size())
    throw Error("reconstruct: slot count does not match template");
  std::map<VarIndex, Term> repl;
  for (size_t i = 0; i < fv.size(); ++i) repl.emplace(fv[i], t.slots[i]);
  std::set<VarIndex> shadowed;
  return subst_free(t.skeleton, repl, shadowed);
}

bool similar(Formula a, Formula b) {
  return make_template(a).skeleton == make_template(b).skeleton;
}

std::optional<EquivWitness> ext_equiv(
    const std::pair<Formula, Assignment>& p,
    const std::pair<Formula, Assignment>& q) {
  SyntacticTemplate tp = make_template(instantiate(p.first, p.second));
  SyntacticTemplate tq = make_template(instantiate(q.first, q.second));
  if (tp.skeleton != tq.skeleton) return std::nullopt;
  if (val_seq(tp.slots) != val_seq(tq.slots)) return std::nullopt;
  return EquivWitness{tp.skeleton, std::move(tp.slots), std::move(tq.slots)};
}

// ---------------------------------------------------------------------------
// similarity classes

ClassGraph class_graph(const std::set<Formula>& env) {
  ClassGraph g;
  std::map<Formula, size_t> by_skeleton;
  for (Formula f : env) {
    Formula skel = make_template(f).skeleton;
    auto [it, fresh] = by_skeleton.emplace(skel, g.members.size());
    if (fresh) {
      g.members.emplace_back();
      g.skeletons.push_back(skel);
    }
    g.members[it->second].push_back(f);
    g.index.emplace(f, it->second);
  }
  for (auto& m : g.members) std::sort(m.begin(), m.end());
  g.preds.assign(g.members.size(), {});
  for (Formula f : env) {
    size_t c = g.class_of(f);
    for (Formula sub : direct_subformulas(f)) {
      auto it = g.index.find(sub);
      if (it == g.index.end())
        throw Error(
            "class_graph: environment not closed under direct subformulas: " +
            to_string(sub));
      g.preds[c].insert(it->second);
    }
  }
  // direct subformulas have strictly smaller skeleton depth, which is what
  // makes the order well-founded; any failure is internal corruption
  for (size_t c = 0; c < g.members.size(); ++c) {
    for (size_t p : g.preds[c]) {
      if (formula_depth(g.skeletons[p]) >= formula_depth(g.skeletons[c]))
        throw Error("class_graph: cycle (depth order violated)");
    }
  }
  g.ranks.assign(g.members.size(), 0);
  std::vector<size_t> order(g.members.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return formula_depth(g.skeletons[a]) < formula_depth(g.skeletons[b]);
  });
  for (size_t c : order) {
    size_t r = 0;
    for (size_t p : g.preds[c]) r = std::max(r, g.ranks[p] + 1);
    g.ranks[c] = r;
    g.max_rank = std::max(g.max_rank, r);
  }
  return g;
}

// ---------------------------------------------------------------------------
// satisfaction classes

namespace {

Assignment restrict_to(const Assignment& alpha,
                       const std::vector<VarIndex>& fv) {
  Assignment out;
  for (VarIndex v : fv) {
    auto it = alpha.find(v);
    if (it == alpha.end())
      throw Error("assignment does not cover x" + std::to_string(v));
    out.emplace(v, it->second);
  }
  return out;
}

}  // namespace

void PartialSatClass::insert(Formula f, const Assignment& alpha) {
  pairs.emplace(f, restrict_to(alpha, free_vars(f)));
}

bool PartialSatClass::contains(Formula f, const Assignment& alpha) const {
  return pairs.count({f, restrict_to(alpha, free_vars(f))}) > 0;
}

std::vector<Assignment> bounded_assignments(const std::vector<VarIndex>& vars,
                                            uint64_t value_bound) {
  double combos = 1;
  for (size_t i = 0; i < vars.size(); ++i) combos *= double(value_bound + 1);
  if (combos > 200000)
    throw Error("bounded_assignments: assignment family too large");
  std::vector<Assignment> out;
  std::vector<uint64_t> odo(vars.size(), 0);
  while (true) {
    Assignment a;
    for (size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], Nat{odo[i]});
    out.push_back(std::move(a));
    if (vars.empty()) break;
    size_t i = 0;
    while (i < odo.size() && ++odo[i] > value_bound) odo[i++] = 0;
    if (i == odo.size()) break;
  }
  return out;
}

namespace {

// the right-hand side of the compositional clause for phi at alpha
bool comp_expected(Formula phi, const Assignment& alpha,
                   const PartialSatClass& s, uint64_t value_bound) {
  switch (formula_kind(phi)) {
    case FormulaKind::Eq: {
      auto [l, r] = eq_args(phi);
      return term_eval(l, alpha) == term_eval(r, alpha);
    }
    case FormulaKind::Not:
      return !s.contains(not_arg(phi), alpha);
    case FormulaKind::Or: {
      auto [a, b] = or_args(phi);
      return s.contains(a, alpha) || s.contains(b, alpha);
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(phi);
      return s.contains(a, alpha) && s.contains(b, alpha);
    }
    case FormulaKind::Exists: {
      VarIndex v = quant_var(phi);
      Formula body = quant_body(phi);
      for (uint64_t x = 0; x <= value_bound; ++x) {
        Assignment beta = alpha;
        beta[v] = Nat{x};
        if (s.contains(body, beta)) return true;
      }
      return false;
    }
    case FormulaKind::Forall: {
      VarIndex v = quant_var(phi);
      Formula body = quant_body(phi);
      for (uint64_t x = 0; x <= value_bound; ++x) {
        Assignment beta = alpha;
        beta[v] = Nat{x};
        if (!s.contains(body, beta)) return false;
      }
      return true;
    }
  }
  return false;
}

std::optional<SatViolation> check_comp(Formula phi, const PartialSatClass& s,
                                       uint64_t value_bound) {
  for (const Assignment& alpha :
       bounded_assignments(free_vars(phi), value_bound)) {
    bool in = s.contains(phi, alpha);
    bool want = comp_expected(phi, alpha, s, value_bound);
    if (in != want) {
      return SatViolation{
          "compositionality",
          to_string(phi) + (in ? " is satisfied but its clause fails"
                               : " is unsatisfied but its clause holds")};
    }
  }
  return std::nullopt;
}

std::string regularity_key(Formula phi, const Assignment& alpha) {
  SyntacticTemplate t = make_template(instantiate(phi, alpha));
  std::string key = std::to_string(t.skeleton.id);
  for (const Nat& v : val_seq(t.slots)) {
    key += ':';
    key += v.to_decimal();
  }
  return key;
}

}  // namespace

SatClassReport validate_sat_class(const PartialSatClass& s,
                                  const SatCheckOptions& opts) {
  SatClassReport report;
  auto violate = [&](std::string clause, std::string detail) {
    report.violations.push_back({std::move(clause), std::move(detail)});
  };

  std::set<Formula> pair_formulas;
  for (const auto& [phi, alpha] : s.pairs) {
    pair_formulas.insert(phi);
    for (VarIndex v : free_vars(phi)) {
      if (!alpha.count(v))
        violate("assignment", to_string(phi) + ": assignment misses x" +
                                  std::to_string(v));
    }
    for (const auto& [v, value] : alpha) {
      if (value > Nat{opts.value_bound})
        violate("assignment-range",
                to_string(phi) + ": value for x" + std::to_string(v) +
                    " exceeds the value bound");
    }
  }

  for (Formula phi : pair_formulas) {
    if (auto v = check_comp(phi, s, opts.value_bound))
      violate(v->clause, v->detail);
    bool in_dom = s.domain.count(phi) > 0;
    bool neg_of_dom = formula_kind(phi) == FormulaKind::Not &&
                      s.domain.count(not_arg(phi)) > 0;
    if (!in_dom && !neg_of_dom)
      violate("domain-membership",
              to_string(phi) +
                  " is satisfied but neither it nor its negatum is in the "
                  "domain");
  }

  for (Formula phi : s.domain) {
    ++report.formulas_checked;
    for (Formula sub : direct_subformulas(phi)) {
      if (!s.domain.count(sub))
        violate("domain-closure",
                to_string(phi) + ": direct subformula " + to_string(sub) +
                    " missing from the domain");
    }
    if (!pair_formulas.count(phi)) {
      if (auto v = check_comp(phi, s, opts.value_bound))
        violate(v->clause, v->detail);
    }
    for (const Assignment& alpha :
         bounded_assignments(free_vars(phi), opts.value_bound)) {
      if (!s.contains(phi, alpha) && !s.contains(neg(phi), alpha)) {
        violate("completeness",
                to_string(phi) + " undecided under some assignment");
        break;
      }
    }
  }

  if (opts.check_regularity) {
    std::set<Formula> all = pair_formulas;
    all.insert(s.domain.begin(), s.domain.end());
    std::map<std::string, std::pair<std::string, bool>> seen;
    for (Formula phi : all) {
      for (const Assignment& alpha :
           bounded_assignments(free_vars(phi), opts.value_bound)) {
        bool in = s.contains(phi, alpha);
        std::string key = regularity_key(phi, alpha);
        auto [it, fresh] =
            seen.emplace(key, std::make_pair(to_string(phi), in));
        if (!fresh && it->second.second != in)
          violate("regularity", to_string(phi) + " disagrees with " +
                                    it->second.first +
                                    " on value-equivalent instances");
      }
    }
  }
  return report;
}

PartialSatClass complete_presat(const PartialSatClass& s,
                                const SatCheckOptions& opts) {
  for (const auto& [phi, alpha] : s.pairs) {
    if (!s.domain.count(phi))
      throw Error("not pre-satisfaction data: pair off the domain: " +
                  to_string(phi));
    for (VarIndex v : free_vars(phi))
      if (!alpha.count(v))
        throw Error("not pre-satisfaction data: assignment misses x" +
                    std::to_string(v));
    for (const auto& [v, value] : alpha)
      if (value > Nat{opts.value_bound})
        throw Error(
            "not pre-satisfaction data: assignment value above the value "
            "bound for " +
            to_string(phi));
  }
  for (Formula phi : s.domain) {
    for (Formula sub : direct_subformulas(phi))
      if (!s.domain.count(sub))
        throw Error(
            "not pre-satisfaction data: domain not closed under direct "
            "subformulas at " +
            to_string(phi));
    if (auto v = check_comp(phi, s, opts.value_bound))
      throw Error("not pre-satisfaction data: " + v->clause + ": " +
                  v->detail);
  }

  PartialSatClass out = s;
  for (Formula phi : s.domain) {
    for (const Assignment& alpha :
         bounded_assignments(free_vars(phi), opts.value_bound)) {
      if (!s.contains(phi, alpha)) out.insert(neg(phi), alpha);
    }
  }

  // maximal domain: greatest fixed point over the reachable universe
  std::set<Formula> universe = s.domain;
  for (const auto& [phi, alpha] : out.pairs) universe.insert(phi);
  for (Formula phi : s.domain) universe.insert(neg(phi));
  std::vector<Formula> frontier(universe.begin(), universe.end());
  while (!frontier.empty()) {
    Formula f = frontier.back();
    frontier.pop_back();
    for (Formula sub : direct_subformulas(f))
      if (universe.insert(sub).second) frontier.push_back(sub);
  }

  std::set<Formula> dom = universe;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = dom.begin(); it != dom.end();) {
      Formula phi = *it;
      bool keep = !check_comp(phi, out, opts.value_bound).has_value();
      if (keep) {
        for (Formula sub : direct_subformulas(phi))
          if (!dom.count(sub)) keep = false;
      }
      if (keep) {
        for (const Assignment& alpha :
             bounded_assignments(free_vars(phi), opts.value_bound)) {
          if (!out.contains(phi, alpha) && !out.contains(neg(phi), alpha)) {
            keep = false;
            break;
          }
        }
      }
      if (!keep) {
        it = dom.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  out.domain = std::move(dom);
  return out;
}

// ---------------------------------------------------------------------------
// stagewise construction

std::pair<PartialSatClass, ConstructionReport> build_sat_class(
    const SatScenario& sc) {
  for (Formula f : sc.environment) {
    for (Formula sub : direct_subformulas(f))
      if (!sc.environment.count(sub))
        throw Error(
            "scenario: environment not closed under direct subformulas at " +
            to_string(f));
  }
  for (Formula t : sc.targets)
    if (!sc.environment.count(t))
      throw Error("scenario: target outside the environment: " + to_string(t));
  for (Formula f : sc.base.domain)
    if (!sc.environment.count(f))
      throw Error("scenario: base domain formula outside the environment: " +
                  to_string(f));
  for (const auto& [phi, alpha] : sc.base.pairs) {
    bool in_env = sc.environment.count(phi) > 0;
    bool neg_of_env = formula_kind(phi) == FormulaKind::Not &&
                      sc.environment.count(not_arg(phi)) > 0;
    // the negative completion supplies !psi pairs for psi in the
    // environment, so preservation is checkable exactly for these shapes
    if (!in_env && !neg_of_env)
      throw Error("scenario: base pair formula outside the environment: " +
                  to_string(phi));
  }

  SatCheckOptions opts{sc.value_bound, /*check_regularity=*/true};
  SatClassReport base_report = validate_sat_class(sc.base, opts);
  if (!base_report.ok())
    throw Error("scenario: base is not a valid satisfaction class: " +
                base_report.violations.front().clause + ": " +
                base_report.violations.front().detail);
  // hypothesis: long disjunctions in the base domain hold everywhere
  for (Formula phi : sc.base.domain) {
    if (or_spine(phi).size() < sc.long_cut) continue;
    for (const Assignment& alpha :
         bounded_assignments(free_vars(phi), sc.value_bound)) {
      if (!sc.base.contains(phi, alpha))
        throw Error("scenario: base leaves a long disjunction unsatisfied: " +
                    to_string(phi));
    }
  }

  ClassGraph g = class_graph(sc.environment);

  PartialSatClass current;
  size_t stages = 0;
  for (size_t rank = 0; rank <= g.max_rank; ++rank) {
    bool any = false;
    for (size_t c = 0; c < g.members.size(); ++c) {
      if (g.ranks[c] != rank) continue;
      any = true;
      for (Formula phi : g.members[c]) {
        auto family = bounded_assignments(free_vars(phi), sc.value_bound);
        if (rank == 0) {
          bool is_long = or_spine(phi).size() >= sc.long_cut;
          for (const Assignment& alpha : family) {
            bool in = is_long || sc.base.contains(phi, alpha);
            if (!in && formula_kind(phi) == FormulaKind::Eq) {
              auto [l, r] = eq_args(phi);
              in = term_eval(l, alpha) == term_eval(r, alpha);
            }
            if (in) current.insert(phi, alpha);
          }
        } else {
          for (const Assignment& alpha : family) {
            if (comp_expected(phi, alpha, current, sc.value_bound))
              current.insert(phi, alpha);
          }
        }
      }
    }
    if (!any) continue;
    ++stages;
    if (rank == 0) {
      // the minimal stage is closed under value-equivalence explicitly
      std::map<std::string, bool> group_in;
      std::vector<std::pair<std::pair<Formula, Assignment>, std::string>>
          entries;
      for (size_t c = 0; c < g.members.size(); ++c) {
        if (g.ranks[c] != 0) continue;
        for (Formula phi : g.members[c]) {
          for (const Assignment& alpha :
               bounded_assignments(free_vars(phi), sc.value_bound)) {
            std::string key = regularity_key(phi, alpha);
            entries.push_back({{phi, alpha}, key});
            if (current.contains(phi, alpha)) group_in[key] = true;
          }
        }
      }
      for (const auto& [pa, key] : entries) {
        if (group_in.count(key)) current.insert(pa.first, pa.second);
      }
    }
  }

  PartialSatClass staged = current;
  staged.domain = sc.environment;
  PartialSatClass result =
      complete_presat(staged, SatCheckOptions{sc.value_bound, false});

  ConstructionReport report;
  report.class_count = g.members.size();
  report.stage_count = stages;

  report.audits.push_back(
      {"elementary-diagram", true, true, 0,
       "vacuous at finite scale: the carrier is the data itself"});
  report.audits.push_back({"per-formula-views", true, true, 0,
                           "vacuous: views are derived from the relation"});

  {
    SchemeAudit a{"compositionality", false, true, 0, ""};
    for (Formula t : sc.targets) {
      ++a.instances;
      if (auto v = check_comp(t, result, sc.value_bound)) {
        a.passed = false;
        a.detail = v->detail;
        break;
      }
    }
    report.audits.push_back(a);
  }
  {
    SchemeAudit a{"preservation", false, true, 0, ""};
    for (const auto& [phi, alpha] : sc.base.pairs) {
      ++a.instances;
      if (!result.pairs.count({phi, alpha})) {
        a.passed = false;
        a.detail = "base pair lost: " + to_string(phi);
        break;
      }
    }
    report.audits.push_back(a);
  }
  {
    SchemeAudit a{"regularity", false, true, 0, ""};
    std::map<std::string, std::pair<std::string, bool>> seen;
    for (Formula phi : sc.environment) {
      for (const Assignment& alpha :
           bounded_assignments(free_vars(phi), sc.value_bound)) {
        ++a.instances;
        bool in = result.contains(phi, alpha);
        std::string key = regularity_key(phi, alpha);
        auto [it, fresh] =
            seen.emplace(key, std::make_pair(to_string(phi), in));
        if (!fresh && it->second.second != in) {
          a.passed = false;
          a.detail = to_string(phi) + " disagrees with " + it->second.first;
          break;
        }
      }
      if (!a.passed) break;
    }
    report.audits.push_back(a);
  }
  {
    SchemeAudit a{"long-disjunctions", false, true, 0, ""};
    for (Formula t : sc.targets) {
      if (or_spine(t).size() < sc.long_cut) continue;
      for (const Assignment& alpha :
           bounded_assignments(free_vars(t), sc.value_bound)) {
        ++a.instances;
        if (!result.contains(t, alpha)) {
          a.passed = false;
          a.detail =
              "long disjunction not satisfied everywhere: " + to_string(t);
          break;
        }
      }
      if (!a.passed) break;
    }
    report.audits.push_back(a);
  }

  return {std::move(result), std::move(report)};
}

InternalInductionReport check_internal_induction(const PartialSatClass& s,
                                                 Formula phi,
                                                 uint64_t budget) {
  const auto& fv = free_vars(phi);
  if (fv.size() > 1)
    throw Error("internal induction: formula has more than one free variable");
  InternalInductionReport report;
  if (fv.empty()) {
    report.applicable = false;
    report.base_holds = s.contains(phi, {});
    report.hypothesis_holds = false;
    report.note = std::string(
                      "closed formula; membership under the empty "
                      "assignment: ") +
                  (report.base_holds ? "yes" : "no");
    return report;
  }
  VarIndex v = fv[0];
  auto member = [&](uint64_t x) {
    Assignment a;
    a.emplace(v, Nat{x});
    return s.contains(phi, a);
  };
  report.base_holds = member(0);
  bool steps_hold = true;
  for (uint64_t x = 0; x < budget; ++x) {
    if (member(x) && !member(x + 1)) {
      report.broken_steps.push_back(x);
      steps_hold = false;
    }
  }
  for (uint64_t x = 0; x <= budget; ++x) {
    if (!member(x)) report.gaps.push_back(x);
  }
  report.hypothesis_holds = report.base_holds && steps_hold;
  if (report.hypothesis_holds && !report.gaps.empty()) {
    report.violations.push_back(
        "induction hypothesis holds but x" + std::to_string(v) + " = " +
        std::to_string(report.gaps.front()) + " is not satisfied");
  }
  if (!report.hypothesis_holds) {
    report.note = report.base_holds
                      ? "vacuous: a step fails, first at x = " +
                            std::to_string(report.broken_steps.front())
                      : "vacuous: the base case fails";
  }
  return report;
}

}  // namespace truthlab
