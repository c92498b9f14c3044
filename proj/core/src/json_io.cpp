#include "truthlab/json_io.hpp"

#include "truthlab/error.hpp"

namespace truthlab {

Json to_json(Term t) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      return Json{{"op", "zero"}, {"args", Json::array()}};
    case TermKind::Succ:
      return Json{{"op", "succ"}, {"args", {to_json(succ_arg(t))}}};
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      return Json{{"op", "add"}, {"args", {to_json(a), to_json(b)}}};
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      return Json{{"op", "mul"}, {"args", {to_json(a), to_json(b)}}};
    }
    case TermKind::Var:
      return Json{{"op", "var"}, {"args", {var_index(t)}}};
  }
  throw Error("to_json: unreachable term");
}

Json to_json(Formula f) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      return Json{{"op", "eq"}, {"args", {to_json(a), to_json(b)}}};
    }
    case FormulaKind::Not:
      return Json{{"op", "not"}, {"args", {to_json(not_arg(f))}}};
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return Json{{"op", "or"}, {"args", {to_json(a), to_json(b)}}};
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return Json{{"op", "and"}, {"args", {to_json(a), to_json(b)}}};
    }
    case FormulaKind::Exists:
      return Json{{"op", "exists"},
                  {"args", {quant_var(f), to_json(quant_body(f))}}};
    case FormulaKind::Forall:
      return Json{{"op", "forall"},
                  {"args", {quant_var(f), to_json(quant_body(f))}}};
  }
  throw Error("to_json: unreachable formula");
}

Term term_from_json(const Json& j) {
  const std::string op = j.at("op");
  const Json& args = j.at("args");
  if (op == "zero") return zero();
  if (op == "succ") return succ(term_from_json(args.at(0)));
  if (op == "add")
    return add(term_from_json(args.at(0)), term_from_json(args.at(1)));
  if (op == "mul")
    return mul(term_from_json(args.at(0)), term_from_json(args.at(1)));
  if (op == "var") return var(args.at(0).get<VarIndex>());
  throw Error("term_from_json: unknown op " + op);
}

Formula formula_from_json(const Json& j) {
  const std::string op = j.at("op");
  const Json& args = j.at("args");
  if (op == "eq")
    return eq(term_from_json(args.at(0)), term_from_json(args.at(1)));
  if (op == "not") return neg(formula_from_json(args.at(0)));
  if (op == "or")
    return disj(formula_from_json(args.at(0)), formula_from_json(args.at(1)));
  if (op == "and")
    return conj(formula_from_json(args.at(0)), formula_from_json(args.at(1)));
  if (op == "exists")
    return exists(args.at(0).get<VarIndex>(), formula_from_json(args.at(1)));
  if (op == "forall")
    return forall(args.at(0).get<VarIndex>(), formula_from_json(args.at(1)));
  throw Error("formula_from_json: unknown op " + op);
}

Json to_json(const Verdict& v) {
  Json cert = Json::array();
  for (const auto& [var, value] : v.certificate)
    cert.push_back(Json{{"var", var}, {"value", value.to_decimal()}});
  const char* kind = v.is_true() ? "true" : v.is_false() ? "false" : "unknown";
  return Json{{"verdict", kind}, {"certificate", cert}};
}

Json to_json(const PrincipleReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        Json{{"instance", v.instance}, {"explanation", v.explanation}});
  const char* verdict =
      r.verdict() == PrincipleReport::Outcome::Pass   ? "pass"
      : r.verdict() == PrincipleReport::Outcome::Fail ? "fail"
                                                      : "undetermined";
  return Json{{"principle", r.principle},
              {"instances_checked", r.instances_checked},
              {"violations", violations},
              {"undetermined", r.undetermined},
              {"notes", r.notes},
              {"verdict", verdict}};
}

Json to_json(const SatViolation& v) {
  return Json{{"clause", v.clause}, {"detail", v.detail}};
}

Json to_json(const SatClassReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return Json{{"formulas_checked", r.formulas_checked},
              {"violations", violations},
              {"valid", r.ok()}};
}

Json to_json(const SchemeAudit& a) {
  return Json{{"scheme", a.scheme},   {"vacuous", a.vacuous},
              {"passed", a.passed},   {"instances", a.instances},
              {"detail", a.detail}};
}

Json to_json(const ConstructionReport& r) {
  Json audits = Json::array();
  for (const auto& a : r.audits) audits.push_back(to_json(a));
  return Json{{"class_count", r.class_count},
              {"stage_count", r.stage_count},
              {"audits", audits},
              {"ok", r.ok()}};
}

Json to_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [v, value] : a)
    out[std::to_string(v)] = value.to_decimal();
  return out;
}

Assignment assignment_from_json(const Json& j) {
  Assignment a;
  for (auto it = j.begin(); it != j.end(); ++it) {
    VarIndex v = static_cast<VarIndex>(std::stoul(it.key()));
    if (it.value().is_string())
      a.emplace(v, Nat::from_decimal(it.value().get<std::string>()));
    else
      a.emplace(v, Nat{it.value().get<uint64_t>()});
  }
  return a;
}

Json to_json(const PartialSatClass& s) {
  Json domain = Json::array();
  for (Formula f : s.domain) domain.push_back(to_string(f));
  Json pairs = Json::array();
  for (const auto& [f, a] : s.pairs)
    pairs.push_back(Json{{"formula", to_string(f)}, {"assignment", to_json(a)}});
  return Json{{"domain", domain}, {"pairs", pairs}};
}

Json to_json(const ApproxTrace& t) {
  Json steps = Json::array();
  for (const CutStep& st : t.steps) {
    Json s{{"seq_index", st.seq_index},
           {"action", st.action == CutStep::Action::Kept       ? "kept"
                      : st.action == CutStep::Action::Extended ? "extended"
                                                               : "skipped"},
           {"a_size", st.a_after.size()},
           {"b_size", st.b_after.size()}};
    if (st.added_to_a) s["added_to_a"] = *st.added_to_a;
    if (st.added_to_b) s["added_to_b"] = *st.added_to_b;
    if (st.position) s["position"] = *st.position;
    if (!st.detail.empty()) s["detail"] = st.detail;
    steps.push_back(std::move(s));
  }
  return Json{{"steps", steps},
              {"t", std::vector<uint64_t>(t.final_t.begin(), t.final_t.end())},
              {"b", std::vector<uint64_t>(t.final_b.begin(), t.final_b.end())}};
}

Json to_json(const ProofReport& r) {
  Json out{{"well_formed", r.well_formed}, {"pure", r.pure}};
  if (r.bad_line) {
    out["bad_line"] = *r.bad_line;
    out["bad_reason"] = r.bad_reason;
  }
  out["premises"] = r.premises;
  if (r.conclusion) out["conclusion"] = to_string(*r.conclusion);
  switch (r.premise_status) {
    case ProofReport::PremiseStatus::None:
      out["premise_status"] = "none";
      break;
    case ProofReport::PremiseStatus::AllTrue:
      out["premise_status"] = "all-true";
      break;
    case ProofReport::PremiseStatus::SomeFalse:
      out["premise_status"] = "some-false";
      break;
    case ProofReport::PremiseStatus::Undetermined:
      out["premise_status"] = "undetermined";
      break;
  }
  return out;
}

Json to_json(const YabloReport& r) {
  Json out{{"hypotheses_ok", r.hypotheses_ok},
           {"structure_ok", r.structure_ok},
           {"all_true", r.all_true},
           {"ok", r.ok()}};
  if (r.hypothesis_failure) {
    out["hypothesis_failure"] = *r.hypothesis_failure;
    out["hypothesis_detail"] = r.hypothesis_detail;
  }
  if (r.structure_failure) out["structure_failure"] = *r.structure_failure;
  if (r.first_false_derived) out["first_false_derived"] = *r.first_false_derived;
  if (r.first_false_source) out["first_false_source"] = *r.first_false_source;
  return out;
}

Json to_json(const InternalInductionReport& r) {
  return Json{{"applicable", r.applicable},
              {"base_holds", r.base_holds},
              {"broken_steps", r.broken_steps},
              {"gaps", r.gaps},
              {"hypothesis_holds", r.hypothesis_holds},
              {"violations", r.violations},
              {"note", r.note},
              {"ok", r.ok()}};
}

TruthValuation valuation_from_json(const Json& j) {
  TruthValuation v;
  for (const Json& entry : j.at("entries"))
    v.set(parse_formula(entry.at(0).get<std::string>()),
          entry.at(1).get<bool>());
  return v;
}

PartialSatClass sat_class_from_json(const Json& j) {
  PartialSatClass s;
  for (const Json& f : j.at("domain"))
    s.domain.insert(parse_formula(f.get<std::string>()));
  for (const Json& p : j.at("pairs")) {
    Formula f = parse_formula(p.at("formula").get<std::string>());
    s.insert(f, assignment_from_json(p.at("assignment")));
  }
  return s;
}

SatScenario scenario_from_json(const Json& j) {
  SatScenario sc;
  for (const Json& f : j.at("environment"))
    sc.environment.insert(parse_formula(f.get<std::string>()));
  if (j.contains("base")) sc.base = sat_class_from_json(j.at("base"));
  if (j.contains("targets"))
    for (const Json& f : j.at("targets"))
      sc.targets.push_back(parse_formula(f.get<std::string>()));
  if (j.contains("long_cut")) sc.long_cut = j.at("long_cut").get<uint64_t>();
  if (j.contains("value_bound"))
    sc.value_bound = j.at("value_bound").get<uint64_t>();
  return sc;
}

PropProof proof_from_json(const Json& j) {
  PropProof p;
  for (const Json& line : j.at("lines")) {
    PropProof::Line l;
    l.sentence = parse_formula(line.at("sentence").get<std::string>());
    const std::string kind = line.at("kind");
    if (kind == "premise") {
      l.kind = PropProof::Line::Kind::Premise;
    } else if (kind == "mp") {
      l.kind = PropProof::Line::Kind::ModusPonens;
      l.antecedent = line.at("antecedent").get<size_t>();
      l.implication = line.at("implication").get<size_t>();
    } else {
      throw Error("proof_from_json: unknown line kind " + kind);
    }
    p.lines.push_back(l);
  }
  return p;
}

std::vector<std::vector<uint64_t>> sequences_from_json(const Json& j) {
  std::vector<std::vector<uint64_t>> out;
  for (const Json& s : j) out.push_back(s.get<std::vector<uint64_t>>());
  return out;
}

}  // namespace truthlab
