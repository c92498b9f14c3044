#include "truthlab/suite.hpp"

#include <chrono>
#include <functional>

#include "truthlab/coding.hpp"
#include "truthlab/cutmodel.hpp"
#include "truthlab/derivations.hpp"
#include "truthlab/error.hpp"

namespace truthlab {

// ---------------------------------------------------------------------------
// generators

namespace gen {

namespace {

// Constructor picks carry a budget for the wide constructors (equations,
// +, *, connectives, quantifiers): each one nests two pairings, so syntax
// codes grow fourfold per such level and an unbudgeted depth-8 tree can
// reach megabit codes.
constexpr uint32_t kQuadBudget = 2;

Term random_term_impl(Rng& rng, uint32_t depth, uint32_t max_var,
                      uint32_t quad) {
  uint64_t pick =
      depth == 0 ? rng.below(2) : rng.below(quad == 0 ? 5 : 8);
  switch (pick) {
    case 0:
      return zero();
    case 1:
      return max_var == 0 ? zero()
                          : var(static_cast<VarIndex>(rng.below(max_var)));
    case 2:
    case 3:
    case 4:
      return succ(random_term_impl(rng, depth - 1, max_var, quad));
    default: {
      Term a = random_term_impl(rng, depth - 1, max_var, quad - 1);
      Term b = random_term_impl(rng, depth - 1, max_var, quad - 1);
      return rng.chance(1, 2) ? add(a, b) : mul(a, b);
    }
  }
}

Formula random_formula_impl(Rng& rng, uint32_t depth, uint32_t max_var,
                            uint32_t quad) {
  uint64_t pick = depth == 0 ? 0
                  : quad == 0 ? rng.below(2) * 3
                              : rng.below(10);
  switch (pick) {
    case 0:
    case 1:
    case 2: {
      uint32_t d = depth == 0 ? 0 : depth - 1;
      uint32_t q = quad == 0 ? 0 : quad - 1;
      Term a = random_term_impl(rng, d, max_var, q);
      return eq(a, random_term_impl(rng, d, max_var, q));
    }
    case 3:
    case 4:
      if (depth == 0) return eq(zero(), zero());
      return neg(random_formula_impl(rng, depth - 1, max_var, quad));
    case 5:
      return exists(static_cast<VarIndex>(rng.below(max_var ? max_var : 1)),
                    random_formula_impl(rng, depth - 1, max_var, quad - 1));
    case 6:
      return forall(static_cast<VarIndex>(rng.below(max_var ? max_var : 1)),
                    random_formula_impl(rng, depth - 1, max_var, quad - 1));
    default: {
      Formula a = random_formula_impl(rng, depth - 1, max_var, quad - 1);
      Formula b = random_formula_impl(rng, depth - 1, max_var, quad - 1);
      return rng.chance(1, 2) ? disj(a, b) : conj(a, b);
    }
  }
}

}  // namespace

Term random_term(Rng& rng, uint32_t depth, uint32_t max_var) {
  return random_term_impl(rng, depth, max_var, kQuadBudget);
}

Formula random_formula(Rng& rng, uint32_t depth, uint32_t max_var) {
  return random_formula_impl(rng, depth, max_var, kQuadBudget);
}

namespace {

// atoms over in-scope variables with all solutions below 8; - never of the
// shape (z+v)=t so the evaluator's bounded-witness path stays out of play
Formula small_atom(Rng& rng, const std::vector<VarIndex>& scope) {
  uint64_t a = rng.below(9), b = rng.below(9);
  if (scope.empty() || rng.chance(1, 4)) {
    if (rng.chance(1, 3)) b = a;
    return eq(num(a), num(b));
  }
  VarIndex v = scope[rng.below(scope.size())];
  switch (rng.below(4)) {
    case 0:
      return eq(var(v), num(b));
    case 1:
      return eq(add(var(v), num(std::min(a, b))), num(std::max(a, b)));
    case 2:
      return eq(mul(var(v), num(a % 4)), num(b));
    default: {
      VarIndex u = scope[rng.below(scope.size())];
      return eq(var(v), var(u));
    }
  }
}

Formula small_value_body(Rng& rng, uint32_t depth,
                         std::vector<VarIndex>& scope) {
  if (depth == 0 || rng.chance(2, 5)) return small_atom(rng, scope);
  switch (rng.below(6)) {
    case 0:
      return neg(small_value_body(rng, depth - 1, scope));
    case 1:
    case 2: {
      Formula a = small_value_body(rng, depth - 1, scope);
      return disj(a, small_value_body(rng, depth - 1, scope));
    }
    case 3: {
      Formula a = small_value_body(rng, depth - 1, scope);
      return conj(a, small_value_body(rng, depth - 1, scope));
    }
    default: {
      if (scope.size() >= 2) return small_atom(rng, scope);
      VarIndex v = static_cast<VarIndex>(scope.size());
      scope.push_back(v);
      Formula body = small_value_body(rng, depth - 1, scope);
      scope.pop_back();
      return rng.chance(1, 2) ? exists(v, body) : forall(v, body);
    }
  }
}

}  // namespace

Formula small_value_sentence(Rng& rng) {
  std::vector<VarIndex> scope;
  return small_value_body(rng, 4, scope);
}

Formula decidable_sentence(Rng& rng, bool want_true) {
  switch (rng.below(6)) {
    case 0: {
      uint64_t a = rng.below(6);
      uint64_t b = want_true ? a : a + 1 + rng.below(3);
      return eq(num(a), num(b));
    }
    case 1:
      return neg(decidable_sentence(rng, !want_true));
    case 2: {
      Formula l = decidable_sentence(rng, want_true);
      Formula r = decidable_sentence(rng, rng.chance(1, 2) && want_true);
      return want_true ? disj(l, r) : disj(r, l);
    }
    case 3: {
      Formula l = decidable_sentence(rng, want_true || rng.chance(1, 2));
      Formula r = decidable_sentence(rng, want_true);
      return want_true ? conj(l, r) : conj(r, l);
    }
    case 4: {
      // E v.(v = k): true; its negation: false
      VarIndex v = 0;
      Formula inner = exists(v, eq(var(v), num(rng.below(8))));
      return want_true ? inner : neg(inner);
    }
    default: {
      // A v.(v = k) is false (any other value refutes it)
      VarIndex v = 0;
      Formula inner = forall(v, eq(var(v), num(rng.below(8))));
      return want_true ? neg(inner) : inner;
    }
  }
}

Formula decidable_sentence(Rng& rng) {
  return decidable_sentence(rng, rng.chance(1, 2));
}

std::vector<Formula> decidable_sequence(Rng& rng, size_t max_len) {
  size_t len = 1 + rng.below(max_len);
  std::vector<Formula> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) out.push_back(decidable_sentence(rng));
  return out;
}

std::vector<Formula> true_chain(Rng& rng, size_t max_len) {
  size_t len = 1 + rng.below(max_len);
  std::vector<Formula> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i)
    out.push_back(decidable_sentence(rng, true));
  return out;
}

SatScenario random_scenario(Rng& rng) {
  SatScenario sc;
  sc.long_cut = 3 + rng.below(6);                      // 3..8
  sc.value_bound = 4 + rng.below(3);                   // 4..6
  size_t disjuncts = std::min<uint64_t>(sc.long_cut + rng.below(3), 9);

  // closed equation atoms; the first one is true so every spine prefix of
  // the long disjunction is satisfied and the scheme audit has content
  SentenceSeq ds;
  for (size_t i = 0; i < disjuncts; ++i) {
    uint64_t a = rng.below(sc.value_bound);
    uint64_t b = (i == 0 || rng.chance(1, 3)) ? a : rng.below(sc.value_bound);
    ds.push_back(eq(num(a), num(b)));
  }
  Formula big = bigvee(ds);

  std::set<Formula> env;
  std::vector<Formula> stack{big};
  // one open atom family, a negation, and one quantifier of each flavor
  uint64_t k = rng.below(sc.value_bound);
  stack.push_back(eq(add(var(0), num(rng.below(3))), num(k)));
  stack.push_back(neg(eq(num(rng.below(3)), num(rng.below(3)))));
  stack.push_back(exists(0, eq(var(0), num(k))));
  stack.push_back(forall(0, eq(mul(var(0), zero()), zero())));
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!env.insert(f).second) continue;
    for (Formula sub : direct_subformulas(f)) stack.push_back(sub);
  }
  sc.environment = env;

  // base: bounded-universe truth on a downward-closed random subset
  std::set<Formula> base_dom;
  for (Formula f : env) {
    if (!rng.chance(1, 2)) continue;
    std::vector<Formula> down{f};
    while (!down.empty()) {
      Formula g = down.back();
      down.pop_back();
      if (!base_dom.insert(g).second) continue;
      for (Formula sub : direct_subformulas(g)) down.push_back(sub);
    }
  }
  sc.base.domain = base_dom;
  for (Formula f : base_dom) {
    for (const Assignment& alpha :
         bounded_assignments(free_vars(f), sc.value_bound)) {
      if (desk_sat(f, alpha, sc.value_bound))
        sc.base.insert(f, alpha);
      else
        sc.base.insert(neg(f), alpha);
    }
  }

  sc.targets.push_back(big);
  auto it = env.begin();
  std::advance(it, rng.below(env.size()));
  sc.targets.push_back(*it);
  return sc;
}

CutModel random_cut_model(Rng& rng, uint64_t size, uint64_t cut,
                          size_t sequences, size_t max_len) {
  CutModel m;
  m.size = size;
  m.cut = cut;
  m.sequences.reserve(sequences);
  for (size_t i = 0; i < sequences; ++i) {
    size_t len = 1 + rng.below(max_len);
    std::vector<uint64_t> s;
    s.reserve(len);
    for (size_t j = 0; j < len; ++j) s.push_back(rng.below(size));
    m.sequences.push_back(std::move(s));
  }
  return m;
}

}  // namespace gen

// ---------------------------------------------------------------------------
// reference oracles

namespace {

Nat plain_term_value(Term t, const Assignment& env) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      return Nat{};
    case TermKind::Succ:
      return plain_term_value(succ_arg(t), env) + Nat{1};
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      return plain_term_value(a, env) + plain_term_value(b, env);
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      return plain_term_value(a, env) * plain_term_value(b, env);
    }
    case TermKind::Var:
      return env.at(var_index(t));
  }
  return Nat{};
}

std::optional<bool> enum_truth(Formula f, Assignment& env, uint64_t bound) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      return plain_term_value(a, env) == plain_term_value(b, env);
    }
    case FormulaKind::Not: {
      auto r = enum_truth(not_arg(f), env, bound);
      if (!r) return std::nullopt;
      return !*r;
    }
    case FormulaKind::Or: {
      auto [x, y] = or_args(f);
      auto a = enum_truth(x, env, bound);
      auto b = enum_truth(y, env, bound);
      if ((a && *a) || (b && *b)) return true;
      if (a && b) return false;
      return std::nullopt;
    }
    case FormulaKind::And: {
      auto [x, y] = and_args(f);
      auto a = enum_truth(x, env, bound);
      auto b = enum_truth(y, env, bound);
      if ((a && !*a) || (b && !*b)) return false;
      if (a && b) return true;
      return std::nullopt;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bool is_exists = formula_kind(f) == FormulaKind::Exists;
      VarIndex v = quant_var(f);
      Formula body = quant_body(f);
      const auto& fv = free_vars(body);
      if (!std::binary_search(fv.begin(), fv.end(), v))
        return enum_truth(body, env, bound);
      bool unknown = false;
      auto prev = env.count(v) ? std::optional<Nat>(env.at(v)) : std::nullopt;
      std::optional<bool> decided;
      for (uint64_t x = 0; x <= bound && !decided; ++x) {
        env[v] = Nat{x};
        auto r = enum_truth(body, env, bound);
        if (!r)
          unknown = true;
        else if (is_exists && *r)
          decided = true;
        else if (!is_exists && !*r)
          decided = false;
      }
      if (prev)
        env[v] = *prev;
      else
        env.erase(v);
      if (decided) return decided;
      (void)unknown;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<bool> enumerate_truth(Formula sentence, uint64_t bound) {
  if (!is_sentence(sentence))
    throw Error("enumerate_truth: not a sentence");
  Assignment env;
  return enum_truth(sentence, env, bound);
}

bool desk_sat(Formula f, const Assignment& alpha, uint64_t value_bound) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      return term_eval(a, alpha) == term_eval(b, alpha);
    }
    case FormulaKind::Not:
      return !desk_sat(not_arg(f), alpha, value_bound);
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return desk_sat(a, alpha, value_bound) || desk_sat(b, alpha, value_bound);
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return desk_sat(a, alpha, value_bound) && desk_sat(b, alpha, value_bound);
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bool is_exists = formula_kind(f) == FormulaKind::Exists;
      VarIndex v = quant_var(f);
      Formula body = quant_body(f);
      for (uint64_t x = 0; x <= value_bound; ++x) {
        Assignment beta = alpha;
        beta[v] = Nat{x};
        bool r = desk_sat(body, beta, value_bound);
        if (is_exists && r) return true;
        if (!is_exists && !r) return false;
      }
      return !is_exists;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// checks

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

CheckResult timed(const std::string& id, const std::string& name,
                  double limit, const CheckFn& fn) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.limit_seconds = limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = fn();
    r.pass = pass;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  if (!r.pass && r.detail.find("undetermined") != std::string::npos)
    r.undetermined = true;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

std::pair<bool, std::string> check_worked_examples() {
  if (!(val(parse_term("(S(0)+S(S(0)))")) == Nat{3}))
    return {false, "value of S0 + SS0 is not 3"};
  Assignment alpha{{0, Nat{2}}, {1, Nat{5}}};
  if (!(term_eval(parse_term("(S(S(x0))*S(x1))"), alpha) == Nat{24}))
    return {false, "SSx * Sy at x=2, y=5 is not 24"};

  SyntacticTemplate t = make_template(
      parse_formula("E x0.((S(S(x0))+S(x1))=((x2*(x1+S(0)))*x0))"));
  if (t.skeleton != parse_formula("E x0.((S(S(x0))+x1)=(x2*x0))"))
    return {false, "template skeleton mismatch: " + to_string(t.skeleton)};
  if (t.slots.size() != 2 || t.slots[0] != parse_term("S(x1)") ||
      t.slots[1] != parse_term("(x2*(x1+S(0)))"))
    return {false, "template slots mismatch"};

  Formula phi = parse_formula("E x0.((x0+x1)=S(S(0)))");
  Assignment a{{1, Nat{2}}};
  Formula psi = parse_formula("E x0.((x0+(x1*x2))=(x3+S(0)))");
  Assignment b{{1, Nat{2}}, {2, Nat{1}}, {3, Nat{1}}};
  auto w = ext_equiv({phi, a}, {psi, b});
  if (!w) return {false, "extensional equivalence witness missing"};
  if (w->shared_template != parse_formula("E x0.((x0+x1)=x2)"))
    return {false, "witness template mismatch: " +
                       to_string(w->shared_template)};
  std::vector<Nat> expected{Nat{2}, Nat{2}};
  if (val_seq(w->left_slots) != expected ||
      val_seq(w->right_slots) != expected)
    return {false, "witness slot values are not [2, 2]"};
  return {true, "all worked examples match"};
}

std::pair<bool, std::string> check_coding_roundtrip(uint64_t seed) {
  Rng rng(seed ^ 0xc0d1u);
  for (int i = 0; i < 10000; ++i) {
    if (i % 2 == 0) {
      Term t = gen::random_term(rng, 8, 3);
      Syntax back = decode(encode(t));
      auto* rt = std::get_if<Term>(&back);
      if (!rt || *rt != t)
        return {false, "term roundtrip failed: " + to_string(t)};
    } else {
      Formula f = gen::random_formula(rng, 8, 3);
      Syntax back = decode(encode(f));
      auto* rf = std::get_if<Formula>(&back);
      if (!rf || *rf != f)
        return {false, "formula roundtrip failed: " + to_string(f)};
    }
  }
  return {true, "10000 roundtrips exact"};
}

std::pair<bool, std::string> check_evaluator_oracle(uint64_t seed,
                                                    uint64_t budget) {
  Rng rng(seed ^ 0x03ac1eu);
  Evaluator ev(budget);
  for (int i = 0; i < 1000; ++i) {
    Formula s = gen::small_value_sentence(rng);
    Verdict v = ev(s);
    std::optional<bool> o = enumerate_truth(s, budget);
    bool match = (!o && v.is_unknown()) || (o && *o && v.is_true()) ||
                 (o && !*o && v.is_false());
    if (!match) return {false, "verdict disagreement on " + to_string(s)};
  }
  return {true, "1000 sentences, identical verdicts"};
}

std::pair<bool, std::string> check_standard_dc(uint64_t seed,
                                               uint64_t budget) {
  Rng rng(seed ^ 0xdcdcu);
  const auto& builders = non_selective_builders();
  for (int i = 0; i < 200; ++i) {
    SentenceSeq seq = gen::decidable_sequence(rng, 32);
    Evaluator ev(budget);
    bool any = false;
    for (Formula f : seq) {
      Verdict v = ev(f);
      if (v.is_unknown())
        return {false,
                "undetermined: a generated sentence did not resolve at "
                "budget " + std::to_string(budget)};
      any = any || v.is_true();
    }
    for (const auto& builder : builders) {
      Verdict whole = ev(builder.apply(seq));
      if (whole.is_true() != any)
        return {false, builder.name + " breaks the truth biconditional on "
                                      "sample " +
                           std::to_string(i)};
    }
  }
  return {true, "4 builders x 200 sequences agree with disjunct truth"};
}

std::pair<bool, std::string> check_yablo_replay(uint64_t seed,
                                                uint64_t budget) {
  Rng rng(seed ^ 0x9ab6u);
  for (int i = 0; i < 200; ++i) {
    SentenceSeq chain = gen::true_chain(rng, 64);
    YabloSequence ys = yablo_transform(chain);
    YabloReport report = check_yablo_claim(ys, budget);
    if (!report.ok()) {
      bool starved = report.hypothesis_detail.find("undetermined") !=
                     std::string::npos;
      return {false, (starved ? "undetermined: " : "") +
                         ("replay failed on chain " + std::to_string(i)) +
                         (report.hypothesis_detail.empty()
                              ? ""
                              : ": " + report.hypothesis_detail)};
    }
    uint64_t weight = chain.size() - 1;
    for (Formula f : chain)
      weight += tree_node_count(f).to_u64().value_or(~0ull);
    std::vector<Formula> roots = ys.source;
    roots.insert(roots.end(), ys.derived.begin(), ys.derived.end());
    if (dag_node_count(roots) > 10 * weight)
      return {false, "shared representation exceeds the linear bound"};
  }
  SentenceSeq plain(21, parse_formula("0=0"));
  YabloSequence ys = yablo_transform(plain);
  Nat flat = tree_node_count(ys.derived[20]);
  if (!(flat > (Nat{1} << 19)))
    return {false, "tree size of the 21st derived sentence is not > 2^19"};
  return {true,
          "200 chains replay; tree size at index 20 is " + flat.to_decimal()};
}

std::pair<bool, std::string> check_outer_quantified(uint64_t seed,
                                                    uint64_t budget) {
  Rng rng(seed ^ 0x07e4u);
  std::vector<SentenceSeq> samples;
  for (int i = 0; i < 200; ++i)
    samples.push_back(gen::decidable_sequence(rng, 32));
  OuterContractReport report =
      check_outer_contract(make_builder(BuilderKind::QuantifiedOuter),
                           evaluation_oracle(budget), samples);
  if (report.truth.verdict() == PrincipleReport::Outcome::Fail)
    return {false, "contract violated: " +
                       report.truth.violations.front().explanation};
  if (report.truth.verdict() == PrincipleReport::Outcome::Undetermined)
    return {false, "undetermined: " + report.truth.undetermined.front()};
  for (uint64_t c = 0; c <= 10; ++c) {
    SentenceSeq antecedents, disjuncts;
    for (uint64_t i = 0; i <= c; ++i) {
      Formula tag = eq(num(i), num(c + 1));
      antecedents.push_back(neg(tag));
      disjuncts.push_back(conj(tag, parse_formula("0=0")));
    }
    Formula impl =
        disj(neg(bigwedge(antecedents)), neg(bigvee(disjuncts)));
    if (!is_tautology(impl))
      return {false, "tag tautology fails at c = " + std::to_string(c)};
  }
  return {true, "200 samples pass both clauses and the biconditional; "
                "tag tautologies hold for c <= 10"};
}

std::pair<bool, std::string> check_balanced_separation(uint64_t seed,
                                                       uint64_t budget) {
  Formula a = parse_formula("0=0");
  Formula b = parse_formula("S(0)=S(0)");
  Formula c = parse_formula("S(S(0))=S(S(0))");
  SentenceSeq abc{a, b, c};
  SentenceSeq ab{a, b};
  if (balanced(abc) == disj(balanced(ab), c))
    return {false, "balanced grouping unexpectedly satisfies the append "
                   "clause on [a,b,c]"};
  Rng rng(seed ^ 0xba1acedu);
  Evaluator ev(budget);
  for (int i = 0; i < 200; ++i) {
    SentenceSeq seq = gen::decidable_sequence(rng, 32);
    bool any = false, starved = false;
    for (Formula f : seq) {
      Verdict v = ev(f);
      starved = starved || v.is_unknown();
      any = any || v.is_true();
    }
    if (starved)
      return {false, "undetermined: a sample sentence did not resolve"};
    if (ev(balanced(seq)).is_true() != any)
      return {false, "balanced truth biconditional fails"};
  }
  return {true, "append clause fails structurally, truth biconditional "
                "holds on 200 samples"};
}

std::pair<bool, std::string> check_construction_engine(uint64_t seed) {
  Rng rng(seed ^ 0x5a7c1a55u);
  for (int i = 0; i < 100; ++i) {
    SatScenario sc = gen::random_scenario(rng);
    if (sc.environment.size() > 60)
      return {false, "generated environment too large"};
    ClassGraph g = class_graph(sc.environment);
    if (g.members.size() > 12)
      return {false, "generated scenario has too many classes"};
    auto [result, report] = build_sat_class(sc);
    if (!report.ok())
      return {false, "construction audit failed on scenario " +
                         std::to_string(i)};
    if (report.stage_count > report.class_count)
      return {false, "more stages than classes"};
    SatClassReport v = validate_sat_class(
        result, SatCheckOptions{sc.value_bound, true});
    if (!v.ok())
      return {false, "constructed class invalid on scenario " +
                         std::to_string(i) + ": " +
                         v.violations.front().clause};
  }
  return {true, "100 scenarios constructed and audited"};
}

std::pair<bool, std::string> check_cut_construction_a(uint64_t seed) {
  Rng rng(seed ^ 0xac4a);
  for (int i = 0; i < 100; ++i) {
    CutModel m = gen::random_cut_model(rng, 2000, 1000, 300, 50);
    ApproxTrace trace = construct_a(m);
    PrincipleReport audit = audit_construction(trace, m, CutConstruction::A);
    if (audit.verdict() != PrincipleReport::Outcome::Pass)
      return {false, "audit failed on model " + std::to_string(i) + ": " +
                         audit.violations.front().explanation};
  }
  return {true, "100 models: T below the cut, order induction passes, "
                "counts agree"};
}

std::pair<bool, std::string> check_cut_construction_b(uint64_t seed) {
  Rng rng(seed ^ 0xbc4b);
  size_t total_skips = 0, total_extended = 0;
  for (int i = 0; i < 100; ++i) {
    CutModel m = gen::random_cut_model(rng, 2000, 1000, 300, 50);
    m.long_threshold = 16;  // the default cut/10 never fires at length 50
    ApproxTrace trace = construct_b(m);
    PrincipleReport audit = audit_construction(trace, m, CutConstruction::B);
    if (audit.verdict() != PrincipleReport::Outcome::Pass)
      return {false, "audit failed on model " + std::to_string(i) + ": " +
                         audit.violations.front().explanation};
    total_skips += audit.notes.size();
    for (const CutStep& st : trace.steps)
      if (st.action == CutStep::Action::Extended) ++total_extended;
  }
  return {true, "100 models: induction passes, every processed sequence "
                "shows the boundary pair; " +
                    std::to_string(total_extended) + " extensions, " +
                    std::to_string(total_skips) + " logged skips"};
}

std::pair<bool, std::string> check_fault_injection(uint64_t seed,
                                                   uint64_t budget) {
  Rng rng(seed ^ 0xfa017u);
  size_t detected = 0, total = 0;
  auto expect_fail = [&](bool failed, const std::string& what)
      -> std::optional<std::string> {
    ++total;
    if (failed) {
      ++detected;
      return std::nullopt;
    }
    return what;
  };

  // compositional clauses: flip one truth value in a closed valuation
  for (int k = 0; k < 15; ++k) {
    std::set<Formula> closure{eq(num(uint64_t(k)), num(uint64_t(k)))};
    for (int j = 0; j < 4; ++j) {
      std::vector<Formula> stack{gen::decidable_sentence(rng)};
      while (!stack.empty()) {
        Formula f = stack.back();
        stack.pop_back();
        if (!is_quantifier_free(f)) continue;  // keep every flip refutable
        if (!closure.insert(f).second) continue;
        for (Formula sub : direct_subformulas(f)) stack.push_back(sub);
      }
    }
    std::vector<Formula> sentences(closure.begin(), closure.end());
    TruthValuation v = TruthValuation::from_evaluation(sentences, budget);
    Formula flipped = sentences[rng.below(sentences.size())];
    v.set(flipped, !*v.get(flipped));
    PrincipleReport r = check_ct_minus(v, QuantifierVariant::Numeral, budget);
    if (auto err = expect_fail(!r.violations.empty(),
                               "ct flip undetected on " + to_string(flipped)))
      return {false, *err};
  }

  // disjunctive correctness, both directions
  for (int k = 0; k < 10; ++k) {
    SentenceSeq seq;
    for (int j = 0; j < 4; ++j)
      seq.push_back(gen::decidable_sentence(rng, false));
    std::vector<Formula> closure = seq;
    for (size_t len = 1; len <= seq.size(); ++len)
      closure.push_back(bigvee(SentenceSeq(seq.begin(), seq.begin() + len)));
    TruthValuation v = TruthValuation::from_evaluation(closure, budget);
    if (k % 2 == 0)
      v.set(bigvee(seq), true);  // true disjunction, no true disjunct
    else
      v.set(seq[2], true);  // true disjunct, false disjunction
    PrincipleReport r = check_dc(v, {seq}, DcDirection::Both);
    if (auto err = expect_fail(!r.violations.empty(), "dc flip undetected"))
      return {false, *err};
  }

  // quantifier-free correctness
  for (int k = 0; k < 5; ++k) {
    Formula t = eq(num(k), num(k));
    TruthValuation v;
    v.set(t, false);
    PrincipleReport r = check_qfc(v, budget);
    if (auto err = expect_fail(!r.violations.empty(), "qfc flip undetected"))
      return {false, *err};
  }

  // outer-disjunction contract via a perturbed oracle
  for (int k = 0; k < 5; ++k) {
    SentenceSeq seq;
    for (int j = 0; j < 3 + k % 3; ++j)
      seq.push_back(gen::decidable_sentence(rng));
    std::vector<Formula> closure = seq;
    for (size_t len = 1; len <= seq.size(); ++len)
      closure.push_back(bigvee(SentenceSeq(seq.begin(), seq.begin() + len)));
    TruthValuation v = TruthValuation::from_evaluation(closure, budget);
    Formula whole = bigvee(seq);
    v.set(whole, !*v.get(whole));
    OuterContractReport r = check_outer_contract(
        make_builder(BuilderKind::LeftGrouped), v.as_oracle(), {seq});
    if (auto err = expect_fail(!r.truth.violations.empty(),
                               "outer flip undetected"))
      return {false, *err};
  }

  // satisfaction-class conditions
  for (int k = 0; k < 5; ++k) {
    SatScenario sc = gen::random_scenario(rng);
    auto [result, report] = build_sat_class(sc);
    if (!report.ok()) return {false, "scenario build failed during injection"};
    PartialSatClass broken = result;
    if (k % 2 == 0) {
      for (auto it = broken.pairs.begin(); it != broken.pairs.end(); ++it) {
        bool in_dom = broken.domain.count(it->first) > 0;
        bool neg_dom = formula_kind(it->first) == FormulaKind::Not &&
                       broken.domain.count(not_arg(it->first)) > 0;
        if (in_dom || neg_dom) {
          broken.pairs.erase(it);
          break;
        }
      }
    } else {
      auto first = *broken.pairs.begin();
      broken.pairs.insert({neg(first.first), first.second});
    }
    SatClassReport r =
        validate_sat_class(broken, SatCheckOptions{sc.value_bound, true});
    if (auto err = expect_fail(!r.ok(), "satisfaction perturbation undetected"))
      return {false, *err};
  }

  // cut construction A: perturb the final set
  for (int k = 0; k < 5; ++k) {
    CutModel m = gen::random_cut_model(rng, 400, 200, 60, 30);
    ApproxTrace trace = construct_a(m);
    if (k % 2 == 0 && !trace.final_b.empty())
      trace.final_t.insert(*trace.final_b.begin());
    else if (!trace.final_t.empty())
      trace.final_t.erase(*trace.final_t.begin());
    PrincipleReport r = audit_construction(trace, m, CutConstruction::A);
    if (auto err =
            expect_fail(!r.violations.empty(), "trace perturbation undetected"))
      return {false, *err};
  }

  // cut construction B: perturb the final set
  for (int k = 0; k < 5; ++k) {
    CutModel m = gen::random_cut_model(rng, 400, 200, 60, 30);
    m.long_threshold = 8;
    ApproxTrace trace = construct_b(m);
    if (k % 2 == 0 && !trace.final_b.empty())
      trace.final_t.insert(*trace.final_b.begin());
    else
      trace.final_t.erase(*trace.final_t.begin());
    PrincipleReport r = audit_construction(trace, m, CutConstruction::B);
    if (auto err =
            expect_fail(!r.violations.empty(), "trace perturbation undetected"))
      return {false, *err};
  }

  return {detected == total && total == 50,
          std::to_string(detected) + "/" + std::to_string(total) +
              " injected faults detected"};
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  uint64_t seed = config.seed, budget = config.budget;

  std::vector<std::tuple<std::string, std::string, double, CheckFn>> checks = {
      {"c01", "worked examples exact", 1.0,
       [&] { return check_worked_examples(); }},
      {"c02", "coding roundtrip", 10.0,
       [&] { return check_coding_roundtrip(seed); }},
      {"c03", "evaluator vs enumeration oracle", 60.0,
       [&] { return check_evaluator_oracle(seed, budget); }},
      {"c04", "standard-scale disjunctive correctness", 60.0,
       [&] { return check_standard_dc(seed, budget); }},
      {"c05", "sequence transform replay and sharing", 120.0,
       [&] { return check_yablo_replay(seed, budget); }},
      {"c06", "quantified outer disjunction contract", 60.0,
       [&] { return check_outer_quantified(seed, budget); }},
      {"c07", "balanced grouping separation", 60.0,
       [&] { return check_balanced_separation(seed, budget); }},
      {"c08", "stagewise construction engine", 120.0,
       [&] { return check_construction_engine(seed); }},
      {"c09", "cut approximation from below", 120.0,
       [&] { return check_cut_construction_a(seed); }},
      {"c10", "cut approximation from above", 120.0,
       [&] { return check_cut_construction_b(seed); }},
      {"c11", "fault injection", 30.0,
       [&] { return check_fault_injection(seed, budget); }},
  };

  for (auto& [id, name, limit, fn] : checks) {
    if (!config.only.empty() && id.rfind(config.only, 0) != 0) continue;
    CheckResult r = timed(id, name, limit, fn);
    if (config.progress) config.progress(r);
    report.results.push_back(std::move(r));
  }
  return report;
}

Json suite_report_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& r : report.results) {
    checks.push_back(Json{{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"undetermined", r.undetermined},
                          {"detail", r.detail}});
  }
  return Json{{"schema_version", 1},
              {"checks", checks},
              {"all_pass", report.all_pass()}};
}

}  // namespace truthlab
