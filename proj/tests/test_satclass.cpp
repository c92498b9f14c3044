#include <doctest.h>

#include "truthlab/coding.hpp"
#include "truthlab/error.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

TEST_CASE("template extraction on the worked example") {
  Formula phi =
      parse_formula("E x0.((S(S(x0))+S(x1))=((x2*(x1+S(0)))*x0))");
  SyntacticTemplate t = make_template(phi);
  CHECK(t.skeleton == parse_formula("E x0.((S(S(x0))+x1)=(x2*x0))"));
  REQUIRE(t.slots.size() == 2);
  CHECK(t.slots[0] == parse_term("S(x1)"));
  CHECK(t.slots[1] == parse_term("(x2*(x1+S(0)))"));
  // the example's binders are already canonical, so the slots rebuild it
  CHECK(reconstruct(t) == phi);
}

TEST_CASE("template of a one-binder formula with mixed slots") {
  Formula phi = parse_formula("E x0.((x0+x1)=S(S(0)))");
  SyntacticTemplate t = make_template(phi);
  CHECK(t.skeleton == parse_formula("E x0.((x0+x1)=x2)"));
  REQUIRE(t.slots.size() == 2);
  CHECK(t.slots[0] == var(1));
  CHECK(t.slots[1] == parse_term("S(S(0))"));
}

TEST_CASE("closed equations lose both sides to slots") {
  SyntacticTemplate t = make_template(parse_formula("0=0"));
  CHECK(t.skeleton == parse_formula("x0=x1"));
  REQUIRE(t.slots.size() == 2);
  CHECK(t.slots[0] == zero());
  CHECK(t.slots[1] == zero());
}

TEST_CASE("templates are canonical under binder renaming") {
  CHECK(similar(parse_formula("E x5.x5=x9"), parse_formula("E x0.x0=x7")));
  CHECK(similar(parse_formula("!0=0"), parse_formula("!S(0)=S(0)")));
  CHECK(!similar(parse_formula("0=0"), parse_formula("!0=0")));
}

TEST_CASE("templating a template is the identity") {
  Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::random_formula(rng, 6, 3);
    SyntacticTemplate t = make_template(f);
    SyntacticTemplate again = make_template(t.skeleton);
    CHECK(again.skeleton == t.skeleton);
  }
}

TEST_CASE("extensional equivalence on the worked example") {
  Formula phi = parse_formula("E x0.((x0+x1)=S(S(0)))");
  Formula psi = parse_formula("E x0.((x0+(x1*x2))=(x3+S(0)))");
  Assignment alpha{{1, Nat{2}}};
  Assignment beta{{1, Nat{2}}, {2, Nat{1}}, {3, Nat{1}}};
  auto w = ext_equiv({phi, alpha}, {psi, beta});
  REQUIRE(w.has_value());
  CHECK(w->shared_template == parse_formula("E x0.((x0+x1)=x2)"));
  std::vector<Nat> two_two{Nat{2}, Nat{2}};
  CHECK(val_seq(w->left_slots) == two_two);
  CHECK(val_seq(w->right_slots) == two_two);
  CHECK(w->left_slots[0] == parse_term("S(S(0))"));
  CHECK(w->right_slots[0] == parse_term("(S(S(0))*S(0))"));
  CHECK(w->right_slots[1] == parse_term("(S(0)+S(0))"));
}

TEST_CASE("extensional equivalence is reflexive and value-sensitive") {
  Formula phi = parse_formula("E x0.((x0+x1)=S(S(0)))");
  Assignment alpha{{1, Nat{2}}};
  CHECK(ext_equiv({phi, alpha}, {phi, alpha}).has_value());
  // different slot values
  Assignment gamma{{1, Nat{3}}};
  CHECK(!ext_equiv({phi, alpha}, {phi, gamma}).has_value());
  // different templates
  CHECK(!ext_equiv({parse_formula("0=0"), {}}, {neg(parse_formula("0=0")), {}})
             .has_value());
}

TEST_CASE("equivalent pairs have similar formulas") {
  Rng rng(72);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, 5, 2);
    Formula g = gen::random_formula(rng, 5, 2);
    Assignment a, b;
    for (VarIndex v : free_vars(f)) a[v] = Nat{rng.below(4)};
    for (VarIndex v : free_vars(g)) b[v] = Nat{rng.below(4)};
    if (ext_equiv({f, a}, {g, b})) CHECK(similar(f, g));
  }
}

TEST_CASE("class graph on small environments") {
  Formula t = parse_formula("0=0");
  {
    ClassGraph g = class_graph({t});
    CHECK(g.members.size() == 1);
    CHECK(g.ranks == std::vector<size_t>{0});
  }
  {
    ClassGraph g = class_graph({t, neg(t)});
    CHECK(g.members.size() == 2);
    CHECK(g.ranks[g.class_of(t)] == 0);
    CHECK(g.ranks[g.class_of(neg(t))] == 1);
    CHECK(g.max_rank == 1);
  }
  {
    // two value-variants of one shape share a class
    Formula n1 = parse_formula("!0=0"), n2 = parse_formula("!S(0)=S(0)");
    Formula a1 = parse_formula("0=0"), a2 = parse_formula("S(0)=S(0)");
    ClassGraph g = class_graph({n1, n2, a1, a2});
    CHECK(g.members.size() == 2);
    CHECK(g.class_of(n1) == g.class_of(n2));
    CHECK(g.class_of(a1) == g.class_of(a2));
  }
  CHECK_THROWS_AS(class_graph({neg(t)}), Error);  // not closed
}

TEST_CASE("pre-satisfaction completion") {
  SatCheckOptions opts{4, false};
  {
    PartialSatClass empty;
    PartialSatClass done = complete_presat(empty, opts);
    CHECK(done.pairs.empty());
    CHECK(done.domain.empty());
  }
  {
    Formula t = parse_formula("0=0");
    PartialSatClass s;
    s.domain = {t};
    s.insert(t, {});
    PartialSatClass done = complete_presat(s, opts);
    CHECK(done.pairs.size() == 1);  // already complete
    CHECK(done.domain.count(t) == 1);
  }
  {
    Formula f = parse_formula("0=S(0)");
    PartialSatClass s;
    s.domain = {f};
    PartialSatClass done = complete_presat(s, opts);
    CHECK(done.contains(neg(f), {}));
    CHECK(done.domain.count(f) == 1);
    // the added negation is itself everywhere-satisfied, so it joins the
    // maximal domain
    CHECK(done.domain.count(neg(f)) == 1);
  }
  {
    // compositionality failure is rejected with the clause name
    Formula f = parse_formula("0=S(0)");
    PartialSatClass s;
    s.domain = {f};
    s.insert(f, {});  // claims a false equation
    CHECK_THROWS_WITH_AS(complete_presat(s, opts),
                         doctest::Contains("compositionality"), Error);
  }
}

TEST_CASE("validation flags the classic corruption shapes") {
  Formula a = parse_formula("0=0"), b = parse_formula("S(0)=0");
  SatCheckOptions opts{4, false};

  PartialSatClass good;
  good.domain = {a, b, disj(a, b)};
  good.insert(a, {});
  good.insert(neg(b), {});
  good.insert(disj(a, b), {});
  CHECK(validate_sat_class(good, opts).ok());

  // a disjunction pair without either disjunct pair
  PartialSatClass comp = good;
  comp.pairs.erase({a, {}});
  comp.insert(neg(a), {});
  SatClassReport r1 = validate_sat_class(comp, opts);
  CHECK(!r1.ok());

  // domain not closed under direct subformulas
  PartialSatClass open_dom = good;
  open_dom.domain.erase(b);
  SatClassReport r2 = validate_sat_class(open_dom, opts);
  bool closure_hit = false;
  for (auto& v : r2.violations)
    if (v.clause == "domain-closure") closure_hit = true;
  CHECK(closure_hit);

  // undecided formula
  PartialSatClass undecided = good;
  undecided.pairs.erase({disj(a, b), {}});
  SatClassReport r3 = validate_sat_class(undecided, opts);
  bool completeness_hit = false;
  for (auto& v : r3.violations)
    if (v.clause == "completeness") completeness_hit = true;
  CHECK(completeness_hit);
}

TEST_CASE("regularity validation compares value-equivalent pairs") {
  Formula a = parse_formula("0=0"), a2 = parse_formula("(0+0)=0");
  SatCheckOptions opts{4, true};
  PartialSatClass s;
  s.domain = {a, a2};
  s.insert(a, {});
  s.insert(neg(a2), {});  // value-equivalent to a but decided oppositely
  SatClassReport r = validate_sat_class(s, opts);
  bool reg_hit = false;
  for (auto& v : r.violations)
    if (v.clause == "regularity") reg_hit = true;
  CHECK(reg_hit);
}

TEST_CASE("the construction on a two-formula environment") {
  Formula t = parse_formula("0=0");
  SatScenario sc;
  sc.environment = {t, neg(t)};
  sc.value_bound = 3;
  auto [result, report] = build_sat_class(sc);
  CHECK(report.ok());
  CHECK(result.contains(t, {}));
  CHECK(!result.contains(neg(t), {}));
  CHECK(report.stage_count <= report.class_count);
}

TEST_CASE("the construction preserves a base asserting a long disjunction") {
  // an 8-disjunct left-grouped disjunction over atoms, first disjunct true
  SentenceSeq ds;
  ds.push_back(parse_formula("0=0"));
  for (uint64_t i = 1; i < 8; ++i) ds.push_back(eq(num(i), zero()));
  Formula big = bigvee(ds);

  SatScenario sc;
  sc.long_cut = 4;
  sc.value_bound = 3;
  std::vector<Formula> stack{big};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!sc.environment.insert(f).second) continue;
    for (Formula sub : direct_subformulas(f)) stack.push_back(sub);
  }
  // base decides the whole spine by truth
  sc.base.domain = sc.environment;
  for (Formula f : sc.environment) {
    if (desk_sat(f, {}, sc.value_bound))
      sc.base.insert(f, {});
    else
      sc.base.insert(neg(f), {});
  }
  sc.targets = {big};

  auto [result, report] = build_sat_class(sc);
  CHECK(report.ok());
  CHECK(result.contains(big, {}));
  for (const auto& audit : report.audits) {
    CAPTURE(audit.scheme);
    CHECK(audit.passed);
  }
  CHECK(validate_sat_class(result, SatCheckOptions{sc.value_bound, true}).ok());
}

TEST_CASE("a base violating regularity is rejected") {
  Formula a = parse_formula("0=0"), a2 = parse_formula("S(0)=S(0)");
  SatScenario sc;
  sc.environment = {a, a2};
  sc.base.domain = {a, a2};
  sc.base.insert(a, {});
  sc.base.insert(neg(a2), {});
  CHECK_THROWS_WITH_AS(build_sat_class(sc), doctest::Contains("base"), Error);
}

TEST_CASE("scenario invariants are enforced") {
  Formula t = parse_formula("0=0");
  SatScenario not_closed;
  not_closed.environment = {neg(t)};
  CHECK_THROWS_AS(build_sat_class(not_closed), Error);

  SatScenario stray_target;
  stray_target.environment = {t};
  stray_target.targets = {neg(t)};
  CHECK_THROWS_AS(build_sat_class(stray_target), Error);
}

TEST_CASE("randomized scenarios build deterministically and validate") {
  Rng rng(73);
  for (int i = 0; i < 20; ++i) {
    SatScenario sc = gen::random_scenario(rng);
    auto [r1, rep1] = build_sat_class(sc);
    auto [r2, rep2] = build_sat_class(sc);
    CHECK(rep1.ok());
    CHECK(r1.pairs == r2.pairs);
    CHECK(r1.domain == r2.domain);
    CHECK(rep1.stage_count == rep2.stage_count);
    CHECK(rep1.stage_count <= rep1.class_count);
    CHECK(validate_sat_class(r1, SatCheckOptions{sc.value_bound, true}).ok());
  }
}

TEST_CASE("internal induction audits") {
  Formula self = parse_formula("x0=x0");
  PartialSatClass s;
  s.domain = {self};
  for (uint64_t x = 0; x <= 12; ++x) s.insert(self, {{0, Nat{x}}});

  InternalInductionReport full = check_internal_induction(s, self, 10);
  CHECK(full.ok());
  CHECK(full.base_holds);
  CHECK(full.hypothesis_holds);
  CHECK(full.gaps.empty());

  // a hole: the step into the hole fails, so the audit is vacuous and the
  // report names the broken step
  PartialSatClass holed = s;
  holed.pairs.erase({self, {{0, Nat{3}}}});
  InternalInductionReport gap = check_internal_induction(holed, self, 10);
  CHECK(gap.ok());  // no literal violation is possible on finite data
  CHECK(!gap.hypothesis_holds);
  REQUIRE(!gap.broken_steps.empty());
  CHECK(gap.broken_steps.front() == 2);
  CHECK(gap.gaps == std::vector<uint64_t>{3});

  // closed formulas degenerate to one membership check
  Formula closed = parse_formula("0=0");
  PartialSatClass cs;
  cs.domain = {closed};
  cs.insert(closed, {});
  InternalInductionReport deg = check_internal_induction(cs, closed, 10);
  CHECK(!deg.applicable);
  CHECK(deg.base_holds);

  // two free variables are rejected
  CHECK_THROWS_AS(check_internal_induction(s, parse_formula("x0=x1"), 5),
                  Error);
}
