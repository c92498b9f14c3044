#include <doctest.h>

#include "truthlab/coding.hpp"
#include "truthlab/error.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

TEST_CASE("closed term values") {
  CHECK(val(parse_term("(S(0)+S(S(0)))")) == Nat{3});
  CHECK(val(zero()) == Nat{0});
  CHECK_THROWS_AS(val(var(0)), Error);
}

TEST_CASE("term values under assignments") {
  Assignment alpha{{0, Nat{2}}, {1, Nat{5}}};
  CHECK(term_eval(parse_term("(S(S(x0))*S(x1))"), alpha) == Nat{24});
  CHECK(term_eval(zero(), {}) == Nat{0});
  CHECK_THROWS_AS(term_eval(var(3), alpha), Error);
  // agreement with val on closed terms under any assignment
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Term t = gen::random_term(rng, 6, 0);
    CHECK(term_eval(t, alpha) == val(t));
  }
}

TEST_CASE("value sequences") {
  std::vector<Term> ts{parse_term("(S(S(0))*S(0))"),
                       parse_term("(S(0)+S(0))")};
  CHECK(val_seq(ts) == std::vector<Nat>{Nat{2}, Nat{2}});
  CHECK(val_seq({}).empty());
  std::vector<Term> nums;
  for (uint64_t k = 0; k < 10; ++k) nums.push_back(num(k));
  auto vals = val_seq(nums);
  for (uint64_t k = 0; k < 10; ++k) CHECK(vals[k] == Nat{k});
}

TEST_CASE("evaluation of simple sentences") {
  CHECK(evaluate(parse_formula("0=0")).is_true());
  Verdict witness = evaluate(parse_formula("E x0.x0=S(0)"));
  CHECK(witness.is_true());
  REQUIRE(witness.certificate.size() == 1);
  CHECK(witness.certificate[0].second == Nat{1});
  CHECK(evaluate(parse_formula("A x0.x0=0")).is_false());
  CHECK_THROWS_AS(evaluate(parse_formula("x0=0")), Error);
}

TEST_CASE("an unbounded existential stays undetermined") {
  // no natural doubles to one, and plain search cannot close the quantifier
  CHECK(evaluate(parse_formula("E x0.(x0+x0)=S(0)")).is_unknown());
  CHECK(evaluate(parse_formula("A x0.x0=x0")).is_unknown());
}

TEST_CASE("the bounded comparison shape is decided outright") {
  Formula le = bounded_le(var(0), num(uint64_t{5}), 1);
  CHECK(to_string(le) == "E x1.(x1+x0)=S(S(S(S(S(0)))))");
  CHECK(evaluate(exists(0, conj(bounded_le(var(0), num(uint64_t{3}), 1),
                                eq(var(0), num(uint64_t{2}))))).is_true());
  // all-false bodies under a closed bound resolve to false, not unknown
  CHECK(evaluate(exists(0, conj(bounded_le(var(0), num(uint64_t{3}), 1),
                                eq(var(0), num(uint64_t{9}))))).is_false());
  // the solvable equation alone is decided at any budget
  CHECK(evaluate(exists(1, eq(add(var(1), num(uint64_t{7})),
                              num(uint64_t{3}))), {2}).is_false());
  CHECK(evaluate(exists(1, eq(add(var(1), num(uint64_t{3})),
                              num(uint64_t{7}))), {2}).is_true());
}

TEST_CASE("verdicts agree with direct enumeration") {
  Rng rng(42);
  Evaluator ev(64);
  for (int i = 0; i < 300; ++i) {
    Formula s = gen::small_value_sentence(rng);
    Verdict v = ev(s);
    auto o = enumerate_truth(s, 64);
    if (!o) CHECK(v.is_unknown());
    else CHECK(v.is_true() == *o);
  }
}

TEST_CASE("raising the budget never flips a determined verdict") {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    Formula s = gen::small_value_sentence(rng);
    Verdict low = evaluate(s, {4});
    Verdict high = evaluate(s, {64});
    if (low.determined()) CHECK(low.kind == high.kind);
  }
}

TEST_CASE("compositional clauses hold wherever determined") {
  Rng rng(44);
  Evaluator ev(16);
  for (int i = 0; i < 300; ++i) {
    Formula a = gen::small_value_sentence(rng);
    Formula b = gen::small_value_sentence(rng);
    Verdict va = ev(a), vb = ev(b);
    Verdict vor = ev(disj(a, b)), vand = ev(conj(a, b)), vneg = ev(neg(a));
    if (va.determined() && vb.determined()) {
      CHECK(vor.is_true() == (va.is_true() || vb.is_true()));
      CHECK(vand.is_true() == (va.is_true() && vb.is_true()));
    }
    if (va.determined()) CHECK(vneg.is_true() == va.is_false());
  }
}

TEST_CASE("truth is invariant under equal-valued term substitution") {
  Rng rng(45);
  Evaluator ev(32);
  auto value_variant = [&](Term t) {
    switch (rng.below(4)) {
      case 0:
        return add(t, zero());
      case 1:
        return mul(t, succ(zero()));
      case 2:
        return add(zero(), t);
      default: {
        auto v = val(t).to_u64();
        return v && *v < 4096 ? num(*v) : mul(succ(zero()), t);
      }
    }
  };
  for (int i = 0; i < 200; ++i) {
    // a random template with closed slots, and a slot sequence of
    // different terms with the same values
    Formula f = gen::random_formula(rng, 5, 2);
    Assignment alpha;
    for (VarIndex v : free_vars(f)) alpha[v] = Nat{rng.below(5)};
    Formula sentence = instantiate(f, alpha);
    SyntacticTemplate eta = make_template(sentence);
    std::vector<Term> variants;
    for (Term slot : eta.slots) variants.push_back(value_variant(slot));
    Formula twin = reconstruct({eta.skeleton, variants});
    CHECK(val_seq(eta.slots) == val_seq(variants));
    CHECK(ev(sentence).kind == ev(twin).kind);
  }
}
