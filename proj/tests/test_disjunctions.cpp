#include <doctest.h>

#include "truthlab/coding.hpp"
#include "truthlab/disjunctions.hpp"
#include "truthlab/error.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

namespace {
Formula A() { return parse_formula("0=0"); }
Formula B() { return parse_formula("S(0)=S(0)"); }
Formula C() { return parse_formula("S(S(0))=S(S(0))"); }
}  // namespace

TEST_CASE("left-grouped disjunction and conjunction") {
  CHECK(bigvee({A()}) == A());
  CHECK(bigvee({A(), B(), C()}) == disj(disj(A(), B()), C()));
  CHECK(bigwedge({A()}) == A());
  CHECK(bigwedge({A(), B(), C()}) == conj(conj(A(), B()), C()));
  CHECK_THROWS_AS(bigvee({}), Error);
  CHECK_THROWS_AS(bigwedge({}), Error);
  CHECK_THROWS_AS(bigvee({parse_formula("x0=0")}), Error);
}

TEST_CASE("the append law holds structurally for every prefix") {
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    SentenceSeq seq = gen::decidable_sequence(rng, 16);
    for (size_t k = 1; k < seq.size(); ++k) {
      SentenceSeq prefix(seq.begin(), seq.begin() + k);
      SentenceSeq extended(seq.begin(), seq.begin() + k + 1);
      CHECK(bigvee(extended) == disj(bigvee(prefix), seq[k]));
      CHECK(bigwedge(extended) == conj(bigwedge(prefix), seq[k]));
    }
  }
}

TEST_CASE("balanced grouping") {
  CHECK(balanced({}) == parse_formula("!0=0"));
  CHECK(balanced({A()}) == A());
  CHECK(balanced({A(), B(), C()}) == disj(A(), disj(B(), C())));
  CHECK(balanced({A(), B()}) == disj(A(), B()));
}

TEST_CASE("balanced split") {
  auto [l2, r2] = balanced_split({A(), B()});
  CHECK(l2 == SentenceSeq{A()});
  CHECK(r2 == SentenceSeq{B()});
  auto [l4, r4] = balanced_split({A(), B(), C(), A()});
  CHECK(l4.size() == 2);
  CHECK(r4.size() == 2);
  CHECK_THROWS_AS(balanced_split({A()}), Error);

  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    SentenceSeq seq = gen::decidable_sequence(rng, 32);
    if (seq.size() < 2) continue;
    auto [l, r] = balanced_split(seq);
    CHECK(balanced(seq) == disj(balanced(l), balanced(r)));
    CHECK(l.size() == seq.size() / 2);
    // both halves of a length >= 2k sequence have length >= k
    size_t k = seq.size() / 2;
    CHECK(l.size() >= k);
    CHECK(r.size() >= k);
  }
}

TEST_CASE("quantified outer disjunction shape") {
  Formula phi0 = parse_formula("S(0)=S(0)");
  Formula built = quantified_outer({phi0});
  Formula expected =
      exists(0, conj(exists(1, eq(add(var(1), var(0)), zero())),
                     conj(eq(zero(), var(0)), phi0)));
  CHECK(built == expected);
  CHECK(to_string(built) == "E x0.(E x1.(x1+x0)=0&(0=x0&S(0)=S(0)))");

  Formula two = quantified_outer({A(), B()});
  // one existential over two tagged disjuncts under the length bound
  CHECK(formula_kind(two) == FormulaKind::Exists);
  auto [bound, spine] = and_args(quant_body(two));
  CHECK(formula_kind(bound) == FormulaKind::Exists);
  CHECK(or_spine(spine).size() == 2);
}

TEST_CASE("negated conjunction outer disjunction") {
  CHECK(negated_conjunction_outer({A()}) == neg(neg(A())));
  CHECK(negated_conjunction_outer({A(), B()}) ==
        neg(conj(neg(A()), neg(B()))));
  CHECK_THROWS_AS(negated_conjunction_outer({}), Error);
}

TEST_CASE("every builder satisfies the truth biconditional on decidable "
          "sequences") {
  Rng rng(53);
  Evaluator ev(64);
  for (int i = 0; i < 60; ++i) {
    SentenceSeq seq = gen::decidable_sequence(rng, 24);
    bool any = false;
    for (Formula f : seq) any = any || ev(f).is_true();
    for (const auto& builder : non_selective_builders()) {
      CAPTURE(builder.name);
      CHECK(ev(builder.apply(seq)).is_true() == any);
    }
  }
}

TEST_CASE("selective disjunction") {
  CHECK(selective_outer({}, min_code_choice) == parse_formula("!0=0"));
  Formula a = A();
  CHECK(selective_outer({a}, min_code_choice) ==
        disj(a, parse_formula("!0=0")));

  // determinism and set semantics: order and duplicates are irrelevant
  std::vector<Formula> s1{A(), B(), C()}, s2{C(), A(), B(), A()};
  CHECK(selective_outer(s1, min_code_choice) ==
        selective_outer(s2, min_code_choice));

  // an invalid choice function is rejected
  ChoiceFunction bad = [](const std::vector<Formula>&) {
    return parse_formula("S(S(S(0)))=0");
  };
  CHECK_THROWS_AS(selective_outer({A(), B()}, bad), Error);

  // the default choice takes the least code
  Nat ca = encode(A()), cb = encode(B());
  Formula first = or_args(selective_outer({A(), B()}, min_code_choice)).first;
  CHECK(first == (ca < cb ? A() : B()));
}
