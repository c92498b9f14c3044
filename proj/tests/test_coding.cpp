#include <doctest.h>

#include "truthlab/coding.hpp"
#include "truthlab/error.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

TEST_CASE("numerals") {
  CHECK(num(uint64_t{0}) == zero());
  CHECK(num(uint64_t{1}) == succ(zero()));
  CHECK(num(uint64_t{3}) == parse_term("S(S(S(0)))"));
  // numerals denote their index and stay closed; dense sweep low, spot
  // checks high
  for (uint64_t n = 0; n <= 1000; ++n) {
    Term t = num(n);
    CHECK(is_closed(t));
    CHECK(val(t) == Nat{n});
  }
  for (uint64_t n : {5000ull, 10000ull}) {
    Term t = num(n);
    CHECK(is_closed(t));
    CHECK(val(t) == Nat{n});
  }
  CHECK(num(Nat{42}) == num(uint64_t{42}));
}

TEST_CASE("roundtrip on random trees") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    if (i % 2 == 0) {
      Term t = gen::random_term(rng, 8, 3);
      auto back = decode(encode(t));
      REQUIRE(std::holds_alternative<Term>(back));
      CHECK(std::get<Term>(back) == t);
    } else {
      Formula f = gen::random_formula(rng, 8, 3);
      auto back = decode(encode(f));
      REQUIRE(std::holds_alternative<Formula>(back));
      CHECK(std::get<Formula>(back) == f);
    }
  }
}

TEST_CASE("term and formula codes are disjoint") {
  CHECK(encode(parse_formula("0=0")) != encode(zero()));
  CHECK(encode(parse_formula("0=0")) != encode(parse_term("(0+0)")));
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    GodelCode tc = encode(gen::random_term(rng, 6, 2));
    auto t = decode(tc);
    CHECK(std::holds_alternative<Term>(t));
    GodelCode fc = encode(gen::random_formula(rng, 6, 2));
    auto f = decode(fc);
    CHECK(std::holds_alternative<Formula>(f));
  }
}

TEST_CASE("decode rejects numbers outside the range") {
  // tag 11 and beyond never occurs
  CHECK_THROWS_AS(decode(cantor_pair(Nat{11}, Nat{0})), Error);
  CHECK_THROWS_AS(decode(cantor_pair(Nat{1000}, Nat{5})), Error);
  // zero tag with nonzero payload
  CHECK_THROWS_AS(decode(cantor_pair(Nat{6}, Nat{1})), Error);
  // a term code in a formula child position: eq over formula codes
  GodelCode bad = cantor_pair(
      Nat{0}, cantor_pair(encode(parse_formula("0=0")), encode(zero())));
  CHECK_THROWS_AS(decode(bad), Error);
}

TEST_CASE("roundtrip through the fixed base cases") {
  CHECK(std::get<Term>(decode(encode(num(uint64_t{3})))) ==
        parse_term("S(S(S(0)))"));
  Formula f = parse_formula("E x0.x0=0");
  CHECK(std::get<Formula>(decode(encode(f))) == f);
  Formula g = disj(parse_formula("0=0"), parse_formula("S(0)=0"));
  CHECK(std::get<Formula>(decode(encode(g))) == g);
}
