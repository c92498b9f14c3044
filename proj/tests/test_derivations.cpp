#include <doctest.h>

#include "truthlab/coding.hpp"
#include "truthlab/derivations.hpp"
#include "truthlab/error.hpp"
#include "truthlab/json_io.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

namespace {

Formula T() { return parse_formula("0=0"); }
Formula F() { return parse_formula("S(0)=0"); }
Formula implies(Formula a, Formula b) { return disj(neg(a), b); }

// Reference acceptance: every non-premise line must follow by modus ponens
// from some pair of earlier lines, citations ignored.
bool closure_accepts(const PropProof& p) {
  if (p.lines.empty()) return false;
  for (size_t i = 0; i < p.lines.size(); ++i) {
    if (p.lines[i].kind == PropProof::Line::Kind::Premise) continue;
    bool ok = false;
    for (size_t x = 0; x < i && !ok; ++x) {
      for (size_t y = 0; y < i && !ok; ++y) {
        Formula impl = p.lines[y].sentence;
        if (formula_kind(impl) != FormulaKind::Or) continue;
        auto [l, r] = or_args(impl);
        if (formula_kind(l) == FormulaKind::Not &&
            not_arg(l) == p.lines[x].sentence && r == p.lines[i].sentence)
          ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

PropProof::Line premise(Formula f) {
  return {f, PropProof::Line::Kind::Premise, 0, 0};
}
PropProof::Line mp(Formula f, size_t ante, size_t impl) {
  return {f, PropProof::Line::Kind::ModusPonens, ante, impl};
}

}  // namespace

TEST_CASE("a one-step proof checks out") {
  Formula a = T(), b = parse_formula("S(S(0))=S(S(0))");
  PropProof p{{premise(a), premise(implies(a, b)), mp(b, 0, 1)}};
  ProofReport r = check_proof(p, evaluation_oracle(8));
  CHECK(r.well_formed);
  CHECK(r.conclusion == b);
  CHECK(r.premises == std::vector<size_t>{0, 1});
  CHECK(r.premise_status == ProofReport::PremiseStatus::AllTrue);
  CHECK(!r.pure);
}

TEST_CASE("malformed citations are rejected with the line number") {
  Formula a = T(), b = F();
  // cites a non-implication line
  PropProof p1{{premise(a), premise(b), mp(b, 0, 1)}};
  ProofReport r1 = check_proof(p1, evaluation_oracle(8));
  CHECK(!r1.well_formed);
  CHECK(r1.bad_line == 2);
  // cites a later line
  PropProof p2{{premise(a), mp(b, 0, 2), premise(implies(a, b))}};
  ProofReport r2 = check_proof(p2, evaluation_oracle(8));
  CHECK(!r2.well_formed);
  CHECK(r2.bad_line == 1);
  // correct sentence with the wrong citation pair is still rejected
  PropProof p3{{premise(a), premise(implies(a, b)), premise(a),
                mp(b, 2, 0)}};
  CHECK(!check_proof(p3, evaluation_oracle(8)).well_formed);
  CHECK(!check_proof(PropProof{}, evaluation_oracle(8)).well_formed);
}

TEST_CASE("a false premise is reported, the derivation stays valid") {
  Formula a = F(), b = T();
  PropProof p{{premise(a), premise(implies(a, b)), mp(b, 0, 1)}};
  ProofReport r = check_proof(p, evaluation_oracle(8));
  CHECK(r.well_formed);
  CHECK(r.premise_status == ProofReport::PremiseStatus::SomeFalse);
}

TEST_CASE("agreement with the closure reference on small proofs") {
  Rng rng(61);
  for (int round = 0; round < 200; ++round) {
    // build an honest proof: premises plus chained implications
    PropProof p;
    std::vector<Formula> pool;
    size_t len = 3 + rng.below(10);  // <= 12 lines
    Formula cur = gen::decidable_sentence(rng);
    p.lines.push_back(premise(cur));
    pool.push_back(cur);
    while (p.lines.size() + 2 <= len) {
      Formula next = gen::decidable_sentence(rng);
      p.lines.push_back(premise(implies(cur, next)));
      p.lines.push_back(mp(next, p.lines.size() - 2, p.lines.size() - 1));
      cur = next;
    }
    // sometimes corrupt one modus ponens line's sentence
    bool corrupted = rng.chance(1, 3);
    if (corrupted) {
      for (auto& line : p.lines) {
        if (line.kind == PropProof::Line::Kind::ModusPonens) {
          line.sentence = eq(num(uint64_t{90} + rng.below(10)), zero());
          break;
        }
      }
    }
    ProofReport r = check_proof(p, evaluation_oracle(8));
    CHECK(r.well_formed == closure_accepts(p));
  }
}

TEST_CASE("tautology checking by atom abstraction") {
  Formula a = parse_formula("E x0.x0=S(0)");
  CHECK(is_tautology(disj(a, neg(a))));
  CHECK(!is_tautology(a));
  CHECK(!is_tautology(implies(a, conj(a, T()))));
  CHECK(is_tautology(implies(conj(a, T()), a)));

  // the tag instance: all tags differ from num(c+1), so no tagged disjunct
  // can hold
  for (uint64_t c = 0; c <= 6; ++c) {
    SentenceSeq negs, tags;
    for (uint64_t i = 0; i <= c; ++i) {
      Formula t = eq(num(i), num(c + 1));
      negs.push_back(neg(t));
      tags.push_back(conj(t, T()));
    }
    CHECK(is_tautology(implies(bigwedge(negs), neg(bigvee(tags)))));
  }

  // atom limit
  Formula acc = eq(num(uint64_t{0}), zero());
  for (uint64_t i = 1; i <= 21; ++i) acc = disj(acc, eq(num(i), zero()));
  CHECK_THROWS_AS(is_tautology(acc), Error);
}

TEST_CASE("sequence transform: base and first step") {
  Formula phi0 = parse_formula("0=0"), phi1 = parse_formula("S(0)=S(0)");
  YabloSequence one = yablo_transform({phi0});
  CHECK(one.derived == SentenceSeq{phi0});
  YabloSequence two = yablo_transform({phi0, phi1});
  CHECK(two.derived[0] == phi0);
  CHECK(two.derived[1] == disj(neg(neg(phi1)), neg(phi0)));
  CHECK_THROWS_AS(yablo_transform({}), Error);
}

TEST_CASE("tree size doubles per step while the dag stays linear") {
  SentenceSeq chain(21, parse_formula("0=0"));
  YabloSequence ys = yablo_transform(chain);
  Nat prev = tree_node_count(ys.derived[0]);
  for (size_t c = 1; c <= 20; ++c) {
    Nat cur = tree_node_count(ys.derived[c]);
    CHECK(cur >= (Nat{1} << (c - 1)));  // >= 2^(c-1)
    prev = cur;
  }
  std::vector<Formula> roots = ys.derived;
  CHECK(dag_node_count(roots) < 300);
}

TEST_CASE("the claim replay accepts hypothesis-satisfying chains") {
  SentenceSeq constant(50, parse_formula("0=0"));
  YabloReport r = check_yablo_claim(yablo_transform(constant), 16);
  CHECK(r.ok());

  // a decidable true chain of bounded comparisons: num(j) <= num(c)
  const uint64_t c = 24;
  SentenceSeq comparisons;
  for (uint64_t j = 0; j <= c; ++j)
    comparisons.push_back(bounded_le(num(j), num(c), 0));
  CHECK(check_yablo_claim(yablo_transform(comparisons), 16).ok());

  Rng rng(62);
  for (int i = 0; i < 50; ++i) {
    SentenceSeq chain = gen::true_chain(rng, 40);
    CHECK(check_yablo_claim(yablo_transform(chain), 64).ok());
  }
}

TEST_CASE("hypothesis violations are reported, not skipped") {
  SentenceSeq bad{F(), T()};
  YabloReport r = check_yablo_claim(yablo_transform(bad), 16);
  CHECK(!r.hypotheses_ok);
  CHECK(r.hypothesis_failure == 0);

  // true then false breaks propagation
  SentenceSeq broken{T(), F()};
  YabloReport r2 = check_yablo_claim(yablo_transform(broken), 16);
  CHECK(!r2.hypotheses_ok);
  CHECK(r2.hypothesis_failure == 1);
}

TEST_CASE("a transform that breaks the append law fails the structural "
          "audit") {
  SentenceSeq chain(6, parse_formula("0=0"));
  YabloSequence mutated;
  mutated.source = chain;
  mutated.derived.push_back(chain[0]);
  SentenceSeq negs;
  for (size_t j = 1; j < chain.size(); ++j) {
    negs.push_back(neg(mutated.derived[j - 1]));
    // balanced grouping instead of the left-grouped disjunction
    mutated.derived.push_back(disj(neg(neg(chain[j])), balanced(negs)));
  }
  YabloReport r = check_yablo_claim(mutated, 16);
  CHECK(!r.structure_ok);
  REQUIRE(r.structure_failure.has_value());
  CHECK(*r.structure_failure == 3);  // first index where grouping differs
}

TEST_CASE("proofs parse from JSON line lists") {
  auto j = truthlab::Json::parse(R"json({
    "lines": [
      {"sentence": "0=0", "kind": "premise"},
      {"sentence": "(!0=0|S(0)=S(0))", "kind": "premise"},
      {"sentence": "S(0)=S(0)", "kind": "mp", "antecedent": 0,
       "implication": 1}
    ]
  })json");
  PropProof p = truthlab::proof_from_json(j);
  REQUIRE(p.lines.size() == 3);
  CHECK(p.lines[2].kind == PropProof::Line::Kind::ModusPonens);
  ProofReport r = check_proof(p, evaluation_oracle(8));
  CHECK(r.well_formed);
  CHECK(r.premise_status == ProofReport::PremiseStatus::AllTrue);
  CHECK(to_string(*r.conclusion) == "S(0)=S(0)");

  auto bad = truthlab::Json::parse(
      R"json({"lines": [{"sentence": "0=0", "kind": "axiom"}]})json");
  CHECK_THROWS_AS(truthlab::proof_from_json(bad), Error);
}

TEST_CASE("prefix chain replay") {
  auto oracle = evaluation_oracle(16);
  PrefixChainReport confirmed =
      replay_prefix_chain({F(), T(), F()}, oracle);
  CHECK(confirmed.outcome == PrefixChainReport::Outcome::Confirmed);
  CHECK(confirmed.first_true == 1);

  PrefixChainReport empty = replay_prefix_chain({F(), F()}, oracle);
  CHECK(empty.outcome == PrefixChainReport::Outcome::HypothesisEmpty);

  PrefixChainReport undet =
      replay_prefix_chain({parse_formula("E x0.(x0+x0)=S(0)")}, oracle);
  CHECK(undet.outcome == PrefixChainReport::Outcome::OracleUndetermined);

  // an oracle that is not compositional for | is caught
  TruthOracle broken = [&](Formula f) -> std::optional<bool> {
    if (formula_kind(f) == FormulaKind::Or) return false;
    return evaluate(f, {16}).is_true();
  };
  PrefixChainReport bad = replay_prefix_chain({T(), T()}, broken);
  CHECK(bad.outcome == PrefixChainReport::Outcome::NonCompositional);
}
