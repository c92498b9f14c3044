#include "truthlab/disjunctions.hpp"

#include <algorithm>

#include "truthlab/coding.hpp"
#include "truthlab/error.hpp"
#include "truthlab/semantics.hpp"

namespace truthlab {
namespace {

void require_sentences(const SentenceSeq& phis, const char* who) {
  for (Formula f : phis) {
    if (!is_sentence(f))
      throw Error(std::string(who) + ": not a sentence: " + to_string(f));
  }
}

}  // namespace

Formula bigvee(const SentenceSeq& phis) {
  if (phis.empty()) throw Error("bigvee: empty sequence");
  require_sentences(phis, "bigvee");
  Formula acc = phis[0];
  for (size_t i = 1; i < phis.size(); ++i) acc = disj(acc, phis[i]);
  return acc;
}

Formula bigwedge(const SentenceSeq& phis) {
  if (phis.empty()) throw Error("bigwedge: empty sequence");
  require_sentences(phis, "bigwedge");
  Formula acc = phis[0];
  for (size_t i = 1; i < phis.size(); ++i) acc = conj(acc, phis[i]);
  return acc;
}

Formula balanced(const SentenceSeq& phis) {
  require_sentences(phis, "balanced");
  if (phis.empty()) return neg(eq(zero(), zero()));
  if (phis.size() == 1) return phis[0];
  size_t half = phis.size() / 2;
  SentenceSeq left(phis.begin(), phis.begin() + half);
  SentenceSeq right(phis.begin() + half, phis.end());
  return disj(balanced(left), balanced(right));
}

std::pair<SentenceSeq, SentenceSeq> balanced_split(const SentenceSeq& phis) {
  if (phis.size() < 2) throw Error("balanced_split: need at least 2 sentences");
  size_t half = phis.size() / 2;
  return {SentenceSeq(phis.begin(), phis.begin() + half),
          SentenceSeq(phis.begin() + half, phis.end())};
}

Formula quantified_outer(const SentenceSeq& phis) {
  if (phis.empty()) throw Error("quantified_outer: empty sequence");
  require_sentences(phis, "quantified_outer");
  const VarIndex x = 0, z = 1;  // inputs are sentences, both are fresh
  uint64_t c = phis.size() - 1;
  SentenceSeq tagged;
  tagged.reserve(phis.size());
  for (size_t i = 0; i < phis.size(); ++i)
    tagged.push_back(conj(eq(num(static_cast<uint64_t>(i)), var(x)), phis[i]));
  Formula spine = tagged[0];
  for (size_t i = 1; i < tagged.size(); ++i) spine = disj(spine, tagged[i]);
  return exists(x, conj(bounded_le(var(x), num(c), z), spine));
}

Formula negated_conjunction_outer(const SentenceSeq& phis) {
  if (phis.empty()) throw Error("negated_conjunction_outer: empty sequence");
  require_sentences(phis, "negated_conjunction_outer");
  SentenceSeq negs;
  negs.reserve(phis.size());
  for (Formula f : phis) negs.push_back(neg(f));
  return neg(bigwedge(negs));
}

Formula min_code_choice(const std::vector<Formula>& set) {
  if (set.empty()) throw Error("min_code_choice: empty set");
  Formula best = set[0];
  Nat best_code = encode(best);
  for (size_t i = 1; i < set.size(); ++i) {
    Nat c = encode(set[i]);
    if (c < best_code) {
      best = set[i];
      best_code = std::move(c);
    }
  }
  return best;
}

Formula selective_outer(const std::vector<Formula>& sentences,
                        const ChoiceFunction& choice) {
  require_sentences(sentences, "selective_outer");
  // set semantics: order and duplicates in the input do not matter
  std::vector<Formula> set = sentences;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) return neg(eq(zero(), zero()));
  Formula chosen = choice(set);
  auto it = std::find(set.begin(), set.end(), chosen);
  if (it == set.end())
    throw Error("selective_outer: choice picked a sentence outside the set");
  set.erase(it);
  return disj(chosen, selective_outer(set, choice));
}

DisjunctionBuilder make_builder(BuilderKind kind) {
  switch (kind) {
    case BuilderKind::LeftGrouped:
      return {kind, "left", [](const SentenceSeq& s) { return bigvee(s); }};
    case BuilderKind::Balanced:
      return {kind, "balanced",
              [](const SentenceSeq& s) { return balanced(s); }};
    case BuilderKind::QuantifiedOuter:
      return {kind, "outer",
              [](const SentenceSeq& s) { return quantified_outer(s); }};
    case BuilderKind::NegatedConjunction:
      return {kind, "negconj",
              [](const SentenceSeq& s) { return negated_conjunction_outer(s); }};
    case BuilderKind::Selective:
      return {kind, "selective", [](const SentenceSeq& s) {
                return selective_outer(s, min_code_choice);
              }};
  }
  throw Error("make_builder: unknown kind");
}

const std::vector<DisjunctionBuilder>& non_selective_builders() {
  static const std::vector<DisjunctionBuilder> all = {
      make_builder(BuilderKind::LeftGrouped),
      make_builder(BuilderKind::Balanced),
      make_builder(BuilderKind::QuantifiedOuter),
      make_builder(BuilderKind::NegatedConjunction),
  };
  return all;
}

}  // namespace truthlab
