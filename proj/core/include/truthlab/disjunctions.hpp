#pragma once

#include <functional>
#include <string>
#include <vector>

#include "truthlab/syntax.hpp"

namespace truthlab {

// 0-indexed sequence of sentences
using SentenceSeq = std::vector<Formula>;

// (((phi0 | phi1) | ...) | phi_c, parentheses grouped to the left.
// Satisfies bigvee(phis + [psi]) == disj(bigvee(phis), psi). Rejects the
// empty sequence; no base case is defined for left-grouped disjunctions.
Formula bigvee(const SentenceSeq& phis);
// same grouping with &
Formula bigwedge(const SentenceSeq& phis);

// Balanced grouping: B() = !(0=0), B(a) = a,
// B(phis) = B(first half) | B(rest), first half of size floor(c/2).
Formula balanced(const SentenceSeq& phis);
// the two halves joined by the top | of balanced(); length >= 2
std::pair<SentenceSeq, SentenceSeq> balanced_split(const SentenceSeq& phis);

// E x.((x <= num(c)) & ((num(0)=x & phi0) | ... | (num(c)=x & phi_c)))
// with x, z fresh and <= in its E z.((z+x)=num(c)) rendering.
Formula quantified_outer(const SentenceSeq& phis);

// !(!phi0 & ... & !phi_c), the conjunction grouped to the left
Formula negated_conjunction_outer(const SentenceSeq& phis);

// Set-shaped disjunction driven by a choice function:
// D({}) = !(0=0), D(S) = choice(S) | D(S minus choice(S)).
// Throws when choice picks an element outside the set.
using ChoiceFunction = std::function<Formula(const std::vector<Formula>&)>;
Formula selective_outer(const std::vector<Formula>& sentences,
                        const ChoiceFunction& choice);

// default choice: the element with the least syntax code
Formula min_code_choice(const std::vector<Formula>& set);

enum class BuilderKind {
  LeftGrouped,
  Balanced,
  QuantifiedOuter,
  NegatedConjunction,
  Selective
};

struct DisjunctionBuilder {
  BuilderKind kind;
  std::string name;
  std::function<Formula(const SentenceSeq&)> apply;
};

// Selective uses the min-code choice function.
DisjunctionBuilder make_builder(BuilderKind kind);
// LeftGrouped, Balanced, QuantifiedOuter, NegatedConjunction
const std::vector<DisjunctionBuilder>& non_selective_builders();

}  // namespace truthlab
