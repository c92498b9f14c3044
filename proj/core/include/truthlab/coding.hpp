#pragma once

#include <variant>

#include "truthlab/nat.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Syntax codes: recursive tagged Cantor pairing. Tags 0..5 are the formula
// constructors, 6..10 the term constructors; variables carry their index as
// payload. Total and injective; term and formula codes are disjoint.
using GodelCode = Nat;

GodelCode encode(Term t);
GodelCode encode(Formula f);

using Syntax = std::variant<Term, Formula>;

// Inverse of encode on its range; throws Error for numbers outside it.
Syntax decode(const GodelCode& c);

// The numeral S(S(...S(0)...)) with n successors.
Term num(const Nat& n);
Term num(uint64_t n);

}  // namespace truthlab
