#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "truthlab/principles.hpp"

namespace truthlab {

// Finite universe [0, size) with a designated boundary: elements below the
// cut play the part of the standard numbers. The sequences are processed in
// order by the approximation constructions below.
struct CutModel {
  uint64_t size = 0;
  uint64_t cut = 0;
  std::vector<std::vector<uint64_t>> sequences;
  // construction B only: a sequence counts as value-infinite when it has at
  // least this many distinct values; 0 means cut/10
  uint64_t long_threshold = 0;
};

struct CutStep {
  enum class Action { Kept, Extended, Skipped };
  Action action = Action::Kept;
  size_t seq_index = 0;
  std::optional<uint64_t> added_to_a, added_to_b;
  std::optional<size_t> position;  // where the case analysis fired
  std::string detail;
  std::vector<uint64_t> a_after, b_after;  // sorted snapshots
};

struct ApproxTrace {
  std::vector<CutStep> steps;
  std::set<uint64_t> final_t;
  std::set<uint64_t> final_b;
};

// Approximation from below: A starts empty and stays inside the cut; a
// sequence with a value outside A sends that value to B and a fresh
// below-cut element to A. Throws when the cut runs out of fresh elements.
ApproxTrace construct_a(const CutModel& m);

// Approximation from above: A starts as the whole cut. Sequences with
// enough distinct values get one (in-A, in-B) adjacent pair apiece; the
// bounded position search can fail, which is recorded as a skip.
ApproxTrace construct_b(const CutModel& m);

enum class CutConstruction { A, B };

// Bookkeeping audit: trace invariants (stepwise disjointness and growth),
// plus per construction:
//   A - T inside the cut, one T element per extension step, the order
//       induction checker passes on every sequence;
//   B - the plain induction checker passes, every extended sequence shows
//       an adjacent pair with the first element in T and the second not.
PrincipleReport audit_construction(const ApproxTrace& trace, const CutModel& m,
                                   CutConstruction which);

}  // namespace truthlab
