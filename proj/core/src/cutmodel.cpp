#include "truthlab/cutmodel.hpp"

#include <algorithm>

#include "truthlab/error.hpp"

namespace truthlab {
namespace {

std::vector<uint64_t> snapshot(const std::set<uint64_t>& s) {
  return {s.begin(), s.end()};
}

void validate_model(const CutModel& m) {
  if (m.cut == 0 || m.cut >= m.size)
    throw Error("cut model: need 0 < cut < size");
  for (const auto& s : m.sequences)
    for (uint64_t v : s)
      if (v >= m.size) throw Error("cut model: sequence entry outside the "
                                   "universe");
}

}  // namespace

ApproxTrace construct_a(const CutModel& m) {
  validate_model(m);
  ApproxTrace trace;
  std::set<uint64_t> a, b;
  for (size_t i = 0; i < m.sequences.size(); ++i) {
    const auto& s = m.sequences[i];
    CutStep step;
    step.seq_index = i;
    size_t j = 0;
    while (j < s.size() && a.count(s[j])) ++j;
    if (j == s.size()) {
      step.action = CutStep::Action::Kept;
      step.detail = "all values already approximated";
    } else {
      uint64_t bad = s[j];
      uint64_t fresh = 0;
      while (fresh < m.cut && (a.count(fresh) || b.count(fresh) ||
                               fresh == bad))
        ++fresh;
      if (fresh == m.cut)
        throw Error("construction A: fresh elements exhausted at step " +
                    std::to_string(i));
      a.insert(fresh);
      b.insert(bad);
      step.action = CutStep::Action::Extended;
      step.position = j;
      step.added_to_a = fresh;
      step.added_to_b = bad;
    }
    step.a_after = snapshot(a);
    step.b_after = snapshot(b);
    trace.steps.push_back(std::move(step));
  }
  trace.final_t = a;
  trace.final_b = b;
  return trace;
}

ApproxTrace construct_b(const CutModel& m) {
  validate_model(m);
  uint64_t threshold = m.long_threshold ? m.long_threshold
                                        : std::max<uint64_t>(1, m.cut / 10);
  ApproxTrace trace;
  std::set<uint64_t> a, b;
  for (uint64_t x = 0; x < m.cut; ++x) a.insert(x);

  for (size_t i = 0; i < m.sequences.size(); ++i) {
    const auto& s = m.sequences[i];
    CutStep step;
    step.seq_index = i;
    std::set<uint64_t> values(s.begin(), s.end());
    if (values.size() < threshold) {
      step.action = CutStep::Action::Kept;
      step.detail = "value-finite below the threshold";
    } else {
      // positions whose value already fell into B
      std::vector<size_t> hits;
      for (size_t j = 0; j < s.size(); ++j)
        if (b.count(s[j])) hits.push_back(j);
      bool initial_segment = true;
      for (size_t k = 0; k < hits.size(); ++k)
        if (hits[k] != k) initial_segment = false;

      std::optional<uint64_t> add_a, add_b;
      if (initial_segment) {
        size_t j0 = hits.empty() ? 0 : hits.back();
        // the order-preserving pick: the next value outside A whose
        // predecessor is distinct and safe to send to A
        for (size_t j = j0 + 1; j < s.size(); ++j) {
          if (!a.count(s[j]) && !b.count(s[j - 1]) && s[j - 1] != s[j]) {
            add_a = s[j - 1];
            add_b = s[j];
            step.position = j - 1;
            break;
          }
        }
        if (!add_a) {
          step.action = CutStep::Action::Skipped;
          step.detail = "no admissible position beyond " + std::to_string(j0) +
                        " (bounded search in place of overspill)";
        }
      } else {
        for (size_t j = 0; j + 1 < s.size(); ++j) {
          if (!b.count(s[j]) && b.count(s[j + 1])) {
            add_a = s[j];
            add_b = s[j + 1];
            step.position = j;
            break;
          }
        }
        if (!add_a) {
          step.action = CutStep::Action::Skipped;
          step.detail = "no boundary position found";
        }
      }

      if (add_a) {
        a.insert(*add_a);
        b.insert(*add_b);
        step.action = CutStep::Action::Extended;
        step.added_to_a = add_a;
        step.added_to_b = add_b;
        std::vector<uint64_t> overlap;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty())
          throw Error("construction B: disjointness violated at step " +
                      std::to_string(i) + " (construction order bug)");
      }
    }
    step.a_after = snapshot(a);
    step.b_after = snapshot(b);
    trace.steps.push_back(std::move(step));
  }
  trace.final_t = a;
  trace.final_b = b;
  return trace;
}

PrincipleReport audit_construction(const ApproxTrace& trace, const CutModel& m,
                                   CutConstruction which) {
  PrincipleReport report;
  report.principle = which == CutConstruction::A ? "cut-construction-a"
                                                 : "cut-construction-b";
  auto violate = [&](std::string instance, std::string why) {
    report.violations.push_back({std::move(instance), std::move(why)});
  };

  // trace invariants
  std::vector<uint64_t> prev_a, prev_b;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const CutStep& st = trace.steps[i];
    ++report.instances_checked;
    std::vector<uint64_t> overlap;
    std::set_intersection(st.a_after.begin(), st.a_after.end(),
                          st.b_after.begin(), st.b_after.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
      violate("step " + std::to_string(i), "A and B intersect");
    if (!std::includes(st.a_after.begin(), st.a_after.end(), prev_a.begin(),
                       prev_a.end()) ||
        !std::includes(st.b_after.begin(), st.b_after.end(), prev_b.begin(),
                       prev_b.end()))
      violate("step " + std::to_string(i), "approximations shrank");
    prev_a = st.a_after;
    prev_b = st.b_after;
  }
  if (!trace.steps.empty()) {
    std::vector<uint64_t> last = snapshot(trace.final_t);
    if (last != trace.steps.back().a_after)
      violate("final", "T differs from the union of the approximations");
  }

  std::vector<std::vector<uint64_t>> seqs = m.sequences;
  if (which == CutConstruction::A) {
    for (uint64_t v : trace.final_t) {
      if (v >= m.cut) {
        violate("final", "T reaches beyond the cut: " + std::to_string(v));
        break;
      }
    }
    size_t extended = 0;
    for (const CutStep& st : trace.steps)
      if (st.action == CutStep::Action::Extended) ++extended;
    if (trace.final_t.size() != extended)
      violate("final", "|T| (" + std::to_string(trace.final_t.size()) +
                           ") differs from the extension count (" +
                           std::to_string(extended) + ")");
    PrincipleReport order = check_seqoind(trace.final_t, seqs);
    report.instances_checked += order.instances_checked;
    for (auto& v : order.violations)
      violate("order induction: " + v.instance, v.explanation);
  } else {
    PrincipleReport ind = check_seqind(trace.final_t, seqs);
    report.instances_checked += ind.instances_checked;
    for (auto& v : ind.violations)
      violate("induction: " + v.instance, v.explanation);
    for (const CutStep& st : trace.steps) {
      if (st.action == CutStep::Action::Skipped)
        report.notes.push_back("step " + std::to_string(st.seq_index) +
                               " skipped: " + st.detail);
      if (st.action != CutStep::Action::Extended) continue;
      ++report.instances_checked;
      const auto& s = m.sequences[st.seq_index];
      bool found = false;
      for (size_t j = 0; j + 1 < s.size(); ++j) {
        if (trace.final_t.count(s[j]) && !trace.final_t.count(s[j + 1])) {
          found = true;
          break;
        }
      }
      if (!found)
        violate("sequence " + std::to_string(st.seq_index),
                "no adjacent pair crossing the T boundary");
    }
  }
  return report;
}

}  // namespace truthlab
