#include "truthlab/semantics.hpp"

#include <optional>

#include "truthlab/error.hpp"

namespace truthlab {

namespace {

Nat term_value(Term t, const Assignment& alpha) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      return Nat{};
    case TermKind::Succ:
      return term_value(succ_arg(t), alpha) + Nat{1};
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      return term_value(a, alpha) + term_value(b, alpha);
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      return term_value(a, alpha) * term_value(b, alpha);
    }
    case TermKind::Var: {
      auto it = alpha.find(var_index(t));
      if (it == alpha.end())
        throw Error("term_eval: unbound variable x" +
                    std::to_string(var_index(t)));
      return it->second;
    }
  }
  return Nat{};
}

}  // namespace

Nat val(Term t) {
  if (!is_closed(t))
    throw Error("val: open term " + to_string(t));
  static const Assignment empty;
  return term_value(t, empty);
}

Nat term_eval(Term t, const Assignment& alpha) {
  return term_value(t, alpha);
}

std::vector<Nat> val_seq(const std::vector<Term>& ts) {
  std::vector<Nat> out;
  out.reserve(ts.size());
  for (Term t : ts) out.push_back(val(t));
  return out;
}

Formula bounded_le(Term lhs, Term bound, VarIndex z) {
  return exists(z, eq(add(var(z), lhs), bound));
}

namespace {

Verdict make(Verdict::Kind k) { return Verdict{k, {}}; }

// matches E z.((z+v)=t) with t closed, z != v; returns val(t) on success
std::optional<Nat> match_bound_conjunct(Formula g, VarIndex v) {
  if (formula_kind(g) != FormulaKind::Exists) return std::nullopt;
  VarIndex z = quant_var(g);
  if (z == v) return std::nullopt;
  Formula body = quant_body(g);
  if (formula_kind(body) != FormulaKind::Eq) return std::nullopt;
  auto [lhs, rhs] = eq_args(body);
  if (term_kind(lhs) != TermKind::Add) return std::nullopt;
  auto [zl, vl] = add_args(lhs);
  if (term_kind(zl) != TermKind::Var || var_index(zl) != z) return std::nullopt;
  if (term_kind(vl) != TermKind::Var || var_index(vl) != v) return std::nullopt;
  if (!is_closed(rhs)) return std::nullopt;
  return val(rhs);
}

constexpr uint64_t kBoundedSearchCap = 1u << 20;

}  // namespace

namespace {

// E z.((z+u)=t) or E z.((u+z)=t) with z in neither u nor t: a witness
// exists over the naturals exactly when u <= t, so this atom is decidable
// outright. The bounded-comparison rendering of <= is this shape.
struct SolvableBound {
  Term offset;  // u
  Term target;  // t
};

std::optional<SolvableBound> match_solvable_eq(Formula body, VarIndex z) {
  if (formula_kind(body) != FormulaKind::Eq) return std::nullopt;
  auto [lhs, rhs] = eq_args(body);
  const auto& rhs_fv = free_vars(rhs);
  if (std::binary_search(rhs_fv.begin(), rhs_fv.end(), z)) return std::nullopt;
  if (term_kind(lhs) != TermKind::Add) return std::nullopt;
  auto [p, q] = add_args(lhs);
  auto is_z = [&](Term t) {
    return term_kind(t) == TermKind::Var && var_index(t) == z;
  };
  auto free_of_z = [&](Term t) {
    const auto& fv = free_vars(t);
    return !std::binary_search(fv.begin(), fv.end(), z);
  };
  if (is_z(p) && free_of_z(q)) return SolvableBound{q, rhs};
  if (is_z(q) && free_of_z(p)) return SolvableBound{p, rhs};
  return std::nullopt;
}

}  // namespace

Verdict Evaluator::eval_exists(Formula f, Assignment& env) {
  VarIndex v = quant_var(f);
  Formula body = quant_body(f);
  const auto& fv = free_vars(body);
  if (!std::binary_search(fv.begin(), fv.end(), v)) return eval(body, env);

  if (auto solvable = match_solvable_eq(body, v)) {
    Nat offset = term_value(solvable->offset, env);
    Nat target = term_value(solvable->target, env);
    if (offset > target) return make(Verdict::Kind::False);
    Verdict out{Verdict::Kind::True, {}};
    out.certificate.emplace_back(v, target - offset);
    return out;
  }

  // complete search range when the body carries its own bound
  std::optional<uint64_t> exact_limit;
  if (formula_kind(body) == FormulaKind::And) {
    auto [bound, rest] = and_args(body);
    if (auto lim = match_bound_conjunct(bound, v)) {
      if (auto u = lim->to_u64(); u && *u < kBoundedSearchCap)
        exact_limit = *u;
    }
  }

  uint64_t limit = exact_limit ? *exact_limit : budget_;
  auto prev = env.find(v) != env.end() ? std::optional<Nat>(env[v])
                                       : std::nullopt;
  bool saw_unknown = false;
  Verdict result = make(Verdict::Kind::Unknown);
  for (uint64_t x = 0; x <= limit; ++x) {
    env[v] = Nat{x};
    Verdict r = eval(body, env);
    if (r.is_true()) {
      result = Verdict{Verdict::Kind::True, {}};
      result.certificate.emplace_back(v, Nat{x});
      result.certificate.insert(result.certificate.end(),
                                r.certificate.begin(), r.certificate.end());
      break;
    }
    if (r.is_unknown()) saw_unknown = true;
  }
  if (prev)
    env[v] = *prev;
  else
    env.erase(v);
  if (result.is_true()) return result;
  if (exact_limit && !saw_unknown) return make(Verdict::Kind::False);
  return make(Verdict::Kind::Unknown);
}

Verdict Evaluator::eval_forall(Formula f, Assignment& env) {
  VarIndex v = quant_var(f);
  Formula body = quant_body(f);
  const auto& fv = free_vars(body);
  if (!std::binary_search(fv.begin(), fv.end(), v)) return eval(body, env);

  auto prev = env.find(v) != env.end() ? std::optional<Nat>(env[v])
                                       : std::nullopt;
  Verdict result = make(Verdict::Kind::Unknown);
  for (uint64_t x = 0; x <= budget_; ++x) {
    env[v] = Nat{x};
    Verdict r = eval(body, env);
    if (r.is_false()) {
      result = Verdict{Verdict::Kind::False, {}};
      result.certificate.emplace_back(v, Nat{x});
      result.certificate.insert(result.certificate.end(),
                                r.certificate.begin(), r.certificate.end());
      break;
    }
  }
  if (prev)
    env[v] = *prev;
  else
    env.erase(v);
  return result;
}

Verdict Evaluator::eval(Formula f, Assignment& env) {
  bool closed = is_sentence(f);
  if (closed) {
    auto it = closed_cache_.find(f.id);
    if (it != closed_cache_.end()) return it->second;
  }
  Verdict out;
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      out = make(term_value(a, env) == term_value(b, env)
                     ? Verdict::Kind::True
                     : Verdict::Kind::False);
      break;
    }
    case FormulaKind::Not: {
      Verdict r = eval(not_arg(f), env);
      out = r;
      if (r.is_true()) out.kind = Verdict::Kind::False;
      else if (r.is_false()) out.kind = Verdict::Kind::True;
      break;
    }
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      Verdict ra = eval(a, env);
      if (ra.is_true()) {
        out = ra;
        break;
      }
      Verdict rb = eval(b, env);
      if (rb.is_true()) out = rb;
      else if (ra.is_false() && rb.is_false()) out = make(Verdict::Kind::False);
      else out = make(Verdict::Kind::Unknown);
      break;
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      Verdict ra = eval(a, env);
      if (ra.is_false()) {
        out = ra;
        break;
      }
      Verdict rb = eval(b, env);
      if (rb.is_false()) out = rb;
      else if (ra.is_true() && rb.is_true()) out = make(Verdict::Kind::True);
      else out = make(Verdict::Kind::Unknown);
      break;
    }
    case FormulaKind::Exists:
      out = eval_exists(f, env);
      break;
    case FormulaKind::Forall:
      out = eval_forall(f, env);
      break;
  }
  if (closed) closed_cache_.emplace(f.id, out);
  return out;
}

Verdict Evaluator::operator()(Formula sentence) {
  if (!is_sentence(sentence))
    throw Error("evaluate: not a sentence: " + to_string(sentence));
  Assignment env;
  return eval(sentence, env);
}

Verdict evaluate(Formula sentence, const EvalOptions& opts) {
  Evaluator ev(opts.budget);
  return ev(sentence);
}

}  // namespace truthlab
