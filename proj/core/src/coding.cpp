#include "truthlab/coding.hpp"

#include <map>

#include "truthlab/error.hpp"

namespace truthlab {
namespace {

constexpr uint64_t kTagEq = 0, kTagNot = 1, kTagOr = 2, kTagAnd = 3,
                   kTagExists = 4, kTagForall = 5, kTagZero = 6, kTagSucc = 7,
                   kTagAdd = 8, kTagMul = 9, kTagVar = 10;

struct Coder {
  std::map<NodeId, Nat> term_memo;
  std::map<NodeId, Nat> formula_memo;

  Nat term(Term t) {
    auto it = term_memo.find(t.id);
    if (it != term_memo.end()) return it->second;
    Nat code;
    switch (term_kind(t)) {
      case TermKind::Zero:
        code = cantor_pair(kTagZero, Nat{});
        break;
      case TermKind::Succ:
        code = cantor_pair(kTagSucc, term(succ_arg(t)));
        break;
      case TermKind::Add: {
        auto [a, b] = add_args(t);
        code = cantor_pair(kTagAdd, cantor_pair(term(a), term(b)));
        break;
      }
      case TermKind::Mul: {
        auto [a, b] = mul_args(t);
        code = cantor_pair(kTagMul, cantor_pair(term(a), term(b)));
        break;
      }
      case TermKind::Var:
        code = cantor_pair(kTagVar, Nat{var_index(t)});
        break;
    }
    term_memo.emplace(t.id, code);
    return code;
  }

  Nat formula(Formula f) {
    auto it = formula_memo.find(f.id);
    if (it != formula_memo.end()) return it->second;
    Nat code;
    switch (formula_kind(f)) {
      case FormulaKind::Eq: {
        auto [a, b] = eq_args(f);
        code = cantor_pair(kTagEq, cantor_pair(term(a), term(b)));
        break;
      }
      case FormulaKind::Not:
        code = cantor_pair(kTagNot, formula(not_arg(f)));
        break;
      case FormulaKind::Or: {
        auto [a, b] = or_args(f);
        code = cantor_pair(kTagOr, cantor_pair(formula(a), formula(b)));
        break;
      }
      case FormulaKind::And: {
        auto [a, b] = and_args(f);
        code = cantor_pair(kTagAnd, cantor_pair(formula(a), formula(b)));
        break;
      }
      case FormulaKind::Exists:
        code = cantor_pair(
            kTagExists,
            cantor_pair(Nat{quant_var(f)}, formula(quant_body(f))));
        break;
      case FormulaKind::Forall:
        code = cantor_pair(
            kTagForall,
            cantor_pair(Nat{quant_var(f)}, formula(quant_body(f))));
        break;
    }
    formula_memo.emplace(f.id, code);
    return code;
  }
};

Term decode_term(const Nat& c);
Formula decode_formula(const Nat& c);

VarIndex decode_var_index(const Nat& payload) {
  auto v = payload.to_u64();
  if (!v || *v > 0xffffffffull)
    throw Error("not a syntax code: variable index out of range");
  return static_cast<VarIndex>(*v);
}

Term decode_term(const Nat& c) {
  auto [tag, payload] = cantor_unpair(c);
  auto t = tag.to_u64();
  if (!t || *t < kTagZero || *t > kTagVar)
    throw Error("not a syntax code: expected a term tag, got " +
                tag.to_decimal());
  switch (*t) {
    case kTagZero:
      if (!payload.is_zero())
        throw Error("not a syntax code: nonzero payload under zero tag");
      return zero();
    case kTagSucc:
      return succ(decode_term(payload));
    case kTagAdd: {
      auto [a, b] = cantor_unpair(payload);
      return add(decode_term(a), decode_term(b));
    }
    case kTagMul: {
      auto [a, b] = cantor_unpair(payload);
      return mul(decode_term(a), decode_term(b));
    }
    default:
      return var(decode_var_index(payload));
  }
}

Formula decode_formula(const Nat& c) {
  auto [tag, payload] = cantor_unpair(c);
  auto t = tag.to_u64();
  if (!t || *t > kTagForall)
    throw Error("not a syntax code: expected a formula tag, got " +
                tag.to_decimal());
  switch (*t) {
    case kTagEq: {
      auto [a, b] = cantor_unpair(payload);
      return eq(decode_term(a), decode_term(b));
    }
    case kTagNot:
      return neg(decode_formula(payload));
    case kTagOr: {
      auto [a, b] = cantor_unpair(payload);
      return disj(decode_formula(a), decode_formula(b));
    }
    case kTagAnd: {
      auto [a, b] = cantor_unpair(payload);
      return conj(decode_formula(a), decode_formula(b));
    }
    default: {
      auto [v, body] = cantor_unpair(payload);
      VarIndex idx = decode_var_index(v);
      return *t == kTagExists ? exists(idx, decode_formula(body))
                              : forall(idx, decode_formula(body));
    }
  }
}

}  // namespace

GodelCode encode(Term t) {
  Coder c;
  return c.term(t);
}

GodelCode encode(Formula f) {
  Coder c;
  return c.formula(f);
}

Syntax decode(const GodelCode& c) {
  auto [tag, payload] = cantor_unpair(c);
  auto t = tag.to_u64();
  if (!t || *t > kTagVar)
    throw Error("not a syntax code: unknown tag " + tag.to_decimal());
  if (*t >= kTagZero) return decode_term(c);
  return decode_formula(c);
}

Term num(const Nat& n) {
  Term t = zero();
  for (Nat i; i < n; i += Nat{1}) t = succ(t);
  return t;
}

Term num(uint64_t n) {
  Term t = zero();
  for (uint64_t i = 0; i < n; ++i) t = succ(t);
  return t;
}

}  // namespace truthlab
