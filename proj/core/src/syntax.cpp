#include "truthlab/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace truthlab {
namespace {

enum class Tag : uint8_t {
  Zero, Succ, Add, Mul, Var,          // terms
  Eq, Not, Or, And, Exists, Forall    // formulas
};

struct Node {
  Tag tag;
  uint32_t a = 0;  // child / var index / quantifier variable
  uint32_t b = 0;  // second child / quantifier body
  std::vector<VarIndex> fv;
};

struct NodeKey {
  Tag tag;
  uint32_t a, b;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  size_t operator()(const NodeKey& k) const {
    uint64_t h = static_cast<uint64_t>(k.tag);
    h = h * 0x9e3779b97f4a7c15ull + k.a;
    h = (h ^ (h >> 29)) * 0xbf58476d1ce4e5b9ull + k.b;
    return static_cast<size_t>(h ^ (h >> 32));
  }
};

std::vector<VarIndex> merge_sorted(const std::vector<VarIndex>& x,
                                   const std::vector<VarIndex>& y) {
  std::vector<VarIndex> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                 std::back_inserter(out));
  return out;
}

// Process-wide interning table. Appends take the writer lock; reads of
// already published nodes take the shared lock. Node references stay valid
// for the process lifetime (deque storage).
class Interner {
 public:
  static Interner& instance() {
    static Interner in;
    return in;
  }

  NodeId intern(Tag tag, uint32_t a, uint32_t b) {
    NodeKey key{tag, a, b};
    {
      std::shared_lock rl(mu_);
      auto it = index_.find(key);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock wl(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Node n{tag, a, b, {}};
    switch (tag) {
      case Tag::Zero:
        break;
      case Tag::Var:
        n.fv = {a};
        break;
      case Tag::Succ:
      case Tag::Not:
        n.fv = nodes_[a].fv;
        break;
      case Tag::Add:
      case Tag::Mul:
      case Tag::Eq:
      case Tag::Or:
      case Tag::And:
        n.fv = merge_sorted(nodes_[a].fv, nodes_[b].fv);
        break;
      case Tag::Exists:
      case Tag::Forall: {
        n.fv = nodes_[b].fv;
        auto pos = std::lower_bound(n.fv.begin(), n.fv.end(), a);
        if (pos != n.fv.end() && *pos == a) n.fv.erase(pos);
        break;
      }
    }
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.emplace(key, id);
    return id;
  }

  const Node& node(NodeId id) const {
    std::shared_lock rl(mu_);
    return nodes_[id];
  }

 private:
  mutable std::shared_mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<NodeKey, NodeId, NodeKeyHash> index_;
};

const Node& node(NodeId id) { return Interner::instance().node(id); }
NodeId intern(Tag t, uint32_t a = 0, uint32_t b = 0) {
  return Interner::instance().intern(t, a, b);
}

[[maybe_unused]] bool is_term_tag(Tag t) { return t <= Tag::Var; }

}  // namespace

Term zero() { return {intern(Tag::Zero)}; }
Term succ(Term t) { return {intern(Tag::Succ, t.id)}; }
Term add(Term a, Term b) { return {intern(Tag::Add, a.id, b.id)}; }
Term mul(Term a, Term b) { return {intern(Tag::Mul, a.id, b.id)}; }
Term var(VarIndex v) { return {intern(Tag::Var, v)}; }

Formula eq(Term a, Term b) { return {intern(Tag::Eq, a.id, b.id)}; }
Formula neg(Formula f) { return {intern(Tag::Not, f.id)}; }
Formula disj(Formula a, Formula b) { return {intern(Tag::Or, a.id, b.id)}; }
Formula conj(Formula a, Formula b) { return {intern(Tag::And, a.id, b.id)}; }
Formula exists(VarIndex v, Formula body) {
  return {intern(Tag::Exists, v, body.id)};
}
Formula forall(VarIndex v, Formula body) {
  return {intern(Tag::Forall, v, body.id)};
}

TermKind term_kind(Term t) {
  Tag tag = node(t.id).tag;
  assert(is_term_tag(tag));
  return static_cast<TermKind>(tag);
}

FormulaKind formula_kind(Formula f) {
  Tag tag = node(f.id).tag;
  assert(!is_term_tag(tag));
  return static_cast<FormulaKind>(static_cast<uint8_t>(tag) -
                                  static_cast<uint8_t>(Tag::Eq));
}

Term succ_arg(Term t) {
  assert(term_kind(t) == TermKind::Succ);
  return {node(t.id).a};
}
std::pair<Term, Term> add_args(Term t) {
  assert(term_kind(t) == TermKind::Add);
  const Node& n = node(t.id);
  return {{n.a}, {n.b}};
}
std::pair<Term, Term> mul_args(Term t) {
  assert(term_kind(t) == TermKind::Mul);
  const Node& n = node(t.id);
  return {{n.a}, {n.b}};
}
VarIndex var_index(Term t) {
  assert(term_kind(t) == TermKind::Var);
  return node(t.id).a;
}
std::pair<Term, Term> eq_args(Formula f) {
  assert(formula_kind(f) == FormulaKind::Eq);
  const Node& n = node(f.id);
  return {{n.a}, {n.b}};
}
Formula not_arg(Formula f) {
  assert(formula_kind(f) == FormulaKind::Not);
  return {node(f.id).a};
}
std::pair<Formula, Formula> or_args(Formula f) {
  assert(formula_kind(f) == FormulaKind::Or);
  const Node& n = node(f.id);
  return {{n.a}, {n.b}};
}
std::pair<Formula, Formula> and_args(Formula f) {
  assert(formula_kind(f) == FormulaKind::And);
  const Node& n = node(f.id);
  return {{n.a}, {n.b}};
}
VarIndex quant_var(Formula f) {
  assert(formula_kind(f) == FormulaKind::Exists ||
         formula_kind(f) == FormulaKind::Forall);
  return node(f.id).a;
}
Formula quant_body(Formula f) {
  assert(formula_kind(f) == FormulaKind::Exists ||
         formula_kind(f) == FormulaKind::Forall);
  return {node(f.id).b};
}

const std::vector<VarIndex>& free_vars(Term t) { return node(t.id).fv; }
const std::vector<VarIndex>& free_vars(Formula f) { return node(f.id).fv; }
bool is_closed(Term t) { return free_vars(t).empty(); }
bool is_sentence(Formula f) { return free_vars(f).empty(); }

std::vector<Formula> direct_subformulas(Formula f) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq:
      return {};
    case FormulaKind::Not:
      return {not_arg(f)};
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return {a, b};
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return {a, b};
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return {quant_body(f)};
  }
  return {};
}

namespace {

Term substitute_term(Term t, const std::map<VarIndex, Term>& repl,
                     const std::set<VarIndex>& shadowed) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      return t;
    case TermKind::Var: {
      VarIndex v = var_index(t);
      if (shadowed.count(v)) return t;
      auto it = repl.find(v);
      return it == repl.end() ? t : it->second;
    }
    case TermKind::Succ:
      return succ(substitute_term(succ_arg(t), repl, shadowed));
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      return add(substitute_term(a, repl, shadowed),
                 substitute_term(b, repl, shadowed));
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      return mul(substitute_term(a, repl, shadowed),
                 substitute_term(b, repl, shadowed));
    }
  }
  return t;
}

Formula substitute_formula(Formula f, const std::map<VarIndex, Term>& repl,
                           std::set<VarIndex>& shadowed) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      return eq(substitute_term(a, repl, shadowed),
                substitute_term(b, repl, shadowed));
    }
    case FormulaKind::Not:
      return neg(substitute_formula(not_arg(f), repl, shadowed));
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      return disj(substitute_formula(a, repl, shadowed),
                  substitute_formula(b, repl, shadowed));
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      return conj(substitute_formula(a, repl, shadowed),
                  substitute_formula(b, repl, shadowed));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      VarIndex v = quant_var(f);
      bool fresh = shadowed.insert(v).second;
      Formula body = substitute_formula(quant_body(f), repl, shadowed);
      if (fresh) shadowed.erase(v);
      return formula_kind(f) == FormulaKind::Exists ? exists(v, body)
                                                    : forall(v, body);
    }
  }
  return f;
}

}  // namespace

Term substitute(Term t, const std::map<VarIndex, Term>& repl) {
  for (const auto& [v, r] : repl) {
    if (!is_closed(r))
      throw Error("substitute: replacement for x" + std::to_string(v) +
                  " is not a closed term");
  }
  return substitute_term(t, repl, {});
}

Formula substitute(Formula f, const std::map<VarIndex, Term>& repl) {
  for (const auto& [v, r] : repl) {
    if (!is_closed(r))
      throw Error("substitute: replacement for x" + std::to_string(v) +
                  " is not a closed term");
  }
  std::set<VarIndex> shadowed;
  return substitute_formula(f, repl, shadowed);
}

Formula instantiate(Formula f, const Assignment& alpha) {
  std::map<VarIndex, Term> repl;
  for (VarIndex v : free_vars(f)) {
    auto it = alpha.find(v);
    if (it == alpha.end())
      throw Error("instantiate: unbound variable x" + std::to_string(v));
    Nat n = it->second;
    Term t = zero();
    for (Nat i; i < n; i += Nat{1}) t = succ(t);
    repl.emplace(v, t);
  }
  std::set<VarIndex> shadowed;
  return substitute_formula(f, repl, shadowed);
}

// ---------------------------------------------------------------------------
// concrete syntax

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' ||
                              s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }

  VarIndex parse_var_index() {
    expect('x', "'x'");
    skip_ws();
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected variable index digits", pos);
    uint64_t v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 0xffffffffull) throw ParseError("variable index too large", pos);
      ++pos;
    }
    return static_cast<VarIndex>(v);
  }

  Term term() {
    char c = peek();
    switch (c) {
      case '0':
        ++pos;
        return zero();
      case 'S': {
        ++pos;
        expect('(', "'(' after S");
        Term t = term();
        expect(')', "')'");
        return succ(t);
      }
      case 'x':
        return var(parse_var_index());
      case '(': {
        ++pos;
        Term a = term();
        char op = peek();
        if (op != '+' && op != '*')
          throw ParseError("expected '+' or '*'", pos);
        ++pos;
        Term b = term();
        expect(')', "')'");
        return op == '+' ? add(a, b) : mul(a, b);
      }
      default:
        throw ParseError("expected a term", pos);
    }
  }

  struct Element {
    bool is_formula;
    Term t{};
    Formula f{};
  };

  // after '(' : a full term or formula, binary operators resolved at the
  // caller's paren level
  Element element() {
    char c = peek();
    if (c == '!' || c == 'E' || c == 'A')
      return {true, {}, formula()};
    if (c == '(') {
      ++pos;
      Element inner = element();
      if (!inner.is_formula) {
        char op = peek();
        if (op == '+' || op == '*') {
          ++pos;
          Term b = term();
          expect(')', "')'");
          return {false, op == '+' ? add(inner.t, b) : mul(inner.t, b), {}};
        }
        if (op == '=') {
          ++pos;
          Term b = term();
          inner = {true, {}, eq(inner.t, b)};
        } else {
          throw ParseError("expected '+', '*' or '=' after term", pos);
        }
      }
      char op = peek();
      if (op == '|' || op == '&') {
        ++pos;
        Formula rhs = formula();
        expect(')', "')'");
        return {true, {}, op == '|' ? disj(inner.f, rhs) : conj(inner.f, rhs)};
      }
      expect(')', "')' , '|' or '&'");  // redundant grouping
      return inner;
    }
    return {false, term(), {}};
  }

  Formula formula() {
    char c = peek();
    if (c == '!') {
      ++pos;
      return neg(formula());
    }
    if (c == 'E' || c == 'A') {
      ++pos;
      skip_ws();
      VarIndex v = parse_var_index();
      expect('.', "'.'");
      Formula body = formula();
      return c == 'E' ? exists(v, body) : forall(v, body);
    }
    Element e = element();
    if (e.is_formula) return e.f;
    expect('=', "'='");
    Term rhs = term();
    return eq(e.t, rhs);
  }

  void expect_end() {
    skip_ws();
    if (pos != s.size()) throw ParseError("trailing input", pos);
  }
};

void print_term(Term t, std::string& out) {
  switch (term_kind(t)) {
    case TermKind::Zero:
      out += '0';
      break;
    case TermKind::Succ:
      out += "S(";
      print_term(succ_arg(t), out);
      out += ')';
      break;
    case TermKind::Add: {
      auto [a, b] = add_args(t);
      out += '(';
      print_term(a, out);
      out += '+';
      print_term(b, out);
      out += ')';
      break;
    }
    case TermKind::Mul: {
      auto [a, b] = mul_args(t);
      out += '(';
      print_term(a, out);
      out += '*';
      print_term(b, out);
      out += ')';
      break;
    }
    case TermKind::Var:
      out += 'x';
      out += std::to_string(var_index(t));
      break;
  }
}

void print_formula(Formula f, std::string& out) {
  switch (formula_kind(f)) {
    case FormulaKind::Eq: {
      auto [a, b] = eq_args(f);
      print_term(a, out);
      out += '=';
      print_term(b, out);
      break;
    }
    case FormulaKind::Not:
      out += '!';
      print_formula(not_arg(f), out);
      break;
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      out += '(';
      print_formula(a, out);
      out += '|';
      print_formula(b, out);
      out += ')';
      break;
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      out += '(';
      print_formula(a, out);
      out += '&';
      print_formula(b, out);
      out += ')';
      break;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += formula_kind(f) == FormulaKind::Exists ? 'E' : 'A';
      out += " x";
      out += std::to_string(quant_var(f));
      out += '.';
      print_formula(quant_body(f), out);
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.term();
  p.expect_end();
  return t;
}

std::string to_string(Term t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(Formula f) {
  std::string out;
  print_formula(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// size measures

namespace {

const Nat& tree_count(NodeId id, std::map<NodeId, Nat>& memo) {
  auto it = memo.find(id);
  if (it != memo.end()) return it->second;
  const Node& n = node(id);
  Nat total{1};
  switch (n.tag) {
    case Tag::Zero:
    case Tag::Var:
      break;
    case Tag::Succ:
    case Tag::Not:
      total += tree_count(n.a, memo);
      break;
    case Tag::Exists:
    case Tag::Forall:
      total += tree_count(n.b, memo);
      break;
    default:
      total += tree_count(n.a, memo);
      total += tree_count(n.b, memo);
      break;
  }
  return memo.emplace(id, std::move(total)).first->second;
}

void collect(NodeId id, std::set<NodeId>& seen) {
  if (!seen.insert(id).second) return;
  const Node& n = node(id);
  switch (n.tag) {
    case Tag::Zero:
    case Tag::Var:
      return;
    case Tag::Succ:
    case Tag::Not:
      collect(n.a, seen);
      return;
    case Tag::Exists:
    case Tag::Forall:
      collect(n.b, seen);
      return;
    default:
      collect(n.a, seen);
      collect(n.b, seen);
      return;
  }
}

}  // namespace

Nat tree_node_count(Formula f) {
  std::map<NodeId, Nat> memo;
  return tree_count(f.id, memo);
}

Nat tree_node_count(Term t) {
  std::map<NodeId, Nat> memo;
  return tree_count(t.id, memo);
}

size_t dag_node_count(std::span<const Formula> roots) {
  std::set<NodeId> seen;
  for (Formula f : roots) collect(f.id, seen);
  return seen.size();
}

namespace {

size_t depth_memo(Formula f, std::map<NodeId, size_t>& memo) {
  auto it = memo.find(f.id);
  if (it != memo.end()) return it->second;
  size_t d = 1;
  switch (formula_kind(f)) {
    case FormulaKind::Eq:
      break;
    case FormulaKind::Not:
      d += depth_memo(not_arg(f), memo);
      break;
    case FormulaKind::Or: {
      auto [a, b] = or_args(f);
      d += std::max(depth_memo(a, memo), depth_memo(b, memo));
      break;
    }
    case FormulaKind::And: {
      auto [a, b] = and_args(f);
      d += std::max(depth_memo(a, memo), depth_memo(b, memo));
      break;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      d += depth_memo(quant_body(f), memo);
      break;
  }
  memo.emplace(f.id, d);
  return d;
}

}  // namespace

size_t formula_depth(Formula f) {
  std::map<NodeId, size_t> memo;
  return depth_memo(f, memo);
}

std::vector<Formula> or_spine(Formula f) {
  std::vector<Formula> rev;
  while (formula_kind(f) == FormulaKind::Or) {
    auto [a, b] = or_args(f);
    rev.push_back(b);
    f = a;
  }
  rev.push_back(f);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace truthlab
