#include "bimlab/clauses.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bimlab/completion.hpp"
#include "bimlab/kernels.hpp"

namespace bimlab {

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.var = std::move(name);
  return t;
}

Term Term::constant(bool one) {
  Term t;
  t.kind = one ? Kind::One : Kind::Zero;
  return t;
}

Term Term::binary(Kind k, Term l, Term r) {
  Term t;
  t.kind = k;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

Term Term::comp(Term inner) {
  Term t;
  t.kind = Kind::Comp;
  t.kids.push_back(std::move(inner));
  return t;
}

// --- lexer / parser ----------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Ident, One, Zero, Star, Plus, Caret, Vee, Arrow, Tilde, LPar, RPar,
                    Leq, Eq, Amp, Implies, Bar, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::size_t pos, std::string text = "") {
    out.push_back({k, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      push(Token::Kind::One, i++);
    } else if (c == '0') {
      push(Token::Kind::Zero, i++);
    } else if (c == '*') {
      push(Token::Kind::Star, i++);
    } else if (c == '+') {
      push(Token::Kind::Plus, i++);
    } else if (c == '^') {
      push(Token::Kind::Caret, i++);
    } else if (c == '~') {
      push(Token::Kind::Tilde, i++);
    } else if (c == '(') {
      push(Token::Kind::LPar, i++);
    } else if (c == ')') {
      push(Token::Kind::RPar, i++);
    } else if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        push(Token::Kind::Arrow, i);
        i += 2;
      } else {
        throw ParseError("stray '-'", i);
      }
    } else if (c == '<') {
      if (i + 1 < s.size() && s[i + 1] == '=') {
        push(Token::Kind::Leq, i);
        i += 2;
      } else {
        throw ParseError("stray '<'", i);
      }
    } else if (c == '=') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        push(Token::Kind::Implies, i);
        i += 2;
      } else {
        push(Token::Kind::Eq, i++);
      }
    } else if (c == '&') {
      push(Token::Kind::Amp, i++);
    } else if (c == '|') {
      push(Token::Kind::Bar, i++);
    } else if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i]))))
        ++i;
      std::string word = s.substr(start, i - start);
      if (word == "v")
        push(Token::Kind::Vee, start);
      else
        push(Token::Kind::Ident, start, word);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  push(Token::Kind::End, s.size());
  return out;
}

// precedence climbing; higher binds tighter
int binding_power(Token::Kind k) {
  switch (k) {
    case Token::Kind::Star: return 50;
    case Token::Kind::Plus: return 40;
    case Token::Kind::Caret: return 30;
    case Token::Kind::Vee: return 20;
    case Token::Kind::Arrow: return 10;
    default: return -1;
  }
}

Term::Kind term_kind(Token::Kind k) {
  switch (k) {
    case Token::Kind::Star: return Term::Kind::Mul;
    case Token::Kind::Plus: return Term::Kind::Add;
    case Token::Kind::Caret: return Term::Kind::Meet;
    case Token::Kind::Vee: return Term::Kind::Join;
    default: return Term::Kind::Residual;
  }
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  Term atom() {
    Token t = take();
    switch (t.kind) {
      case Token::Kind::Ident: return Term::variable(t.text);
      case Token::Kind::One: return Term::constant(true);
      case Token::Kind::Zero: return Term::constant(false);
      case Token::Kind::Tilde: return Term::comp(atom());
      case Token::Kind::LPar: {
        Term inner = expr(0);
        if (peek().kind != Token::Kind::RPar) throw ParseError("expected ')'", peek().pos);
        take();
        return inner;
      }
      default: throw ParseError("expected a term", t.pos);
    }
  }

  Term expr(int min_bp) {
    Term lhs = atom();
    while (true) {
      int bp = binding_power(peek().kind);
      if (bp < min_bp || bp < 0) break;
      Token op = take();
      // -> associates to the right, everything else to the left
      int next = op.kind == Token::Kind::Arrow ? bp : bp + 1;
      Term rhs = expr(next);
      lhs = Term::binary(term_kind(op.kind), std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Ineq inequality() {
    Term l = expr(0);
    Token rel = take();
    if (rel.kind != Token::Kind::Leq && rel.kind != Token::Kind::Eq)
      throw ParseError("expected '<=' or '='", rel.pos);
    Term r = expr(0);
    return {std::move(l), std::move(r), rel.kind == Token::Kind::Eq};
  }

  std::vector<Ineq> conjunction() {
    std::vector<Ineq> out{inequality()};
    while (peek().kind == Token::Kind::Amp) {
      take();
      out.push_back(inequality());
    }
    return out;
  }

  UniversalClause clause() {
    UniversalClause c;
    std::vector<Ineq> first = conjunction();
    if (peek().kind == Token::Kind::Implies) {
      take();
      c.premises = std::move(first);
      c.conclusions.push_back(inequality());
    } else {
      c.conclusions = std::move(first);
      if (c.conclusions.size() > 1) throw ParseError("use '|' between disjuncts", peek().pos);
    }
    while (peek().kind == Token::Kind::Bar) {
      take();
      c.conclusions.push_back(inequality());
    }
    if (peek().kind != Token::Kind::End) throw ParseError("trailing input", peek().pos);
    return c;
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  Term t = p.expr(0);
  if (p.peek().kind != Token::Kind::End) throw ParseError("trailing input", p.peek().pos);
  return t;
}

UniversalClause parse_clause(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  return p.clause();
}

// --- printing ----------------------------------------------------------------

namespace {

int print_power(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::One:
    case Term::Kind::Zero:
    case Term::Kind::Comp: return 100;
    case Term::Kind::Mul: return 50;
    case Term::Kind::Add: return 40;
    case Term::Kind::Meet: return 30;
    case Term::Kind::Join: return 20;
    case Term::Kind::Residual: return 10;
  }
  return 0;
}

void print_term(std::ostringstream& os, const Term& t, int parent_bp) {
  int bp = print_power(t);
  bool parens = bp < parent_bp;
  if (parens) os << "(";
  switch (t.kind) {
    case Term::Kind::Var: os << t.var; break;
    case Term::Kind::One: os << "1"; break;
    case Term::Kind::Zero: os << "0"; break;
    case Term::Kind::Comp:
      os << "~";
      print_term(os, t.kids[0], 100);
      break;
    default: {
      const char* sym = t.kind == Term::Kind::Mul    ? "*"
                        : t.kind == Term::Kind::Add  ? " + "
                        : t.kind == Term::Kind::Meet ? " ^ "
                        : t.kind == Term::Kind::Join ? " v "
                                                     : " -> ";
      print_term(os, t.kids[0], bp);
      os << sym;
      print_term(os, t.kids[1], t.kind == Term::Kind::Residual ? bp : bp + 1);
      break;
    }
  }
  if (parens) os << ")";
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t, 0);
  return os.str();
}

std::string to_string(const Ineq& i) {
  return to_string(i.lhs) + (i.equality ? " = " : " <= ") + to_string(i.rhs);
}

std::string to_string(const UniversalClause& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    if (i) os << " & ";
    os << to_string(c.premises[i]);
  }
  if (!c.premises.empty()) os << " => ";
  for (std::size_t i = 0; i < c.conclusions.size(); ++i) {
    if (i) os << " | ";
    os << to_string(c.conclusions[i]);
  }
  return os.str();
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
  }
  for (const auto& k : t.kids) collect_vars(k, out);
}

}  // namespace

std::vector<std::string> clause_variables(const UniversalClause& c) {
  std::vector<std::string> out;
  for (const auto& i : c.premises) {
    collect_vars(i.lhs, out);
    collect_vars(i.rhs, out);
  }
  for (const auto& i : c.conclusions) {
    collect_vars(i.lhs, out);
    collect_vars(i.rhs, out);
  }
  return out;
}

// --- evaluation --------------------------------------------------------------

EvalAlgebra EvalAlgebra::of(const OrderedAlgebra& a) {
  EvalAlgebra ea;
  ea.alg = a;
  return ea;
}

EvalAlgebra EvalAlgebra::of(const InvolutiveAlgebra& a) {
  EvalAlgebra ea;
  ea.alg = a.base;
  ea.comp = a.comp;
  return ea;
}

namespace {

int eval_rec(const EvalAlgebra& ea, const Term& t, const std::vector<int>& vals,
             const std::vector<std::string>& order) {
  const OrderedAlgebra& a = ea.alg;
  switch (t.kind) {
    case Term::Kind::Var: {
      for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == t.var) return vals[i];
      throw UnsupportedOperator("unbound variable " + t.var);
    }
    case Term::Kind::One:
      if (!a.one) throw UnsupportedOperator("algebra has no multiplicative unit");
      return *a.one;
    case Term::Kind::Zero:
      if (!a.zero) throw UnsupportedOperator("algebra has no additive unit");
      return *a.zero;
    case Term::Kind::Comp: {
      if (!ea.comp) throw UnsupportedOperator("algebra has no complementation");
      return (*ea.comp)[eval_rec(ea, t.kids[0], vals, order)];
    }
    case Term::Kind::Mul:
      if (!a.has_mul()) throw UnsupportedOperator("algebra has no multiplication");
      return a.times(eval_rec(ea, t.kids[0], vals, order), eval_rec(ea, t.kids[1], vals, order));
    case Term::Kind::Add:
      if (!a.has_add()) throw UnsupportedOperator("algebra has no addition");
      return a.plus(eval_rec(ea, t.kids[0], vals, order), eval_rec(ea, t.kids[1], vals, order));
    case Term::Kind::Join: {
      auto j = a.poset.join(eval_rec(ea, t.kids[0], vals, order),
                            eval_rec(ea, t.kids[1], vals, order));
      if (!j) throw UnsupportedOperator("join does not exist");
      return *j;
    }
    case Term::Kind::Meet: {
      auto m = a.poset.meet(eval_rec(ea, t.kids[0], vals, order),
                            eval_rec(ea, t.kids[1], vals, order));
      if (!m) throw UnsupportedOperator("meet does not exist");
      return *m;
    }
    case Term::Kind::Residual: {
      int x = eval_rec(ea, t.kids[0], vals, order);
      int y = eval_rec(ea, t.kids[1], vals, order);
      if (ea.res) {
        int r = (*ea.res)[x * a.size() + y];
        if (r < 0) throw UnsupportedOperator("residual does not exist");
        return r;
      }
      auto r = residual(a, x, y);
      if (!r) throw UnsupportedOperator("residual does not exist");
      return *r;
    }
  }
  throw UnsupportedOperator("unknown operator");
}

bool ineq_holds(const EvalAlgebra& ea, const Ineq& i, const std::vector<int>& vals,
                const std::vector<std::string>& order) {
  int l = eval_rec(ea, i.lhs, vals, order);
  int r = eval_rec(ea, i.rhs, vals, order);
  return i.equality ? l == r : ea.alg.leq(l, r);
}

// Every operator must be globally available before the valuation scan: the
// scan may run inside a parallel region, where a throwing term is not an
// option.
void check_support(const EvalAlgebra& ea, const Term& t) {
  const OrderedAlgebra& a = ea.alg;
  switch (t.kind) {
    case Term::Kind::One:
      if (!a.one) throw UnsupportedOperator("algebra has no multiplicative unit");
      break;
    case Term::Kind::Zero:
      if (!a.zero) throw UnsupportedOperator("algebra has no additive unit");
      break;
    case Term::Kind::Mul:
      if (!a.has_mul()) throw UnsupportedOperator("algebra has no multiplication");
      break;
    case Term::Kind::Add:
      if (!a.has_add()) throw UnsupportedOperator("algebra has no addition");
      break;
    case Term::Kind::Join:
    case Term::Kind::Meet:
      if (!a.poset.is_lattice())
        throw UnsupportedOperator("order is not a lattice, joins/meets are partial");
      break;
    case Term::Kind::Comp:
      if (!ea.comp) throw UnsupportedOperator("algebra has no complementation");
      break;
    case Term::Kind::Residual:
      if (!ea.res && !is_residuated(a))
        throw UnsupportedOperator("algebra is not residuated");
      break;
    case Term::Kind::Var: break;
  }
  for (const auto& k : t.kids) check_support(ea, k);
}

}  // namespace

int eval_term(const EvalAlgebra& ea, const Term& t, const std::map<std::string, int>& env) {
  std::vector<std::string> order;
  std::vector<int> vals;
  for (const auto& [k, v] : env) {
    order.push_back(k);
    vals.push_back(v);
  }
  return eval_rec(ea, t, vals, order);
}

EvalResult eval_clause(const EvalAlgebra& ea, const UniversalClause& c, int jobs) {
  for (const auto& p : c.premises) {
    check_support(ea, p.lhs);
    check_support(ea, p.rhs);
  }
  for (const auto& q : c.conclusions) {
    check_support(ea, q.lhs);
    check_support(ea, q.rhs);
  }
  auto vars = clause_variables(c);
  const int n = ea.alg.size();
  const int k = static_cast<int>(vars.size());
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
    if (total > (1ll << 40)) throw UnsupportedOperator("valuation space too large");
  }
  auto holds_at = [&](long long idx) {
    std::vector<int> vals(k);
    long long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      vals[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (const auto& p : c.premises)
      if (!ineq_holds(ea, p, vals, vars)) return true;  // premises fail: clause holds here
    for (const auto& q : c.conclusions)
      if (ineq_holds(ea, q, vals, vars)) return true;
    return false;
  };
  long long bad = first_violation(total, holds_at, jobs);
  EvalResult res;
  if (bad < 0) return res;
  res.holds = false;
  long long rest = bad;
  std::vector<int> vals(k);
  for (int i = k - 1; i >= 0; --i) {
    vals[i] = static_cast<int>(rest % n);
    rest /= n;
  }
  for (int i = 0; i < k; ++i) res.witness[vars[i]] = vals[i];
  return res;
}

// --- linearization -----------------------------------------------------------

namespace {

using Product = std::vector<std::string>;  // variable names, with multiplicity
using JoinOfProducts = std::vector<Product>;

void require_sl_signature(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::One: break;
    case Term::Kind::Mul:
    case Term::Kind::Join:
      require_sl_signature(t.kids[0]);
      require_sl_signature(t.kids[1]);
      break;
    default: throw NotSlMonoidal("term uses an operator outside {v, *, 1}");
  }
}

JoinOfProducts flatten(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return {{t.var}};
    case Term::Kind::One: return {{}};
    case Term::Kind::Join: {
      auto l = flatten(t.kids[0]), r = flatten(t.kids[1]);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Term::Kind::Mul: {
      auto l = flatten(t.kids[0]), r = flatten(t.kids[1]);
      JoinOfProducts out;
      for (const auto& p : l)
        for (const auto& q : r) {
          Product pq = p;
          pq.insert(pq.end(), q.begin(), q.end());
          out.push_back(pq);
        }
      return out;
    }
    default: throw NotSlMonoidal("term uses an operator outside {v, *, 1}");
  }
}

Term product_term(const Product& p) {
  if (p.empty()) return Term::constant(true);
  Term t = Term::variable(p[0]);
  for (std::size_t i = 1; i < p.size(); ++i)
    t = Term::binary(Term::Kind::Mul, std::move(t), Term::variable(p[i]));
  return t;
}

Term join_term(const JoinOfProducts& js) {
  Term t = product_term(js.at(0));
  for (std::size_t i = 1; i < js.size(); ++i)
    t = Term::binary(Term::Kind::Join, std::move(t), product_term(js[i]));
  return t;
}

}  // namespace

std::vector<Ineq> linearize(const Ineq& ineq) {
  if (ineq.equality) {
    // t = u splits into both inequalities
    auto a = linearize({ineq.lhs, ineq.rhs, false});
    auto b = linearize({ineq.rhs, ineq.lhs, false});
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  require_sl_signature(ineq.lhs);
  require_sl_signature(ineq.rhs);
  JoinOfProducts left = flatten(ineq.lhs);
  JoinOfProducts right = flatten(ineq.rhs);

  std::vector<std::string> taken;
  for (const auto& p : left)
    for (const auto& v : p)
      if (std::find(taken.begin(), taken.end(), v) == taken.end()) taken.push_back(v);
  for (const auto& p : right)
    for (const auto& v : p)
      if (std::find(taken.begin(), taken.end(), v) == taken.end()) taken.push_back(v);

  std::vector<Ineq> out;
  for (const auto& prod : left) {
    // multiplicities on this left product
    std::map<std::string, int> mult;
    for (const auto& v : prod) ++mult[v];
    // fresh names per occurrence, in product order
    std::map<std::string, std::vector<std::string>> fresh;
    Product new_left;
    std::map<std::string, int> seen;
    for (const auto& v : prod) {
      if (mult[v] == 1) {
        new_left.push_back(v);
        continue;
      }
      int k = ++seen[v];
      std::string base = v;
      std::string cand = base + std::to_string(k);
      while (std::find(taken.begin(), taken.end(), cand) != taken.end()) {
        base += "x";
        cand = base + std::to_string(k);
      }
      taken.push_back(cand);
      fresh[v].push_back(cand);
      new_left.push_back(cand);
    }
    // substitute x -> x1 v ... v xk on the right and redistribute
    JoinOfProducts new_right;
    for (const auto& rp : right) {
      JoinOfProducts expanded{{}};
      for (const auto& v : rp) {
        auto it = fresh.find(v);
        JoinOfProducts next;
        if (it == fresh.end()) {
          for (auto p : expanded) {
            p.push_back(v);
            next.push_back(std::move(p));
          }
        } else {
          for (const auto& name : it->second)
            for (auto p : expanded) {
              p.push_back(name);
              next.push_back(std::move(p));
            }
        }
        expanded = std::move(next);
      }
      new_right.insert(new_right.end(), expanded.begin(), expanded.end());
    }
    out.push_back({product_term(new_left), join_term(new_right), false});
  }
  return out;
}

// --- subreduct translation -----------------------------------------------------

namespace {

const char* kFreshPool[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m",
                            "n", "o", "p", "q", "r", "s", "t", "u", "w", "x", "y", "z"};

std::string fresh_name(std::size_t i) {
  constexpr std::size_t pool = sizeof(kFreshPool) / sizeof(kFreshPool[0]);
  std::string name = kFreshPool[i % pool];
  if (i >= pool) name += std::to_string(i / pool);
  return name;
}

void require_linear(const Ineq& ineq) {
  if (ineq.equality) throw NotLinear("equalities must be linearized first");
  require_sl_signature(ineq.lhs);
  require_sl_signature(ineq.rhs);
  auto left = flatten(ineq.lhs);
  if (left.size() != 1) throw NotLinear("left side must be a single product");
  std::set<std::string> seen;
  for (const auto& v : left[0])
    if (!seen.insert(v).second) throw NotLinear("left side repeats the variable " + v);
}

Term fold(Term::Kind k, const std::vector<Term>& parts, bool one_if_empty) {
  if (parts.empty()) return Term::constant(one_if_empty);
  Term t = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) t = Term::binary(k, std::move(t), parts[i]);
  return t;
}

}  // namespace

UniversalClause translate_subreduct(const UniversalClause& clause) {
  if (!clause.premises.empty())
    throw NotLinear("only positive clauses (no premises) can be translated");
  for (const auto& d : clause.conclusions) require_linear(d);

  auto vars = clause_variables(clause);
  std::map<std::string, std::pair<std::string, std::string>> pair_of;
  std::size_t next = 0;
  for (const auto& v : vars) {
    std::string a = fresh_name(next++), b = fresh_name(next++);
    pair_of[v] = {a, b};
  }
  std::vector<std::pair<std::string, std::string>> disjunct_pair;
  for (std::size_t k = 0; k < clause.conclusions.size(); ++k) {
    std::string e = fresh_name(next++), f = fresh_name(next++);
    disjunct_pair.emplace_back(e, f);
  }

  // encode "product <= e + ~f" as  (a1*...*ar)*f <= (b1+...+br)+e
  auto encode = [&](const Product& prod, const std::pair<std::string, std::string>& ef) {
    std::vector<Term> lhs_parts, rhs_parts;
    for (const auto& v : prod) lhs_parts.push_back(Term::variable(pair_of[v].first));
    lhs_parts.push_back(Term::variable(ef.second));
    for (const auto& v : prod) rhs_parts.push_back(Term::variable(pair_of[v].second));
    rhs_parts.push_back(Term::variable(ef.first));
    return Ineq{fold(Term::Kind::Mul, lhs_parts, true), fold(Term::Kind::Add, rhs_parts, false),
                false};
  };

  UniversalClause out;
  for (std::size_t k = 0; k < clause.conclusions.size(); ++k) {
    for (const auto& rp : flatten(clause.conclusions[k].rhs))
      out.premises.push_back(encode(rp, disjunct_pair[k]));
  }
  for (std::size_t k = 0; k < clause.conclusions.size(); ++k) {
    out.conclusions.push_back(encode(flatten(clause.conclusions[k].lhs)[0], disjunct_pair[k]));
  }
  return out;
}

bool knotted_subreduct(const OrderedAlgebra& a, KnottedKind kind, int n) {
  if (n < 2) throw UnsupportedOperator("knotted exponent must be at least 2");
  for (int x = 0; x < a.size(); ++x) {
    if (kind == KnottedKind::XBelowXn) {
      if (!a.leq(x, a.mul_pow(x, n))) return false;
      if (!a.leq(a.add_pow(x, n), x)) return false;
    } else {
      if (!a.one || !a.leq(*a.one, a.mul_pow(x, n))) return false;
      if (!a.one || !a.leq(a.add_pow(x, n), *a.one)) return false;
    }
  }
  return true;
}

bool subreduct_oracle(const OrderedAlgebra& a, const UniversalClause& c, int size_cap,
                      int jobs) {
  auto comp = dm_completion(a, size_cap);
  auto ea = EvalAlgebra::of(comp.algebra);
  return eval_clause(ea, c, jobs).holds;
}

}  // namespace bimlab
