#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bimlab/algebra.hpp"

namespace bimlab {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnsupportedOperator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Term {
  enum class Kind { Var, One, Zero, Mul, Add, Join, Meet, Residual, Comp };
  Kind kind = Kind::One;
  std::string var;          // Kind::Var
  std::vector<Term> kids;   // binary: 2, Comp: 1

  static Term variable(std::string name);
  static Term constant(bool one);
  static Term binary(Kind k, Term l, Term r);
  static Term comp(Term t);
};

struct Ineq {
  Term lhs, rhs;
  bool equality = false;  // t = u instead of t <= u
};

// premises => conclusions, variables universally quantified; an empty
// premise list is a plain (disjunction of) inequalities.
struct UniversalClause {
  std::vector<Ineq> premises;
  std::vector<Ineq> conclusions;
};

// Grammar: variables [a-z][a-z0-9]* (except the join symbol v), constants 1
// and 0, ~ complement, * mul, + add, ^ meet, v join, -> residual, with
// precedence ~ > * > + > ^ > v > ->. Clause syntax: P1 & P2 => C1 | C2.
Term parse_term(const std::string& text);
UniversalClause parse_clause(const std::string& text);

std::string to_string(const Term& t);
std::string to_string(const Ineq& i);
std::string to_string(const UniversalClause& c);

// Sorted list of variables, in order of first appearance.
std::vector<std::string> clause_variables(const UniversalClause& c);

// Evaluation carrier: an ordered algebra plus the optional complement and a
// residual table built on demand.
struct EvalAlgebra {
  OrderedAlgebra alg;
  std::optional<std::vector<int>> comp;
  std::optional<std::vector<int>> res;  // -1 where no residual exists

  static EvalAlgebra of(const OrderedAlgebra& a);
  static EvalAlgebra of(const InvolutiveAlgebra& a);
};

struct EvalResult {
  bool holds = true;
  std::map<std::string, int> witness;  // falsifying valuation, when !holds
};

int eval_term(const EvalAlgebra& ea, const Term& t, const std::map<std::string, int>& env);

// Enumerates all valuations in lexicographic order (variables by first
// appearance, elements by index) and reports the least falsifying one.
EvalResult eval_clause(const EvalAlgebra& ea, const UniversalClause& c, int jobs = 1);

struct NotSlMonoidal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotLinear : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits an inequality over {v, *, 1} into linear inequalities: products are
// distributed over joins, the left join splits into separate inequalities,
// and repeated left variables become fresh variables joined on the right.
std::vector<Ineq> linearize(const Ineq& ineq);

// Rewrites a linear positive universal clause over {v, *, 1} into a clause
// in the plain bimonoid signature whose satisfaction on A is equivalent to
// the original clause holding in A's completion. Fresh variables: one (a,b)
// pair per clause variable, then one (e,f) pair per disjunct.
UniversalClause translate_subreduct(const UniversalClause& clause);

// x <= x^n plus nx <= x (or the experimental 1 <= x^n with nx <= 1): holds
// on A iff A is a subreduct of an involutive residuated structure with the
// corresponding law.
enum class KnottedKind { XBelowXn, OneBelowXn };
bool knotted_subreduct(const OrderedAlgebra& a, KnottedKind kind, int n);

// Ground truth: evaluates the original clause on the completion of A.
bool subreduct_oracle(const OrderedAlgebra& a, const UniversalClause& c, int size_cap = 20000,
                      int jobs = 1);

}  // namespace bimlab
