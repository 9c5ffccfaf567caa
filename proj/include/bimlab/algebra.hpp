#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimlab/poset.hpp"

namespace bimlab {

// Outcome of an axiom check: either ok, or the first violated axiom together
// with a witnessing tuple. "First" means: axioms in a fixed sequence, witness
// tuples scanned lexicographically, so reports are stable across runs.
struct ValidationReport {
  bool ok = true;
  std::string axiom;           // name of the violated axiom
  std::vector<int> witness;    // offending elements, in axiom-specific order
  std::string detail;          // human-readable rendering

  explicit operator bool() const { return ok; }
};

struct AxiomViolation : std::runtime_error {
  ValidationReport report;
  explicit AxiomViolation(ValidationReport r)
      : std::runtime_error(r.detail.empty() ? r.axiom : r.axiom + ": " + r.detail),
        report(std::move(r)) {}
};

// A finite poset carrying up to two monoid structures: multiplication
// (isotone over <=) and addition (a monoid over the dual order). Covers
// bisemigroups, bimonoids and their lattice-ordered variants, depending on
// which tables/units are present and on the kind flags.
struct OrderedAlgebra {
  std::string name;
  FinitePoset poset;
  std::optional<std::vector<int>> mul;  // n*n row-major; mul[x*n+y] = x.y
  std::optional<int> one;
  std::optional<std::vector<int>> add;
  std::optional<int> zero;
  bool has_lattice = false;
  bool commutative = false;

  int size() const { return poset.size(); }
  bool has_mul() const { return mul.has_value(); }
  bool has_add() const { return add.has_value(); }
  bool has_mul_unit() const { return one.has_value(); }
  bool has_add_unit() const { return zero.has_value(); }

  int times(int x, int y) const { return (*mul)[x * size() + y]; }
  int plus(int x, int y) const { return (*add)[x * size() + y]; }
  bool leq(int x, int y) const { return poset.leq(x, y); }
  int meet(int x, int y) const { return *poset.meet(x, y); }   // lattice only
  int join(int x, int y) const { return *poset.join(x, y); }   // lattice only

  std::string el(int i) const { return poset.name_of(i); }

  // power x^k and sum kx (k >= 1)
  int mul_pow(int x, int k) const;
  int add_pow(int x, int k) const;

  // Order dual: swaps the two monoids and inverts the order.
  OrderedAlgebra dualized() const;
};

// Commutative complemented expansion: comp[x] is the (two-sided) complement.
struct InvolutiveAlgebra {
  OrderedAlgebra base;
  std::vector<int> comp;

  int size() const { return base.size(); }
  int neg(int x) const { return comp[x]; }
  // residual x -> y = comp(x) + y
  int residual(int x, int y) const { return base.plus(comp[x], y); }
};

struct InteriorOperator {
  std::vector<int> sigma;
  int operator()(int x) const { return sigma[x]; }
};

// --- axiom validation ------------------------------------------------------

// Checks exactly the invariants of the declared kind: table totality,
// associativity, isotonicity, units, hemidistributivity, commutativity when
// flagged, and for lattice kinds the existence of binary meets/joins plus
// distribution of . over v and + over ^ (both sides).
ValidationReport validate(const OrderedAlgebra& a);

// Involutive axioms on top of validate(base): complement laws x.x' <= 0 and
// 1 <= x + x', double negation, De Morgan for . and + (and for ^, v when
// lattice-ordered), antitonicity.
ValidationReport validate(const InvolutiveAlgebra& a);

// Interior operator laws: isotone, decreasing, idempotent.
ValidationReport validate_interior(const OrderedAlgebra& a, const InteriorOperator& io);

void require_valid(const OrderedAlgebra& a);
void require_valid(const InvolutiveAlgebra& a);

// --- partial operations ----------------------------------------------------

// max { c : a.c <= b }, if it exists.
std::optional<int> residual(const OrderedAlgebra& a, int x, int y);
bool is_residuated(const OrderedAlgebra& a);

// The unique y with x.y <= 0 and 1 <= x + y, if it exists.
std::optional<int> complement_of(const OrderedAlgebra& a, int x);

// Succeeds iff every element has a complement.
std::optional<InvolutiveAlgebra> make_involutive(const OrderedAlgebra& a);

// Is multiplication distributive over the join of `subset` (both sides)?
// Requires the join to exist; empty subset asks about the bottom element.
std::optional<bool> is_admissible_join(const OrderedAlgebra& a, const std::vector<int>& subset);
std::optional<bool> is_admissible_meet(const OrderedAlgebra& a, const std::vector<int>& subset);

// --- structural predicates -------------------------------------------------

bool is_mul_integral(const OrderedAlgebra& a);   // x.y <= x and x.y <= y
bool is_add_integral(const OrderedAlgebra& a);   // x <= x+y and y <= x+y
bool is_bi_integral(const OrderedAlgebra& a);
bool is_mul_idempotent(const OrderedAlgebra& a);
bool is_idempotent(const OrderedAlgebra& a);     // both operations

// Fast-path classifier: idempotent bi-integral algebras are exactly
// (bounded) distributive lattices carried by their own order.
bool is_distributive_lattice_bimonoid(const OrderedAlgebra& a);

// Brouwerian algebra = residuated, integral, idempotent lattice (mul = meet).
bool is_brouwerian(const OrderedAlgebra& a);
// Brouwerian semilattice: integral idempotent residuated pomonoid.
bool is_brouwerian_semilattice(const OrderedAlgebra& a);
// Boolean-pointed: Brouwerian with zero and x v (x->0) = 1.
bool is_boolean_pointed(const OrderedAlgebra& a);

// --- morphisms ---------------------------------------------------------------

struct MorphismOptions {
  bool embedding = false;  // additionally order-reflecting
  bool complete = false;   // additionally preserves all existing joins/meets
};

struct MorphismReport {
  bool ok = true;
  std::string what;
  explicit operator bool() const { return ok; }
};

// Verifies that f (total on src) is an order-preserving homomorphism for
// every operation present in src. With `complete`, all existing joins and
// meets of arbitrary subsets are checked (carriers are finite).
MorphismReport check_morphism(const std::vector<int>& f, const OrderedAlgebra& src,
                              const OrderedAlgebra& dst, MorphismOptions opt = {});

// Normality of an interior operator on an involutive algebra: the image of
// sigma is a sub-bimonoid (closed under . and +, contains 1 and 0) and
// x = sigma(x) . comp(sigma(comp(x))) everywhere.
bool check_normal_interior(const InvolutiveAlgebra& a, const InteriorOperator& io,
                           std::string* why = nullptr);

// Brute-force isomorphism search respecting order, operations and units.
std::optional<std::vector<int>> find_isomorphism(const OrderedAlgebra& a,
                                                 const OrderedAlgebra& b);

}  // namespace bimlab
