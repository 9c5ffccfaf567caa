#pragma once

#include <string>
#include <vector>

#include "bimlab/algebra.hpp"
#include "bimlab/bitset.hpp"

namespace bimlab {

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeCapExceeded : std::runtime_error {
  int limit;
  explicit SizeCapExceeded(int lim)
      : std::runtime_error("closed-set enumeration exceeded the cap of " + std::to_string(lim)),
        limit(lim) {}
};

// Two monoids L (join generators, op o) and R (meet generators, op (+))
// linked by a relation sq and mutually inverse anti-isomorphisms. Only the
// commutative case is supported, so the left/right maps coincide.
struct GaloisFrame {
  int nl = 0, nr = 0;
  std::vector<int> op_l;  // nl*nl
  int unit_l = -1;
  std::vector<int> op_r;  // nr*nr
  int unit_r = -1;
  std::vector<uint8_t> rel;  // nl*nr
  std::vector<int> lmap;     // L -> R
  std::vector<int> rmap;     // R -> L
  std::vector<int> lambda;   // A -> L (empty unless an A-frame)
  std::vector<int> rho;      // A -> R
  std::vector<std::string> l_labels;

  bool sq(int x, int y) const { return rel[x * nr + y] != 0; }
  int ol(int x, int y) const { return op_l[x * nl + y]; }
  int opr(int x, int y) const { return op_r[x * nr + y]; }
};

// Nuclearity, the Gentzen conditions for A's signature, Identity, Cut, and
// faithfulness. Pass nullptr to check only the frame-level laws.
ValidationReport validate_frame(const GaloisFrame& f, const OrderedAlgebra* a);

// Collapses generators with identical relation rows/columns; the Galois
// algebra is unchanged.
GaloisFrame quotient_frame(const GaloisFrame& f);

// W(A): both sorts are A^2, <a,b> standing for a.~b on the left and a+~b on
// the right, related by <a,b> sq <c,d>  iff  a.d <= b+c.
GaloisFrame frame_of_bimonoid_raw(const OrderedAlgebra& a);
// The same frame after the congruence quotient; this is what dm_completion
// uses. Frame axioms are verified.
GaloisFrame frame_of_bimonoid(const OrderedAlgebra& a);

// Polars and closures.
Bitset polar_right(const GaloisFrame& f, const Bitset& x);  // X -> X^|> in R
Bitset polar_left(const GaloisFrame& f, const Bitset& y);   // Y -> Y^<| in L
Bitset closure_right(const GaloisFrame& f, const Bitset& x);  // X^|><|
Bitset closure_left(const GaloisFrame& f, const Bitset& y);   // Y^<||>

struct CompletionResult {
  GaloisFrame frame;
  std::vector<Bitset> closed;  // canonical enumeration of the carrier
  InvolutiveAlgebra algebra;   // ordered by inclusion
  std::vector<int> embed;      // A-element -> carrier index (A-frames only)
  std::vector<std::vector<int>> gen_index;  // maximal L-generators per element
  std::vector<std::string> labels;          // rendered generator labels

  int index_of(const Bitset& b) const;
};

// Enumerates the Galois closed sets (intersections of principal polars plus
// L itself) and installs the algebra operations. Throws SizeCapExceeded.
CompletionResult galois_algebra(const GaloisFrame& f, int size_cap = 20000);

// frame_of_bimonoid + galois_algebra + the density/embedding checks.
CompletionResult dm_completion(const OrderedAlgebra& a, int size_cap = 20000);

// --- generator-comparison oracle (no completion built) ----------------------

enum class GenSide { Mul, Add };

struct GenExpr {
  int a = 0, b = 0;
  GenSide side = GenSide::Mul;
};

// Decides lhs <= rhs in the completion straight from A.
bool compare_generators(const OrderedAlgebra& a, GenExpr lhs, GenExpr rhs, int jobs = 1);

// --- bisemigroup (unital) variant -------------------------------------------

struct UnitalCompletionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Four-sort generator frame over a commutative bisemigroup, relative to an
// upset F, a downset I and a sign. The completion satisfies 1 <= a iff a in
// F, a <= 0 iff a in I, and 1 <= 0 iff alpha_plus.
CompletionResult dm_completion_bisemigroup(const OrderedAlgebra& a, const std::vector<int>& F,
                                           const std::vector<int>& I, bool alpha_plus,
                                           int size_cap = 20000);

// --- Funayama ---------------------------------------------------------------

struct FunayamaReport {
  bool all_joins_admissible = true;
  bool embedding_preserves_joins = true;
  std::vector<int> inadmissible_witness;  // a subset whose join misbehaves
  bool equivalence_holds() const {
    return all_joins_admissible == embedding_preserves_joins;
  }
};

FunayamaReport check_funayama(const OrderedAlgebra& a, int size_cap = 20000);

}  // namespace bimlab
