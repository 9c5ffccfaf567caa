#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimlab/algebra.hpp"

namespace bimlab {

struct FractionsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha, beta with a.~b = alpha(a,b) + ~beta(a,b) in the completion.
struct TransformationTable {
  int n = 0;
  std::vector<int> alpha, beta;  // n*n each
  int al(int a, int b) const { return alpha[a * n + b]; }
  int be(int a, int b) const { return beta[a * n + b]; }
};

// Does a.~b = x+~y hold in the completion? Decided by the universal sentence
//   a.y <= b+x  and  forall p,q,u,v: (u.y <= v+x and a.q <= b+p) => u.q <= v+p
// scanned over A^4. When A is residuated the residuated reformulation is
// cross-checked as well.
bool check_transformation_pair(const OrderedAlgebra& a, int av, int bv, int xv, int yv,
                               int jobs = 1);

// First (x,y) in lexicographic order per (a,b); residuated algebras shortcut
// through y := a -> (b+x), which is complete whenever any solution exists.
// With `normal`, candidates must additionally satisfy the normality equation
//   a -> (b+w) = (beta -> alpha) -> ((a->b) + w)   for all w.
// Returns nothing iff some pair has no solution.
std::optional<TransformationTable> find_transformation(const OrderedAlgebra& a,
                                                       bool normal = false, int jobs = 1);

// The normality equation over all (a,b,w).
bool check_normal(const OrderedAlgebra& a, const TransformationTable& t);

// Normal representation of a.~b: <beta -> alpha, a -> b>. Requires residuals.
std::pair<int, int> pi(const OrderedAlgebra& a, const TransformationTable& t, int av, int bv);

struct FractionsResult {
  InvolutiveAlgebra algebra;
  std::vector<int> embed;                    // A -> carrier index
  std::vector<std::pair<int, int>> reps;     // representative pair per element
  std::optional<InteriorOperator> sigma;     // sigma-div, when A is residuated
  bool normal_construction = false;

  int index_of_pair(int a, int b) const;     // exact representative lookup
};

// Quotient of A^2 by the fraction preorder. Works for any commutative
// bimonoid with a transformation table; representatives are the least pairs
// of their classes.
FractionsResult fractions_quotient(const OrderedAlgebra& a, const TransformationTable& t);

// Carrier = fixpoints of pi, ops through pi. Requires a normal table.
FractionsResult fractions_normal(const OrderedAlgebra& a, const TransformationTable& t);

// sigma-div of an element, via its representative's additive normal form.
int sigma_div(const FractionsResult& f, int elem);

struct RoundtripReport {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Sigma after fractions: the unit a -> pi<a,0> is an isomorphism of A onto
// the sigma-div image inside fractions_normal(A).
RoundtripReport roundtrip_sigma_of_fractions(const OrderedAlgebra& a,
                                             const TransformationTable& t);

// Fractions after sigma: rebuilding fractions from the sigma-image of a
// normal complemented algebra recovers it, counit <a,b> -> a.~b.
RoundtripReport roundtrip_fractions_of_sigma(const InvolutiveAlgebra& b,
                                             const InteriorOperator& sigma);

// Functor action on one homomorphism h: A -> B: <a,b> -> <h(a),h(b)> must be
// a homomorphism of the fraction algebras commuting with sigma-div.
RoundtripReport roundtrip_functor_on_hom(const OrderedAlgebra& a, const TransformationTable& ta,
                                         const OrderedAlgebra& b, const TransformationTable& tb,
                                         const std::vector<int>& h);

}  // namespace bimlab
