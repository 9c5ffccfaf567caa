#pragma once

#include <string>
#include <vector>

#include "bimlab/algebra.hpp"

namespace bimlab {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Meet-monoid on a poset with a top: mul = meet, one = top. The poset must
// have all binary meets. Handy base for several builders below.
OrderedAlgebra meet_monoid(const FinitePoset& p, const std::string& name = "");

// x + y := (0 -> (x ^ y)) ^ (x v y) over a Brouwerian algebra (mul = meet,
// one = top, residuated). Yields a multiplicatively integral idempotent
// commutative residuated bimonoid with the given zero.
OrderedAlgebra from_pointed_brouwerian(const OrderedAlgebra& brouwerian, int zero);

// add := mul, zero := one.
OrderedAlgebra trivial_bimonoid(const OrderedAlgebra& pomonoid);

// x + y := top, for a pomonoid with a top element. No additive unit.
OrderedAlgebra drastic_top(const OrderedAlgebra& pomonoid);

// Modified drastic addition over an integral pomonoid with a bottom that has
// no zero divisors: x + y = 1 off the bottom, with 0 := bottom.
OrderedAlgebra drastic_bottom_unit(const OrderedAlgebra& pomonoid);

// Ordinal sum over a nontrivial chain; every part must be bi-integral.
// Units propagate from the top part (mul) and bottom part (add).
OrderedAlgebra ordinal_sum(const FinitePoset& index, const std::vector<OrderedAlgebra>& parts);

// Adds fresh bottom and top with the absorption laws.
OrderedAlgebra bounded_extension(const OrderedAlgebra& a);

enum class ReflectionFlavor { Upper, Lower };

// Doubles a commutative residuated pomonoid with the required bound into a
// cyclic involutive residuated pomonoid; the primed copy carries the mirror
// order and comp(a) = a'. Upper flavor needs a top, lower flavor a bottom.
InvolutiveAlgebra reflection_star(const OrderedAlgebra& pomonoid, ReflectionFlavor flavor);

// --- named catalog ----------------------------------------------------------

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Known names: L3, H5c, H5one, M3, N5, chain:<n>:<pos-of-0>, boolean:<k>,
// sugihara:<odd n>, diamond_fig5. Every output passes validate().
OrderedAlgebra catalog(const std::string& name);

// One-line description of where the entry comes from.
std::string catalog_provenance(const std::string& name);

// The fixed roster used by the test suites, filtered by carrier size.
std::vector<std::string> catalog_roster(int max_size);

}  // namespace bimlab
