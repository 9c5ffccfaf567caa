#pragma once

#include <string>

#include "bimlab/algebra.hpp"

namespace bimlab {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra document (UTF-8 JSON). Fields:
//   name      optional string
//   elements  list of distinct element names
//   leq       list of [lo, hi] cover pairs (names); reflexive-transitive
//             closure is applied
//   mul       n x n table of names, or "meet"
//   one       element name
//   add       table, or one of "join" | "meet" | "mul" | "pbr"
//   zero      element name
//   lattice   optional bool (defaults to whether the order is a lattice and
//             both admissibility laws hold)
//   commutative optional bool (defaults to a table scan)
// Unknown fields are rejected.
OrderedAlgebra load_algebra(const std::string& text);
OrderedAlgebra load_algebra_file(const std::string& path);

// Emits the algebra with explicit operation tables; the output is itself a
// valid algebra document and reloads to the same algebra.
std::string dump_algebra(const OrderedAlgebra& a);

}  // namespace bimlab
