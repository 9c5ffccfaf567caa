#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimlab {

// Structured failure for relation validation. `witness` names the offending
// pair (or triple endpoint pair for transitivity).
struct PosetError : std::runtime_error {
  enum class Kind { NotSquare, NotReflexive, NotAntisymmetric, NotTransitive, BadNames };
  Kind kind;
  int x = -1, y = -1;
  PosetError(Kind k, std::string msg, int x_ = -1, int y_ = -1)
      : std::runtime_error(std::move(msg)), kind(k), x(x_), y(y_) {}
};

// Finite poset on indices 0..n-1. Immutable after construction; every
// operation is a pure function of the relation.
class FinitePoset {
public:
  FinitePoset() = default;

  // Validates reflexivity, antisymmetry and transitivity; throws PosetError.
  // No closure is applied: the caller either supplies a full order relation
  // or goes through from_cover_pairs.
  static FinitePoset from_relation(int n, std::vector<uint8_t> leq,
                                   std::vector<std::string> names = {});

  // Reflexive-transitive closure of a cover list, then the same validation
  // (antisymmetry can still fail if the covers contain a cycle).
  static FinitePoset from_cover_pairs(int n, const std::vector<std::pair<int, int>>& covers,
                                      std::vector<std::string> names = {});

  static FinitePoset chain(int n, std::vector<std::string> names = {});
  static FinitePoset antichain(int n, std::vector<std::string> names = {});

  int size() const { return n_; }
  bool leq(int x, int y) const { return leq_[x * n_ + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int i) const;
  // Index of the element with the given name, -1 if unknown.
  int index_of(const std::string& name) const;

  std::optional<int> meet(int x, int y) const;
  std::optional<int> join(int x, int y) const;
  std::optional<int> meet_of(const std::vector<int>& xs) const;  // empty -> top
  std::optional<int> join_of(const std::vector<int>& xs) const;  // empty -> bottom
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool is_lattice() const;
  bool is_chain() const;

  FinitePoset dualized() const;

  // Hasse diagram: the transitive reduction as (lower, upper) pairs,
  // lexicographically ordered.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Graphviz output, edges bottom-to-top. Optional label override.
  std::string to_dot(const std::vector<std::string>& labels = {}) const;

  bool operator==(const FinitePoset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
  int n_ = 0;
  std::vector<uint8_t> leq_;
  std::vector<std::string> names_;
};

// Searches for an order isomorphism between two posets by backtracking.
// Intended for the desk-scale carriers used in tests (<= 12 elements or so).
std::optional<std::vector<int>> find_order_isomorphism(const FinitePoset& a,
                                                       const FinitePoset& b);

}  // namespace bimlab
