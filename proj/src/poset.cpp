#include "bimlab/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bimlab {

namespace {

std::string default_name(int i) { return "e" + std::to_string(i); }

bool plain_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

FinitePoset FinitePoset::from_relation(int n, std::vector<uint8_t> leq,
                                       std::vector<std::string> names) {
  if (n < 0 || static_cast<int>(leq.size()) != n * n)
    throw PosetError(PosetError::Kind::NotSquare, "relation is not an n-by-n matrix");
  for (int x = 0; x < n; ++x)
    if (!leq[x * n + x])
      throw PosetError(PosetError::Kind::NotReflexive,
                       "relation not reflexive at " + std::to_string(x), x, x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq[x * n + y] && leq[y * n + x])
        throw PosetError(PosetError::Kind::NotAntisymmetric,
                         "relation not antisymmetric at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")",
                         x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[x * n + y]) continue;
      for (int z = 0; z < n; ++z)
        if (leq[y * n + z] && !leq[x * n + z])
          throw PosetError(PosetError::Kind::NotTransitive,
                           "relation not transitive at (" + std::to_string(x) + "," +
                               std::to_string(y) + "," + std::to_string(z) + ")",
                           x, z);
    }
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n)
      throw PosetError(PosetError::Kind::BadNames, "names list does not match carrier size");
    std::set<std::string> seen(names.begin(), names.end());
    if (static_cast<int>(seen.size()) != n)
      throw PosetError(PosetError::Kind::BadNames, "element names are not pairwise distinct");
  }
  FinitePoset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  p.names_ = std::move(names);
  return p;
}

FinitePoset FinitePoset::from_cover_pairs(int n, const std::vector<std::pair<int, int>>& covers,
                                          std::vector<std::string> names) {
  std::vector<uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      throw PosetError(PosetError::Kind::NotSquare, "cover pair out of range", lo, hi);
    leq[lo * n + hi] = 1;
  }
  // Floyd-Warshall style closure.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (leq[x * n + k])
        for (int y = 0; y < n; ++y)
          if (leq[k * n + y]) leq[x * n + y] = 1;
  return from_relation(n, std::move(leq), std::move(names));
}

FinitePoset FinitePoset::chain(int n, std::vector<std::string> names) {
  std::vector<uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) leq[x * n + y] = 1;
  return from_relation(n, std::move(leq), std::move(names));
}

FinitePoset FinitePoset::antichain(int n, std::vector<std::string> names) {
  std::vector<uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
  return from_relation(n, std::move(leq), std::move(names));
}

std::string FinitePoset::name_of(int i) const {
  if (!names_.empty()) return names_[i];
  return default_name(i);
}

int FinitePoset::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (name_of(i) == name) return i;
  return -1;
}

std::optional<int> FinitePoset::meet(int x, int y) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (!(leq(z, x) && leq(z, y))) continue;
    if (best == -1 || leq(best, z)) best = z;
  }
  if (best == -1) return std::nullopt;
  // best must dominate every common lower bound, otherwise no meet exists
  for (int z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, best)) return std::nullopt;
  return best;
}

std::optional<int> FinitePoset::join(int x, int y) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (!(leq(x, z) && leq(y, z))) continue;
    if (best == -1 || leq(z, best)) best = z;
  }
  if (best == -1) return std::nullopt;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(y, z) && !leq(best, z)) return std::nullopt;
  return best;
}

std::optional<int> FinitePoset::meet_of(const std::vector<int>& xs) const {
  if (xs.empty()) return top();
  std::optional<int> acc = xs[0];
  for (std::size_t i = 1; i < xs.size() && acc; ++i) acc = meet(*acc, xs[i]);
  return acc;
}

std::optional<int> FinitePoset::join_of(const std::vector<int>& xs) const {
  if (xs.empty()) return bottom();
  std::optional<int> acc = xs[0];
  for (std::size_t i = 1; i < xs.size() && acc; ++i) acc = join(*acc, xs[i]);
  return acc;
}

std::optional<int> FinitePoset::bottom() const {
  for (int x = 0; x < n_; ++x) {
    bool below_all = true;
    for (int y = 0; y < n_ && below_all; ++y) below_all = leq(x, y);
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  for (int x = 0; x < n_; ++x) {
    bool above_all = true;
    for (int y = 0; y < n_ && above_all; ++y) above_all = leq(y, x);
    if (above_all) return x;
  }
  return std::nullopt;
}

bool FinitePoset::is_lattice() const {
  if (n_ == 0) return false;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (!meet(x, y) || !join(x, y)) return false;
  return true;
}

bool FinitePoset::is_chain() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

FinitePoset FinitePoset::dualized() const {
  std::vector<uint8_t> d(n_ * n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) d[x * n_ + y] = leq_[y * n_ + x];
  FinitePoset p;
  p.n_ = n_;
  p.leq_ = std::move(d);
  p.names_ = names_;
  return p;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool covered = false;
      for (int z = 0; z < n_ && !covered; ++z) covered = lt(x, z) && lt(z, y);
      if (!covered) out.emplace_back(x, y);
    }
  return out;
}

std::string FinitePoset::to_dot(const std::vector<std::string>& labels) const {
  auto label_of = [&](int i) { return labels.empty() ? name_of(i) : labels[i]; };
  std::ostringstream os;
  os << "digraph {\n  rankdir=BT;\n";
  for (int i = 0; i < n_; ++i) {
    std::string l = label_of(i);
    if (plain_identifier(l))
      os << "  " << l << ";\n";
    else
      os << "  e" << i << " [label=\"" << l << "\"];\n";
  }
  for (auto [lo, hi] : cover_pairs()) {
    auto id = [&](int i) {
      std::string l = label_of(i);
      return plain_identifier(l) ? l : "e" + std::to_string(i);
    };
    os << "  " << id(lo) << " -> " << id(hi) << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

bool extend_iso(const FinitePoset& a, const FinitePoset& b, std::vector<int>& map,
                std::vector<uint8_t>& used, int next) {
  int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      ok = (a.leq(prev, next) == b.leq(map[prev], cand)) &&
           (a.leq(next, prev) == b.leq(cand, map[prev]));
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_order_isomorphism(const FinitePoset& a,
                                                       const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> map(a.size(), -1);
  std::vector<uint8_t> used(a.size(), 0);
  if (extend_iso(a, b, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace bimlab
