#include "bimlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bimlab {

namespace {

std::string render(const OrderedAlgebra& a, const std::string& axiom,
                   const std::vector<int>& w) {
  std::ostringstream os;
  os << axiom << " fails at (";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << a.el(w[i]);
  }
  os << ")";
  return os.str();
}

ValidationReport fail(const OrderedAlgebra& a, std::string axiom, std::vector<int> w) {
  ValidationReport r;
  r.ok = false;
  r.detail = render(a, axiom, w);
  r.axiom = std::move(axiom);
  r.witness = std::move(w);
  return r;
}

}  // namespace

int OrderedAlgebra::mul_pow(int x, int k) const {
  int acc = x;
  for (int i = 1; i < k; ++i) acc = times(acc, x);
  return acc;
}

int OrderedAlgebra::add_pow(int x, int k) const {
  int acc = x;
  for (int i = 1; i < k; ++i) acc = plus(acc, x);
  return acc;
}

OrderedAlgebra OrderedAlgebra::dualized() const {
  OrderedAlgebra d;
  d.name = name.empty() ? name : name + "^op";
  d.poset = poset.dualized();
  d.mul = add;
  d.one = zero;
  d.add = mul;
  d.zero = one;
  d.has_lattice = has_lattice;
  d.commutative = commutative;
  return d;
}

ValidationReport validate(const OrderedAlgebra& a) {
  const int n = a.size();
  if (n <= 0) return fail(a, "nonempty carrier", {});

  auto table_ok = [&](const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != n * n) return false;
    return std::all_of(t.begin(), t.end(), [&](int v) { return 0 <= v && v < n; });
  };
  if (a.mul && !table_ok(*a.mul)) return fail(a, "mul table total", {});
  if (a.add && !table_ok(*a.add)) return fail(a, "add table total", {});
  if (a.one && (*a.one < 0 || *a.one >= n)) return fail(a, "mul unit in carrier", {});
  if (a.zero && (*a.zero < 0 || *a.zero >= n)) return fail(a, "add unit in carrier", {});

  if (a.mul) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (a.times(a.times(x, y), z) != a.times(x, a.times(y, z)))
            return fail(a, "mul associativity", {x, y, z});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!a.leq(a.times(x, z), a.times(y, z))) return fail(a, "mul isotone (right)", {x, y, z});
          if (!a.leq(a.times(z, x), a.times(z, y))) return fail(a, "mul isotone (left)", {x, y, z});
        }
      }
    if (a.one)
      for (int x = 0; x < n; ++x)
        if (a.times(*a.one, x) != x || a.times(x, *a.one) != x)
          return fail(a, "mul unit law", {x});
    if (a.commutative)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a.times(x, y) != a.times(y, x)) return fail(a, "mul commutativity", {x, y});
  }

  if (a.add) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (a.plus(a.plus(x, y), z) != a.plus(x, a.plus(y, z)))
            return fail(a, "add associativity", {x, y, z});
    // <A, >=, +> is a posemigroup, which over <= is again isotonicity.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!a.leq(a.plus(x, z), a.plus(y, z))) return fail(a, "add isotone (right)", {x, y, z});
          if (!a.leq(a.plus(z, x), a.plus(z, y))) return fail(a, "add isotone (left)", {x, y, z});
        }
      }
    if (a.zero)
      for (int x = 0; x < n; ++x)
        if (a.plus(*a.zero, x) != x || a.plus(x, *a.zero) != x)
          return fail(a, "add unit law", {x});
    if (a.commutative)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (a.plus(x, y) != a.plus(y, x)) return fail(a, "add commutativity", {x, y});
  }

  if (a.mul && a.add) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!a.leq(a.times(x, a.plus(y, z)), a.plus(a.times(x, y), z)))
            return fail(a, "hemidistributivity", {x, y, z});
          if (!a.leq(a.times(a.plus(z, y), x), a.plus(z, a.times(y, x))))
            return fail(a, "hemidistributivity (mirror)", {x, y, z});
        }
  }

  if (a.has_lattice) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!a.poset.meet(x, y) || !a.poset.join(x, y))
          return fail(a, "lattice bounds exist", {x, y});
    if (a.mul) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            int j = *a.poset.join(y, z);
            if (a.times(x, j) != *a.poset.join(a.times(x, y), a.times(x, z)))
              return fail(a, "mul distributes over join (left)", {x, y, z});
            if (a.times(j, x) != *a.poset.join(a.times(y, x), a.times(z, x)))
              return fail(a, "mul distributes over join (right)", {x, y, z});
          }
    }
    if (a.add) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            int m = *a.poset.meet(y, z);
            if (a.plus(x, m) != *a.poset.meet(a.plus(x, y), a.plus(x, z)))
              return fail(a, "add distributes over meet (left)", {x, y, z});
            if (a.plus(m, x) != *a.poset.meet(a.plus(y, x), a.plus(z, x)))
              return fail(a, "add distributes over meet (right)", {x, y, z});
          }
    }
  }

  return {};
}

ValidationReport validate(const InvolutiveAlgebra& ia) {
  const OrderedAlgebra& a = ia.base;
  const int n = a.size();
  if (auto base = validate(a); !base) return base;
  if (!a.has_mul() || !a.has_add() || !a.one || !a.zero)
    return fail(a, "involutive algebras need both monoids", {});
  if (static_cast<int>(ia.comp.size()) != n) return fail(a, "comp table total", {});

  for (int x = 0; x < n; ++x) {
    int c = ia.comp[x];
    if (c < 0 || c >= n) return fail(a, "comp table total", {x});
    if (!a.leq(a.times(x, c), *a.zero)) return fail(a, "complement law x*~x <= 0", {x});
    if (!a.leq(*a.one, a.plus(x, c))) return fail(a, "complement law 1 <= x+~x", {x});
    if (ia.comp[c] != x) return fail(a, "double negation", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.leq(x, y) && !a.leq(ia.comp[y], ia.comp[x])) return fail(a, "comp antitone", {x, y});
      if (ia.comp[a.times(x, y)] != a.plus(ia.comp[y], ia.comp[x]))
        return fail(a, "De Morgan ~(x*y) = ~y+~x", {x, y});
      if (ia.comp[a.plus(x, y)] != a.times(ia.comp[y], ia.comp[x]))
        return fail(a, "De Morgan ~(x+y) = ~y*~x", {x, y});
    }
  if (a.has_lattice) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (ia.comp[a.meet(x, y)] != a.join(ia.comp[x], ia.comp[y]))
          return fail(a, "De Morgan ~(x^y) = ~x v ~y", {x, y});
        if (ia.comp[a.join(x, y)] != a.meet(ia.comp[x], ia.comp[y]))
          return fail(a, "De Morgan ~(x v y) = ~x ^ ~y", {x, y});
      }
  }
  return {};
}

ValidationReport validate_interior(const OrderedAlgebra& a, const InteriorOperator& io) {
  const int n = a.size();
  if (static_cast<int>(io.sigma.size()) != n) return fail(a, "sigma table total", {});
  for (int x = 0; x < n; ++x) {
    if (io.sigma[x] < 0 || io.sigma[x] >= n) return fail(a, "sigma table total", {x});
    if (!a.leq(io.sigma[x], x)) return fail(a, "sigma decreasing", {x});
    if (io.sigma[io.sigma[x]] != io.sigma[x]) return fail(a, "sigma idempotent", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.leq(x, y) && !a.leq(io.sigma[x], io.sigma[y]))
        return fail(a, "sigma isotone", {x, y});
  return {};
}

void require_valid(const OrderedAlgebra& a) {
  if (auto r = validate(a); !r) throw AxiomViolation(std::move(r));
}

void require_valid(const InvolutiveAlgebra& a) {
  if (auto r = validate(a); !r) throw AxiomViolation(std::move(r));
}

std::optional<int> residual(const OrderedAlgebra& a, int x, int y) {
  const int n = a.size();
  int best = -1;
  for (int c = 0; c < n; ++c) {
    if (!a.leq(a.times(x, c), y)) continue;
    if (best == -1 || a.leq(best, c)) best = c;
  }
  if (best == -1) return std::nullopt;
  for (int c = 0; c < n; ++c)
    if (a.leq(a.times(x, c), y) && !a.leq(c, best)) return std::nullopt;
  return best;
}

bool is_residuated(const OrderedAlgebra& a) {
  if (!a.has_mul()) return false;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!residual(a, x, y)) return false;
  return true;
}

std::optional<int> complement_of(const OrderedAlgebra& a, int x) {
  if (!a.one || !a.zero) return std::nullopt;
  std::optional<int> found;
  for (int y = 0; y < a.size(); ++y) {
    bool is_comp = a.leq(a.times(x, y), *a.zero) && a.leq(*a.one, a.plus(x, y)) &&
                   a.leq(a.times(y, x), *a.zero) && a.leq(*a.one, a.plus(y, x));
    if (is_comp) {
      if (found) return std::nullopt;  // uniqueness is a theorem; treat a tie as absence
      found = y;
    }
  }
  return found;
}

std::optional<InvolutiveAlgebra> make_involutive(const OrderedAlgebra& a) {
  InvolutiveAlgebra ia;
  ia.base = a;
  ia.comp.resize(a.size());
  for (int x = 0; x < a.size(); ++x) {
    auto c = complement_of(a, x);
    if (!c) return std::nullopt;
    ia.comp[x] = *c;
  }
  return ia;
}

std::optional<bool> is_admissible_join(const OrderedAlgebra& a, const std::vector<int>& subset) {
  auto j = a.poset.join_of(subset);
  if (!j) return std::nullopt;
  for (int y = 0; y < a.size(); ++y) {
    std::vector<int> right, left;
    for (int x : subset) {
      right.push_back(a.times(x, y));
      left.push_back(a.times(y, x));
    }
    auto jr = a.poset.join_of(right);
    auto jl = a.poset.join_of(left);
    if (!jr || *jr != a.times(*j, y)) return false;
    if (!jl || *jl != a.times(y, *j)) return false;
  }
  return true;
}

std::optional<bool> is_admissible_meet(const OrderedAlgebra& a, const std::vector<int>& subset) {
  auto m = a.poset.meet_of(subset);
  if (!m) return std::nullopt;
  for (int y = 0; y < a.size(); ++y) {
    std::vector<int> right, left;
    for (int x : subset) {
      right.push_back(a.plus(x, y));
      left.push_back(a.plus(y, x));
    }
    auto mr = a.poset.meet_of(right);
    auto ml = a.poset.meet_of(left);
    if (!mr || *mr != a.plus(*m, y)) return false;
    if (!ml || *ml != a.plus(y, *m)) return false;
  }
  return true;
}

bool is_mul_integral(const OrderedAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!a.leq(a.times(x, y), x) || !a.leq(a.times(x, y), y)) return false;
  return true;
}

bool is_add_integral(const OrderedAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!a.leq(x, a.plus(x, y)) || !a.leq(y, a.plus(x, y))) return false;
  return true;
}

bool is_bi_integral(const OrderedAlgebra& a) {
  return a.has_mul() && a.has_add() && is_mul_integral(a) && is_add_integral(a);
}

bool is_mul_idempotent(const OrderedAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    if (a.times(x, x) != x) return false;
  return true;
}

bool is_idempotent(const OrderedAlgebra& a) {
  if (!is_mul_idempotent(a)) return false;
  for (int x = 0; x < a.size(); ++x)
    if (a.plus(x, x) != x) return false;
  return true;
}

bool is_distributive_lattice_bimonoid(const OrderedAlgebra& a) {
  return a.has_mul() && a.has_add() && is_idempotent(a) && is_bi_integral(a) &&
         static_cast<bool>(validate(a));
}

bool is_brouwerian(const OrderedAlgebra& a) {
  return a.has_mul() && a.one && a.poset.is_lattice() && is_mul_integral(a) &&
         is_mul_idempotent(a) && is_residuated(a);
}

bool is_brouwerian_semilattice(const OrderedAlgebra& a) {
  return a.has_mul() && a.one && is_mul_integral(a) && is_mul_idempotent(a) && is_residuated(a);
}

bool is_boolean_pointed(const OrderedAlgebra& a) {
  if (!is_brouwerian(a) || !a.zero) return false;
  for (int x = 0; x < a.size(); ++x) {
    int to0 = *residual(a, x, *a.zero);
    if (*a.poset.join(x, to0) != *a.one) return false;
  }
  return true;
}

MorphismReport check_morphism(const std::vector<int>& f, const OrderedAlgebra& src,
                              const OrderedAlgebra& dst, MorphismOptions opt) {
  auto bad = [](std::string w) { return MorphismReport{false, std::move(w)}; };
  const int n = src.size();
  if (static_cast<int>(f.size()) != n) return bad("map not total on source carrier");
  for (int x : f)
    if (x < 0 || x >= dst.size()) return bad("map leaves target carrier");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (src.leq(x, y) && !dst.leq(f[x], f[y]))
        return bad("order not preserved at (" + src.el(x) + "," + src.el(y) + ")");
      if (opt.embedding && dst.leq(f[x], f[y]) && !src.leq(x, y))
        return bad("order not reflected at (" + src.el(x) + "," + src.el(y) + ")");
    }
  if (src.has_mul()) {
    if (!dst.has_mul()) return bad("target lacks multiplication");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[src.times(x, y)] != dst.times(f[x], f[y]))
          return bad("mul not preserved at (" + src.el(x) + "," + src.el(y) + ")");
  }
  if (src.has_add()) {
    if (!dst.has_add()) return bad("target lacks addition");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[src.plus(x, y)] != dst.plus(f[x], f[y]))
          return bad("add not preserved at (" + src.el(x) + "," + src.el(y) + ")");
  }
  if (src.one && (!dst.one || f[*src.one] != *dst.one)) return bad("mul unit not preserved");
  if (src.zero && (!dst.zero || f[*src.zero] != *dst.zero)) return bad("add unit not preserved");

  if (opt.complete) {
    if (n > 20) return bad("complete-morphism check capped at 20 elements");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> xs, ys;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          xs.push_back(i);
          ys.push_back(f[i]);
        }
      if (auto j = src.poset.join_of(xs)) {
        auto dj = dst.poset.join_of(ys);
        if (!dj || *dj != f[*j]) return bad("an existing join is not preserved");
      }
      if (auto m = src.poset.meet_of(xs)) {
        auto dm = dst.poset.meet_of(ys);
        if (!dm || *dm != f[*m]) return bad("an existing meet is not preserved");
      }
    }
  }
  return {};
}

bool check_normal_interior(const InvolutiveAlgebra& a, const InteriorOperator& io,
                           std::string* why) {
  auto explain = [&](std::string w) {
    if (why) *why = std::move(w);
    return false;
  };
  if (auto r = validate_interior(a.base, io); !r) return explain(r.detail);
  const int n = a.size();
  std::vector<uint8_t> in_image(n, 0);
  for (int x = 0; x < n; ++x) in_image[io.sigma[x]] = 1;
  if (!in_image[*a.base.one]) return explain("image of sigma misses 1");
  if (!in_image[*a.base.zero]) return explain("image of sigma misses 0");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!in_image[x] || !in_image[y]) continue;
      if (!in_image[a.base.times(x, y)]) return explain("image of sigma not closed under mul");
      if (!in_image[a.base.plus(x, y)]) return explain("image of sigma not closed under add");
    }
  for (int x = 0; x < n; ++x) {
    int rebuilt = a.base.times(io.sigma[x], a.comp[io.sigma[a.comp[x]]]);
    if (rebuilt != x)
      return explain("normality fails at " + a.base.el(x) + ": got " + a.base.el(rebuilt));
  }
  return true;
}

namespace {

bool ops_match(const OrderedAlgebra& a, const OrderedAlgebra& b, const std::vector<int>& map,
               int next) {
  for (int prev = 0; prev <= next; ++prev) {
    int x = next, y = prev;
    for (int swap = 0; swap < 2; ++swap) {
      if (a.has_mul() && map[a.times(x, y)] != -1 &&
          map[a.times(x, y)] != b.times(map[x], map[y]))
        return false;
      if (a.has_add() && map[a.plus(x, y)] != -1 && map[a.plus(x, y)] != b.plus(map[x], map[y]))
        return false;
      std::swap(x, y);
    }
  }
  return true;
}

bool extend_alg_iso(const OrderedAlgebra& a, const OrderedAlgebra& b, std::vector<int>& map,
                    std::vector<uint8_t>& used, int next) {
  const int n = a.size();
  if (next == n) {
    // closure of partially-checked op equations: everything is mapped now
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (a.has_mul() && map[a.times(x, y)] != b.times(map[x], map[y])) return false;
        if (a.has_add() && map[a.plus(x, y)] != b.plus(map[x], map[y])) return false;
      }
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a.one && ((*a.one == next) != (*b.one == cand))) continue;
    if (a.zero && ((*a.zero == next) != (*b.zero == cand))) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = (a.leq(prev, next) == b.leq(map[prev], cand)) &&
           (a.leq(next, prev) == b.leq(cand, map[prev]));
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (ops_match(a, b, map, next) && extend_alg_iso(a, b, map, used, next + 1)) return true;
    map[next] = -1;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const OrderedAlgebra& a,
                                                 const OrderedAlgebra& b) {
  if (a.size() != b.size() || a.has_mul() != b.has_mul() || a.has_add() != b.has_add())
    return std::nullopt;
  if (a.one.has_value() != b.one.has_value() || a.zero.has_value() != b.zero.has_value())
    return std::nullopt;
  std::vector<int> map(a.size(), -1);
  std::vector<uint8_t> used(a.size(), 0);
  if (extend_alg_iso(a, b, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace bimlab
