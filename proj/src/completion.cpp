#include "bimlab/completion.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "bimlab/kernels.hpp"

namespace bimlab {

namespace {

ValidationReport frame_fail(std::string what) {
  ValidationReport r;
  r.ok = false;
  r.axiom = std::move(what);
  r.detail = r.axiom;
  return r;
}

}  // namespace

ValidationReport validate_frame(const GaloisFrame& f, const OrderedAlgebra* a) {
  // monoid sanity
  for (int x = 0; x < f.nl; ++x) {
    if (f.ol(f.unit_l, x) != x || f.ol(x, f.unit_l) != x)
      return frame_fail("L unit law fails");
    for (int y = 0; y < f.nl; ++y)
      for (int z = 0; z < f.nl; ++z)
        if (f.ol(f.ol(x, y), z) != f.ol(x, f.ol(y, z)))
          return frame_fail("L associativity fails");
  }
  for (int x = 0; x < f.nr; ++x) {
    if (f.opr(f.unit_r, x) != x || f.opr(x, f.unit_r) != x)
      return frame_fail("R unit law fails");
    for (int y = 0; y < f.nr; ++y)
      for (int z = 0; z < f.nr; ++z)
        if (f.opr(f.opr(x, y), z) != f.opr(x, f.opr(y, z)))
          return frame_fail("R associativity fails");
  }
  // nuclearity, both displays
  for (int x = 0; x < f.nl; ++x)
    for (int y = 0; y < f.nl; ++y)
      for (int z = 0; z < f.nr; ++z) {
        bool mid = f.sq(f.ol(x, y), z);
        if (mid != f.sq(x, f.opr(z, f.lmap[y])))  // x sq z (+) l(y)
          return frame_fail("nuclearity (left reading) fails");
        if (mid != f.sq(y, f.opr(f.lmap[x], z)))  // y sq r(x) (+) z
          return frame_fail("nuclearity (right reading) fails");
      }
  for (int x = 0; x < f.nl; ++x)
    for (int y = 0; y < f.nr; ++y)
      for (int z = 0; z < f.nr; ++z) {
        bool mid = f.sq(x, f.opr(y, z));
        if (mid != f.sq(f.ol(x, f.rmap[z]), y))  // x o r(z) sq y
          return frame_fail("nuclearity (add, left reading) fails");
        if (mid != f.sq(f.ol(f.rmap[y], x), z))  // l(y) o x sq z
          return frame_fail("nuclearity (add, right reading) fails");
      }

  if (!a) return {};
  const OrderedAlgebra& A = *a;
  const int n = A.size();
  if (static_cast<int>(f.lambda.size()) != n || static_cast<int>(f.rho.size()) != n)
    return frame_fail("lambda/rho not total on A");

  // Identity and Cut
  for (int g = 0; g < n; ++g)
    if (!f.sq(f.lambda[g], f.rho[g])) return frame_fail("Identity fails");
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < f.nl; ++x) {
      if (!f.sq(x, f.rho[g])) continue;
      for (int y = 0; y < f.nr; ++y)
        if (f.sq(f.lambda[g], y) && !f.sq(x, y)) return frame_fail("Cut fails");
    }
  // faithfulness
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (f.sq(f.lambda[g], f.rho[h]) && !A.leq(g, h)) return frame_fail("frame not faithful");

  // Gentzen conditions for the declared signature
  if (A.one) {
    if (!f.sq(f.unit_l, f.rho[*A.one])) return frame_fail("Gentzen right rule for 1 fails");
    for (int y = 0; y < f.nr; ++y)
      if (f.sq(f.unit_l, y) && !f.sq(f.lambda[*A.one], y))
        return frame_fail("Gentzen left rule for 1 fails");
  }
  if (A.zero) {
    if (!f.sq(f.lambda[*A.zero], f.unit_r)) return frame_fail("Gentzen left rule for 0 fails");
    for (int x = 0; x < f.nl; ++x)
      if (f.sq(x, f.unit_r) && !f.sq(x, f.rho[*A.zero]))
        return frame_fail("Gentzen right rule for 0 fails");
  }
  if (A.has_mul()) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int gh = A.times(g, h);
        // left rule: lambda(g) o lambda(h) sq y  implies  lambda(g.h) sq y
        for (int y = 0; y < f.nr; ++y)
          if (f.sq(f.ol(f.lambda[g], f.lambda[h]), y) && !f.sq(f.lambda[gh], y))
            return frame_fail("Gentzen left rule for mul fails");
        // right rule: x sq rho(g) and y sq rho(h)  implies  x o y sq rho(g.h)
        for (int x = 0; x < f.nl; ++x) {
          if (!f.sq(x, f.rho[g])) continue;
          for (int y = 0; y < f.nl; ++y)
            if (f.sq(y, f.rho[h]) && !f.sq(f.ol(x, y), f.rho[gh]))
              return frame_fail("Gentzen right rule for mul fails");
        }
      }
  }
  if (A.has_add()) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int gh = A.plus(g, h);
        // left rule: lambda(g) sq x and lambda(h) sq y  implies  lambda(g+h) sq x (+) y
        for (int x = 0; x < f.nr; ++x) {
          if (!f.sq(f.lambda[g], x)) continue;
          for (int y = 0; y < f.nr; ++y)
            if (f.sq(f.lambda[h], y) && !f.sq(f.lambda[gh], f.opr(x, y)))
              return frame_fail("Gentzen left rule for add fails");
        }
        // right rule: x sq rho(g) (+) rho(h)  implies  x sq rho(g+h)
        for (int x = 0; x < f.nl; ++x)
          if (f.sq(x, f.opr(f.rho[g], f.rho[h])) && !f.sq(x, f.rho[gh]))
            return frame_fail("Gentzen right rule for add fails");
      }
  }
  if (A.has_lattice) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int join = *A.poset.join(g, h), meet = *A.poset.meet(g, h);
        for (int x = 0; x < f.nr; ++x) {
          if (f.sq(f.lambda[g], x) && f.sq(f.lambda[h], x) && !f.sq(f.lambda[join], x))
            return frame_fail("Gentzen left rule for join fails");
          if (f.sq(f.lambda[g], x) && !f.sq(f.lambda[meet], x))
            return frame_fail("Gentzen left rule for meet fails");
        }
        for (int x = 0; x < f.nl; ++x) {
          if (f.sq(x, f.rho[g]) && f.sq(x, f.rho[h]) && !f.sq(x, f.rho[meet]))
            return frame_fail("Gentzen right rule for meet fails");
          if (f.sq(x, f.rho[g]) && !f.sq(x, f.rho[join]))
            return frame_fail("Gentzen right rule for join fails");
        }
      }
  }
  return {};
}

GaloisFrame quotient_frame(const GaloisFrame& f) {
  // classes of identical rows / columns
  std::vector<int> lclass(f.nl, -1), rclass(f.nr, -1);
  std::vector<int> lrep, rrep;
  for (int x = 0; x < f.nl; ++x) {
    for (std::size_t c = 0; c < lrep.size() && lclass[x] < 0; ++c) {
      bool same = true;
      for (int y = 0; y < f.nr && same; ++y) same = f.sq(x, y) == f.sq(lrep[c], y);
      if (same) lclass[x] = static_cast<int>(c);
    }
    if (lclass[x] < 0) {
      lclass[x] = static_cast<int>(lrep.size());
      lrep.push_back(x);
    }
  }
  for (int y = 0; y < f.nr; ++y) {
    for (std::size_t c = 0; c < rrep.size() && rclass[y] < 0; ++c) {
      bool same = true;
      for (int x = 0; x < f.nl && same; ++x) same = f.sq(x, y) == f.sq(x, rrep[c]);
      if (same) rclass[y] = static_cast<int>(c);
    }
    if (rclass[y] < 0) {
      rclass[y] = static_cast<int>(rrep.size());
      rrep.push_back(y);
    }
  }
  GaloisFrame q;
  q.nl = static_cast<int>(lrep.size());
  q.nr = static_cast<int>(rrep.size());
  q.op_l.resize(q.nl * q.nl);
  q.op_r.resize(q.nr * q.nr);
  q.rel.resize(q.nl * q.nr);
  q.lmap.resize(q.nl);
  q.rmap.resize(q.nr);
  for (int x = 0; x < q.nl; ++x)
    for (int y = 0; y < q.nl; ++y) q.op_l[x * q.nl + y] = lclass[f.ol(lrep[x], lrep[y])];
  for (int x = 0; x < q.nr; ++x)
    for (int y = 0; y < q.nr; ++y) q.op_r[x * q.nr + y] = rclass[f.opr(rrep[x], rrep[y])];
  for (int x = 0; x < q.nl; ++x)
    for (int y = 0; y < q.nr; ++y) q.rel[x * q.nr + y] = f.sq(lrep[x], rrep[y]);
  for (int x = 0; x < q.nl; ++x) q.lmap[x] = rclass[f.lmap[lrep[x]]];
  for (int y = 0; y < q.nr; ++y) q.rmap[y] = lclass[f.rmap[rrep[y]]];
  q.unit_l = lclass[f.unit_l];
  q.unit_r = rclass[f.unit_r];
  if (!f.lambda.empty()) {
    q.lambda.resize(f.lambda.size());
    q.rho.resize(f.rho.size());
    for (std::size_t g = 0; g < f.lambda.size(); ++g) {
      q.lambda[g] = lclass[f.lambda[g]];
      q.rho[g] = rclass[f.rho[g]];
    }
  }
  // label of a class: prefer the simplest member label (shortest, then lex)
  q.l_labels.assign(q.nl, "");
  if (!f.l_labels.empty())
    for (int x = 0; x < f.nl; ++x) {
      std::string& slot = q.l_labels[lclass[x]];
      const std::string& cand = f.l_labels[x];
      if (slot.empty() || cand.size() < slot.size() || (cand.size() == slot.size() && cand < slot))
        slot = cand;
    }
  return q;
}

GaloisFrame frame_of_bimonoid_raw(const OrderedAlgebra& a) {
  if (!a.commutative || !a.has_mul() || !a.has_add() || !a.one || !a.zero)
    throw FrameError("frame_of_bimonoid: input must be a commutative bimonoid");
  const int n = a.size();
  const int m = n * n;
  auto pidx = [&](int x, int y) { return x * n + y; };
  GaloisFrame f;
  f.nl = f.nr = m;
  f.op_l.resize(m * m);
  f.op_r.resize(m * m);
  f.rel.resize(m * m);
  f.lmap.resize(m);
  f.rmap.resize(m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int p = pidx(x, y);
      f.lmap[p] = pidx(y, x);
      f.rmap[p] = pidx(y, x);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          int q = pidx(u, v);
          f.op_l[p * m + q] = pidx(a.times(x, u), a.plus(y, v));
          f.op_r[p * m + q] = pidx(a.plus(x, u), a.times(y, v));
          // <x,y> sq <u,v>  iff  x.v <= y+u
          f.rel[p * m + q] = a.leq(a.times(x, v), a.plus(y, u));
        }
    }
  f.unit_l = pidx(*a.one, *a.zero);
  f.unit_r = pidx(*a.zero, *a.one);
  f.lambda.resize(n);
  f.rho.resize(n);
  for (int g = 0; g < n; ++g) {
    f.lambda[g] = pidx(g, *a.zero);
    f.rho[g] = pidx(g, *a.one);
  }
  f.l_labels.resize(m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::string lab;
      if (y == *a.zero)
        lab = a.el(x);
      else if (x == *a.one)
        lab = "~" + a.el(y);
      else
        lab = a.el(x) + "*~" + a.el(y);
      f.l_labels[pidx(x, y)] = lab;
    }
  return f;
}

GaloisFrame frame_of_bimonoid(const OrderedAlgebra& a) {
  auto f = quotient_frame(frame_of_bimonoid_raw(a));
  if (auto r = validate_frame(f, &a); !r) throw FrameError("frame axioms violated: " + r.detail);
  return f;
}

Bitset polar_right(const GaloisFrame& f, const Bitset& x) {
  Bitset out(f.nr);
  for (int y = 0; y < f.nr; ++y) {
    bool all = true;
    for (int i = 0; i < f.nl && all; ++i)
      if (x.test(i)) all = f.sq(i, y);
    if (all) out.set(y);
  }
  return out;
}

Bitset polar_left(const GaloisFrame& f, const Bitset& y) {
  Bitset out(f.nl);
  for (int x = 0; x < f.nl; ++x) {
    bool all = true;
    for (int j = 0; j < f.nr && all; ++j)
      if (y.test(j)) all = f.sq(x, j);
    if (all) out.set(x);
  }
  return out;
}

Bitset closure_right(const GaloisFrame& f, const Bitset& x) {
  return polar_left(f, polar_right(f, x));
}

Bitset closure_left(const GaloisFrame& f, const Bitset& y) {
  return polar_right(f, polar_left(f, y));
}

int CompletionResult::index_of(const Bitset& b) const {
  for (std::size_t i = 0; i < closed.size(); ++i)
    if (closed[i] == b) return static_cast<int>(i);
  return -1;
}

CompletionResult galois_algebra(const GaloisFrame& f, int size_cap) {
  CompletionResult out;
  out.frame = f;

  // Closed sets are exactly the intersections of principal polars y^<|,
  // together with L itself (the empty intersection).
  std::vector<Bitset> seeds;
  {
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int y = 0; y < f.nr; ++y) {
      Bitset one(f.nr);
      one.set(y);
      Bitset p = polar_left(f, one);
      if (seen.emplace(p, 1).second) seeds.push_back(p);
    }
    Bitset full(f.nl);
    full.set_all();
    if (seen.emplace(full, 1).second) seeds.push_back(full);
  }
  std::unordered_map<Bitset, int, BitsetHash> known;
  std::vector<Bitset> all;
  for (const auto& s : seeds)
    if (known.emplace(s, 1).second) all.push_back(s);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Bitset meet = all[i] & all[j];
      if (known.emplace(meet, 1).second) {
        all.push_back(meet);
        if (static_cast<int>(all.size()) > size_cap) throw SizeCapExceeded(size_cap);
      }
    }
  }
  std::sort(all.begin(), all.end(),
            [](const Bitset& a, const Bitset& b) { return a.canonical_less(b); });
  out.closed = std::move(all);
  const int N = static_cast<int>(out.closed.size());
  std::unordered_map<Bitset, int, BitsetHash> index;
  for (int i = 0; i < N; ++i) index.emplace(out.closed[i], i);
  auto idx = [&](const Bitset& b) {
    auto it = index.find(b);
    if (it == index.end()) throw FrameError("operation left the closed-set family");
    return it->second;
  };

  // order by inclusion
  std::vector<uint8_t> leq(N * N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) leq[i * N + j] = out.closed[i].is_subset_of(out.closed[j]);
  std::vector<std::string> names(N);
  for (int i = 0; i < N; ++i) names[i] = "X" + std::to_string(i);

  OrderedAlgebra alg;
  alg.poset = FinitePoset::from_relation(N, std::move(leq), std::move(names));
  alg.commutative = true;
  alg.has_lattice = true;

  // mul: (X o Y)^|><|, add: (X^|> (+) Y^|>)^<|
  std::vector<int> mul(N * N), add(N * N);
  std::vector<Bitset> polars(N);
  for (int i = 0; i < N; ++i) polars[i] = polar_right(f, out.closed[i]);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Bitset prod(f.nl);
      for (int x = 0; x < f.nl; ++x) {
        if (!out.closed[i].test(x)) continue;
        for (int y = 0; y < f.nl; ++y)
          if (out.closed[j].test(y)) prod.set(f.ol(x, y));
      }
      mul[i * N + j] = idx(closure_right(f, prod));
      Bitset sum(f.nr);
      for (int x = 0; x < f.nr; ++x) {
        if (!polars[i].test(x)) continue;
        for (int y = 0; y < f.nr; ++y)
          if (polars[j].test(y)) sum.set(f.opr(x, y));
      }
      add[i * N + j] = idx(polar_left(f, sum));
    }
  alg.mul = std::move(mul);
  alg.add = std::move(add);
  {
    Bitset one_seed(f.nl);
    one_seed.set(f.unit_l);
    alg.one = idx(closure_right(f, one_seed));
    Bitset zero_seed(f.nr);
    zero_seed.set(f.unit_r);
    alg.zero = idx(polar_left(f, zero_seed));
  }
  // complement: (l[X])^<|
  std::vector<int> comp(N);
  for (int i = 0; i < N; ++i) {
    Bitset img(f.nr);
    for (int x = 0; x < f.nl; ++x)
      if (out.closed[i].test(x)) img.set(f.lmap[x]);
    comp[i] = idx(polar_left(f, img));
  }
  out.algebra.base = std::move(alg);
  out.algebra.comp = std::move(comp);

  if (!f.rho.empty()) {
    out.embed.resize(f.rho.size());
    for (std::size_t g = 0; g < f.rho.size(); ++g) {
      Bitset one(f.nr);
      one.set(f.rho[g]);
      out.embed[g] = idx(polar_left(f, one));
    }
  }

  // generator order: x <= y iff x lies in the closure of {y}
  std::vector<Bitset> gen_closure(f.nl);
  for (int x = 0; x < f.nl; ++x) {
    Bitset one(f.nl);
    one.set(x);
    gen_closure[x] = closure_right(f, one);
  }
  out.gen_index.resize(N);
  out.labels.resize(N);
  for (int i = 0; i < N; ++i) {
    std::vector<int> maximal;
    for (int x = 0; x < f.nl; ++x) {
      if (!out.closed[i].test(x)) continue;
      bool dominated = false;
      for (int y = 0; y < f.nl && !dominated; ++y)
        dominated = y != x && out.closed[i].test(y) && gen_closure[y].test(x) &&
                    !gen_closure[x].test(y);
      if (!dominated) maximal.push_back(x);
    }
    out.gen_index[i] = maximal;
    std::ostringstream lab;
    for (std::size_t k = 0; k < maximal.size(); ++k) {
      if (k) lab << " v ";
      lab << (f.l_labels.empty() ? "g" + std::to_string(maximal[k]) : f.l_labels[maximal[k]]);
    }
    out.labels[i] = lab.str();
  }
  return out;
}

CompletionResult dm_completion(const OrderedAlgebra& a, int size_cap) {
  require_valid(a);
  auto f = frame_of_bimonoid(a);
  auto out = galois_algebra(f, size_cap);
  if (auto r = validate(out.algebra); !r)
    throw FrameError("completion failed involutive validation: " + r.detail);

  MorphismOptions opt;
  opt.embedding = true;
  auto m = check_morphism(out.embed, a, out.algebra.base, opt);
  if (!m) throw FrameError("completion embedding check failed: " + m.what);
  if (a.has_lattice) {
    // embeddings of lattice-ordered inputs must preserve binary joins/meets
    const auto& c = out.algebra.base;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        if (out.embed[*a.poset.join(x, y)] != *c.poset.join(out.embed[x], out.embed[y]))
          throw FrameError("completion embedding does not preserve joins");
        if (out.embed[*a.poset.meet(x, y)] != *c.poset.meet(out.embed[x], out.embed[y]))
          throw FrameError("completion embedding does not preserve meets");
      }
  }

  // double density: every element is the join of the products a.~b below it
  // and the meet of the sums a+~b above it.
  const auto& c = out.algebra.base;
  const int N = c.size();
  for (int e = 0; e < N; ++e) {
    std::vector<int> lows, highs;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        int prod = c.times(out.embed[x], out.algebra.comp[out.embed[y]]);
        if (c.leq(prod, e)) lows.push_back(prod);
        int sum = c.plus(out.embed[x], out.algebra.comp[out.embed[y]]);
        if (c.leq(e, sum)) highs.push_back(sum);
      }
    auto j = c.poset.join_of(lows);
    auto mt = c.poset.meet_of(highs);
    if (!j || *j != e) throw FrameError("join density fails in completion");
    if (!mt || *mt != e) throw FrameError("meet density fails in completion");
  }
  return out;
}

bool compare_generators(const OrderedAlgebra& alg, GenExpr lhs, GenExpr rhs, int jobs) {
  const int n = alg.size();
  const long long n2 = static_cast<long long>(n) * n;
  if (lhs.side == GenSide::Mul && rhs.side == GenSide::Add) {
    // a.~b <= c+~d  iff  a.d <= b+c
    return alg.leq(alg.times(lhs.a, rhs.b), alg.plus(lhs.b, rhs.a));
  }
  if (lhs.side == GenSide::Mul && rhs.side == GenSide::Mul) {
    // forall x,y: x.c <= y+d  implies  x.a <= y+b
    return first_violation(
               n2,
               [&](long long i) {
                 int x = static_cast<int>(i / n), y = static_cast<int>(i % n);
                 return !alg.leq(alg.times(x, rhs.a), alg.plus(y, rhs.b)) ||
                        alg.leq(alg.times(x, lhs.a), alg.plus(y, lhs.b));
               },
               jobs) < 0;
  }
  if (lhs.side == GenSide::Add && rhs.side == GenSide::Mul) {
    // p+~q <= c.~d  iff  forall u,v,x,y:
    //   u.q <= v+p and x.c <= y+d  implies  u.x <= v+y
    return first_violation(
               n2 * n2,
               [&](long long i) {
                 int u = static_cast<int>(i / (n2 * n));
                 int v = static_cast<int>((i / n2) % n);
                 int x = static_cast<int>((i / n) % n);
                 int y = static_cast<int>(i % n);
                 return !(alg.leq(alg.times(u, lhs.b), alg.plus(v, lhs.a)) &&
                          alg.leq(alg.times(x, rhs.a), alg.plus(y, rhs.b))) ||
                        alg.leq(alg.times(u, x), alg.plus(v, y));
               },
               jobs) < 0;
  }
  // add <= add: every join generator below lhs is below rhs
  return first_violation(
             n2,
             [&](long long i) {
               int u = static_cast<int>(i / n), v = static_cast<int>(i % n);
               return !alg.leq(alg.times(u, lhs.b), alg.plus(v, lhs.a)) ||
                      alg.leq(alg.times(u, rhs.b), alg.plus(v, rhs.a));
             },
             jobs) < 0;
}

// --- unital completion of bisemigroups ---------------------------------------

namespace {

struct FourSort {
  // 0 = unit, 1..n = plain, n+1..2n = comp, 2n+1.. = pair(a,b)
  int n;
  int unit() const { return 0; }
  int plain(int a) const { return 1 + a; }
  int comp(int b) const { return 1 + n + b; }
  int pair(int a, int b) const { return 1 + 2 * n + a * n + b; }
  int total() const { return 1 + 2 * n + n * n; }

  enum class Tag { Unit, Plain, Comp, Pair };
  Tag tag(int i) const {
    if (i == 0) return Tag::Unit;
    if (i <= n) return Tag::Plain;
    if (i <= 2 * n) return Tag::Comp;
    return Tag::Pair;
  }
  int first(int i) const {  // plain value, comp value, or pair.a
    switch (tag(i)) {
      case Tag::Plain: return i - 1;
      case Tag::Comp: return i - 1 - n;
      default: return (i - 1 - 2 * n) / n;
    }
  }
  int second(int i) const { return (i - 1 - 2 * n) % n; }
};

}  // namespace

CompletionResult dm_completion_bisemigroup(const OrderedAlgebra& a, const std::vector<int>& F,
                                           const std::vector<int>& I, bool alpha_plus,
                                           int size_cap) {
  require_valid(a);
  if (!a.commutative || !a.has_mul() || !a.has_add())
    throw UnitalCompletionError("input must be a commutative bisemigroup");
  const int n = a.size();
  std::vector<uint8_t> inF(n, 0), inI(n, 0);
  for (int x : F) inF[x] = 1;
  for (int x : I) inI[x] = 1;
  // compatibility
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (inF[x] && a.leq(x, y) && !inF[y]) throw UnitalCompletionError("F is not an upset");
      if (inI[x] && a.leq(y, x) && !inI[y]) throw UnitalCompletionError("I is not a downset");
    }
    if (inF[x])
      for (int b = 0; b < n; ++b)
        if (!a.leq(b, a.times(b, x)))
          throw UnitalCompletionError("F member violates b <= b.f");
    if (inI[x])
      for (int b = 0; b < n; ++b)
        if (!a.leq(a.plus(b, x), b))
          throw UnitalCompletionError("I member violates b+i <= b");
    if (inF[x] && inI[x] && !alpha_plus)
      throw UnitalCompletionError("F and I meet, so the sign must be +");
  }

  FourSort s{n};
  const int m = s.total();
  GaloisFrame f;
  f.nl = f.nr = m;
  f.op_l.resize(m * m);
  f.op_r.resize(m * m);
  f.rel.resize(m * m);
  f.lmap.resize(m);
  f.rmap.resize(m);
  using Tag = FourSort::Tag;
  auto mul_of = [&](int x, int y) {  // L-side composition
    Tag tx = s.tag(x), ty = s.tag(y);
    if (tx == Tag::Unit) return y;
    if (ty == Tag::Unit) return x;
    int x1 = s.first(x), y1 = s.first(y);
    if (tx == Tag::Plain && ty == Tag::Plain) return s.plain(a.times(x1, y1));
    if (tx == Tag::Plain && ty == Tag::Comp) return s.pair(x1, y1);
    if (tx == Tag::Comp && ty == Tag::Plain) return s.pair(y1, x1);
    if (tx == Tag::Comp && ty == Tag::Comp) return s.comp(a.plus(x1, y1));
    if (tx == Tag::Plain && ty == Tag::Pair) return s.pair(a.times(x1, y1), s.second(y));
    if (tx == Tag::Pair && ty == Tag::Plain) return s.pair(a.times(x1, y1), s.second(x));
    if (tx == Tag::Comp && ty == Tag::Pair) return s.pair(s.first(y), a.plus(x1, s.second(y)));
    if (tx == Tag::Pair && ty == Tag::Comp) return s.pair(x1, a.plus(s.second(x), y1));
    return s.pair(a.times(x1, y1), a.plus(s.second(x), s.second(y)));
  };
  auto add_of = [&](int x, int y) {  // R-side composition
    Tag tx = s.tag(x), ty = s.tag(y);
    if (tx == Tag::Unit) return y;
    if (ty == Tag::Unit) return x;
    int x1 = s.first(x), y1 = s.first(y);
    if (tx == Tag::Plain && ty == Tag::Plain) return s.plain(a.plus(x1, y1));
    if (tx == Tag::Plain && ty == Tag::Comp) return s.pair(x1, y1);
    if (tx == Tag::Comp && ty == Tag::Plain) return s.pair(y1, x1);
    if (tx == Tag::Comp && ty == Tag::Comp) return s.comp(a.times(x1, y1));
    if (tx == Tag::Plain && ty == Tag::Pair) return s.pair(a.plus(x1, y1), s.second(y));
    if (tx == Tag::Pair && ty == Tag::Plain) return s.pair(a.plus(x1, y1), s.second(x));
    if (tx == Tag::Comp && ty == Tag::Pair) return s.pair(s.first(y), a.times(x1, s.second(y)));
    if (tx == Tag::Pair && ty == Tag::Comp) return s.pair(x1, a.times(s.second(x), y1));
    return s.pair(a.plus(x1, y1), a.times(s.second(x), s.second(y)));
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      f.op_l[x * m + y] = mul_of(x, y);
      f.op_r[x * m + y] = add_of(x, y);
    }
  f.unit_l = s.unit();
  f.unit_r = s.unit();
  for (int x = 0; x < m; ++x) {
    switch (s.tag(x)) {
      case Tag::Unit:
        f.lmap[x] = s.unit();
        f.rmap[x] = s.unit();
        break;
      case Tag::Plain:
        f.lmap[x] = s.comp(s.first(x));
        f.rmap[x] = s.comp(s.first(x));
        break;
      case Tag::Comp:
        f.lmap[x] = s.plain(s.first(x));
        f.rmap[x] = s.plain(s.first(x));
        break;
      case Tag::Pair:
        f.lmap[x] = s.pair(s.second(x), s.first(x));
        f.rmap[x] = s.pair(s.second(x), s.first(x));
        break;
    }
  }
  // the relation, by the 16-case table
  auto sq_of = [&](int x, int y) -> bool {
    Tag tx = s.tag(x), ty = s.tag(y);
    switch (tx) {
      case Tag::Unit:
        switch (ty) {
          case Tag::Unit: return alpha_plus;
          case Tag::Plain: return inF[s.first(y)];
          case Tag::Comp: return inI[s.first(y)];
          default: return a.leq(s.second(y), s.first(y));  // d <= c
        }
      case Tag::Plain: {
        int g = s.first(x);
        switch (ty) {
          case Tag::Unit: return inI[g];
          case Tag::Plain: return a.leq(g, s.first(y));
          case Tag::Comp: return inI[a.times(g, s.first(y))];
          default: return a.leq(a.times(g, s.second(y)), s.first(y));  // a.d <= c
        }
      }
      case Tag::Comp: {
        int b = s.first(x);
        switch (ty) {
          case Tag::Unit: return inF[b];
          case Tag::Plain: return inF[a.plus(b, s.first(y))];
          case Tag::Comp: return a.leq(s.first(y), b);  // d <= b
          default: return a.leq(s.second(y), a.plus(b, s.first(y)));  // d <= b+c
        }
      }
      default: {
        int ga = s.first(x), gb = s.second(x);
        switch (ty) {
          case Tag::Unit: return a.leq(ga, gb);
          case Tag::Plain: return a.leq(ga, a.plus(gb, s.first(y)));
          case Tag::Comp: return a.leq(a.times(ga, s.first(y)), gb);
          default: return a.leq(a.times(ga, s.second(y)), a.plus(gb, s.first(y)));
        }
      }
    }
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) f.rel[x * m + y] = sq_of(x, y);
  f.lambda.resize(n);
  f.rho.resize(n);
  for (int g = 0; g < n; ++g) {
    f.lambda[g] = s.plain(g);
    f.rho[g] = s.plain(g);
  }
  f.l_labels.resize(m);
  for (int x = 0; x < m; ++x) {
    switch (s.tag(x)) {
      case Tag::Unit: f.l_labels[x] = "1"; break;
      case Tag::Plain: f.l_labels[x] = a.el(s.first(x)); break;
      case Tag::Comp: f.l_labels[x] = "~" + a.el(s.first(x)); break;
      case Tag::Pair: f.l_labels[x] = a.el(s.first(x)) + "*~" + a.el(s.second(x)); break;
    }
  }

  // a bisemigroup has no unit Gentzen rules; validate against a unitless view
  OrderedAlgebra view = a;
  view.one.reset();
  view.zero.reset();
  auto q = quotient_frame(f);
  if (auto r = validate_frame(q, &view); !r)
    throw UnitalCompletionError("frame axioms violated: " + r.detail);
  auto out = galois_algebra(q, size_cap);
  if (auto r = validate(out.algebra); !r)
    throw UnitalCompletionError("completion failed involutive validation: " + r.detail);

  // the promised unit facts
  const auto& c = out.algebra.base;
  for (int g = 0; g < n; ++g) {
    if (c.leq(*c.one, out.embed[g]) != static_cast<bool>(inF[g]))
      throw UnitalCompletionError("1 <= a does not match membership in F");
    if (c.leq(out.embed[g], *c.zero) != static_cast<bool>(inI[g]))
      throw UnitalCompletionError("a <= 0 does not match membership in I");
  }
  if (c.leq(*c.one, *c.zero) != alpha_plus)
    throw UnitalCompletionError("1 <= 0 does not match the sign");
  return out;
}

FunayamaReport check_funayama(const OrderedAlgebra& a, int size_cap) {
  FunayamaReport rep;
  const int n = a.size();
  if (n > 20) throw FrameError("check_funayama capped at 20 elements");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> xs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) xs.push_back(i);
    auto adm = is_admissible_join(a, xs);
    if (adm.has_value() && !*adm) {
      rep.all_joins_admissible = false;
      rep.inadmissible_witness = xs;
      break;
    }
  }
  auto comp = dm_completion(a, size_cap);
  const auto& c = comp.algebra.base;
  for (std::uint32_t mask = 0; mask < (1u << n) && rep.embedding_preserves_joins; ++mask) {
    std::vector<int> xs, ys;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        xs.push_back(i);
        ys.push_back(comp.embed[i]);
      }
    auto j = a.poset.join_of(xs);
    if (!j) continue;
    auto cj = c.poset.join_of(ys);
    if (!cj || *cj != comp.embed[*j]) rep.embedding_preserves_joins = false;
  }
  return rep;
}

}  // namespace bimlab
