#include "bimlab/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "bimlab/completion.hpp"

namespace bimlab {

namespace {

std::vector<int> full_table(int n) { return std::vector<int>(n * n, 0); }

int& at(std::vector<int>& t, int n, int x, int y) { return t[x * n + y]; }

}  // namespace

OrderedAlgebra meet_monoid(const FinitePoset& p, const std::string& name) {
  const int n = p.size();
  auto top = p.top();
  if (!top) throw ConstructionError("meet_monoid: poset has no top");
  OrderedAlgebra a;
  a.name = name;
  a.poset = p;
  auto t = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.meet(x, y);
      if (!m) throw ConstructionError("meet_monoid: binary meets missing");
      at(t, n, x, y) = *m;
    }
  a.mul = std::move(t);
  a.one = *top;
  a.commutative = true;
  return a;
}

OrderedAlgebra from_pointed_brouwerian(const OrderedAlgebra& br, int zero) {
  if (!is_brouwerian(br)) throw ConstructionError("from_pointed_brouwerian: input not Brouwerian");
  const int n = br.size();
  if (zero < 0 || zero >= n) throw ConstructionError("from_pointed_brouwerian: zero out of range");
  OrderedAlgebra out = br;
  out.zero = zero;
  out.has_lattice = true;
  out.commutative = true;
  auto t = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = br.times(x, y);
      int lhs = *residual(br, zero, xy);
      at(t, n, x, y) = *br.poset.meet(lhs, *br.poset.join(x, y));
    }
  out.add = std::move(t);
  require_valid(out);
  return out;
}

OrderedAlgebra trivial_bimonoid(const OrderedAlgebra& pomonoid) {
  if (!pomonoid.has_mul() || !pomonoid.one)
    throw ConstructionError("trivial_bimonoid: input must be a pomonoid");
  OrderedAlgebra out = pomonoid;
  out.add = pomonoid.mul;
  out.zero = pomonoid.one;
  require_valid(out);
  return out;
}

OrderedAlgebra drastic_top(const OrderedAlgebra& pomonoid) {
  auto top = pomonoid.poset.top();
  if (!top) throw ConstructionError("drastic_top: no top element");
  OrderedAlgebra out = pomonoid;
  out.add = full_table(out.size());
  for (auto& v : *out.add) v = *top;
  out.zero.reset();
  out.has_lattice = false;
  require_valid(out);
  return out;
}

OrderedAlgebra drastic_bottom_unit(const OrderedAlgebra& pomonoid) {
  const int n = pomonoid.size();
  if (!pomonoid.has_mul() || !pomonoid.one)
    throw ConstructionError("drastic_bottom_unit: input must be a pomonoid");
  auto bot = pomonoid.poset.bottom();
  if (!bot) throw ConstructionError("drastic_bottom_unit: no bottom element");
  if (!is_mul_integral(pomonoid))
    throw ConstructionError("drastic_bottom_unit: pomonoid not integral");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool product_bot = pomonoid.times(x, y) == *bot;
      bool factor_bot = (x == *bot) || (y == *bot);
      if (product_bot != factor_bot)
        throw ConstructionError("drastic_bottom_unit: zero divisors at (" + pomonoid.el(x) + "," +
                                pomonoid.el(y) + ")");
    }
  OrderedAlgebra out = pomonoid;
  auto t = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == *bot)
        at(t, n, x, y) = x;
      else if (x == *bot)
        at(t, n, x, y) = y;
      else
        at(t, n, x, y) = *pomonoid.one;
    }
  out.add = std::move(t);
  out.zero = *bot;
  out.has_lattice = false;
  require_valid(out);
  return out;
}

OrderedAlgebra ordinal_sum(const FinitePoset& index, const std::vector<OrderedAlgebra>& parts) {
  const int k = index.size();
  if (k < 2 || !index.is_chain()) throw ConstructionError("ordinal_sum: index must be a nontrivial chain");
  if (static_cast<int>(parts.size()) != k)
    throw ConstructionError("ordinal_sum: one part per index element");
  for (int i = 0; i < k; ++i)
    if (!is_bi_integral(parts[i]))
      throw ConstructionError("ordinal_sum: part " + std::to_string(i) + " is not bi-integral");

  std::vector<int> offset(k + 1, 0);
  // lay parts out bottom-of-chain first
  std::vector<int> by_height(k);
  for (int i = 0; i < k; ++i) by_height[i] = i;
  std::sort(by_height.begin(), by_height.end(),
            [&](int a, int b) { return index.lt(a, b); });
  std::vector<int> height_of(k);
  for (int h = 0; h < k; ++h) height_of[by_height[h]] = h;

  int n = 0;
  std::vector<int> part_of, local;
  std::vector<std::string> names;
  std::vector<int> base(k, 0);
  for (int h = 0; h < k; ++h) {
    int i = by_height[h];
    base[i] = n;
    for (int j = 0; j < parts[i].size(); ++j) {
      part_of.push_back(i);
      local.push_back(j);
      names.push_back("p" + std::to_string(i) + "_" + parts[i].el(j));
      ++n;
    }
  }
  std::vector<uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = part_of[x], j = part_of[y];
      if (i == j)
        leq[x * n + y] = parts[i].leq(local[x], local[y]);
      else
        leq[x * n + y] = index.lt(i, j);
    }
  OrderedAlgebra out;
  out.poset = FinitePoset::from_relation(n, std::move(leq), std::move(names));
  auto mul = full_table(n), add = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = part_of[x], j = part_of[y];
      if (i == j) {
        at(mul, n, x, y) = base[i] + parts[i].times(local[x], local[y]);
        at(add, n, x, y) = base[i] + parts[i].plus(local[x], local[y]);
      } else if (index.lt(i, j)) {
        at(mul, n, x, y) = x;
        at(add, n, x, y) = y;
      } else {
        at(mul, n, x, y) = y;
        at(add, n, x, y) = x;
      }
    }
  out.mul = std::move(mul);
  out.add = std::move(add);
  // a unit at the right end of the chain serves the whole sum
  int top_part = by_height[k - 1], bot_part = by_height[0];
  if (parts[top_part].one) out.one = base[top_part] + *parts[top_part].one;
  if (parts[bot_part].zero) out.zero = base[bot_part] + *parts[bot_part].zero;
  out.commutative = std::all_of(parts.begin(), parts.end(),
                                [](const OrderedAlgebra& p) { return p.commutative; });
  require_valid(out);
  return out;
}

OrderedAlgebra bounded_extension(const OrderedAlgebra& a) {
  const int n = a.size();
  const int m = n + 2;
  const int BOT = n, TOP = n + 1;
  std::vector<uint8_t> leq(m * m, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[x * m + y] = a.leq(x, y);
  for (int x = 0; x < m; ++x) {
    leq[BOT * m + x] = 1;
    leq[x * m + TOP] = 1;
    leq[x * m + x] = 1;
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(a.el(i));
  names.push_back("_bot");
  names.push_back("_top");

  OrderedAlgebra out;
  out.poset = FinitePoset::from_relation(m, std::move(leq), std::move(names));
  auto mul = full_table(m), add = full_table(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      // multiplication: bottom absorbs, top wins off the bottom
      int& mv = at(mul, m, x, y);
      if (x == BOT || y == BOT)
        mv = BOT;
      else if (x == TOP || y == TOP)
        mv = TOP;
      else
        mv = a.times(x, y);
      // addition: top absorbs, bottom wins off the top
      int& av = at(add, m, x, y);
      if (x == TOP || y == TOP)
        av = TOP;
      else if (x == BOT || y == BOT)
        av = BOT;
      else
        av = a.plus(x, y);
    }
  out.mul = std::move(mul);
  out.add = std::move(add);
  out.one = a.one;
  out.zero = a.zero;
  out.commutative = a.commutative;
  out.has_lattice = a.has_lattice;
  out.name = a.name.empty() ? "" : a.name + "+bounds";
  require_valid(out);
  return out;
}

InvolutiveAlgebra reflection_star(const OrderedAlgebra& pomonoid, ReflectionFlavor flavor) {
  const int n = pomonoid.size();
  if (!pomonoid.has_mul() || !pomonoid.one || !pomonoid.commutative)
    throw ConstructionError("reflection_star: input must be a commutative pomonoid");
  if (!is_residuated(pomonoid)) throw ConstructionError("reflection_star: input not residuated");
  auto bound = flavor == ReflectionFlavor::Upper ? pomonoid.poset.top() : pomonoid.poset.bottom();
  if (!bound)
    throw ConstructionError(flavor == ReflectionFlavor::Upper
                                ? "reflection_star: missing top"
                                : "reflection_star: missing bottom");

  // The doubled algebra is the unital completion of the drastic bisemigroup;
  // the flavor picks the addition, the filter data and which bound absorbs.
  OrderedAlgebra d = pomonoid;
  d.add = full_table(n);
  for (auto& v : *d.add) v = *bound;
  d.zero.reset();
  d.has_lattice = false;
  if (flavor == ReflectionFlavor::Lower) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((pomonoid.times(x, y) == *bound) != (x == *bound || y == *bound))
          throw ConstructionError("reflection_star: zero divisors block the lower reflection");
  }
  require_valid(d);

  std::vector<int> filter, ideal;
  for (int x = 0; x < n; ++x) {
    if (pomonoid.leq(*pomonoid.one, x)) filter.push_back(x);
    if (flavor == ReflectionFlavor::Lower) ideal.push_back(x);
  }
  auto comp_res =
      dm_completion_bisemigroup(d, filter, ideal, /*alpha_plus=*/flavor == ReflectionFlavor::Lower);
  const auto& c = comp_res.algebra;
  if (c.size() != 2 * n)
    throw ConstructionError("reflection_star: doubled carrier did not close");

  // relabel: plains at 0..n-1, primes at n..2n-1
  std::vector<int> slot(2 * n, -1);  // completion index -> output index
  for (int a = 0; a < n; ++a) {
    int plain = comp_res.embed[a];
    int prime = c.comp[plain];
    if (slot[plain] != -1 || slot[prime] != -1 || plain == prime)
      throw ConstructionError("reflection_star: copies overlap");
    slot[plain] = a;
    slot[prime] = a + n;
  }
  const int m = 2 * n;
  for (int i = 0; i < m; ++i)
    if (slot[i] < 0) throw ConstructionError("reflection_star: stray completion element");
  std::vector<uint8_t> leq(m * m);
  std::vector<int> mul(m * m), add(m * m), comp(m);
  for (int i = 0; i < m; ++i) {
    comp[slot[i]] = slot[c.comp[i]];
    for (int j = 0; j < m; ++j) {
      leq[slot[i] * m + slot[j]] = c.base.leq(i, j);
      mul[slot[i] * m + slot[j]] = slot[c.base.times(i, j)];
      add[slot[i] * m + slot[j]] = slot[c.base.plus(i, j)];
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(pomonoid.el(i));
  for (int i = 0; i < n; ++i) names.push_back(pomonoid.el(i) + "'");

  InvolutiveAlgebra out;
  out.base.poset = FinitePoset::from_relation(m, std::move(leq), std::move(names));
  out.base.mul = std::move(mul);
  out.base.add = std::move(add);
  out.base.one = slot[*c.base.one];
  out.base.zero = slot[*c.base.zero];
  out.base.commutative = true;
  out.base.has_lattice = c.base.has_lattice && out.base.poset.is_lattice();
  out.comp = std::move(comp);
  require_valid(out);
  return out;
}

// --- catalog -----------------------------------------------------------------

namespace {

OrderedAlgebra build_l3() {
  auto p = FinitePoset::chain(3, {"b", "a", "1"});
  OrderedAlgebra a;
  a.name = "L3";
  a.poset = p;
  std::vector<int> mul = {
      0, 0, 0,   // b.x
      0, 0, 1,   // a.b=b, a.a=b, a.1=a
      0, 1, 2};  // 1.x=x
  a.mul = mul;
  a.one = 2;
  a.commutative = true;
  a.has_lattice = true;
  return trivial_bimonoid(a);
}

FinitePoset h5_poset() {
  return FinitePoset::from_cover_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}},
                                       {"bot", "a", "b", "c", "1"});
}

OrderedAlgebra build_h5(int zero) {
  auto br = meet_monoid(h5_poset(), "H5");
  auto out = from_pointed_brouwerian(br, zero);
  out.name = zero == 3 ? "H5c" : "H5one";
  return out;
}

OrderedAlgebra build_meet_semilattice_bimonoid(const FinitePoset& p, const std::string& name) {
  auto a = trivial_bimonoid(meet_monoid(p, name));
  a.name = name;
  return a;
}

FinitePoset m3_poset() {
  return FinitePoset::from_cover_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                                       {"bot", "p", "q", "r", "1"});
}

FinitePoset n5_poset() {
  // pentagon: bot < p < 1, bot < q < r < 1, with p,q and p,r incomparable
  return FinitePoset::from_cover_pairs(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}},
                                       {"bot", "p", "q", "r", "1"});
}

OrderedAlgebra build_chain(int n, int pos) {
  if (n < 1) throw CatalogError("chain: need at least one element");
  if (pos < 0 || pos >= n) throw CatalogError("chain: zero position out of range");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "c" + std::to_string(i);
  auto br = meet_monoid(FinitePoset::chain(n, names), "chain");
  auto out = from_pointed_brouwerian(br, pos);
  out.name = "chain:" + std::to_string(n) + ":" + std::to_string(pos);
  return out;
}

OrderedAlgebra build_boolean(int k) {
  if (k < 0 || k > 10) throw CatalogError("boolean: exponent out of range");
  const int n = 1 << k;
  std::vector<uint8_t> leq(n * n, 0);
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "s" + std::to_string(x);
    for (int y = 0; y < n; ++y) leq[x * n + y] = (x & y) == x;
  }
  auto br = meet_monoid(FinitePoset::from_relation(n, std::move(leq), std::move(names)), "");
  auto out = from_pointed_brouwerian(br, 0);
  out.name = "boolean:" + std::to_string(k);
  return out;
}

OrderedAlgebra build_sugihara(int n) {
  if (n < 1 || n % 2 == 0) throw CatalogError("sugihara: size must be odd");
  const int m = n / 2;  // element i carries value i - m
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i - m);
  OrderedAlgebra a;
  a.name = "sugihara:" + std::to_string(n);
  a.poset = FinitePoset::chain(n, names);
  auto mul = full_table(n), add = full_table(n);
  auto absval = [&](int i) { return std::abs(i - m); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = absval(x), ay = absval(y);
      at(mul, n, x, y) = ax != ay ? (ax > ay ? x : y) : std::min(x, y);
      at(add, n, x, y) = ax != ay ? (ax > ay ? x : y) : std::max(x, y);
    }
  a.mul = std::move(mul);
  a.add = std::move(add);
  a.one = m;
  a.zero = m;
  a.commutative = true;
  a.has_lattice = true;
  return a;
}

OrderedAlgebra build_diamond_fig5() {
  // carrier bot, a, 1, b, c; lattice order is the diamond, multiplication is
  // the meet of the pentagon-with-split-top order bot < a,b < c < 1.
  auto diamond = FinitePoset::from_cover_pairs(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"bot", "a", "1", "b", "c"});
  auto h5 = FinitePoset::from_cover_pairs(5, {{0, 1}, {0, 3}, {1, 4}, {3, 4}, {4, 2}},
                                          {"bot", "a", "1", "b", "c"});
  const int n = 5;
  OrderedAlgebra a;
  a.name = "diamond_fig5";
  a.poset = diamond;
  auto mul = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) at(mul, n, x, y) = *h5.meet(x, y);
  a.mul = std::move(mul);
  a.one = 2;
  a.zero = 2;
  a.commutative = true;
  a.has_lattice = true;
  // comp: a <-> b, 1 fixed, bot <-> c; addition by De Morgan
  std::vector<int> comp = {4, 3, 2, 1, 0};
  auto add = full_table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) at(add, n, x, y) = comp[(*a.mul)[comp[y] * n + comp[x]]];
  a.add = std::move(add);
  return a;
}

struct ParsedName {
  std::string head;
  std::vector<int> args;
};

ParsedName parse_name(const std::string& name) {
  ParsedName out;
  std::stringstream ss(name);
  std::string tok;
  std::getline(ss, tok, ':');
  out.head = tok;
  while (std::getline(ss, tok, ':')) {
    try {
      out.args.push_back(std::stoi(tok));
    } catch (...) {
      throw CatalogError("bad catalog argument in '" + name + "'");
    }
  }
  return out;
}

}  // namespace

OrderedAlgebra catalog(const std::string& name) {
  auto pn = parse_name(name);
  OrderedAlgebra out;
  if (pn.head == "L3" && pn.args.empty())
    out = build_l3();
  else if (pn.head == "H5c" && pn.args.empty())
    out = build_h5(3);
  else if (pn.head == "H5one" && pn.args.empty())
    out = build_h5(4);
  else if (pn.head == "M3" && pn.args.empty())
    out = build_meet_semilattice_bimonoid(m3_poset(), "M3");
  else if (pn.head == "N5" && pn.args.empty())
    out = build_meet_semilattice_bimonoid(n5_poset(), "N5");
  else if (pn.head == "chain" && pn.args.size() == 2)
    out = build_chain(pn.args[0], pn.args[1]);
  else if (pn.head == "boolean" && pn.args.size() == 1)
    out = build_boolean(pn.args[0]);
  else if (pn.head == "sugihara" && pn.args.size() == 1)
    out = build_sugihara(pn.args[0]);
  else if (pn.head == "diamond_fig5" && pn.args.empty())
    out = build_diamond_fig5();
  else
    throw CatalogError("unknown catalog name '" + name + "'");
  require_valid(out);
  return out;
}

std::string catalog_provenance(const std::string& name) {
  auto pn = parse_name(name);
  if (pn.head == "L3") return "three-element chain, multiplicative reduct of the 3-valued chain, add = mul";
  if (pn.head == "H5c") return "smallest non-semilinear pointed lattice, zero at the coatom";
  if (pn.head == "H5one") return "smallest non-semilinear lattice, zero at the top";
  if (pn.head == "M3") return "diamond semilattice with add = mul, zero = one";
  if (pn.head == "N5") return "pentagon semilattice with add = mul, zero = one";
  if (pn.head == "chain") return "finite chain as a pointed Brouwerian bimonoid";
  if (pn.head == "boolean") return "finite powerset lattice with join addition";
  if (pn.head == "sugihara") return "odd linear idempotent involutive chain";
  if (pn.head == "diamond_fig5") return "five-element diamond failing x = (1^x)*(0 v x)";
  throw CatalogError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_roster(int max_size) {
  static const std::vector<std::string> all = {
      "L3",        "H5c",       "H5one",     "M3",        "N5",
      "boolean:1", "boolean:2", "sugihara:3", "sugihara:5", "diamond_fig5",
      "chain:2:1", "chain:3:2", "chain:4:3", "chain:5:4", "chain:6:5",
      "chain:2:0", "chain:3:1", "chain:4:2",
  };
  std::vector<std::string> out;
  for (const auto& n : all)
    if (catalog(n).size() <= max_size) out.push_back(n);
  return out;
}

}  // namespace bimlab
