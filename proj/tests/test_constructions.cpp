#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bimlab/constructions.hpp"

using namespace bimlab;

TEST_CASE("pointed Brouwerian addition on H5 with zero at c") {
  auto a = catalog("H5c");
  int bot = 0, av = 1, bv = 2, c = 3, one = 4;
  // a+b = (c -> (a^b)) ^ (a v b) = bot
  CHECK(a.plus(av, bv) == bot);
  // a+1 = a and 1+x = x below zero
  CHECK(a.plus(av, one) == av);
  CHECK(a.plus(one, av) == av);
  // x+0 = x always
  for (int x = 0; x < a.size(); ++x) CHECK(a.plus(x, c) == x);
  // below zero addition is meet, above zero it is join
  CHECK(a.plus(av, c) == av);
  CHECK(a.plus(c, one) == one);
}

TEST_CASE("pointed Brouwerian rejects non-Brouwerian input") {
  auto l3 = catalog("L3");
  OrderedAlgebra reduct = l3;
  reduct.add.reset();
  reduct.zero.reset();
  CHECK_THROWS_AS(from_pointed_brouwerian(reduct, 0), ConstructionError);
}

TEST_CASE("trivial bimonoid equates the operations") {
  auto l3 = catalog("L3");
  CHECK(l3.add == l3.mul);
  CHECK(*l3.zero == *l3.one);
  CHECK(l3.times(1, 1) == 0);  // a.a = b
  CHECK(static_cast<bool>(validate(l3)));

  // one-element monoid
  OrderedAlgebra one;
  one.poset = FinitePoset::chain(1);
  one.mul = std::vector<int>{0};
  one.one = 0;
  one.commutative = true;
  auto bi = trivial_bimonoid(one);
  CHECK(bi.size() == 1);

  // any group: Z3
  OrderedAlgebra z3;
  z3.poset = FinitePoset::antichain(3);
  std::vector<int> t(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) t[x * 3 + y] = (x + y) % 3;
  z3.mul = t;
  z3.one = 0;
  z3.commutative = true;
  CHECK(static_cast<bool>(validate(trivial_bimonoid(z3))));
}

TEST_CASE("drastic top on an integral 2-chain") {
  auto two = meet_monoid(FinitePoset::chain(2), "two");
  auto d = drastic_top(two);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(d.plus(x, y) == 1);
  CHECK_FALSE(d.zero.has_value());
}

TEST_CASE("drastic bottom unit on a 3-chain with appended bottom") {
  // integral 3-chain monoid (mul = min), then append a fresh bottom
  auto three = meet_monoid(FinitePoset::chain(3), "three");
  const int n = 4;
  std::vector<uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) leq[x * n + y] = 1;
  OrderedAlgebra ext;
  ext.poset = FinitePoset::from_relation(n, std::move(leq));
  std::vector<int> mul(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[x * n + y] = (x == 0 || y == 0) ? 0 : std::min(x, y);
  ext.mul = mul;
  ext.one = 3;
  ext.commutative = true;
  REQUIRE(static_cast<bool>(validate(ext)));

  auto d = drastic_bottom_unit(ext);
  CHECK(*d.zero == 0);
  CHECK(d.plus(1, 2) == 3);  // both above bottom: sum is 1
  CHECK(d.plus(1, 0) == 1);
  CHECK(static_cast<bool>(validate(d)));

  // L3 with its own bottom has a.a = bottom: zero divisors
  auto l3 = catalog("L3");
  OrderedAlgebra reduct = l3;
  reduct.add.reset();
  reduct.zero.reset();
  CHECK_THROWS_AS(drastic_bottom_unit(reduct), ConstructionError);
  (void)three;
}

TEST_CASE("ordinal sum of singletons over a 2-chain") {
  OrderedAlgebra one;
  one.poset = FinitePoset::chain(1);
  one.mul = std::vector<int>{0};
  one.add = std::vector<int>{0};
  one.one = 0;
  one.zero = 0;
  one.commutative = true;
  auto sum = ordinal_sum(FinitePoset::chain(2), {one, one});
  CHECK(sum.size() == 2);
  CHECK(sum.poset.is_chain());
  CHECK(static_cast<bool>(validate(sum)));
  CHECK(is_bi_integral(sum));
}

TEST_CASE("mirror doubling B + B^op over a 2-chain") {
  // B: 2-element bi-integral bisemigroup (meet and join over the 2-chain)
  OrderedAlgebra b;
  b.poset = FinitePoset::chain(2);
  b.mul = std::vector<int>{0, 0, 0, 1};  // meet
  b.add = std::vector<int>{0, 1, 1, 1};  // join
  b.zero = 0;
  b.commutative = true;
  REQUIRE(is_bi_integral(b));
  auto sum = ordinal_sum(FinitePoset::chain(2), {b, b.dualized()});
  CHECK(sum.size() == 4);
  CHECK(is_bi_integral(sum));
  CHECK(sum.one.has_value());   // from the top part (dual's mul unit = b's zero)
  CHECK(sum.zero.has_value());  // from the bottom part
  CHECK(static_cast<bool>(validate(sum)));
}

TEST_CASE("ordinal sum rejects non-bi-integral parts") {
  auto l3 = catalog("L3");  // not additively integral
  OrderedAlgebra one;
  one.poset = FinitePoset::chain(1);
  one.mul = std::vector<int>{0};
  one.add = std::vector<int>{0};
  one.commutative = true;
  CHECK_THROWS_AS(ordinal_sum(FinitePoset::chain(2), {one, l3}), ConstructionError);
}

TEST_CASE("ordinal sum is associative up to isomorphism on singleton parts") {
  OrderedAlgebra s;
  s.poset = FinitePoset::chain(1);
  s.mul = std::vector<int>{0};
  s.add = std::vector<int>{0};
  s.commutative = true;
  auto left = ordinal_sum(FinitePoset::chain(2), {ordinal_sum(FinitePoset::chain(2), {s, s}), s});
  auto right = ordinal_sum(FinitePoset::chain(2), {s, ordinal_sum(FinitePoset::chain(2), {s, s})});
  auto flat = ordinal_sum(FinitePoset::chain(3), {s, s, s});
  CHECK(find_isomorphism(left, flat).has_value());
  CHECK(find_isomorphism(right, flat).has_value());
}

TEST_CASE("bounded extension") {
  OrderedAlgebra s;
  s.poset = FinitePoset::chain(1);
  s.mul = std::vector<int>{0};
  s.add = std::vector<int>{0};
  s.commutative = true;
  auto b = bounded_extension(s);
  CHECK(b.size() == 3);
  CHECK(b.poset.is_chain());

  auto l3x = bounded_extension(catalog("L3"));
  CHECK(l3x.size() == 5);
  CHECK(static_cast<bool>(validate(l3x)));
  auto bot = *l3x.poset.bottom();
  auto top = *l3x.poset.top();
  for (int x = 0; x < l3x.size(); ++x) {
    CHECK(l3x.times(bot, x) == bot);
    CHECK(l3x.plus(top, x) == top);
  }
}

TEST_CASE("upper reflection of the 2-element Brouwerian chain is a 4-chain") {
  auto two = meet_monoid(FinitePoset::chain(2), "two");
  auto star = reflection_star(two, ReflectionFlavor::Upper);
  CHECK(star.size() == 4);
  CHECK(star.base.poset.is_chain());
  CHECK(static_cast<bool>(validate(star)));
  // primes sit below the plain copy
  CHECK(star.base.leq(star.comp[0], 0));
  // involution
  for (int x = 0; x < star.size(); ++x) CHECK(star.comp[star.comp[x]] == x);
  // the plain copy embeds with mul and residuals preserved (upper flavor)
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      CHECK(star.base.times(x, y) == two.times(x, y));
      CHECK(*residual(star.base, x, y) == *residual(two, x, y));
    }
}

TEST_CASE("lower reflection places the mirror copy above") {
  auto two = meet_monoid(FinitePoset::chain(2), "two");
  auto star = reflection_star(two, ReflectionFlavor::Lower);
  CHECK(star.size() == 4);
  CHECK(static_cast<bool>(validate(star)));
  CHECK(star.base.leq(0, star.comp[0]));
}

TEST_CASE("reflection outputs satisfy the drastic-addition laws on the plain copy") {
  auto three = meet_monoid(FinitePoset::chain(3), "three");
  auto upper = reflection_star(three, ReflectionFlavor::Upper);
  int top = 2;
  // on the embedded copy, x + y = top (the drastic addition)
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(upper.base.plus(x, y) == top);
  auto lower = reflection_star(three, ReflectionFlavor::Lower);
  int bot = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(lower.base.plus(x, y) == bot);
}

TEST_CASE("reflection requires the bound") {
  OrderedAlgebra z3;
  z3.poset = FinitePoset::antichain(3);
  std::vector<int> t(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) t[x * 3 + y] = (x + y) % 3;
  z3.mul = t;
  z3.one = 0;
  z3.commutative = true;
  CHECK_THROWS_AS(reflection_star(z3, ReflectionFlavor::Upper), ConstructionError);
}

TEST_CASE("catalog entries all validate and carry their declared shapes") {
  for (const auto& name : catalog_roster(1 << 20)) {
    CAPTURE(name);
    auto a = catalog(name);
    CHECK(static_cast<bool>(validate(a)));
  }
  CHECK_THROWS_AS(catalog("no_such_thing"), CatalogError);
}

TEST_CASE("catalog L3") {
  auto a = catalog("L3");
  CHECK(a.size() == 3);
  CHECK(a.add == a.mul);
}

TEST_CASE("catalog diamond_fig5 is an involutive residuated lattice") {
  auto a = catalog("diamond_fig5");
  CHECK(a.size() == 5);
  CHECK(a.has_lattice);
  CHECK(is_residuated(a));
  CHECK(is_idempotent(a));
  auto inv = make_involutive(a);
  REQUIRE(inv.has_value());
  CHECK(static_cast<bool>(validate(*inv)));
}

TEST_CASE("catalog sugihara:3 matches the displayed operations") {
  auto a = catalog("sugihara:3");
  CHECK(a.size() == 3);
  CHECK(a.poset.is_chain());
  // values -1, 0, 1 at indices 0, 1, 2; | -1 | = | 1 |, ties by the displayed rule
  CHECK(a.times(0, 2) == 0);  // -1 . 1 = -1 (equal magnitude, min)
  CHECK(a.plus(0, 2) == 2);   // -1 + 1 = 1 (equal magnitude, max)
  CHECK(a.times(1, 2) == 2);  // 0 . 1 = 1 (larger magnitude wins)
  CHECK(*a.one == 1);
  CHECK(*a.zero == 1);
  auto inv = make_involutive(a);
  REQUIRE(inv.has_value());
  CHECK(inv->comp[0] == 2);
}
