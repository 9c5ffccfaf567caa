#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bimlab/clauses.hpp"
#include "bimlab/completion.hpp"
#include "bimlab/constructions.hpp"
#include "bimlab/fractions.hpp"
#include "bimlab/kernels.hpp"

using namespace bimlab;

TEST_CASE("first_violation: serial and parallel agree on random predicates") {
  std::mt19937 rng(0);
  for (int round = 0; round < 50; ++round) {
    long long count = 1 + static_cast<long long>(rng() % 300000);
    long long bad = rng() % (2 * count);  // sometimes beyond the range: no violation
    auto pred = [&](long long i) { return i != bad && i != bad + 7; };
    auto s = first_violation_serial(count, pred);
    auto p = first_violation_parallel(count, pred, 4);
    CHECK(s == p);
  }
}

TEST_CASE("first_violation: result independent of thread count") {
  const long long count = 1 << 18;
  auto pred = [](long long i) { return i % 77777 != 3; };
  auto expect = first_violation_serial(count, pred);
  for (int jobs : {2, 3, 8}) CHECK(first_violation_parallel(count, pred, jobs) == expect);
}

TEST_CASE("transformation scan: parallel equals serial on catalog algebras") {
  for (const auto& name : {"H5c", "sugihara:5", "M3"}) {
    auto a = catalog(name);
    CAPTURE(name);
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        CHECK(check_transformation_pair(a, x, y, x, y, 1) ==
              check_transformation_pair(a, x, y, x, y, 4));
  }
}

TEST_CASE("generator oracle: parallel equals serial") {
  auto a = catalog("H5c");
  for (int pa = 0; pa < a.size(); ++pa)
    for (int pb = 0; pb < a.size(); ++pb)
      for (int qa = 0; qa < a.size(); ++qa)
        for (int qb = 0; qb < a.size(); ++qb)
          for (auto ls : {GenSide::Mul, GenSide::Add})
            for (auto rs : {GenSide::Mul, GenSide::Add}) {
              GenExpr l{pa, pb, ls}, r{qa, qb, rs};
              CHECK(compare_generators(a, l, r, 1) == compare_generators(a, l, r, 4));
            }
}

TEST_CASE("clause evaluation: parallel equals serial including the witness") {
  auto a = catalog("L3");
  auto clause = parse_clause("a*h <= b + g & c*f <= d + e => a*f <= b + e | c*h <= d + g");
  auto ea = EvalAlgebra::of(a);
  auto s = eval_clause(ea, clause, 1);
  auto p = eval_clause(ea, clause, 4);
  CHECK(s.holds == p.holds);
  CHECK(s.witness == p.witness);
}
