// Times the exhaustive scan kernels, serial reference vs OpenMP, and checks
// that both paths agree on every measured call.

#include <chrono>
#include <cstdio>
#include <string>

#include "bimlab/clauses.hpp"
#include "bimlab/completion.hpp"
#include "bimlab/constructions.hpp"
#include "bimlab/fractions.hpp"
#include "bimlab/kernels.hpp"

using namespace bimlab;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return seconds(t0, t1);
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-44s %9.3fs %9.3fs  x%.2f  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 0;  // 0 = all hardware threads
  if (argc > 1) jobs = std::stoi(argv[1]);
  std::printf("scan kernels, serial vs %d thread(s)\n", effective_jobs(jobs));
  std::printf("%-44s %10s %10s\n", "kernel", "serial", "parallel");

  {
    auto a = catalog("sugihara:17");
    bool s_ok = true, p_ok = true;
    double ts = timed([&] {
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          s_ok &= check_transformation_pair(a, x, y, x, y, 1);
    });
    double tp = timed([&] {
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          p_ok &= check_transformation_pair(a, x, y, x, y, jobs ? jobs : 64);
    });
    row("transformation pairs (sugihara:17, all x,y)", ts, tp, s_ok == p_ok);
  }

  {
    auto a = catalog("chain:14:13");
    GenExpr lhs{2, 9, GenSide::Add}, rhs{9, 2, GenSide::Mul};
    bool s = false, p = false;
    double ts = timed([&] {
      for (int rep = 0; rep < 200; ++rep) s = compare_generators(a, lhs, rhs, 1);
    });
    double tp = timed([&] {
      for (int rep = 0; rep < 200; ++rep) p = compare_generators(a, lhs, rhs, jobs ? jobs : 64);
    });
    row("generator oracle add<=mul (chain:14, x200)", ts, tp, s == p);
  }

  {
    auto a = catalog("boolean:3");
    auto clause = parse_clause(
        "a*f <= b + e & c*f <= d + e => a*c*f <= b + d + e");
    auto ea = EvalAlgebra::of(a);
    EvalResult s, p;
    double ts = timed([&] { s = eval_clause(ea, clause, 1); });
    double tp = timed([&] { p = eval_clause(ea, clause, jobs ? jobs : 64); });
    row("clause valuations, 6 vars (boolean:3)", ts, tp,
        s.holds == p.holds && s.witness == p.witness);
  }

  {
    auto a = catalog("sugihara:9");
    auto clause = parse_clause("a*h <= b + g & c*f <= d + e => a*f <= b + e | c*h <= d + g");
    auto ea = EvalAlgebra::of(a);
    EvalResult s, p;
    double ts = timed([&] { s = eval_clause(ea, clause, 1); });
    double tp = timed([&] { p = eval_clause(ea, clause, jobs ? jobs : 64); });
    row("clause valuations, 8 vars (sugihara:9)", ts, tp,
        s.holds == p.holds && s.witness == p.witness);
  }

  return 0;
}
