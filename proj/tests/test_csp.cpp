#include <sstream>

#include "doctest.h"
#include "smc/error.hpp"
#include <limits>

#include "smc/csp.hpp"
#include "smc/csp_solver.hpp"
#include "smc/generators.hpp"
#include "smc/oracles.hpp"

using namespace smc;

namespace {
Graph k4() {
  Graph g(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  return g;
}
}  // namespace

TEST_CASE("csp text round trip") {
  CspInstance inst = gen_random_csp(7, 9, 3, 11);
  std::string t = format_csp(inst);
  CHECK(format_csp(parse_csp(t)) == t);
  CHECK_THROWS_AS(parse_csp("max2csp 2 1 0\nnil 0\nv 0 1\n"), ParseError);
}

TEST_CASE("maxcut of K4 is 4") {
  auto [sol, st] = solve_general(encode_maxcut(k4()));
  CHECK(sol.score == 4);
  CHECK(evaluate(encode_maxcut(k4()), sol.assignment) == 4);
}

TEST_CASE("max 2-sat encoding") {
  std::istringstream in("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  CspInstance inst = encode_max2sat(read_dimacs(in));
  auto [sol, st] = solve_general(inst);
  CHECK(sol.score == 3);
  std::istringstream bad("p cnf 3 1\n1 2 3 0\n");
  CHECK_THROWS_AS(encode_max2sat(read_dimacs(bad)), ParseError);
}

TEST_CASE("single reductions keep the optimum") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    CspInstance inst = gen_random_csp(6, 7, 2 + static_cast<int>(s % 2), s);
    Score opt = brute_max2csp(inst).score;
    for (int y : inst.graph.vertices()) {
      int d = inst.graph.degree(y);
      if (d == 0) CHECK(brute_max2csp(reduce0(inst, y)).score == opt);
      if (d == 1) CHECK(brute_max2csp(reduceI(inst, y)).score == opt);
      if (d == 2) CHECK(brute_max2csp(reduceII(inst, y)).score == opt);
      if (d >= 3) {
        Score best = 0;
        bool have = false;
        for (const auto& c : reduceIII(inst, y)) {
          Score v = brute_max2csp(c).score;
          if (!have || v > best) best = v;
          have = true;
        }
        CHECK(best == opt);
      }
    }
  }
}

TEST_CASE("solver agrees with enumeration") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    int n = 4 + static_cast<int>(s % 7);
    CspInstance inst = gen_random_csp(n, (n * (n - 1) / 2) * 2 / 3, 2 + static_cast<int>(s % 2), s);
    Score b = brute_max2csp(inst).score;
    for (Policy p : {Policy::Separator, Policy::Local}) {
      SolveOptions o;
      o.policy = p;
      o.brute_limit = 0;
      auto [sol, st] = solve_general(inst, o);
      CHECK(sol.score == b);
      CHECK(evaluate(inst, sol.assignment) == b);
    }
  }
  // frozen from the enumeration oracle
  CHECK(solve_general(gen_random_csp(8, 12, 3, 7)).first.score == 36);
}

TEST_CASE("cubic solver on separator policy") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    CspInstance inst = random_scores(gen_random_cubic(12, s), 2, s);
    SolveOptions o;
    o.brute_limit = 0;
    auto [sol, st] = solve(inst, o);
    CHECK(sol.score == brute_max2csp(inst).score);
    CHECK(st.branchings > 0);
  }
}

TEST_CASE("solve rejects degree four") {
  CspInstance inst = random_scores(gen_g4(8, 4), 2, 1);
  CHECK_THROWS(solve(inst));
}

TEST_CASE("overflow is reported") {
  CspInstance inst(2, 2);
  inst.add_edge(0, 1);
  inst.vs[0][0] = std::numeric_limits<Score>::max();
  inst.vs[1][0] = std::numeric_limits<Score>::max();
  CHECK_THROWS_AS(solve_general(inst), SolverError);
}
