#include "doctest.h"
#include "smc/error.hpp"
#include "smc/generators.hpp"

using namespace smc;

TEST_CASE("g3 structure") {
  for (int n = 4; n <= 40; n += 4) {
    Graph g = gen_g3(n);
    CHECK(g.num_vertices() == n);
    CHECK(g.num_edges() == 3 * n / 2);
    for (int v : g.vertices()) CHECK(g.degree(v) == 3);
  }
  CHECK_THROWS(gen_g3(6));
}

TEST_CASE("g4 degrees") {
  // counted by hand from the edge rules: a3, a4 and x3 reach degree 4
  Graph g = gen_g4(8, 4);
  std::vector<int> d4;
  for (int v : g.vertices())
    if (g.degree(v) == 4) d4.push_back(v);
  CHECK(d4 == std::vector<int>{2, 3, 9});
  CHECK(g.num_vertices() == 11);
  CHECK(g.num_edges() == 18);
  CHECK(gen_g4(12, 0) == gen_g3(12));
}

TEST_CASE("g5 degrees") {
  Graph g = gen_g5(40);
  CHECK(g.max_degree() == 5);
  CHECK(g.num_vertices() == 39);
}

TEST_CASE("lower bound traces") {
  for (int n = 4; n <= 120; n += 4) {
    LbTrace t = trace_g3(n);
    CHECK(t.reductions == n / 4);
    CHECK(t.match());
    CHECK(t.guard_failures == 0);
    CHECK(t.structure_failures == 0);
  }
  // one more than the closed form; see the README
  LbTrace t4 = trace_g4(8, 8);
  CHECK(t4.reductions == t4.expected + 1);
  CHECK(t4.guard_failures == 0);
  LbTrace t5 = trace_g5(40);
  CHECK(t5.reductions == 18);
  CHECK(t5.guard_failures == 0);
}

TEST_CASE("random generators are seeded") {
  CHECK(gen_random_cubic(20, 4) == gen_random_cubic(20, 4));
  Graph g = gen_random_cubic(20, 4, true);
  for (int v : g.vertices()) CHECK(g.degree(v) == 3);
  CHECK(is_connected(g));
  CHECK(gen_random_subcubic(15, 2).max_degree() <= 3);
  CspInstance a = gen_random_csp(6, 5, 3, 9);
  CHECK(a.consistent());
  CHECK(a.graph.num_edges() == 5);
}
