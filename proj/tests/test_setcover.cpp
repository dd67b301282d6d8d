#include <random>
#include <sstream>

#include "doctest.h"
#include "smc/error.hpp"
#include "smc/generators.hpp"
#include "smc/oracles.hpp"
#include "smc/setcover.hpp"

using namespace smc;

namespace {
SetSystem random_system(std::uint64_t seed, int u, int m) {
  std::mt19937 rng(static_cast<unsigned>(seed));
  SetSystem s;
  s.universe = u;
  for (int j = 0; j < m; ++j) {
    std::vector<int> st;
    for (int e = 0; e < u; ++e)
      if (rng() % 3 == 0) st.push_back(e);
    s.sets.push_back(st);
  }
  return s;
}
}  // namespace

TEST_CASE("set cover text round trip") {
  SetSystem s = random_system(4, 6, 5);
  std::ostringstream a;
  write_setcover(a, s);
  std::istringstream in(a.str());
  std::ostringstream b;
  write_setcover(b, read_setcover(in));
  CHECK(a.str() == b.str());
  std::istringstream bad("setcover 3 1\nset 0 0 7\n");
  CHECK_THROWS_AS(read_setcover(bad), ParseError);
}

TEST_CASE("small fixed instance") {
  SetSystem s;
  s.universe = 5;
  s.sets = {{0, 1}, {1, 2, 3}, {3, 4}, {0, 4}, {2}};
  // frozen from the exhaustive oracle
  CountVector want{0, 0, 1, 5, 5, 1};
  CHECK(sc_count(s) == want);
  ScOptions o;
  o.use_separator = false;
  CHECK(sc_count(s, o) == want);
}

TEST_CASE("uncoverable element gives zero") {
  SetSystem s;
  s.universe = 3;
  s.sets = {{0, 1}, {1}};
  CountVector r = sc_count(s);
  for (const auto& x : r) CHECK(x == 0);
}

TEST_CASE("counts agree with enumeration") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    SetSystem s = random_system(100 + i, 1 + static_cast<int>(i % 10), 1 + static_cast<int>(i % 8));
    CountVector b = brute_setcover(s);
    CHECK(cv_resize(sc_count(s), b.size()) == b);
  }
}

TEST_CASE("dominating sets through set cover") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Graph g = gen_random_graph(4 + static_cast<int>(i % 6), 0.4, i);
    CountVector b = brute_domset(g);
    CHECK(cv_resize(sc_count(ds_to_sc(g)), b.size()) == b);
  }
}

TEST_CASE("elimination matches the branching count") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Graph g = gen_random_subcubic(10, i, 0.6);
    ScIncidence I = ds_to_sc(g);
    auto e = sc_eliminate(I, 40);
    REQUIRE(e.has_value());
    CHECK(cv_resize(*e, 11) == brute_domset(g));
  }
}

TEST_CASE("subcubic phase and audit bookkeeping") {
  Graph g = gen_random_cubic(12, 2);
  ScOptions o;
  o.audit = true;
  ScStats st;
  CountVector r = sc_count(ds_to_sc(g), o, &st);
  CHECK(cv_resize(r, 13) == brute_domset(g));
  CHECK(st.audit.steps > 0);
  CHECK(st.audit.validity_violations == 0);
  CHECK(st.audit.progress_violations == 0);
}
