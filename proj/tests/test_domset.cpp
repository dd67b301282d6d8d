#include <random>
#include <sstream>

#include "doctest.h"
#include "smc/error.hpp"
#include "smc/domset.hpp"
#include "smc/generators.hpp"
#include "smc/oracles.hpp"
#include "smc/setcover.hpp"

using namespace smc;

namespace {
Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph petersen() {
  Graph p(10);
  for (int i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(i, i + 5);
    p.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return p;
}

CountVector cv(std::initializer_list<int> xs) {
  CountVector out;
  for (int x : xs) out.push_back(x);
  return out;
}

LabeledGraph random_labels(const Graph& g, std::uint64_t seed) {
  LabeledGraph lg = unlabeled(g);
  std::mt19937 rng(static_cast<unsigned>(seed));
  for (int v : g.vertices())
    if (g.degree(v) < 3) lg.set(v, static_cast<Label>(rng() % 3));
  return lg;
}
}  // namespace

TEST_CASE("known counts") {
  // frozen from the exhaustive oracle
  CHECK(count_ds(unlabeled(cycle(6))) == cv({0, 0, 3, 14, 15, 6, 1}));
  CHECK(count_ds(unlabeled(petersen())) == cv({0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1}));
  LabeledGraph lg = unlabeled(cycle(6));
  lg.set(0, Label::N);
  lg.set(3, Label::C);
  CHECK(count_ds(lg) == cv({0, 0, 3, 7, 5, 1, 0}));
}

TEST_CASE("isolated vertices") {
  LabeledGraph lg = unlabeled(Graph(2));
  CHECK(count_ds(lg) == cv({0, 0, 1}));
  lg.set(1, Label::C);
  CHECK(count_ds(lg) == cv({0, 1, 1}));
  lg.set(0, Label::N);
  CHECK(count_ds(lg) == cv({0, 0, 0}));
}

TEST_CASE("branch3 identity") {
  Graph g = petersen();
  LabeledGraph lg = unlabeled(g);
  Branch3 b = branch3(lg, 0);
  CountVector in = cv_shift(brute_domset(b.in), 1);
  CountVector sum = cv_sub(cv_add(in, brute_domset(b.opt)), brute_domset(b.forb));
  CHECK(cv_resize(sum, 11) == brute_domset(lg));
  lg.set(1, Label::C);
  CHECK_THROWS(branch3(lg, 1));
}

TEST_CASE("labelled input") {
  std::istringstream in("graph 3 2\n0 1\n1 2\nlabel 0 N\nlabel 2 C\n");
  LabeledGraph lg = read_labeled(in);
  CHECK(lg.get(0) == Label::N);
  CHECK(lg.get(2) == Label::C);
  CHECK(count_ds(lg) == brute_domset(lg));
  std::istringstream bad("graph 2 1\n0 1\nlabel 0 Q\n");
  CHECK_THROWS_AS(read_labeled(bad), ParseError);
}

TEST_CASE("all policies agree with the oracle") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = gen_random_subcubic(6 + static_cast<int>(s % 10), s, 0.9);
    LabeledGraph lg = random_labels(g, s);
    CountVector b = brute_domset(lg);
    DsOptions o;
    CHECK(count_ds(lg, o) == b);
    o.gamma_limit = -1;
    o.enum_limit = 0;
    CHECK(count_ds(lg, o) == b);
    o.policy = DsPolicy::Local;
    CHECK(count_ds(lg, o) == b);
  }
}

TEST_CASE("cubic branching is exercised") {
  Graph g = gen_random_cubic(16, 3);
  DsOptions o;
  o.gamma_limit = -1;
  o.enum_limit = 0;
  o.audit = true;
  DsStats st;
  CHECK(count_ds(unlabeled(g), o, &st) == brute_domset(g));
  CHECK(st.branchings > 0);
  CHECK(st.negative_returns == 0);
}

TEST_CASE("degree four is rejected") {
  CHECK_THROWS(count_ds(unlabeled(gen_g4(8, 4))));
}

TEST_CASE("ds_pivot returns a degree-3 vertex") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen_random_cubic(20, s);
    Separation sep;
    int v = ds_pivot(g, sep);
    REQUIRE(v >= 0);
    CHECK(g.degree(v) == 3);
  }
}
