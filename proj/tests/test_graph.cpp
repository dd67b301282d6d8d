#include "doctest.h"
#include "smc/error.hpp"
#include "smc/generators.hpp"
#include "smc/graph.hpp"
#include "smc/oracles.hpp"
#include "smc/separator.hpp"

using namespace smc;

namespace {
Graph petersen() {
  Graph p(10);
  for (int i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(i, i + 5);
    p.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return p;
}
}  // namespace

TEST_CASE("graph text round trip") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph g = gen_random_subcubic(15, s);
    std::string t = format_graph(g);
    CHECK(format_graph(parse_graph(t)) == t);
    CHECK(parse_graph(t) == g);
  }
}

TEST_CASE("comments and bad headers") {
  Graph g = parse_graph("# c\ngraph 3 2\n0 1\n# mid\n1 2\n");
  CHECK(g.num_edges() == 2);
  CHECK_THROWS(parse_graph("graph 2 1\n0 5\n"));
  CHECK_THROWS(parse_graph("grph 2 0\n"));
}

TEST_CASE("stable ids after removal") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.remove_vertex(1);
  CHECK(g.has_vertex(2));
  CHECK_FALSE(g.has_vertex(1));
  CHECK(g.degree(0) == 0);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 1);
  CHECK_FALSE(g.add_edge(3, 4));
}

TEST_CASE("components") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  CHECK(connected_components(g).size() == 3);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("separate_cubic gives valid separations") {
  for (int n = 4; n <= 40; n += 2) {
    Graph g = gen_random_cubic(n, n);
    auto cs = separate_cubic(g, 1);
    CHECK(verify_separation(g, cs.sep));
    CHECK(cs.sep.left().size() <= cs.sep.right().size());
  }
}

TEST_CASE("verify_separation rejects L-R edges") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(verify_separation(g, Separation::from_sets({0}, {1}, {2})));
  CHECK_FALSE(verify_separation(g, Separation::from_sets({0, 1}, {}, {2})));
  CHECK_THROWS(verify_separation(g, Separation::from_sets({0}, {}, {2})));
}

TEST_CASE("bisection heuristic against the exhaustive minimum") {
  // Petersen 5 and the 3-cube 4, both from the exhaustive oracle
  CHECK(brute_min_bisection(petersen()) == 5);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen_random_cubic(14, s);
    auto b = bisect_heuristic(g, s);
    CHECK(b.cut >= brute_min_bisection(g));
    CHECK(b.cut == cut_size(g, b.a));
    int d = static_cast<int>(b.a.size()) - static_cast<int>(b.b.size());
    CHECK(std::abs(d) <= 1);
  }
}

TEST_CASE("nice path decomposition") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen_random_subcubic(12, s);
    auto pd = nice_path_decomposition(g);
    CHECK(is_path_decomposition(g, pd));
    CHECK(is_nice(pd));
    CHECK(pd.width() >= brute_pathwidth(g));
  }
  CHECK(brute_pathwidth(petersen()) == 5);
}

TEST_CASE("balanced bag sweep") {
  auto w = [](int) { return Rational(1); };
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = gen_random_subcubic(30, s, 0.95);
    auto bs = separate_balanced_by_measure(g, w, Rational(6));
    CHECK(verify_separation(g, bs.sep));
    Rational d = bs.left_weight - bs.right_weight;
    CHECK(abs(d) <= 6);
    CHECK(bs.balanced);
  }
}
