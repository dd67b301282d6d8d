#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smc/csp.hpp"
#include "smc/graph.hpp"

namespace smc {

// a_i gets id i-1
Graph gen_g3(int n);
// a_i as in gen_g3(n3), x_i gets id n3+i-2
Graph gen_g4(int n3, int n4);
// built on gen_g4(n/2, 3n/10); y_i gets id n/2 + 3n/10 - 1 + (i-1)
Graph gen_g5(int n);

struct TraceStep {
  int pivot;
  int degree;
  int order_after;  // vertices left after the pivot and the simplifications
};

struct LbTrace {
  long reductions = 0;  // Reduction III applications along the traced path
  long expected = 0;    // closed form of the lower-bound argument
  std::vector<TraceStep> steps;
  long guard_failures = 0;      // pivot was not a legal choice for the local rule
  long structure_failures = 0;  // intermediate graph differs from the family member
  bool match() const { return reductions == expected; }
};

enum class Family { G3, G4, G5 };

// follows the adversarial pivot of the family's lower-bound argument on the
// constraint graph only; every branch is identical so one path is traced
LbTrace trace_lower_bound(const Graph& g, Family f, int n3, int n4);
LbTrace trace_g3(int n);
LbTrace trace_g4(int n3, int n4);
LbTrace trace_g5(int n);

Graph gen_random_cubic(int n, std::uint64_t seed, bool connected = false);
// random graph with maximum degree 3 and about density * 3n/2 edges
Graph gen_random_subcubic(int n, std::uint64_t seed, double density = 0.8);
Graph gen_random_graph(int n, double p, std::uint64_t seed);
// m random edges, scores uniform in [lo, hi]
CspInstance gen_random_csp(int n, int m, int r, std::uint64_t seed, Score lo = -5, Score hi = 5);
CspInstance random_scores(const Graph& g, int r, std::uint64_t seed, Score lo = -5, Score hi = 5);

}  // namespace smc
