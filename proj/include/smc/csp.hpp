#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smc/graph.hpp"

namespace smc {

using Score = std::int64_t;

// Max (r,2)-CSP instance.  Edge tables are keyed by (u,v) with u < v and
// stored row-major over (color(u), color(v)).
struct CspInstance {
  int r = 2;
  Graph graph;
  Score nil = 0;
  std::vector<std::vector<Score>> vs;             // by vertex id
  std::map<std::pair<int, int>, std::vector<Score>> es;

  CspInstance() = default;
  CspInstance(int r, int n);  // n vertices, zero scores

  void add_edge(int u, int v);  // zero table if new
  Score edge_score(int u, int cu, int v, int cv) const;
  void add_edge_score(int u, int cu, int v, int cv, Score s);
  void remove_vertex(int v);  // drops its monadic and dyadic tables
  bool consistent() const;    // tables match the graph
};

struct CspSolution {
  Score score = 0;
  std::vector<int> assignment;  // by id, -1 for ids not in the graph
};

Score checked_add(Score a, Score b);

// throws std::invalid_argument on a partial assignment, SolverError on overflow
Score evaluate(const CspInstance& inst, const std::vector<int>& phi);

// Reductions.  The optional out-parameters record the argmax choices so a
// child's solution can be lifted back.
CspInstance reduce0(const CspInstance& inst, int y, int* choice = nullptr);
CspInstance reduceI(const CspInstance& inst, int y, std::vector<int>* choice = nullptr);
CspInstance reduceII(const CspInstance& inst, int y, std::vector<int>* choice = nullptr);
std::vector<CspInstance> reduceIII(const CspInstance& inst, int y);

// in-place forms used by the solver
void apply_reduce0(CspInstance& inst, int y, int* choice);
void apply_reduceI(CspInstance& inst, int y, std::vector<int>* choice);
void apply_reduceII(CspInstance& inst, int y, std::vector<int>* choice);
void apply_reduceIII(CspInstance& inst, int y, int color);

CspInstance encode_maxcut(const Graph& g);

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals
};
Cnf read_dimacs(std::istream& in);
CspInstance encode_max2sat(const Cnf& cnf);

CspInstance read_csp(std::istream& in);
void write_csp(std::ostream& out, const CspInstance& inst);
CspInstance parse_csp(const std::string& text);
std::string format_csp(const CspInstance& inst);

}  // namespace smc
