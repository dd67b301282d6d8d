#pragma once

#include "smc/countvec.hpp"
#include "smc/csp.hpp"
#include "smc/domset.hpp"
#include "smc/graph.hpp"
#include "smc/setcover.hpp"

namespace smc {

// Exhaustive reference implementations.  They only read the data types and
// throw SolverError when the enumeration guard is exceeded.

// first maximum in lexicographic order, lowest vertex id most significant
CspSolution brute_max2csp(const CspInstance& inst);
CountVector brute_domset(const LabeledGraph& g);
CountVector brute_domset(const Graph& g);
CountVector brute_setcover(const SetSystem& s);
// minimum cut over splits into sizes floor(n/2), ceil(n/2)
int brute_min_bisection(const Graph& g);
int brute_pathwidth(const Graph& g);

}  // namespace smc
