#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smc/csp.hpp"
#include "smc/measure.hpp"

namespace smc {

enum class Policy { Separator, Local };

struct SolveOptions {
  Policy policy = Policy::Separator;
  int brute_limit = 8;       // components up to this order are enumerated
  bool audit = false;
  // also hold fresh separations to the mu check (they only shrink the
  // measure on large graphs)
  bool strict_separation = false;
  std::uint64_t seed = 0;
  CspWeights weights = CspWeights::published();
};

// One checked transition of the measure audit.
struct AuditStep {
  std::string kind;
  long double parent = 0;
  std::vector<long double> children;
  long eta_parent = 0;
  std::vector<long> eta_children;
  bool mu_ok = true;
  bool eta_ok = true;
  bool eta_checked = true;
  bool mu_checked = true;
};

struct AuditLog {
  long steps = 0;
  long mu_violations = 0;
  long eta_violations = 0;
  long validity_violations = 0;
  long orientation_violations = 0;
  long separation_misses = 0;  // unchecked separation steps that raised mu
  std::vector<AuditStep> failures;  // first few failing steps
  void record(AuditStep s, int r, long double slack = 1e-9L);
  bool clean() const {
    return mu_violations + eta_violations + validity_violations + orientation_violations == 0;
  }
};

struct SolveStats {
  long branchings = 0;
  long leaves = 0;
  long max_depth = 0;
  long separator_recomputes = 0;
  std::vector<double> measure_trace;
  AuditLog audit;
};

std::pair<CspSolution, SolveStats> solve(const CspInstance& inst, const SolveOptions& opt = {});
// Same engine; degree >= 4 vertices are branched on first (maximum degree,
// smallest id) until the graph is subcubic.
std::pair<CspSolution, SolveStats> solve_general(const CspInstance& inst,
                                                 const SolveOptions& opt = {});

}  // namespace smc
