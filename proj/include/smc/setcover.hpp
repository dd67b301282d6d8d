#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smc/countvec.hpp"
#include "smc/graph.hpp"
#include "smc/measure.hpp"
#include "smc/separator.hpp"

namespace smc {

// Plain set system; elements are 0..universe-1, duplicate sets allowed.
struct SetSystem {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

SetSystem read_setcover(std::istream& in);
void write_setcover(std::ostream& out, const SetSystem& s);

enum class AnnotationReason { LowDegree, Duplicate };

struct Annotation {
  int v;
  AnnotationReason reason;
  std::vector<int> nbrs;  // neighbours in I - A when annotated
};

// Incidence graph with annotated vertices and a separation of I - A.
struct ScIncidence {
  Graph incidence;
  std::vector<char> is_set;     // by id
  std::vector<char> annotated;  // by id
  std::vector<Annotation> log;  // in annotation order
  Separation sep;

  bool set_vertex(int v) const { return is_set[v] != 0; }
  bool is_annotated(int v) const { return v < static_cast<int>(annotated.size()) && annotated[v]; }
  int num_sets() const;
  Graph active() const;  // I - A
  void annotate(int v, AnnotationReason why);
  void remove(int v);
};

// sets get ids 0..|S|-1, elements |S|..|S|+|U|-1
ScIncidence to_incidence(const SetSystem& s);
// element for every vertex, closed neighbourhood as set
ScIncidence ds_to_sc(const Graph& g);

struct ScAuditLog {
  long steps = 0;
  long mu_violations = 0;           // sum 2^mu(child) > 2^mu(parent)
  long progress_violations = 0;     // termination measure did not drop by 1
  long transition_violations = 0;   // mu3 > mu4 when entering the subcubic phase
  long balance_violations = 0;
  long validity_violations = 0;
  long separations = 0;
  long shrink_misses = 0;           // re-separation missed the (1+eps) factor
  long separation_misses = 0;       // unchecked separation steps that raised mu
  std::vector<std::string> failures;
  bool clean() const {
    // transitions are reported only: the log term of mu3 exceeds mu4 on
    // small instances
    return mu_violations + progress_violations + balance_violations + validity_violations == 0;
  }
};

struct ScOptions {
  bool use_separator = true;  // false: subcubic instances branch like the general case
  bool audit = false;
  bool strict_separation = false;  // hold separation steps to the mu check too
  ScWeights weights = ScWeights::published();
};

struct ScStats {
  long branchings = 0;
  long dp_calls = 0;
  long fallbacks = 0;  // subcubic phase branched without a usable separator
  long max_depth = 0;
  ScAuditLog audit;
};

// counts[k] = number of covers with k sets; length num_sets()+1
CountVector sc_count(const ScIncidence& inst, const ScOptions& opt = {}, ScStats* stats = nullptr);
CountVector sc_count(const SetSystem& s, const ScOptions& opt = {}, ScStats* stats = nullptr);
// subcubic entry point; requires max degree of I - A at most 3
CountVector sc3_count(const ScIncidence& inst, const ScOptions& opt = {}, ScStats* stats = nullptr);
// requires max degree of I - A at most 2
CountVector sc_dp(const ScIncidence& inst);
// exact count by variable elimination over the whole incidence graph; gives
// up when an intermediate factor would exceed width_cap variables
std::optional<CountVector> sc_eliminate(const ScIncidence& inst, int width_cap);

long double mu3(const ScIncidence& inst, const ScWeights& w);
long double mu4(const ScIncidence& inst, const ScWeights& w);

}  // namespace smc
