#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "smc/countvec.hpp"
#include "smc/graph.hpp"
#include "smc/separator.hpp"

namespace smc {

// U: must be dominated, may be chosen.  N: must be dominated, may not be
// chosen.  C: already dominated, may be chosen.
enum class Label : char { U, N, C };

char label_char(Label l);

struct LabeledGraph {
  Graph graph;
  std::vector<Label> label;  // by id
  Label get(int v) const { return label[v]; }
  void set(int v, Label l);
  void remove(int v) { graph.remove_vertex(v); }
  // degree <= 3 and every degree-3 vertex labelled U
  bool valid() const;
};

LabeledGraph unlabeled(const Graph& g);
// graph format with optional "label <id> <U|N|C>" lines
LabeledGraph read_labeled(std::istream& in);

struct Branch3 {
  LabeledGraph in, opt, forb;
};
// throws std::invalid_argument unless deg(x) = 3 and x is labelled U
Branch3 branch3(const LabeledGraph& g, int x);

CountVector combine_components(const CountVector& a, const CountVector& b);

enum class DsPolicy { Separator, Local };

struct DsOptions {
  DsPolicy policy = DsPolicy::Separator;
  int gamma_limit = 12;  // components with at most this many degree-3 vertices ...
  int width_cap = 10;    // ... are counted by elimination when it stays this narrow
  int enum_limit = 20;   // subset enumeration up to this order
  bool audit = false;
  std::uint64_t seed = 0;
};

struct DsStats {
  long branchings = 0;
  long leaves = 0;
  long separator_recomputes = 0;
  long pivot_fallbacks = 0;   // separator pivot unusable, smallest degree-3 vertex used
  long negative_returns = 0;  // audit: recursion returned a negative entry
};

// counts[k] = dominating sets of size k; length = number of vertices + 1
CountVector count_ds(const LabeledGraph& g, const Separation& sep, const DsOptions& opt = {},
                     DsStats* stats = nullptr);
CountVector count_ds(const LabeledGraph& g, const DsOptions& opt = {}, DsStats* stats = nullptr);

// pivot the separator policy would branch on, with the separation it ends
// up with (on a cubic graph this is the max2csp choice); -1 when it lands
// on a vertex that is not of degree 3 in g
int ds_pivot(const Graph& g, Separation& sep);

}  // namespace smc
