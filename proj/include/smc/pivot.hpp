#pragma once

#include <optional>
#include <vector>

#include "smc/graph.hpp"
#include "smc/separator.hpp"

namespace smc {

// One Reduction 0/I/II on the smallest-id vertex of the lowest degree <= 2.
// For a degree-2 separator vertex with one neighbour on each side, `moved`
// is the right-side neighbour that has to join S.
struct Simplification {
  int y = -1;
  int degree = 0;
  std::vector<int> nbrs;
  int moved = -1;
};

std::optional<Simplification> next_simplification(const Graph& g, const Separation& sep);
// separator bookkeeping only (y erased, moved vertex put into S)
void update_separation(Separation& sep, const Simplification& s);
// graph-only reduction plus separator bookkeeping
void apply_simplification(Graph& g, Separation& sep, const Simplification& s);

int count_deg3(const Graph& g, const Separation& sep, Side side);
// swap L and R when |L3| > |R3|; returns true when it swapped
bool normalize_orientation(const Graph& g, Separation& sep);

enum class PivotKind {
  Simplify,
  DragRight,       // no neighbour in L
  DragLeft,        // no neighbour in R, |R3| > |L3|
  SwapDragRight,   // no neighbour in R, |R3| == |L3|
  BranchOneEach,
  BranchTwoLeft,
  Rotate,          // two in L and |R3| >= |L3| + 2: s to L, its R neighbour to S
  BranchTwoRight,
};

struct PivotAction {
  PivotKind kind = PivotKind::Simplify;
  int v = -1;
  int other = -1;  // rotated R neighbour
  bool is_branch() const {
    return kind == PivotKind::BranchOneEach || kind == PivotKind::BranchTwoLeft ||
           kind == PivotKind::BranchTwoRight;
  }
};

const char* pivot_kind_name(PivotKind k);

// Case ladder over separator vertices.  Throws std::invalid_argument when S is
// empty or a vertex of degree > 3 is present.
PivotAction select_pivot(const Graph& g, const Separation& sep);
// apply a drag/rotate action to the separation (followed by orientation)
void apply_drag(const Graph& g, Separation& sep, const PivotAction& a);

// Graph-only closure of the simplification rules.  Vertices without a side
// go to R; L-R edges are repaired by moving the R endpoint into S.
struct Skeleton {
  Graph graph;
  Separation sep;
};
Skeleton skeleton(const Graph& g, Separation sep);

}  // namespace smc
