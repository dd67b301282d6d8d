#include "smc/pivot.hpp"

#include <stdexcept>

namespace smc {

std::optional<Simplification> next_simplification(const Graph& g, const Separation& sep) {
  int best = -1, best_d = 3;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    if (d < best_d) {
      best = v;
      best_d = d;
      if (d == 0) break;
    }
  }
  if (best < 0) return std::nullopt;
  Simplification s;
  s.y = best;
  s.degree = best_d;
  s.nbrs = g.neighbors(best);
  if (best_d == 2 && sep.get(best) == Side::Sep) {
    Side a = sep.get(s.nbrs[0]), b = sep.get(s.nbrs[1]);
    if (a == Side::Left && b == Side::Right) s.moved = s.nbrs[1];
    if (a == Side::Right && b == Side::Left) s.moved = s.nbrs[0];
  }
  return s;
}

void update_separation(Separation& sep, const Simplification& s) {
  sep.erase(s.y);
  if (s.moved >= 0) sep.set(s.moved, Side::Sep);
}

void apply_simplification(Graph& g, Separation& sep, const Simplification& s) {
  g.remove_vertex(s.y);
  if (s.degree == 2) g.add_edge(s.nbrs[0], s.nbrs[1]);
  update_separation(sep, s);
}

int count_deg3(const Graph& g, const Separation& sep, Side side) {
  int c = 0;
  for (int v : g.vertices())
    if (sep.get(v) == side && g.degree(v) == 3) ++c;
  return c;
}

bool normalize_orientation(const Graph& g, Separation& sep) {
  if (count_deg3(g, sep, Side::Left) > count_deg3(g, sep, Side::Right)) {
    sep.swap_sides();
    return true;
  }
  return false;
}

const char* pivot_kind_name(PivotKind k) {
  switch (k) {
    case PivotKind::Simplify: return "simplify";
    case PivotKind::DragRight: return "drag-right";
    case PivotKind::DragLeft: return "drag-left";
    case PivotKind::SwapDragRight: return "swap-drag-right";
    case PivotKind::BranchOneEach: return "branch-one-each";
    case PivotKind::BranchTwoLeft: return "branch-two-left";
    case PivotKind::Rotate: return "rotate";
    case PivotKind::BranchTwoRight: return "branch-two-right";
  }
  return "?";
}

PivotAction select_pivot(const Graph& g, const Separation& sep) {
  if (g.max_degree() > 3) throw std::invalid_argument("select_pivot: degree > 3");
  if (auto s = next_simplification(g, sep)) return {PivotKind::Simplify, s->y, -1};
  std::vector<int> S = sep.sep();
  if (S.empty()) throw std::invalid_argument("select_pivot: empty separator");
  struct Count {
    int l = 0, s = 0, r = 0, rnb = -1;
  };
  auto count = [&](int v) {
    Count c;
    for (int u : g.neighbors(v)) switch (sep.get(u)) {
        case Side::Left: ++c.l; break;
        case Side::Sep: ++c.s; break;
        case Side::Right:
          ++c.r;
          c.rnb = u;
          break;
        default: break;
      }
    return c;
  };
  for (int v : S)
    if (count(v).l == 0) return {PivotKind::DragRight, v, -1};
  int l3 = count_deg3(g, sep, Side::Left), r3 = count_deg3(g, sep, Side::Right);
  for (int v : S)
    if (count(v).r == 0)
      return {r3 == l3 ? PivotKind::SwapDragRight : PivotKind::DragLeft, v, -1};
  for (int v : S) {
    Count c = count(v);
    if (c.l == 1 && c.s == 1 && c.r == 1) return {PivotKind::BranchOneEach, v, -1};
  }
  for (int v : S) {
    Count c = count(v);
    if (c.l == 2 && c.r == 1) {
      if (r3 <= l3 + 1) return {PivotKind::BranchTwoLeft, v, -1};
      return {PivotKind::Rotate, v, c.rnb};
    }
  }
  for (int v : S) {
    Count c = count(v);
    if (c.l == 1 && c.r == 2) return {PivotKind::BranchTwoRight, v, -1};
  }
  throw std::logic_error("select_pivot: no case applies");
}

void apply_drag(const Graph& g, Separation& sep, const PivotAction& a) {
  switch (a.kind) {
    case PivotKind::DragRight: sep.set(a.v, Side::Right); break;
    case PivotKind::DragLeft: sep.set(a.v, Side::Left); break;
    case PivotKind::SwapDragRight:
      sep.swap_sides();
      sep.set(a.v, Side::Right);
      break;
    case PivotKind::Rotate:
      sep.set(a.v, Side::Left);
      sep.set(a.other, Side::Sep);
      break;
    default: throw std::invalid_argument("apply_drag: not a drag action");
  }
  normalize_orientation(g, sep);
}

Skeleton skeleton(const Graph& g, Separation sep) {
  Skeleton sk{g, Separation{}};
  for (int v : g.vertices()) sk.sep.set(v, sep.get(v) == Side::None ? Side::Right : sep.get(v));
  for (auto [u, v] : g.edges()) {
    Side a = sk.sep.get(u), b = sk.sep.get(v);
    if (a == Side::Left && b == Side::Right) sk.sep.set(v, Side::Sep);
    if (a == Side::Right && b == Side::Left) sk.sep.set(u, Side::Sep);
  }
  normalize_orientation(sk.graph, sk.sep);
  while (auto s = next_simplification(sk.graph, sk.sep)) {
    apply_simplification(sk.graph, sk.sep, *s);
    normalize_orientation(sk.graph, sk.sep);
  }
  return sk;
}

}  // namespace smc
