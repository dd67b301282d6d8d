#include "smc/csp_solver.hpp"

#include <algorithm>
#include <cmath>

#include "smc/error.hpp"
#include "smc/pivot.hpp"
#include "smc/separator.hpp"

namespace smc {

void AuditLog::record(AuditStep s, int r, long double slack) {
  ++steps;
  // sum_j r^mu_j <= r^mu, evaluated relative to the parent to stay in range
  long double sum = 0;
  for (long double c : s.children) sum += std::pow(static_cast<long double>(r), c - s.parent);
  s.mu_ok = sum <= 1.0L + slack;
  if (!s.mu_checked) {
    if (!s.mu_ok) ++separation_misses;
    s.mu_ok = true;
  }
  if (s.eta_checked)
    for (long e : s.eta_children)
      if (e > s.eta_parent - 1) s.eta_ok = false;
  if (!s.mu_ok) ++mu_violations;
  if (!s.eta_ok) ++eta_violations;
  if ((!s.mu_ok || !s.eta_ok) && failures.size() < 20) failures.push_back(std::move(s));
}

namespace {

constexpr long kBruteCap = 200000;

long ipow(long b, int e, long cap) {
  long x = 1;
  for (int i = 0; i < e; ++i) {
    x *= b;
    if (x > cap) return cap + 1;
  }
  return x;
}

struct Undo {
  int kind;  // degree of the reduced vertex
  int y, x = -1, z = -1;
  int c0 = 0;
  std::vector<int> choice;
};

class Engine {
 public:
  Engine(const SolveOptions& opt, SolveStats& st, int r) : opt_(opt), st_(st), r_(r) {}

  Score run(CspInstance inst, Separation sep, std::vector<int>& assign, long depth) {
    st_.max_depth = std::max(st_.max_depth, depth);
    const bool sep_policy = opt_.policy == Policy::Separator;
    std::vector<Undo> undo;
    if (sep_policy) normalize_orientation(inst.graph, sep);
    while (auto s = next_simplification(inst.graph, sep)) {
      bool aud = auditing(inst.graph);
      AuditStep step;
      if (aud) begin(step, "simplify", inst.graph, sep);
      Undo u;
      u.kind = s->degree;
      u.y = s->y;
      if (s->degree == 0) {
        apply_reduce0(inst, s->y, &u.c0);
      } else if (s->degree == 1) {
        u.x = s->nbrs[0];
        apply_reduceI(inst, s->y, &u.choice);
      } else {
        u.x = s->nbrs[0];
        u.z = s->nbrs[1];
        apply_reduceII(inst, s->y, &u.choice);
      }
      undo.push_back(std::move(u));
      if (sep_policy) {
        update_separation(sep, *s);
        normalize_orientation(inst.graph, sep);
      }
      if (aud) finish(step, inst.graph, sep);
    }

    Score result;
    const int n = inst.graph.num_vertices();
    if (n == 0) {
      ++st_.leaves;
      result = inst.nil;
    } else if (sep_policy && !is_connected(inst.graph)) {
      result = split(inst, sep, assign, depth);
    } else if (sep_policy && n <= opt_.brute_limit && ipow(r_, n, kBruteCap) <= kBruteCap) {
      ++st_.leaves;
      result = brute(inst, assign);
    } else if (!sep_policy || inst.graph.max_degree() > 3) {
      int y = -1;
      for (int v : inst.graph.vertices())
        if (y < 0 || inst.graph.degree(v) > inst.graph.degree(y)) y = v;
      result = branch(inst, sep, y, assign, depth, "branch-high");
    } else {
      bool fresh = false;
      for (;;) {
        if (sep.sep_empty()) {
          if (fresh) {
            // drags emptied a fresh separator; fall back to the local choice
            int y = -1;
            for (int v : inst.graph.vertices())
              if (y < 0 || inst.graph.degree(v) > inst.graph.degree(y)) y = v;
            result = branch(inst, sep, y, assign, depth, "branch-fallback");
            break;
          }
          reseparate(inst.graph, sep);
          fresh = true;
        }
        PivotAction a = select_pivot(inst.graph, sep);
        if (a.is_branch()) {
          result = branch(inst, sep, a.v, assign, depth, pivot_kind_name(a.kind));
          break;
        }
        AuditStep step;
        bool aud = auditing(inst.graph);
        if (aud) begin(step, pivot_kind_name(a.kind), inst.graph, sep);
        apply_drag(inst.graph, sep, a);
        if (aud) finish(step, inst.graph, sep);
      }
    }

    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      if (it->kind == 0)
        assign[it->y] = it->c0;
      else if (it->kind == 1)
        assign[it->y] = it->choice[assign[it->x]];
      else
        assign[it->y] = it->choice[assign[it->x] * r_ + assign[it->z]];
    }
    return result;
  }

 private:
  bool auditing(const Graph& g) const {
    return opt_.audit && opt_.policy == Policy::Separator && g.max_degree() <= 3;
  }

  bool measured(const Graph& g) const { return g.num_vertices() > opt_.brute_limit; }

  void check_state(const Graph& g, const Separation& sep) {
    if (!sep.partitions(g) || !verify_separation(g, sep)) ++st_.audit.validity_violations;
    if (count_deg3(g, sep, Side::Left) > count_deg3(g, sep, Side::Right))
      ++st_.audit.orientation_violations;
  }

  void begin(AuditStep& step, const char* kind, const Graph& g, const Separation& sep) {
    check_state(g, sep);
    step.kind = kind;
    step.parent = mu_csp(g, sep, opt_.weights);
    step.eta_parent = eta_csp(g, sep);
    st_.measure_trace.push_back(static_cast<double>(step.parent));
  }

  void add_child(AuditStep& step, const Graph& g, const Separation& sep) {
    check_state(g, sep);
    if (!measured(g)) return;
    step.children.push_back(mu_csp(g, sep, opt_.weights));
    step.eta_children.push_back(eta_csp(g, sep));
  }

  void finish(AuditStep& step, const Graph& g, const Separation& sep) {
    add_child(step, g, sep);
    st_.audit.record(std::move(step), r_);
  }

  // fresh separation once S has run empty; the separation step is audited
  // without the eta check
  void reseparate(const Graph& g, Separation& sep) {
    AuditStep step;
    bool aud = auditing(g);
    if (aud) begin(step, "separation", g, sep);
    sep = separate_cubic(g, opt_.seed).sep;
    ++st_.separator_recomputes;
    if (sep.sep_empty()) sep.set(g.vertices().front(), Side::Sep);
    normalize_orientation(g, sep);
    if (aud) {
      step.eta_checked = false;
      step.mu_checked = opt_.strict_separation;
      finish(step, g, sep);
    }
  }

  Score split(const CspInstance& inst, const Separation& sep, std::vector<int>& assign,
              long depth) {
    AuditStep step;
    bool aud = auditing(inst.graph);
    if (aud) begin(step, "separation", inst.graph, sep);
    step.eta_checked = false;
    std::vector<std::pair<CspInstance, Separation>> kids;
    for (const auto& comp : connected_components(inst.graph)) {
      CspInstance sub;
      sub.r = inst.r;
      sub.graph = induced_subgraph(inst.graph, comp);
      sub.vs.assign(inst.vs.size(), {});
      for (int v : comp) sub.vs[v] = inst.vs[v];
      for (auto [u, v] : sub.graph.edges()) sub.es[{u, v}] = inst.es.at({u, v});
      Separation csep = sep.restricted(comp);
      normalize_orientation(sub.graph, csep);
      const int n = sub.graph.num_vertices();
      bool big = n > opt_.brute_limit || ipow(r_, n, kBruteCap) > kBruteCap;
      if (big && csep.sep_empty() && sub.graph.max_degree() <= 3) {
        csep = separate_cubic(sub.graph, opt_.seed).sep;
        ++st_.separator_recomputes;
        step.mu_checked = opt_.strict_separation;
        normalize_orientation(sub.graph, csep);
      }
      if (aud) add_child(step, sub.graph, csep);
      kids.emplace_back(std::move(sub), std::move(csep));
    }
    if (aud) st_.audit.record(std::move(step), r_);
    Score total = inst.nil;
    for (auto& [sub, csep] : kids) total = checked_add(total, run(std::move(sub), csep, assign, depth + 1));
    return total;
  }

  Score branch(const CspInstance& inst, const Separation& sep, int y, std::vector<int>& assign,
               long depth, const char* kind) {
    ++st_.branchings;
    Separation csep = sep;
    csep.erase(y);
    Graph g2 = inst.graph;
    g2.remove_vertex(y);
    if (opt_.policy == Policy::Separator) normalize_orientation(g2, csep);
    if (auditing(inst.graph)) {
      AuditStep step;
      begin(step, kind, inst.graph, sep);
      for (int c = 0; c < r_; ++c) add_child(step, g2, csep);
      st_.audit.record(std::move(step), r_);
    }
    std::vector<int> rest = g2.vertices();
    Score best = 0;
    int best_c = -1;
    std::vector<int> best_assign;
    for (int c = 0; c < r_; ++c) {
      CspInstance child = inst;
      apply_reduceIII(child, y, c);
      std::vector<int> a2 = assign;
      Score s = run(std::move(child), csep, a2, depth + 1);
      if (best_c < 0 || s > best) {
        best = s;
        best_c = c;
        best_assign = std::move(a2);
      }
    }
    for (int v : rest) assign[v] = best_assign[v];
    assign[y] = best_c;
    return best;
  }

  // lexicographic enumeration, first vertex most significant
  Score brute(const CspInstance& inst, std::vector<int>& assign) {
    std::vector<int> verts = inst.graph.vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<int> phi(inst.graph.id_bound(), 0), cur(n, 0);
    Score best = 0;
    bool have = false;
    std::vector<int> best_cur;
    for (;;) {
      for (int i = 0; i < n; ++i) phi[verts[i]] = cur[i];
      Score s = inst.nil;
      for (int v : verts) s = checked_add(s, inst.vs[v][phi[v]]);
      for (auto& [k, t] : inst.es) s = checked_add(s, t[phi[k.first] * r_ + phi[k.second]]);
      if (!have || s > best) {
        best = s;
        best_cur = cur;
        have = true;
      }
      int i = n - 1;
      while (i >= 0 && ++cur[i] == r_) cur[i--] = 0;
      if (i < 0) break;
    }
    for (int i = 0; i < n; ++i) assign[verts[i]] = best_cur[i];
    return best;
  }

  const SolveOptions& opt_;
  SolveStats& st_;
  int r_;
};

}  // namespace

std::pair<CspSolution, SolveStats> solve_general(const CspInstance& inst, const SolveOptions& opt) {
  if (!inst.consistent()) throw std::invalid_argument("inconsistent CSP instance");
  SolveStats st;
  Engine eng(opt, st, inst.r);
  CspSolution sol;
  sol.assignment.assign(inst.graph.id_bound(), -1);
  Separation sep;
  if (opt.policy == Policy::Separator) sep = Separation::trivial(inst.graph);
  sol.score = eng.run(inst, sep, sol.assignment, 0);
  return {sol, st};
}

std::pair<CspSolution, SolveStats> solve(const CspInstance& inst, const SolveOptions& opt) {
  if (inst.graph.max_degree() > 3) throw std::invalid_argument("solve: constraint graph must be subcubic");
  return solve_general(inst, opt);
}

}  // namespace smc
