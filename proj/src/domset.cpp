#include "smc/domset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "smc/error.hpp"
#include "smc/pivot.hpp"
#include "smc/setcover.hpp"

namespace smc {

char label_char(Label l) { return l == Label::U ? 'U' : l == Label::N ? 'N' : 'C'; }

void LabeledGraph::set(int v, Label l) {
  if (v >= static_cast<int>(label.size())) label.resize(v + 1, Label::U);
  label[v] = l;
}

bool LabeledGraph::valid() const {
  if (static_cast<int>(label.size()) < graph.id_bound()) return false;
  for (int v : graph.vertices()) {
    if (graph.degree(v) > 3) return false;
    if (graph.degree(v) == 3 && label[v] != Label::U) return false;
  }
  return true;
}

LabeledGraph unlabeled(const Graph& g) {
  LabeledGraph lg;
  lg.graph = g;
  lg.label.assign(g.id_bound(), Label::U);
  return lg;
}

LabeledGraph read_labeled(std::istream& in) {
  std::vector<std::string> extra;
  Graph g = read_graph(in, &extra);
  LabeledGraph lg = unlabeled(g);
  for (const auto& line : extra) {
    std::istringstream ls(line);
    std::string kw, lab;
    long id;
    if (!(ls >> kw >> id >> lab) || kw != "label") throw ParseError("unexpected line '" + line + "'");
    if (id < 0 || !g.has_vertex(static_cast<int>(id))) throw ParseError("label for unknown vertex");
    if (lab == "U")
      lg.set(static_cast<int>(id), Label::U);
    else if (lab == "N")
      lg.set(static_cast<int>(id), Label::N);
    else if (lab == "C")
      lg.set(static_cast<int>(id), Label::C);
    else
      throw ParseError("bad label '" + lab + "'");
  }
  return lg;
}

Branch3 branch3(const LabeledGraph& g, int x) {
  if (!g.graph.has_vertex(x) || g.graph.degree(x) != 3 || g.get(x) != Label::U)
    throw std::invalid_argument("branch3: pivot must be a degree-3 U vertex");
  Branch3 b{g, g, g};
  for (int u : g.graph.neighbors(x)) {
    switch (g.get(u)) {
      case Label::U: b.in.set(u, Label::C); break;
      case Label::N: b.in.remove(u); break;
      case Label::C: break;
    }
    if (g.get(u) == Label::C)
      b.forb.remove(u);
    else
      b.forb.set(u, Label::N);
  }
  b.in.remove(x);
  b.opt.remove(x);
  b.forb.remove(x);
  return b;
}

CountVector combine_components(const CountVector& a, const CountVector& b) { return cv_convolve(a, b); }

int ds_pivot(const Graph& g, Separation& sep) {
  Skeleton sk = skeleton(g, sep);
  Separation out;
  if (sk.graph.empty()) {
    sep = out;
    return -1;
  }
  Separation hs = sk.sep;
  int v = -1;
  bool fresh = false;
  for (;;) {
    if (hs.sep_empty()) {
      if (fresh) {
        v = sk.graph.vertices().front();
        break;
      }
      fresh = true;
      hs = separate_cubic(sk.graph).sep;
      if (hs.sep_empty()) hs.set(sk.graph.vertices().front(), Side::Sep);
      normalize_orientation(sk.graph, hs);
    }
    PivotAction a = select_pivot(sk.graph, hs);
    if (a.is_branch()) {
      v = a.v;
      break;
    }
    apply_drag(sk.graph, hs, a);
  }
  for (int u : sk.graph.vertices()) out.set(u, hs.get(u));
  sep = out;
  return v >= 0 && g.degree(v) == 3 ? v : -1;
}

namespace {

class DsEngine {
 public:
  DsEngine(const DsOptions& o, DsStats& st) : opt_(o), st_(st) {}

  CountVector run(LabeledGraph g, Separation sep) {
    const int n = g.graph.num_vertices();
    CountVector r = solve(std::move(g), std::move(sep));
    r = cv_resize(r, n + 1);
    if (opt_.audit && !cv_nonnegative(r)) ++st_.negative_returns;
    return r;
  }

 private:
  CountVector solve(LabeledGraph g, Separation sep) {
    CountVector factor{1};
    for (int v : g.graph.vertices()) {
      if (g.graph.degree(v) != 0) continue;
      // an isolated U vertex can only dominate itself
      if (g.get(v) == Label::N) return {0};
      factor = cv_convolve(factor, g.get(v) == Label::U ? CountVector{0, 1} : CountVector{1, 1});
      g.remove(v);
      sep.erase(v);
    }
    if (g.graph.empty()) return factor;
    if (opt_.policy == DsPolicy::Separator && !is_connected(g.graph)) {
      CountVector acc = factor;
      for (const auto& comp : connected_components(g.graph)) {
        LabeledGraph c{induced_subgraph(g.graph, comp), g.label};
        acc = combine_components(acc, run(std::move(c), sep.restricted(comp)));
      }
      return acc;
    }
    int deg3 = 0, local = -1;
    for (int v : g.graph.vertices())
      if (g.graph.degree(v) == 3) {
        ++deg3;
        if (local < 0) local = v;
      }
    if (deg3 == 0 || deg3 <= opt_.gamma_limit) {
      if (auto r = eliminate(g, deg3 == 0 ? 32 : opt_.width_cap)) {
        ++st_.leaves;
        return cv_convolve(factor, *r);
      }
    }
    if (g.graph.num_vertices() <= opt_.enum_limit) {
      ++st_.leaves;
      return cv_convolve(factor, brute(g));
    }
    int x = local;
    if (opt_.policy == DsPolicy::Separator) {
      Separation tmp = sep;
      if (tmp.sep_empty()) ++st_.separator_recomputes;
      int p = ds_pivot(g.graph, tmp);
      sep = tmp;
      if (p >= 0) x = p;
      else ++st_.pivot_fallbacks;
    }
    ++st_.branchings;
    Branch3 b = branch3(g, x);
    auto child_sep = [&](const LabeledGraph& c) {
      Separation s;
      for (int v : c.graph.vertices()) s.set(v, sep.get(v));
      return s;
    };
    Separation s_in = child_sep(b.in), s_opt = child_sep(b.opt), s_forb = child_sep(b.forb);
    CountVector in = cv_shift(run(std::move(b.in), std::move(s_in)), 1);
    CountVector opt = run(std::move(b.opt), std::move(s_opt));
    CountVector forb = run(std::move(b.forb), std::move(s_forb));
    return cv_convolve(factor, cv_sub(cv_add(in, opt), forb));
  }

  // labelled domination as set cover: a set per choosable vertex, an element
  // per vertex that still needs domination
  static std::optional<CountVector> eliminate(const LabeledGraph& g, int cap) {
    std::vector<int> vs = g.graph.vertices();
    std::vector<int> idx(g.graph.id_bound(), -1);
    for (std::size_t k = 0; k < vs.size(); ++k) idx[vs[k]] = static_cast<int>(k);
    const int n = static_cast<int>(vs.size());
    ScIncidence I;
    I.incidence = Graph(2 * n);
    I.is_set.assign(2 * n, 0);
    I.annotated.assign(2 * n, 0);
    for (int k = 0; k < n; ++k) {
      I.is_set[k] = 1;
      if (g.get(vs[k]) == Label::N) I.incidence.remove_vertex(k);
      if (g.get(vs[k]) == Label::C) I.incidence.remove_vertex(n + k);
    }
    for (int k = 0; k < n; ++k) {
      if (!I.incidence.has_vertex(k)) continue;
      if (I.incidence.has_vertex(n + k)) I.incidence.add_edge(k, n + k);
      for (int u : g.graph.neighbors(vs[k]))
        if (I.incidence.has_vertex(n + idx[u])) I.incidence.add_edge(k, n + idx[u]);
    }
    auto r = sc_eliminate(I, cap);
    if (!r) return std::nullopt;
    return cv_resize(*r, n + 1);
  }

  static CountVector brute(const LabeledGraph& g) {
    std::vector<int> vs = g.graph.vertices();
    const int n = static_cast<int>(vs.size());
    if (n > 30) throw SolverError("enumeration too large");
    std::vector<int> idx(g.graph.id_bound(), -1);
    for (int k = 0; k < n; ++k) idx[vs[k]] = k;
    std::vector<std::uint32_t> closed(n, 0);
    std::uint32_t allowed = 0, need = 0;
    for (int k = 0; k < n; ++k) {
      closed[k] = 1u << k;
      for (int u : g.graph.neighbors(vs[k])) closed[k] |= 1u << idx[u];
      if (g.get(vs[k]) != Label::N) allowed |= 1u << k;
      if (g.get(vs[k]) != Label::C) need |= 1u << k;
    }
    std::vector<long long> cnt(n + 1, 0);
    std::uint32_t m = allowed;
    for (;;) {
      std::uint32_t dom = 0;
      for (int k = 0; k < n; ++k)
        if (m >> k & 1) dom |= closed[k];
      if ((need & ~dom) == 0) ++cnt[__builtin_popcount(m)];
      if (m == 0) break;
      m = (m - 1) & allowed;
    }
    CountVector out(n + 1);
    for (int k = 0; k <= n; ++k) out[k] = cnt[k];
    return out;
  }

  const DsOptions& opt_;
  DsStats& st_;
};

}  // namespace

CountVector count_ds(const LabeledGraph& g, const Separation& sep, const DsOptions& opt,
                     DsStats* stats) {
  if (!g.valid()) throw std::invalid_argument("count_ds: needs a subcubic graph with U on degree-3 vertices");
  DsStats local;
  DsEngine eng(opt, stats ? *stats : local);
  Separation s = sep;
  if (opt.policy == DsPolicy::Separator && !s.partitions(g.graph)) s = Separation::trivial(g.graph);
  CountVector r = eng.run(g, s);
  if (!cv_nonnegative(r)) throw SolverError("negative dominating set count");
  return r;
}

CountVector count_ds(const LabeledGraph& g, const DsOptions& opt, DsStats* stats) {
  return count_ds(g, Separation::trivial(g.graph), opt, stats);
}

}  // namespace smc
