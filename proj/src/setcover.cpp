#include "smc/setcover.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <stdexcept>

#include "smc/error.hpp"

namespace smc {

SetSystem read_setcover(std::istream& in) {
  SetSystem s;
  std::string line;
  bool header = false;
  std::vector<char> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto p = line.find('#');
    if (p != std::string::npos) line = line.substr(0, p);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (!header) {
      long u, m;
      if (kw != "setcover" || !(ls >> u >> m) || u < 0 || m < 0) fail("expected 'setcover <|U|> <|S|>'");
      s.universe = static_cast<int>(u);
      s.sets.assign(m, {});
      seen.assign(m, 0);
      header = true;
      continue;
    }
    if (kw != "set") fail("expected 'set'");
    long id;
    if (!(ls >> id) || id < 0 || id >= static_cast<long>(s.sets.size())) fail("bad set id");
    if (seen[id]) fail("duplicate set id");
    seen[id] = 1;
    std::string tok;
    while (ls >> tok) {
      long e;
      try {
        std::size_t used;
        e = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail("bad element '" + tok + "'");
      }
      if (e < 0 || e >= s.universe) fail("element out of range");
      s.sets[id].push_back(static_cast<int>(e));
    }
    auto& v = s.sets[id];
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) fail("repeated element in set");
  }
  if (!header) throw ParseError("missing 'setcover' header");
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("set " + std::to_string(i) + " missing");
  return s;
}

void write_setcover(std::ostream& out, const SetSystem& s) {
  out << "setcover " << s.universe << ' ' << s.sets.size() << '\n';
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    out << "set " << i;
    for (int e : s.sets[i]) out << ' ' << e;
    out << '\n';
  }
}

int ScIncidence::num_sets() const {
  int c = 0;
  for (int v : incidence.vertices())
    if (is_set[v]) ++c;
  return c;
}

Graph ScIncidence::active() const {
  std::vector<int> keep;
  for (int v : incidence.vertices())
    if (!is_annotated(v)) keep.push_back(v);
  return induced_subgraph(incidence, keep);
}

void ScIncidence::annotate(int v, AnnotationReason why) {
  Annotation a{v, why, {}};
  for (int u : incidence.neighbors(v))
    if (!is_annotated(u)) a.nbrs.push_back(u);
  if (static_cast<int>(annotated.size()) <= v) annotated.resize(v + 1, 0);
  annotated[v] = 1;
  log.push_back(std::move(a));
  sep.erase(v);
}

void ScIncidence::remove(int v) {
  incidence.remove_vertex(v);
  if (v < static_cast<int>(annotated.size())) annotated[v] = 0;
  sep.erase(v);
}

ScIncidence to_incidence(const SetSystem& s) {
  const int m = static_cast<int>(s.sets.size());
  ScIncidence inst;
  inst.incidence = Graph(m + s.universe);
  inst.is_set.assign(m + s.universe, 0);
  inst.annotated.assign(m + s.universe, 0);
  for (int i = 0; i < m; ++i) {
    inst.is_set[i] = 1;
    for (int e : s.sets[i]) inst.incidence.add_edge(i, m + e);
  }
  inst.sep = Separation::trivial(inst.incidence);
  return inst;
}

ScIncidence ds_to_sc(const Graph& g) {
  std::vector<int> vs = g.vertices();
  std::vector<int> idx(g.id_bound(), -1);
  for (std::size_t k = 0; k < vs.size(); ++k) idx[vs[k]] = static_cast<int>(k);
  SetSystem s;
  s.universe = static_cast<int>(vs.size());
  for (int v : vs) {
    std::vector<int> x{idx[v]};
    for (int u : g.neighbors(v)) x.push_back(idx[u]);
    std::sort(x.begin(), x.end());
    s.sets.push_back(x);
  }
  return to_incidence(s);
}

// ---------------------------------------------------------------------------
// variable elimination

namespace {

struct Factor {
  std::vector<int> vars;  // sorted
  std::vector<CountVector> table;
};

CountVector cv_mul(const CountVector& a, const CountVector& b) {
  CountVector c = cv_convolve(a, b);
  cv_trim(c);
  return c;
}

bool cv_zero(const CountVector& a) {
  return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

std::optional<CountVector> sc_eliminate(const ScIncidence& inst, int width_cap) {
  const Graph& g = inst.incidence;
  std::vector<Factor> fs;
  for (int v : g.vertices()) {
    Factor f;
    f.vars = {v};
    if (inst.set_vertex(v))
      f.table = {CountVector{1}, CountVector{0, 1}};
    else
      f.table = {CountVector{1}, CountVector{-1}};
    fs.push_back(std::move(f));
  }
  // taking a set while its element is forbidden kills the term
  for (auto [u, v] : g.edges()) fs.push_back({{u, v}, {{1}, {1}, {1}, {0}}});

  std::vector<char> gone(g.id_bound(), 0);
  std::vector<int> order;
  for (const auto& a : inst.log)
    if (g.has_vertex(a.v)) order.push_back(a.v);
  std::size_t next_fixed = 0;
  int remaining = g.num_vertices();

  auto scope_of = [&](int v) {
    std::vector<int> sc;
    for (auto& f : fs)
      if (std::binary_search(f.vars.begin(), f.vars.end(), v))
        for (int u : f.vars)
          if (u != v) sc.push_back(u);
    std::sort(sc.begin(), sc.end());
    sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
    return sc;
  };

  while (remaining > 0) {
    int v = -1;
    while (next_fixed < order.size() && gone[order[next_fixed]]) ++next_fixed;
    if (next_fixed < order.size()) {
      v = order[next_fixed];
    } else {
      std::size_t best = 0;
      for (int u : g.vertices()) {
        if (gone[u]) continue;
        std::size_t d = scope_of(u).size();
        if (v < 0 || d < best) {
          v = u;
          best = d;
        }
      }
    }
    std::vector<int> sc = scope_of(v);
    if (static_cast<int>(sc.size()) > width_cap) return std::nullopt;
    std::vector<Factor> touch, keep;
    for (auto& f : fs)
      (std::binary_search(f.vars.begin(), f.vars.end(), v) ? touch : keep).push_back(std::move(f));
    // positions of each touched factor's variables inside sc (v gets -1)
    std::vector<std::vector<int>> pos(touch.size());
    for (std::size_t i = 0; i < touch.size(); ++i)
      for (int u : touch[i].vars)
        pos[i].push_back(u == v ? -1 : static_cast<int>(std::lower_bound(sc.begin(), sc.end(), u) - sc.begin()));
    Factor out;
    out.vars = sc;
    out.table.assign(std::size_t{1} << sc.size(), CountVector{0});
    for (std::size_t a = 0; a < out.table.size(); ++a) {
      CountVector sum{0};
      for (int x = 0; x < 2; ++x) {
        CountVector prod{1};
        for (std::size_t i = 0; i < touch.size() && !cv_zero(prod); ++i) {
          std::size_t idx = 0;
          for (std::size_t k = 0; k < pos[i].size(); ++k) {
            int bit = pos[i][k] < 0 ? x : static_cast<int>((a >> pos[i][k]) & 1);
            idx |= static_cast<std::size_t>(bit) << k;
          }
          prod = cv_mul(prod, touch[i].table[idx]);
        }
        sum = cv_add(sum, prod);
      }
      cv_trim(sum);
      out.table[a] = std::move(sum);
    }
    keep.push_back(std::move(out));
    fs = std::move(keep);
    gone[v] = 1;
    --remaining;
  }
  CountVector res{1};
  for (auto& f : fs) res = cv_mul(res, f.table[0]);
  return cv_resize(res, inst.num_sets() + 1);
}

CountVector sc_dp(const ScIncidence& inst) {
  if (inst.active().max_degree() > 2) throw std::invalid_argument("sc_dp: I - A has degree > 2");
  auto r = sc_eliminate(inst, 24);
  if (!r) throw SolverError("sc_dp: elimination width exceeded");
  return *r;
}

// ---------------------------------------------------------------------------
// measures

namespace {

struct Tally {
  Rational rl = 0, rr = 0, ss = 0, rv = 0;  // mu_r(L), mu_r(R), mu_s(S), mu_r(V)
  int s_count = 0, s2_count = 0;
};

Tally tally(const Graph& act, const Separation& sep, const ScWeights& w) {
  Tally t;
  for (int v : act.vertices()) {
    int d = std::min(act.degree(v), 3);
    Rational wr = w.right(d);
    t.rv += wr;
    switch (sep.get(v)) {
      case Side::Left: t.rl += wr; break;
      case Side::Right: t.rr += wr; break;
      case Side::Sep:
        t.ss += w.sep(d);
        ++t.s_count;
        if (d == 2) ++t.s2_count;
        break;
      default: break;
    }
  }
  return t;
}

long double ld(const Rational& q) { return static_cast<long double>(to_double(q)); }

long double mu3_of(const Tally& t0, const ScWeights& w) {
  Tally t = t0;
  if (t.rl > t.rr) std::swap(t.rl, t.rr);
  long double B = ld(w.B());
  long double m = ld(t.ss) + ld(t.rr);
  m += std::max(0.0L, B - (ld(t.rr) - ld(t.rl)) / 2);
  long double x = ld(t.rr + t.ss);
  if (x > 0) m += (1 + B) * std::log(x) / std::log1p(ld(w.eps));
  return m;
}

long double progress_of(const Tally& t, const ScWeights& w) {
  long double w2 = ld(w.right(2));
  return (t.s_count + t.s2_count) * ld(t.rv) / w2 + std::fabs(ld(t.rr - t.rl)) / w2;
}

}  // namespace

long double mu3(const ScIncidence& inst, const ScWeights& w) {
  return mu3_of(tally(inst.active(), inst.sep, w), w);
}

long double mu4(const ScIncidence& inst, const ScWeights& w) {
  Graph act = inst.active();
  long double m = 0;
  for (int v : act.vertices()) m += ld(inst.set_vertex(v) ? w.set(act.degree(v)) : w.elt(act.degree(v)));
  return m;
}

// ---------------------------------------------------------------------------
// counting

namespace {

class ScEngine {
 public:
  ScEngine(const ScOptions& o, ScStats& st) : opt_(o), st_(st), w_(o.weights) {}

  CountVector run(ScIncidence I, long depth) {
    st_.max_depth = std::max(st_.max_depth, depth);
    const int total_sets = I.num_sets();
    CountVector res = solve(std::move(I), depth);
    return cv_resize(res, total_sets + 1);
  }

  // subcubic entry used by sc3_count
  CountVector run3(ScIncidence I) {
    const int total_sets = I.num_sets();
    return cv_resize(sc3(std::move(I), 0), total_sets + 1);
  }

 private:
  enum class Phase { Small, Sub, High };

  Phase phase(const Graph& act) const {
    int d = act.max_degree();
    return d <= 2 ? Phase::Small : d == 3 ? Phase::Sub : Phase::High;
  }

  long double measure(const ScIncidence& I, Phase as) const {
    return as == Phase::High ? mu4(I, w_) : mu3(I, w_);
  }

  struct Step {
    const char* kind;
    Phase ph;
    long double parent;
    std::vector<long double> kids;
    bool progress = false;
    long double prog_parent = 0;
    std::vector<long double> prog_kids;
    bool balance = false;
    Rational rl, rr;
    bool checked = true;
  };

  Step open(const char* kind, const ScIncidence& I, bool progress) {
    Step s{kind, Phase::Small, 0, {}, false, 0, {}, false, 0, 0};
    Graph act = I.active();
    s.ph = phase(act);
    if (s.ph == Phase::Small) return s;
    s.parent = measure(I, s.ph);
    if (s.ph == Phase::Sub) {
      Tally t = tally(act, I.sep, w_);
      s.progress = progress;
      s.prog_parent = progress_of(t, w_);
      // the balance condition is a requirement on branchings only
      if (t.rr - t.rl > w_.B() && std::string_view(kind).substr(0, 6) == "branch") {
        s.balance = true;
        s.rl = t.rl;
        s.rr = t.rr;
      }
      if (!I.sep.partitions(act) || !verify_separation(act, I.sep)) ++st_.audit.validity_violations;
    }
    return s;
  }

  void child(Step& s, const ScIncidence& c) {
    if (s.ph == Phase::Small) return;
    Graph act = c.active();
    if (phase(act) == Phase::Small) return;  // polynomial leaf
    if (s.ph == Phase::High) {
      s.kids.push_back(mu4(c, w_));
      if (phase(act) == Phase::Sub) {
        // entering the subcubic phase
        if (mu3(c, w_) > s.kids.back() + 1e-9L) ++st_.audit.transition_violations;
      }
      return;
    }
    Tally t = tally(act, c.sep, w_);
    s.kids.push_back(mu3_of(t, w_));
    s.prog_kids.push_back(progress_of(t, w_));
    if (s.balance && s.rr - t.rr < s.rl - t.rl) fail("balance", s);
  }

  void fail(const char* what, const Step& s) {
    ++st_.audit.balance_violations;
    if (st_.audit.failures.size() < 20)
      st_.audit.failures.push_back(std::string(what) + " at " + s.kind);
  }

  void close(Step& s) {
    if (!opt_.audit || s.ph == Phase::Small) return;
    ++st_.audit.steps;
    long double sum = 0;
    for (long double c : s.kids) sum += std::pow(2.0L, c - s.parent);
    if (sum > 1.0L + 1e-9L && !s.checked) {
      ++st_.audit.separation_misses;
    } else if (sum > 1.0L + 1e-9L) {
      ++st_.audit.mu_violations;
      if (st_.audit.failures.size() < 20) {
        std::ostringstream os;
        os << "mu " << s.kind << " parent=" << static_cast<double>(s.parent) << " kids=";
        for (long double c : s.kids) os << static_cast<double>(c) << ',';
        st_.audit.failures.push_back(os.str());
      }
    }
    if (s.progress)
      for (long double p : s.prog_kids)
        if (p > s.prog_parent - 1 + 1e-9L) {
          ++st_.audit.progress_violations;
          if (st_.audit.failures.size() < 20)
            st_.audit.failures.push_back(std::string("progress at ") + s.kind);
          break;
        }
  }

  // main loop: annotations, component split, dispatch.
  CountVector solve(ScIncidence I, long depth) {
    st_.max_depth = std::max(st_.max_depth, depth);
    for (;;) {
      const Graph& g = I.incidence;
      if (g.empty()) return {1};
      if (opt_.use_separator && !is_connected(g)) return split(I, depth);
      Graph act = I.active();
      int low = -1;
      for (int v : act.vertices())
        if (act.degree(v) <= 1) {
          low = v;
          break;
        }
      if (low >= 0) {
        Step s = audit_open("annotate", I, false);
        I.annotate(low, AnnotationReason::LowDegree);
        audit_close(s, I);
        continue;
      }
      int dup = find_duplicate(act);
      if (dup >= 0) {
        Step s = audit_open("annotate-dup", I, false);
        I.annotate(dup, AnnotationReason::Duplicate);
        audit_close(s, I);
        continue;
      }
      int bx = -1, be = -1;
      for (int v : act.vertices()) {
        int& b = I.set_vertex(v) ? bx : be;
        if (b < 0 || act.degree(v) > act.degree(b)) b = v;
      }
      int dx = bx < 0 ? 0 : act.degree(bx), de = be < 0 ? 0 : act.degree(be);
      if (dx <= 2 && de <= 2) {
        ++st_.dp_calls;
        return sc_dp(I);
      }
      if (opt_.use_separator && dx <= 3 && de <= 3) return sc3(std::move(I), depth);
      I.sep = Separation::trivial(act);
      if (dx > de) return branch_set(I, bx, depth, false);
      return branch_elt(I, be, depth, false);
    }
  }

  Step audit_open(const char* kind, const ScIncidence& I, bool progress) {
    if (!opt_.audit) return Step{kind, Phase::Small, 0, {}, false, 0, {}, false, 0, 0};
    return open(kind, I, progress);
  }

  void audit_close(Step& s, const ScIncidence& c) {
    if (!opt_.audit) return;
    child(s, c);
    close(s);
  }

  static int find_duplicate(const Graph& act) {
    std::vector<std::pair<std::pair<int, int>, int>> keys;
    for (int v : act.vertices())
      if (act.degree(v) == 2) {
        auto& n = act.neighbors(v);
        keys.push_back({{n[0], n[1]}, v});
      }
    std::sort(keys.begin(), keys.end());
    int best = -1;
    for (std::size_t i = 1; i < keys.size(); ++i)
      if (keys[i].first == keys[i - 1].first) {
        int v1 = keys[i - 1].second;
        if (best < 0 || v1 < best) best = v1;
      }
    return best;
  }

  CountVector split(const ScIncidence& I, long depth) {
    Step s = audit_open("split", I, false);
    s.checked = opt_.strict_separation;
    std::vector<ScIncidence> parts;
    for (const auto& comp : connected_components(I.incidence)) {
      ScIncidence c;
      c.incidence = induced_subgraph(I.incidence, comp);
      c.is_set = I.is_set;
      c.annotated.assign(I.annotated.size(), 0);
      for (int v : comp)
        if (I.is_annotated(v)) c.annotated[v] = 1;
      for (const auto& a : I.log)
        if (c.incidence.has_vertex(a.v) && c.is_annotated(a.v)) c.log.push_back(a);
      Graph act = c.active();
      c.sep = Separation::trivial(act);
      if (act.max_degree() == 3) reseparate(c, act);
      if (opt_.audit) child(s, c);
      parts.push_back(std::move(c));
    }
    if (opt_.audit) close(s);
    CountVector res{1};
    for (auto& p : parts) res = cv_convolve(res, run(std::move(p), depth + 1));
    return res;
  }

  void reseparate(ScIncidence& I, const Graph& act) {
    Tally before = tally(act, I.sep, w_);
    auto wr = [&](int v) { return w_.right(std::min(act.degree(v), 3)); };
    BalancedSeparation bs = separate_balanced_by_measure(act, wr, w_.B());
    I.sep = bs.sep;
    ++st_.audit.separations;
    Tally after = tally(act, I.sep, w_);
    if (after.rl > after.rr) std::swap(after.rl, after.rr);
    if (before.rr + before.ss < (1 + w_.eps) * (after.rr + after.ss)) ++st_.audit.shrink_misses;
    if (opt_.audit && !bs.balanced) ++st_.audit.validity_violations;
  }

  CountVector branch_set(const ScIncidence& I, int s, long depth, bool sub,
                         const char* kind = nullptr) {
    ++st_.branchings;
    Step st = audit_open(kind ? kind : sub ? "branch-set" : "branch-set-high", I, sub);
    ScIncidence take = I, discard = I;
    discard.remove(s);
    for (int u : I.incidence.neighbors(s)) take.remove(u);
    take.remove(s);
    if (!sub) {
      take.sep = Separation::trivial(take.active());
      discard.sep = Separation::trivial(discard.active());
    }
    if (opt_.audit) {
      child(st, take);
      child(st, discard);
      close(st);
    }
    CountVector a = cv_shift(run(std::move(take), depth + 1), 1);
    CountVector b = run(std::move(discard), depth + 1);
    return cv_add(a, b);
  }

  CountVector branch_elt(const ScIncidence& I, int e, long depth, bool sub,
                         const char* kind = nullptr) {
    ++st_.branchings;
    Step st = audit_open(kind ? kind : sub ? "branch-elt" : "branch-elt-high", I, sub);
    ScIncidence optional = I, forbidden = I;
    optional.remove(e);
    for (int u : I.incidence.neighbors(e)) forbidden.remove(u);
    forbidden.remove(e);
    if (!sub) {
      optional.sep = Separation::trivial(optional.active());
      forbidden.sep = Separation::trivial(forbidden.active());
    }
    if (opt_.audit) {
      child(st, optional);
      child(st, forbidden);
      close(st);
    }
    CountVector a = run(std::move(optional), depth + 1);
    CountVector b = run(std::move(forbidden), depth + 1);
    return cv_sub(a, b);
  }

  struct Nb {
    int l = 0, s = 0, r = 0, rv = -1;
  };

  static Nb count(const Graph& act, const Separation& sep, int v) {
    Nb c;
    for (int u : act.neighbors(v)) switch (sep.get(u)) {
        case Side::Left: ++c.l; break;
        case Side::Sep: ++c.s; break;
        case Side::Right:
          ++c.r;
          c.rv = u;
          break;
        default: break;
      }
    return c;
  }

  // walk from s through degree-2 vertices starting at its neighbour on side t
  static std::pair<std::vector<int>, int> walk(const Graph& act, const Separation& sep, int s, Side t) {
    int prev = s, cur = -1;
    for (int u : act.neighbors(s))
      if (sep.get(u) == t) {
        cur = u;
        break;
      }
    std::vector<int> path;
    while (cur != s && act.degree(cur) == 2 && sep.get(cur) != Side::Sep) {
      path.push_back(cur);
      auto& n = act.neighbors(cur);
      int nxt = n[0] == prev ? n[1] : n[0];
      prev = cur;
      cur = nxt;
    }
    return {path, cur == s ? -1 : cur};
  }

  // degree <= 3 phase.  The separation moves are applied in a loop since they do
  // not change the graph; branching recurses into the general routine.
  CountVector sc3(ScIncidence I, long depth) {
    Graph act = I.active();
    const long guard = 20L * act.num_vertices() + 100;
    bool fresh = false;
    for (long it = 0;; ++it) {
      if (it > guard || (fresh && I.sep.sep_empty())) {
        // the moves emptied a fresh separator (or cycled); branch on a
        // highest degree vertex instead
        ++st_.fallbacks;
        int v = -1;
        for (int u : act.vertices())
          if (v < 0 || act.degree(u) > act.degree(v)) v = u;
        return I.set_vertex(v) ? branch_set(I, v, depth, true, "branch-fallback")
                                : branch_elt(I, v, depth, true, "branch-fallback");
      }
      if (I.sep.sep_empty()) {
        fresh = true;
        Step s = audit_open("separation", I, false);
        s.checked = opt_.strict_separation;
        reseparate(I, act);
        audit_close(s, I);
      }
      Tally t = tally(act, I.sep, w_);
      if (t.rl > t.rr) {
        I.sep.swap_sides();
        std::swap(t.rl, t.rr);
      }
      std::vector<int> S = I.sep.sep();
      Step s = audit_open("move", I, true);
      bool moved = false;
      for (int v : S)
        if (count(act, I.sep, v).l == 0) {
          s.kind = "no-nb-L";
          I.sep.set(v, Side::Right);
          moved = true;
          break;
        }
      if (!moved)
        for (int v : S)
          if (count(act, I.sep, v).r == 0) {
            s.kind = "no-nb-R";
            I.sep.set(v, Side::Left);
            moved = true;
            break;
          }
      if (!moved)
        for (int v : S)
          if (act.degree(v) == 2) {
            bool balanced = t.rr - t.rl <= 2 * w_.B();
            if (balanced) {
              s.kind = "deg2-S-bal";
              auto [path, l] = walk(act, I.sep, v, Side::Left);
              for (int u : path) I.sep.set(u, Side::Right);
              I.sep.set(v, Side::Right);
              if (l >= 0) I.sep.set(l, Side::Sep);
            } else {
              s.kind = "deg2-S-imbal";
              auto [path, r] = walk(act, I.sep, v, Side::Right);
              for (int u : path) I.sep.set(u, Side::Left);
              I.sep.set(v, Side::Left);
              if (r >= 0) I.sep.set(r, Side::Sep);
            }
            moved = true;
            break;
          }
      if (!moved && t.rr - t.rl > w_.B()) {
        for (int v : S) {
          Nb c = count(act, I.sep, v);
          if (c.l == 2 && c.r == 1 && act.degree(c.rv) == 3) {
            s.kind = "imbal-2L";
            I.sep.set(v, Side::Left);
            I.sep.set(c.rv, Side::Sep);
            moved = true;
            break;
          }
        }
        if (!moved)
          for (int v : S) {
            Nb c = count(act, I.sep, v);
            if (c.l == 2 && c.r == 1 && act.degree(c.rv) == 2) {
              auto& n = act.neighbors(c.rv);
              int other = n[0] == v ? n[1] : n[0];
              if (I.sep.get(other) != Side::Sep) continue;
              s.kind = "imbal-2LS";
              I.sep.set(v, Side::Left);
              I.sep.set(c.rv, Side::Left);
              moved = true;
              break;
            }
          }
      }
      if (moved) {
        audit_close(s, I);
        continue;
      }
      for (int v : S)
        if (!I.set_vertex(v)) return branch_elt(I, v, depth, true);
      return branch_set(I, S.front(), depth, true);
    }
  }

  const ScOptions& opt_;
  ScStats& st_;
  const ScWeights& w_;
};

}  // namespace

CountVector sc_count(const ScIncidence& inst, const ScOptions& opt, ScStats* stats) {
  ScStats local;
  ScStats& st = stats ? *stats : local;
  ScEngine eng(opt, st);
  ScIncidence I = inst;
  Graph act = I.active();
  if (!I.sep.partitions(act)) I.sep = Separation::trivial(act);
  CountVector r = eng.run(std::move(I), 0);
  if (!cv_nonnegative(r)) throw SolverError("negative set cover count");
  return r;
}

CountVector sc_count(const SetSystem& s, const ScOptions& opt, ScStats* stats) {
  return sc_count(to_incidence(s), opt, stats);
}

CountVector sc3_count(const ScIncidence& inst, const ScOptions& opt, ScStats* stats) {
  Graph act = inst.active();
  if (act.max_degree() > 3) throw std::invalid_argument("sc3_count: degree > 3");
  if (act.max_degree() < 3) return sc_dp(inst);
  ScStats local;
  ScStats& st = stats ? *stats : local;
  ScEngine eng(opt, st);
  ScIncidence I = inst;
  if (!I.sep.partitions(act)) I.sep = Separation::trivial(act);
  if (!is_connected(I.incidence)) return sc_count(I, opt, stats);
  return eng.run3(std::move(I));
}

}  // namespace smc
