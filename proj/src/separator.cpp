#include "smc/separator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace smc {

void Separation::set(int v, Side s) {
  if (v < 0) throw std::invalid_argument("negative vertex id");
  if (v >= static_cast<int>(side.size())) {
    if (s == Side::None) return;
    side.resize(v + 1, Side::None);
  }
  side[v] = s;
}

std::vector<int> Separation::collect(Side s) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(side.size()); ++v)
    if (side[v] == s) out.push_back(v);
  return out;
}

bool Separation::sep_empty() const {
  return std::none_of(side.begin(), side.end(), [](Side s) { return s == Side::Sep; });
}

void Separation::swap_sides() {
  for (auto& s : side) {
    if (s == Side::Left)
      s = Side::Right;
    else if (s == Side::Right)
      s = Side::Left;
  }
}

bool Separation::partitions(const Graph& g) const {
  for (int v = 0; v < static_cast<int>(side.size()); ++v)
    if (side[v] != Side::None && !g.has_vertex(v)) return false;
  for (int v : g.vertices())
    if (get(v) == Side::None) return false;
  return true;
}

Separation Separation::restricted(const std::vector<int>& keep) const {
  Separation out;
  for (int v : keep) out.set(v, get(v));
  return out;
}

Separation Separation::trivial(const Graph& g) {
  Separation s;
  for (int v : g.vertices()) s.set(v, Side::Right);
  return s;
}

Separation Separation::from_sets(const std::vector<int>& l, const std::vector<int>& s,
                                 const std::vector<int>& r) {
  Separation out;
  for (int v : l) out.set(v, Side::Left);
  for (int v : s) out.set(v, Side::Sep);
  for (int v : r) out.set(v, Side::Right);
  return out;
}

bool Separation::operator==(const Separation& o) const {
  return left() == o.left() && sep() == o.sep() && right() == o.right();
}

int PathDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

bool verify_separation(const Graph& g, const Separation& s) {
  if (!s.partitions(g)) throw std::invalid_argument("separation does not partition V");
  for (auto [u, v] : g.edges()) {
    Side a = s.get(u), b = s.get(v);
    if ((a == Side::Left && b == Side::Right) || (a == Side::Right && b == Side::Left))
      return false;
  }
  return true;
}

int cut_size(const Graph& g, const std::vector<int>& a) {
  std::vector<char> in(g.id_bound(), 0);
  for (int v : a) in[v] = 1;
  int c = 0;
  for (auto [u, v] : g.edges())
    if (in[u] != in[v]) ++c;
  return c;
}

namespace {

// One Kernighan-Lin improvement run from the given 0/1 labelling.
void kl_improve(const Graph& g, const std::vector<int>& verts, const std::vector<int>& idx,
                std::vector<char>& part) {
  const int n = static_cast<int>(verts.size());
  for (;;) {
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
      for (int u : g.neighbors(verts[i])) d[i] += part[idx[u]] != part[i] ? 1 : -1;
    std::vector<char> locked(n, 0);
    std::vector<std::pair<int, int>> swaps;
    std::vector<int> gains;
    std::vector<char> cur = part;
    for (;;) {
      int best = std::numeric_limits<int>::min(), ba = -1, bb = -1;
      for (int a = 0; a < n; ++a) {
        if (locked[a] || cur[a] != 0) continue;
        for (int b = 0; b < n; ++b) {
          if (locked[b] || cur[b] != 1) continue;
          int gain = d[a] + d[b] - (g.has_edge(verts[a], verts[b]) ? 2 : 0);
          if (gain > best) {
            best = gain;
            ba = a;
            bb = b;
          }
        }
      }
      if (ba < 0) break;
      locked[ba] = locked[bb] = 1;
      swaps.emplace_back(ba, bb);
      gains.push_back(best);
      for (int u : g.neighbors(verts[ba])) {
        int j = idx[u];
        d[j] += cur[j] == 0 ? 2 : -2;
      }
      for (int u : g.neighbors(verts[bb])) {
        int j = idx[u];
        d[j] += cur[j] == 1 ? 2 : -2;
      }
      cur[ba] = 1;
      cur[bb] = 0;
    }
    int run = 0, best_run = 0, best_k = 0;
    for (std::size_t k = 0; k < gains.size(); ++k) {
      run += gains[k];
      if (run > best_run) {
        best_run = run;
        best_k = static_cast<int>(k) + 1;
      }
    }
    if (best_k == 0) return;
    for (int k = 0; k < best_k; ++k) {
      std::swap(part[swaps[k].first], part[swaps[k].second]);
    }
  }
}

// König: minimum vertex cover of the bipartite cut graph.
std::vector<int> min_cover(const Graph& g, const std::vector<char>& in_a,
                           const std::vector<std::pair<int, int>>& cut_edges) {
  std::vector<int> left, right;
  std::vector<std::vector<int>> adj(g.id_bound());
  for (auto [u, v] : cut_edges) {
    int a = in_a[u] ? u : v, b = in_a[u] ? v : u;
    adj[a].push_back(b);
    left.push_back(a);
    right.push_back(b);
  }
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  for (auto& l : adj) std::sort(l.begin(), l.end());
  std::vector<int> match_l(g.id_bound(), -1), match_r(g.id_bound(), -1);
  std::vector<char> vis;
  std::function<bool(int)> augment = [&](int a) -> bool {
    for (int b : adj[a]) {
      if (vis[b]) continue;
      vis[b] = 1;
      if (match_r[b] < 0 || augment(match_r[b])) {
        match_l[a] = b;
        match_r[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int a : left) {
    vis.assign(g.id_bound(), 0);
    augment(a);
  }
  // alternating reachability from unmatched left vertices
  std::vector<char> zl(g.id_bound(), 0), zr(g.id_bound(), 0);
  std::vector<int> stack;
  for (int a : left)
    if (match_l[a] < 0) {
      zl[a] = 1;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a]) {
      if (zr[b] || match_l[a] == b) continue;
      zr[b] = 1;
      int a2 = match_r[b];
      if (a2 >= 0 && !zl[a2]) {
        zl[a2] = 1;
        stack.push_back(a2);
      }
    }
  }
  std::vector<int> cover;
  for (int a : left)
    if (!zl[a]) cover.push_back(a);
  for (int b : right)
    if (zr[b]) cover.push_back(b);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace

Bisection bisect_heuristic(const Graph& g, std::uint64_t seed, int starts) {
  std::vector<int> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<int> idx(g.id_bound(), -1);
  for (int i = 0; i < n; ++i) idx[verts[i]] = i;
  Bisection best;
  best.cut = std::numeric_limits<int>::max();
  if (n <= 1) {
    best.a = verts;
    best.cut = 0;
    return best;
  }
  for (int k = 0; k < std::max(1, starts); ++k) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (k > 0) {
      std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
      std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<char> part(n, 1);
    for (int i = 0; i < (n + 1) / 2; ++i) part[order[i]] = 0;
    kl_improve(g, verts, idx, part);
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) (part[i] == 0 ? a : b).push_back(verts[i]);
    int c = cut_size(g, a);
    if (c < best.cut) {
      best.a = a;
      best.b = b;
      best.cut = c;
    }
  }
  return best;
}

CubicSeparation separate_cubic(const Graph& g, std::uint64_t seed) {
  CubicSeparation out;
  if (g.empty()) return out;
  Bisection bis = bisect_heuristic(g, seed);
  out.cut = bis.cut;
  std::vector<char> in_a(g.id_bound(), 0);
  for (int v : bis.a) in_a[v] = 1;
  std::vector<std::pair<int, int>> cut_edges;
  for (auto [u, v] : g.edges())
    if (in_a[u] != in_a[v]) cut_edges.emplace_back(u, v);
  std::vector<int> cover = min_cover(g, in_a, cut_edges);
  Separation s;
  for (int v : bis.a) s.set(v, Side::Left);
  for (int v : bis.b) s.set(v, Side::Right);
  for (int v : cover) s.set(v, Side::Sep);
  // keep both sides within ceil((|V|-|S|)/2) by moving boundary vertices of
  // the larger side into S
  for (;;) {
    auto l = s.left(), r = s.right();
    int rest = static_cast<int>(l.size() + r.size());
    int cap = (rest + 1) / 2;
    if (static_cast<int>(l.size()) <= cap && static_cast<int>(r.size()) <= cap) break;
    auto& big = l.size() > r.size() ? l : r;
    int pick = big.front();
    for (int v : big) {
      bool touches = false;
      for (int u : g.neighbors(v)) touches |= s.get(u) == Side::Sep;
      if (touches) {
        pick = v;
        break;
      }
    }
    s.set(pick, Side::Sep);
  }
  if (s.left().size() > s.right().size()) s.swap_sides();
  out.sep = s;
  out.sep_frac = static_cast<double>(s.sep().size()) / g.num_vertices();
  return out;
}

bool is_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  std::vector<int> first(g.id_bound(), -1), last(g.id_bound(), -1), count(g.id_bound(), 0);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
    for (int v : pd.bags[i]) {
      if (!g.has_vertex(v)) return false;
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  for (int v : g.vertices()) {
    if (first[v] < 0) return false;
    if (count[v] != last[v] - first[v] + 1) return false;
  }
  for (auto [u, v] : g.edges())
    if (std::max(first[u], first[v]) > std::min(last[u], last[v])) return false;
  return true;
}

bool is_nice(const PathDecomposition& pd) {
  for (std::size_t i = 1; i < pd.bags.size(); ++i) {
    const auto& a = pd.bags[i - 1];
    const auto& b = pd.bags[i];
    std::vector<int> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    if (d.size() != 1) return false;
  }
  return true;
}

namespace {

PathDecomposition greedy_decomposition(const Graph& g, int start) {
  PathDecomposition pd;
  std::vector<int> verts = g.vertices();
  std::vector<char> placed(g.id_bound(), 0), in_bag(g.id_bound(), 0);
  std::vector<int> missing(g.id_bound(), 0);  // unplaced neighbours
  for (int v : verts) missing[v] = g.degree(v);
  std::vector<int> bag;
  auto emit = [&] {
    std::vector<int> b = bag;
    std::sort(b.begin(), b.end());
    pd.bags.push_back(std::move(b));
  };
  auto place = [&](int v) {
    placed[v] = 1;
    bag.push_back(v);
    in_bag[v] = 1;
    emit();
    for (int u : g.neighbors(v)) --missing[u];
    std::vector<int> done;
    for (int u : bag)
      if (missing[u] == 0) done.push_back(u);
    std::sort(done.begin(), done.end());
    for (int u : done) {
      bag.erase(std::find(bag.begin(), bag.end(), u));
      in_bag[u] = 0;
      emit();
    }
  };
  place(start);
  for (std::size_t k = 1; k < verts.size(); ++k) {
    int best = -1, best_after = 0, best_adj = 0;
    for (int v : verts) {
      if (placed[v]) continue;
      int adj = 0, freed = missing[v] == 0 ? 1 : 0;
      for (int u : g.neighbors(v))
        if (in_bag[u]) {
          ++adj;
          if (missing[u] == 1) ++freed;
        }
      int after = static_cast<int>(bag.size()) + 1 - freed;
      if (best < 0 || after < best_after || (after == best_after && adj > best_adj)) {
        best = v;
        best_after = after;
        best_adj = adj;
      }
    }
    place(best);
  }
  if (!pd.bags.empty() && pd.bags.back().empty()) pd.bags.pop_back();
  return pd;
}

}  // namespace

PathDecomposition nice_path_decomposition(const Graph& g) {
  std::vector<int> verts = g.vertices();
  if (verts.empty()) return {};
  std::vector<int> starts = verts;
  if (starts.size() > 64) {
    std::stable_sort(starts.begin(), starts.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    starts.resize(16);
  }
  PathDecomposition best;
  int best_w = std::numeric_limits<int>::max();
  for (int s : starts) {
    PathDecomposition pd = greedy_decomposition(g, s);
    int w = pd.width();
    if (w < best_w) {
      best_w = w;
      best = std::move(pd);
    }
  }
  return best;
}

BalancedSeparation separate_balanced_by_measure(const Graph& g, const VertexWeight& w,
                                                const Rational& cap) {
  if (g.max_degree() > 6) throw std::invalid_argument("separate_balanced_by_measure: degree > 6");
  BalancedSeparation out;
  std::vector<int> verts = g.vertices();
  if (verts.empty()) return out;
  std::vector<Rational> wt(g.id_bound());
  Rational total = 0;
  for (int v : verts) {
    wt[v] = w(v);
    if (wt[v] < 0 || wt[v] > cap)
      throw std::invalid_argument("vertex weight outside [0, B]");
    total += wt[v];
  }
  PathDecomposition pd = nice_path_decomposition(g);
  // sweep: L_i = earlier bags minus B_i, S = B_i, R = the rest
  std::vector<char> seen(g.id_bound(), 0);
  Rational seen_w = 0;
  int pick_balanced = -1, pick_any = -1, pick_min = -1;
  Rational min_gap = -1;
  std::vector<Rational> lw(pd.bags.size()), rw(pd.bags.size());
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    const auto& bag = pd.bags[i];
    Rational bag_w = 0, bag_seen_w = 0;
    for (int v : bag) {
      bag_w += wt[v];
      if (seen[v]) bag_seen_w += wt[v];
    }
    Rational l = seen_w - bag_seen_w;
    Rational r = total - l - bag_w;
    lw[i] = l;
    rw[i] = r;
    Rational gap = abs(l - r);
    if (gap <= cap) {
      if (pick_any < 0) pick_any = static_cast<int>(i);
      if (!bag.empty() && pick_balanced < 0) pick_balanced = static_cast<int>(i);
    }
    if (!bag.empty() && (pick_min < 0 || gap < min_gap)) {
      pick_min = static_cast<int>(i);
      min_gap = gap;
    }
    for (int v : bag)
      if (!seen[v]) {
        seen[v] = 1;
        seen_w += wt[v];
      }
  }
  int pick = pick_balanced >= 0 ? pick_balanced : (pick_min >= 0 ? pick_min : pick_any);
  if (pick < 0) pick = 0;
  // rebuild the chosen separation
  std::vector<char> before(g.id_bound(), 0), in_bag(g.id_bound(), 0);
  for (int i = 0; i < pick; ++i)
    for (int v : pd.bags[i]) before[v] = 1;
  for (int v : pd.bags[pick]) in_bag[v] = 1;
  Separation s;
  for (int v : verts) {
    if (in_bag[v])
      s.set(v, Side::Sep);
    else if (before[v])
      s.set(v, Side::Left);
    else
      s.set(v, Side::Right);
  }
  out.left_weight = lw[pick];
  out.right_weight = rw[pick];
  if (out.left_weight > out.right_weight) {
    s.swap_sides();
    std::swap(out.left_weight, out.right_weight);
  }
  out.sep = s;
  out.bag = pick;
  out.balanced = out.right_weight - out.left_weight <= cap;
  return out;
}

}  // namespace smc
