#include "smc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "smc/pivot.hpp"

namespace smc {

Graph gen_g3(int n) {
  if (n < 4 || n % 4 != 0) throw std::invalid_argument("gen_g3: n must be a positive multiple of 4");
  Graph g(n);
  auto a = [](int i) { return i - 1; };
  std::vector<int> cyc;
  for (int i = 1; i <= n; ++i)
    if (i % 4 != 0) cyc.push_back(a(i));
  for (std::size_t k = 0; k < cyc.size(); ++k) g.add_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
  for (int i = 1; i <= n / 4; ++i)
    for (int d = 1; d <= 3; ++d) g.add_edge(a(4 * i), a(4 * i - d));
  return g;
}

Graph gen_g4(int n3, int n4) {
  if (n3 < 4 || n3 % 4 != 0 || n4 < 0 || n4 % 2 != 0 || n4 > n3)
    throw std::invalid_argument("gen_g4: need n3 = 0 mod 4, n4 even, n4 <= n3");
  Graph g = gen_g3(n3);
  if (n4 == 0) return g;
  auto a = [](int i) { return i - 1; };
  auto x = [n3](int i) { return n3 + i - 2; };
  for (int i = 1; i < n4; i += 2) g.remove_edge(a(i), a(i + 1));
  for (int i = 2; i <= n4; ++i) g.add_vertex(x(i));
  for (int i = 2; i < n4; ++i) g.add_edge(x(i), x(i + 1));
  for (int i = 2; i <= n4; ++i) g.add_edge(x(i), a(i));
  g.add_edge(x(2), a(1));
  for (int i = 4; i <= n4; i += 2) {
    g.add_edge(x(i), a(i - 1));
    g.add_edge(x(i - 1), a(i));
  }
  return g;
}

Graph gen_g5(int n) {
  if (n < 40 || n % 40 != 0) throw std::invalid_argument("gen_g5: n must be a positive multiple of 40");
  const int n3 = n / 5, n4 = 3 * n / 5, n5 = n / 5;
  const int N3 = n3 + n4 / 2, N4 = n4 / 2;
  Graph g = gen_g4(N3, N4);
  auto a = [](int i) { return i - 1; };
  auto x = [N3](int i) { return N3 + i - 2; };
  auto y = [&](int i) { return N3 + N4 - 1 + (i - 1); };
  for (int i = 1; i <= n5; ++i) g.add_vertex(y(i));
  std::vector<int> cyc;
  for (int i = 1; i <= n5; ++i) {
    cyc.push_back(y(i));
    cyc.push_back(a(N4 + i));
  }
  for (std::size_t k = 0; k < cyc.size(); ++k) g.add_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
  // x_{N4} keeps degree 4 so y_1 starts next to a degree-4 vertex
  const int reserved = x(N4);
  g.add_edge(y(1), reserved);
  std::vector<int> pool;
  for (int i = 1; i <= N4; ++i) pool.push_back(a(i));
  for (int i = 2; i < N4; ++i) pool.push_back(x(i));
  for (int i = 1; i <= n5; ++i) {
    int need = i == 1 ? 2 : 3;
    for (int v : pool) {
      if (need == 0) break;
      if (g.degree(v) >= 5 || g.has_edge(v, y(i))) continue;
      g.add_edge(v, y(i));
      --need;
    }
    if (need > 0) throw std::logic_error("gen_g5: ran out of free degree");
  }
  return g;
}

namespace {

// local rule at maximum degree d: any vertex of degree d, preferring those
// with a neighbour of smaller degree (3 or 4) when d >= 4
bool legal_pivot(const Graph& g, int v) {
  const int d = g.max_degree();
  if (g.degree(v) != d) return false;
  if (d < 4) return true;
  auto prefers = [&](int u) {
    for (int w : g.neighbors(u))
      if (g.degree(w) == 3 || g.degree(w) == 4) return true;
    return false;
  };
  if (prefers(v)) return true;
  for (int u : g.vertices())
    if (g.degree(u) == d && prefers(u)) return false;
  return true;
}

void simplify(Graph& g) {
  Separation none;
  while (auto s = next_simplification(g, none)) apply_simplification(g, none, *s);
}

void pivot(Graph& g, int v, LbTrace& t) {
  if (!legal_pivot(g, v)) ++t.guard_failures;
  int d = g.degree(v);
  g.remove_vertex(v);
  simplify(g);
  ++t.reductions;
  t.steps.push_back({v, d, g.num_vertices()});
}

void run_g3(Graph& g, LbTrace& t) {
  while (!g.empty()) {
    std::vector<int> vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n % 4 != 0 || !(g == gen_g3(n))) ++t.structure_failures;
    pivot(g, vs.back(), t);
  }
}

void run_g4(Graph& g, int n3, int n4, LbTrace& t) {
  for (int k = n4; k >= 4; k -= 2) {
    if (!(g == gen_g4(n3, k))) ++t.structure_failures;
    pivot(g, n3 + (k - 1) - 2, t);
  }
  if (n4 == 2) {
    // x_2 has degree 2 and is simplified away before any branching
    if (!(g == gen_g4(n3, 2))) ++t.structure_failures;
    simplify(g);
  }
  run_g3(g, t);
}

}  // namespace

LbTrace trace_lower_bound(const Graph& g0, Family f, int n3, int n4) {
  LbTrace t;
  Graph g = g0;
  simplify(g);
  switch (f) {
    case Family::G3:
      t.expected = g0.num_vertices() / 4;
      run_g3(g, t);
      break;
    case Family::G4:
      t.expected = n4 / 2 - 2 + n3 / 4;
      run_g4(g, n3, n4, t);
      break;
    case Family::G5: {
      const int n = n3;  // family parameter; the graph itself has n - 1 vertices
      const int N3 = n / 2, N4 = 3 * n / 10, n5 = n / 5;
      t.expected = 19L * n / 40 - 2;
      for (int i = 1; i <= n5; ++i) pivot(g, N3 + N4 - 1 + (i - 1), t);
      if (!(g == gen_g4(N3, N4))) ++t.structure_failures;
      run_g4(g, N3, N4, t);
      break;
    }
  }
  return t;
}

LbTrace trace_g3(int n) { return trace_lower_bound(gen_g3(n), Family::G3, n, 0); }
LbTrace trace_g4(int n3, int n4) { return trace_lower_bound(gen_g4(n3, n4), Family::G4, n3, n4); }
LbTrace trace_g5(int n) { return trace_lower_bound(gen_g5(n), Family::G5, n, 0); }

Graph gen_random_cubic(int n, std::uint64_t seed, bool connected) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("gen_random_cubic: n must be even and >= 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> pts(3 * n);
    for (int i = 0; i < 3 * n; ++i) pts[i] = i / 3;
    std::shuffle(pts.begin(), pts.end(), rng);
    Graph g(n);
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      int u = pts[i], v = pts[i + 1];
      ok = u != v && g.add_edge(u, v);
    }
    if (ok && (!connected || is_connected(g))) return g;
  }
  throw std::runtime_error("gen_random_cubic: no simple pairing found");
}

Graph gen_random_subcubic(int n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  const int target = static_cast<int>(density * 3 * n / 2);
  int m = 0;
  for (auto [u, v] : all) {
    if (m >= target) break;
    if (g.degree(u) < 3 && g.degree(v) < 3) {
      g.add_edge(u, v);
      ++m;
    }
  }
  return g;
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

CspInstance random_scores(const Graph& g, int r, std::uint64_t seed, Score lo, Score hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Score> sc(lo, hi);
  CspInstance inst(r, g.id_bound());
  for (int v = 0; v < g.id_bound(); ++v)
    if (!g.has_vertex(v)) inst.remove_vertex(v);
  inst.nil = sc(rng);
  for (int v : g.vertices())
    for (int c = 0; c < r; ++c) inst.vs[v][c] = sc(rng);
  for (auto [u, v] : g.edges()) {
    inst.add_edge(u, v);
    for (int cu = 0; cu < r; ++cu)
      for (int cv = 0; cv < r; ++cv) inst.add_edge_score(u, cu, v, cv, sc(rng));
  }
  return inst;
}

CspInstance gen_random_csp(int n, int m, int r, std::uint64_t seed, Score lo, Score hi) {
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("gen_random_csp: bad edge count");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  Graph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
  return random_scores(g, r, rng(), lo, hi);
}

}  // namespace smc
