#include "smc/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <string>

#include "smc/error.hpp"

namespace smc {

namespace {

constexpr double kGuard = 1e7;

void guard(double work, const char* what) {
  if (work > kGuard) throw SolverError(std::string(what) + ": enumeration guard exceeded");
}

}  // namespace

CspSolution brute_max2csp(const CspInstance& inst) {
  std::vector<int> vs = inst.graph.vertices();
  const int n = static_cast<int>(vs.size()), r = inst.r;
  double work = 1;
  for (int i = 0; i < n; ++i) work *= r;
  guard(work, "brute_max2csp");
  std::vector<int> cur(n, 0), phi(inst.graph.id_bound(), -1);
  CspSolution best;
  bool have = false;
  for (;;) {
    for (int i = 0; i < n; ++i) phi[vs[i]] = cur[i];
    __int128 s = inst.nil;
    for (int v : vs) s += inst.vs[v][phi[v]];
    for (const auto& [key, t] : inst.es) s += t[phi[key.first] * r + phi[key.second]];
    if (s > std::numeric_limits<Score>::max() || s < std::numeric_limits<Score>::min())
      throw SolverError("brute_max2csp: score overflow");
    if (!have || static_cast<Score>(s) > best.score) {
      best.score = static_cast<Score>(s);
      best.assignment = phi;
      have = true;
    }
    int i = n - 1;
    while (i >= 0 && ++cur[i] == r) cur[i--] = 0;
    if (i < 0) break;
  }
  return best;
}

CountVector brute_domset(const LabeledGraph& g) {
  std::vector<int> vs = g.graph.vertices();
  const int n = static_cast<int>(vs.size());
  guard(std::ldexp(1.0, n), "brute_domset");
  CountVector out(n + 1, 0);
  std::vector<char> in(g.graph.id_bound(), 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      in[vs[i]] = m >> i & 1;
      if (in[vs[i]] && g.get(vs[i]) == Label::N) ok = false;
    }
    for (int i = 0; i < n && ok; ++i) {
      int v = vs[i];
      if (g.get(v) == Label::C || in[v]) continue;
      bool dom = false;
      for (int u : g.graph.neighbors(v)) dom = dom || in[u];
      ok = dom;
    }
    if (ok) out[__builtin_popcountll(m)] += 1;
  }
  return out;
}

CountVector brute_domset(const Graph& g) {
  LabeledGraph lg;
  lg.graph = g;
  lg.label.assign(g.id_bound(), Label::U);
  return brute_domset(lg);
}

CountVector brute_setcover(const SetSystem& s) {
  const int m = static_cast<int>(s.sets.size());
  guard(std::ldexp(1.0, m), "brute_setcover");
  CountVector out(m + 1, 0);
  std::vector<int> hit(s.universe);
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << m); ++f) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int i = 0; i < m; ++i)
      if (f >> i & 1)
        for (int e : s.sets[i]) hit[e] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](int h) { return h != 0; })) out[__builtin_popcountll(f)] += 1;
  }
  return out;
}

int brute_min_bisection(const Graph& g) {
  std::vector<int> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 20) throw SolverError("brute_min_bisection: n > 20");
  std::vector<int> idx(g.id_bound(), -1);
  for (int i = 0; i < n; ++i) idx[vs[i]] = i;
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    int k = __builtin_popcount(m);
    if (k != n / 2) continue;
    int cut = 0;
    for (auto [u, v] : g.edges())
      if ((m >> idx[u] & 1) != (m >> idx[v] & 1)) ++cut;
    best = std::min(best, cut);
  }
  return n == 0 ? 0 : best;
}

// vertex separation number over all orders, by DP over prefixes
int brute_pathwidth(const Graph& g) {
  std::vector<int> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 16) throw SolverError("brute_pathwidth: n > 16");
  if (n == 0) return 0;
  std::vector<int> idx(g.id_bound(), -1);
  for (int i = 0; i < n; ++i) idx[vs[i]] = i;
  std::vector<std::uint32_t> nb(n, 0);
  for (int i = 0; i < n; ++i)
    for (int u : g.neighbors(vs[i])) nb[i] |= 1u << idx[u];
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> f(std::size_t{1} << n, std::numeric_limits<int>::max());
  f[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i & 1) && (nb[i] & ~s)) ++boundary;
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) best = std::min(best, f[s & ~(1u << i)]);
    f[s] = std::max(best, boundary);
  }
  return f[full];
}

}  // namespace smc
