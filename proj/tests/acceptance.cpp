// One PASS/FAIL line per acceptance criterion.  Exit status is 0 only when
// every line passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "smc/csp_solver.hpp"
#include "smc/domset.hpp"
#include "smc/generators.hpp"
#include "smc/measure.hpp"
#include "smc/oracles.hpp"
#include "smc/separator.hpp"
#include "smc/setcover.hpp"

using namespace smc;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& what, double t, double limit) {
  bool in_time = t <= limit;
  if (!ok || !in_time) ++failed;
  std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)\n", ok && in_time ? "PASS" : "FAIL", id,
              what.c_str(), t, limit);
  std::fflush(stdout);
}

void lower_bounds() {
  auto t0 = Clock::now();
  int g3_bad = 0, g4_bad = 0, g5_bad = 0, guards = 0;
  double worst = 0;
  std::ostringstream miss;
  for (int n = 4; n <= 120; n += 4) {
    auto t = Clock::now();
    LbTrace r = trace_g3(n);
    worst = std::max(worst, secs(t));
    g3_bad += !r.match();
    guards += r.guard_failures + r.structure_failures;
  }
  for (int n = 8; n <= 80; n += 8) {
    auto t = Clock::now();
    LbTrace r = trace_g4(n / 2, n / 2);
    worst = std::max(worst, secs(t));
    guards += r.guard_failures + r.structure_failures;
    if (!r.match()) {
      ++g4_bad;
      if (g4_bad == 1) miss << " g4(" << n << "): " << r.reductions << " vs " << r.expected << ";";
    }
  }
  for (int n : {40, 80, 120}) {
    auto t = Clock::now();
    LbTrace r = trace_g5(n);
    worst = std::max(worst, secs(t));
    guards += r.guard_failures + r.structure_failures;
    if (!r.match()) {
      ++g5_bad;
      if (g5_bad == 1) miss << " g5(" << n << "): " << r.reductions << " vs " << r.expected << ";";
    }
  }
  std::ostringstream os;
  os << "lower-bound traces, mismatches g3 " << g3_bad << "/30, g4 " << g4_bad << "/10, g5 " << g5_bad
     << "/3, illegal pivots or structure drift " << guards << ";" << miss.str()
     << " slowest trace " << worst << "s";
  report(1, g3_bad + g4_bad + g5_bad + guards == 0 && worst < 1.0, os.str(), secs(t0), 60);
}

void feasibility() {
  auto t0 = Clock::now();
  ConstraintReport c = check_csp(CspWeights::published());
  ConstraintReport s = check_sc(ScWeights::published());
  bool ok = c.feasible && s.feasible;
  std::ostringstream os;
  os << "csp feasible=" << c.feasible << " sc feasible=" << s.feasible;
  if (ok) {
    Exponent ec = exponent_csp(CspWeights::published(), 3);
    Exponent es = exponent_sc(ScWeights::published());
    ok = std::fabs(ec.exponent - 0.2) < 1e-12 && std::fabs(es.base - 1.5183) < 1e-4 &&
         std::fabs(ec.base - 1.2458) < 1e-4;
    os.precision(6);
    os << " csp exponent " << ec.exponent << " 3^e=" << ec.base << " sc exponent " << es.exponent
       << " base " << es.base;
  }
  report(2, ok, os.str(), secs(t0), 1);
}

void csp_oracle() {
  auto t0 = Clock::now();
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 1 + i % 9, r = 2 + i % 2;
    int m = (i * 7) % (n * (n - 1) / 2 + 1);
    CspInstance inst = gen_random_csp(n, m, r, 5000 + i);
    auto [sol, st] = solve_general(inst);
    Score b = brute_max2csp(inst).score;
    bad += sol.score != b || evaluate(inst, sol.assignment) != b;
  }
  report(3, bad == 0, "max 2-csp vs enumeration, 500 instances, mismatches " + std::to_string(bad),
         secs(t0), 120);
}

void ds_oracle() {
  auto t0 = Clock::now();
  int bad = 0;
  for (int i = 0; i < 300; ++i) {
    int n = 1 + i % 10;
    Graph g = gen_random_subcubic(n, 7000 + i, 0.5 + 0.125 * (i % 5));
    LabeledGraph lg = unlabeled(g);
    std::mt19937 rng(i);
    for (int v : g.vertices())
      if (g.degree(v) < 3) lg.set(v, static_cast<Label>(rng() % 3));
    bad += count_ds(lg) != brute_domset(lg);
  }
  report(4, bad == 0, "labelled subcubic dominating sets vs enumeration, 300 graphs, mismatches " +
                          std::to_string(bad),
         secs(t0), 120);
}

void sc_oracle() {
  auto t0 = Clock::now();
  int bad_ds = 0, bad_sc = 0;
  for (int i = 0; i < 300; ++i) {
    int n = 1 + i % 9;
    Graph g = gen_random_graph(n, 0.2 + 0.1 * (i % 5), 9000 + i);
    CountVector b = brute_domset(g);
    bad_ds += cv_resize(sc_count(ds_to_sc(g)), b.size()) != b;
  }
  for (int i = 0; i < 300; ++i) {
    std::mt19937 rng(11000 + i);
    SetSystem s;
    s.universe = 1 + i % 10;
    int m = 1 + i % 8;
    for (int j = 0; j < m; ++j) {
      std::vector<int> st;
      for (int e = 0; e < s.universe; ++e)
        if (rng() % 3 == 0) st.push_back(e);
      s.sets.push_back(st);
    }
    CountVector b = brute_setcover(s);
    bad_sc += cv_resize(sc_count(s), b.size()) != b;
  }
  report(5, bad_ds + bad_sc == 0,
         "general dominating sets mismatches " + std::to_string(bad_ds) + "/300, set cover mismatches " +
             std::to_string(bad_sc) + "/300",
         secs(t0), 180);
}

void audits() {
  auto t0 = Clock::now();
  AuditLog a;
  for (int i = 0; i < 50; ++i) {
    int n = 4 + 2 * (i % 11);
    CspInstance inst = random_scores(gen_random_cubic(n, 300 + i), 2, i);
    SolveOptions o;
    o.audit = true;
    auto [sol, st] = solve(inst, o);
    a.steps += st.audit.steps;
    a.mu_violations += st.audit.mu_violations;
    a.eta_violations += st.audit.eta_violations;
    a.validity_violations += st.audit.validity_violations;
    a.orientation_violations += st.audit.orientation_violations;
    a.separation_misses += st.audit.separation_misses;
  }
  ScAuditLog s;
  long fallbacks = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 4 + i % 13;
    Graph g = gen_random_graph(n, 0.3, 400 + i);
    ScOptions o;
    o.audit = true;
    ScStats st;
    sc_count(ds_to_sc(g), o, &st);
    s.steps += st.audit.steps;
    s.mu_violations += st.audit.mu_violations;
    s.progress_violations += st.audit.progress_violations;
    s.balance_violations += st.audit.balance_violations;
    s.validity_violations += st.audit.validity_violations;
    s.transition_violations += st.audit.transition_violations;
    s.separation_misses += st.audit.separation_misses;
    fallbacks += st.fallbacks;
  }
  std::ostringstream os;
  os << "measure audit, csp " << a.steps << " steps: mu " << a.mu_violations << " eta " << a.eta_violations
     << " validity " << a.validity_violations << " orientation " << a.orientation_violations
     << " (separation steps over mu " << a.separation_misses << "); set cover " << s.steps
     << " steps: mu " << s.mu_violations << " progress " << s.progress_violations << " balance "
     << s.balance_violations << " validity " << s.validity_violations << " (separation steps over mu "
     << s.separation_misses << ", mu3>mu4 transitions " << s.transition_violations << ", fallback branchings "
     << fallbacks << ")";
  report(6, a.clean() && s.clean(), os.str(), secs(t0), 300);
}

Graph k4_union(int n) {
  Graph g(n);
  for (int b = 0; b < n; b += 4)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(b + i, b + j);
  return g;
}

void exploitation() {
  auto t0 = Clock::now();
  bool k4_ok = true;
  std::ostringstream os;
  os << "k4 unions r=3 leaves sep/local:";
  for (int n = 8; n <= 32; n += 4) {
    CspInstance inst = random_scores(k4_union(n), 3, n);
    SolveOptions sep, loc;
    sep.brute_limit = 0;
    loc.policy = Policy::Local;
    auto a = solve(inst, sep);
    auto b = solve(inst, loc);
    long rn = std::lround(std::pow(3.0, n / 4));
    k4_ok &= a.second.leaves < b.second.leaves && b.second.leaves == rn && a.first.score == b.first.score;
    os << ' ' << a.second.leaves << '/' << b.second.leaves;
  }
  int good = 0;
  for (int s = 0; s < 25; ++s) {
    CspInstance inst = random_scores(gen_random_cubic(28, 600 + s, true), 2, s);
    SolveOptions sep, loc;
    sep.seed = s;
    loc.policy = Policy::Local;
    good += solve(inst, sep).second.leaves <= solve(inst, loc).second.leaves;
  }
  os << "; random cubic n=28: separator leaves <= local in " << good << "/25";
  report(7, k4_ok && good >= 20, os.str(), secs(t0), 300);
}

void separations() {
  auto t0 = Clock::now();
  ScWeights w = ScWeights::published();
  int invalid = 0, unbalanced = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 4 + i % 37;
    Graph g = gen_random_subcubic(n, 800 + i, 0.6 + 0.1 * (i % 5));
    invalid += !verify_separation(g, separate_cubic(g, i).sep);
    auto bs = separate_balanced_by_measure(g, [&](int v) { return w.right(g.degree(v)); }, w.B());
    invalid += !verify_separation(g, bs.sep);
    Rational d = bs.left_weight - bs.right_weight;
    unbalanced += abs(d) > w.B();
  }
  report(8, invalid + unbalanced == 0,
         "200 subcubic graphs, invalid separations " + std::to_string(invalid) + ", bag sweeps over B " +
             std::to_string(unbalanced),
         secs(t0), 60);
}

}  // namespace

int main() {
  lower_bounds();
  feasibility();
  csp_oracle();
  ds_oracle();
  sc_oracle();
  audits();
  exploitation();
  separations();
  return failed == 0 ? 0 : 1;
}
