// smc: command line front end for the solvers, generators and audits.
// stdout carries results only; stats and audit logs go to stderr.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "smc/csp.hpp"
#include "smc/csp_solver.hpp"
#include "smc/domset.hpp"
#include "smc/error.hpp"
#include "smc/generators.hpp"
#include "smc/measure.hpp"
#include "smc/oracles.hpp"
#include "smc/separator.hpp"
#include "smc/setcover.hpp"

using namespace smc;
using nlohmann::json;

namespace {

struct Common {
  std::string input;  // empty or "-" means stdin
  std::uint64_t seed = 0;
  bool stats = false;
  bool json_out = false;
  bool audit = false;
  std::string policy = "separator";
  std::string weights;
};

std::string slurp(const std::string& path) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    os << f.rdbuf();
  }
  return os.str();
}

std::ifstream open_weights(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return f;
}

Policy csp_policy(const std::string& p) {
  if (p == "separator") return Policy::Separator;
  if (p == "local") return Policy::Local;
  throw ParseError("unknown policy '" + p + "'");
}

std::string ids(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json counts_json(const CountVector& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(x.str());
  return a;
}

void print_counts(const CountVector& c) {
  for (std::size_t k = 0; k < c.size(); ++k) std::cout << k << ' ' << c[k] << '\n';
}

json audit_json(const AuditLog& a) {
  return {{"steps", a.steps},
          {"mu_violations", a.mu_violations},
          {"eta_violations", a.eta_violations},
          {"validity_violations", a.validity_violations},
          {"orientation_violations", a.orientation_violations},
          {"separation_misses", a.separation_misses}};
}

json audit_json(const ScAuditLog& a) {
  return {{"steps", a.steps},
          {"mu_violations", a.mu_violations},
          {"progress_violations", a.progress_violations},
          {"transition_violations", a.transition_violations},
          {"balance_violations", a.balance_violations},
          {"validity_violations", a.validity_violations},
          {"separations", a.separations},
          {"shrink_misses", a.shrink_misses},
          {"separation_misses", a.separation_misses}};
}

void log_json(const json& j) {
  for (auto& [k, v] : j.items()) std::cerr << k << '=' << v.dump() << '\n';
}

int run_csp(const Common& c, const CspInstance& inst, bool general, const char* what) {
  SolveOptions o;
  o.policy = csp_policy(c.policy);
  o.audit = c.audit;
  o.seed = c.seed;
  if (!c.weights.empty()) {
    auto f = open_weights(c.weights);
    o.weights = read_csp_weights(f);
  }
  auto [sol, st] = general ? solve_general(inst, o) : solve(inst, o);
  json stats = {{"branchings", st.branchings},
                {"leaves", st.leaves},
                {"max_depth", st.max_depth},
                {"separator_recomputes", st.separator_recomputes}};
  if (c.audit) stats["audit"] = audit_json(st.audit);
  std::vector<int> phi;
  for (int v : inst.graph.vertices()) phi.push_back(sol.assignment[v]);
  if (c.json_out) {
    json j = {{"problem", what}, {"score", sol.score}, {"assignment", json::array()}};
    for (int v : inst.graph.vertices()) j["assignment"].push_back({v, sol.assignment[v]});
    if (c.stats || c.audit) j["stats"] = stats;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "score " << sol.score << '\n';
    for (int v : inst.graph.vertices()) std::cout << "v " << v << ' ' << sol.assignment[v] << '\n';
  }
  if (c.stats || c.audit) log_json(stats);
  if (c.audit) {
    for (const auto& f : st.audit.failures) {
      std::cerr << "audit-fail " << f.kind << " mu=" << static_cast<double>(f.parent) << " ->";
      for (auto x : f.children) std::cerr << ' ' << static_cast<double>(x);
      std::cerr << " eta=" << f.eta_parent << " ->";
      for (auto x : f.eta_children) std::cerr << ' ' << x;
      std::cerr << '\n';
    }
  }
  return 0;
}

ScOptions sc_options(const Common& c) {
  ScOptions o;
  o.audit = c.audit;
  o.use_separator = c.policy != "local";
  if (!c.weights.empty()) {
    auto f = open_weights(c.weights);
    o.weights = read_sc_weights(f);
  }
  return o;
}

int report_counts(const Common& c, const CountVector& r, const json& stats, const char* what) {
  if (c.json_out) {
    json j = {{"problem", what}, {"counts", counts_json(r)}};
    if (c.stats || c.audit) j["stats"] = stats;
    std::cout << j.dump() << '\n';
  } else {
    print_counts(r);
  }
  if (c.stats || c.audit) log_json(stats);
  return 0;
}

int run_sc(const Common& c, const ScIncidence& I, const char* what) {
  ScStats st;
  CountVector r = sc_count(I, sc_options(c), &st);
  json stats = {{"branchings", st.branchings},
                {"dp_calls", st.dp_calls},
                {"fallbacks", st.fallbacks},
                {"max_depth", st.max_depth}};
  if (c.audit) {
    stats["audit"] = audit_json(st.audit);
    for (const auto& f : st.audit.failures) std::cerr << "audit-fail " << f << '\n';
  }
  return report_counts(c, r, stats, what);
}

int cmd_count_ds(const Common& c, bool subcubic) {
  std::istringstream in(slurp(c.input));
  if (!subcubic) {
    Graph g = read_graph(in);
    return run_sc(c, ds_to_sc(g), "count-ds");
  }
  LabeledGraph lg = read_labeled(in);
  DsOptions o;
  o.policy = c.policy == "local" ? DsPolicy::Local : DsPolicy::Separator;
  o.audit = c.audit;
  o.seed = c.seed;
  DsStats st;
  CountVector r = count_ds(lg, o, &st);
  json stats = {{"branchings", st.branchings},
                {"leaves", st.leaves},
                {"separator_recomputes", st.separator_recomputes},
                {"pivot_fallbacks", st.pivot_fallbacks}};
  if (c.audit) stats["negative_returns"] = st.negative_returns;
  return report_counts(c, r, stats, "count-ds");
}

int cmd_separate(const Common& c, bool balanced) {
  std::istringstream in(slurp(c.input));
  Graph g = read_graph(in);
  Separation s;
  json extra;
  if (balanced) {
    ScWeights w = ScWeights::published();
    if (!c.weights.empty()) {
      auto f = open_weights(c.weights);
      w = read_sc_weights(f);
    }
    if (g.max_degree() > 3) throw SolverError("balanced separation needs max degree 3");
    auto bs = separate_balanced_by_measure(
        g, [&](int v) { return w.right(g.degree(v)); }, w.B());
    s = bs.sep;
    extra = {{"bag", bs.bag},
             {"left_weight", rational_to_string(bs.left_weight)},
             {"right_weight", rational_to_string(bs.right_weight)},
             {"balanced", bs.balanced}};
  } else {
    auto cs = separate_cubic(g, c.seed);
    s = cs.sep;
    extra = {{"cut", cs.cut}};
  }
  const double frac = g.empty() ? 0.0 : static_cast<double>(s.sep().size()) / g.num_vertices();
  const bool valid = verify_separation(g, s);
  if (c.json_out) {
    json j = {{"L", s.left()}, {"S", s.sep()}, {"R", s.right()}, {"sep_frac", frac}, {"valid", valid}};
    j.update(extra);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "L:" << ids(s.left()) << " S:" << ids(s.sep()) << " R:" << ids(s.right()) << '\n';
  std::cout << "sep_frac=" << frac;
  for (auto& [k, v] : extra.items()) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  std::cout << '\n';
  return 0;
}

struct GenArgs {
  int n = 0, n3 = 0, n4 = 0, m = -1, r = 2;
  double p = 0.5, density = 0.8;
  bool connected = false;
};

int cmd_gen(const Common& c, const std::string& kind, const GenArgs& a) {
  if (kind == "g3") {
    write_graph(std::cout, gen_g3(a.n));
  } else if (kind == "g4") {
    int n3 = a.n3, n4 = a.n4;
    if (a.n > 0 && n3 == 0) n3 = n4 = a.n / 2;
    write_graph(std::cout, gen_g4(n3, n4));
  } else if (kind == "g5") {
    write_graph(std::cout, gen_g5(a.n));
  } else if (kind == "cubic") {
    write_graph(std::cout, gen_random_cubic(a.n, c.seed, a.connected));
  } else if (kind == "subcubic") {
    write_graph(std::cout, gen_random_subcubic(a.n, c.seed, a.density));
  } else if (kind == "graph") {
    write_graph(std::cout, gen_random_graph(a.n, a.p, c.seed));
  } else if (kind == "csp") {
    int m = a.m < 0 ? a.n : a.m;
    write_csp(std::cout, gen_random_csp(a.n, m, a.r, c.seed));
  } else {
    throw ParseError("unknown family '" + kind + "'");
  }
  return 0;
}

int cmd_trace(const Common& c, const std::string& fam, const GenArgs& a) {
  LbTrace t;
  if (fam == "g3") {
    t = trace_g3(a.n);
  } else if (fam == "g4") {
    int n3 = a.n3, n4 = a.n4;
    if (a.n > 0 && n3 == 0) n3 = n4 = a.n / 2;
    t = trace_g4(n3, n4);
  } else if (fam == "g5") {
    t = trace_g5(a.n);
  } else {
    throw ParseError("unknown family '" + fam + "'");
  }
  if (c.json_out) {
    std::cout << json{{"branchings", t.reductions},
                      {"expected", t.expected},
                      {"match", t.match()},
                      {"guard_failures", t.guard_failures},
                      {"structure_failures", t.structure_failures}}
                     .dump()
              << '\n';
  } else {
    std::cout << "branchings=" << t.reductions << " expected=" << t.expected
              << " match=" << (t.match() ? "true" : "false") << '\n';
  }
  if (c.stats) {
    std::cerr << "guard_failures=" << t.guard_failures << " structure_failures=" << t.structure_failures << '\n';
    for (const auto& s : t.steps)
      std::cerr << "pivot " << s.pivot << " deg=" << s.degree << " left=" << s.order_after << '\n';
  }
  return 0;
}

int cmd_audit(const Common& c, const std::string& system, int improve, int r) {
  ConstraintReport rep;
  Exponent e;
  std::string wtext;
  if (system == "csp") {
    CspWeights w = CspWeights::published();
    if (!c.weights.empty()) {
      auto f = open_weights(c.weights);
      w = read_csp_weights(f);
    }
    if (improve > 0) w = improve_csp(w, improve);
    Rational eps_max;
    rep = check_csp(w, &eps_max);
    if (rep.feasible) e = exponent_csp(w, r);
    std::ostringstream os;
    os << "w_s " << rational_to_string(w.w_s) << "\nw2_s " << rational_to_string(w.w2_s) << "\nw_r "
       << rational_to_string(w.w_r) << "\nw_b " << rational_to_string(w.w_b) << "\nw_c "
       << rational_to_string(w.w_c) << "\neps " << rational_to_string(w.eps) << '\n';
    os << "# separator eps may go up to " << to_double(eps_max) << '\n';
    wtext = os.str();
  } else if (system == "sc") {
    ScWeights w = ScWeights::published();
    if (!c.weights.empty()) {
      auto f = open_weights(c.weights);
      w = read_sc_weights(f);
    }
    if (improve > 0) w = improve_sc(w, improve);
    rep = check_sc(w);
    if (rep.feasible) e = exponent_sc(w);
    std::ostringstream os;
    for (int d = 2; d <= 6; ++d) os << "w_elt " << d << ' ' << to_double(w.w_elt[d]) << '\n';
    for (int d = 2; d <= 6; ++d) os << "w_set " << d << ' ' << to_double(w.w_set[d]) << '\n';
    for (int d = 2; d <= 3; ++d) os << "w_sep " << d << ' ' << to_double(w.w_sep[d]) << '\n';
    for (int d = 2; d <= 3; ++d) os << "w_right " << d << ' ' << to_double(w.w_right[d]) << '\n';
    os << "eps " << rational_to_string(w.eps) << '\n';
    wtext = os.str();
  } else {
    throw ParseError("unknown system '" + system + "'");
  }
  if (c.json_out) {
    json j = {{"system", system}, {"feasible", rep.feasible}, {"binding", rep.binding}};
    if (rep.feasible) {
      j["exponent"] = e.exponent;
      j["base"] = e.base;
    }
    json cs = json::array();
    for (const auto& x : rep.constraints)
      cs.push_back({{"id", x.id},
                    {"lhs", x.exact ? rational_to_string(x.lhs) : std::to_string(x.lhs_float)},
                    {"ok", x.ok}});
    j["constraints"] = cs;
    std::cout << j.dump() << '\n';
    return rep.feasible ? 0 : 1;
  }
  print_report(std::cout, rep);
  std::cout << "binding=";
  for (std::size_t i = 0; i < rep.binding.size(); ++i) std::cout << (i ? "," : "") << rep.binding[i];
  std::cout << '\n';
  if (improve > 0) std::cout << wtext;
  std::cout << "feasible=" << (rep.feasible ? "true" : "false");
  if (rep.feasible)
    std::cout << std::setprecision(5) << " exponent=" << e.exponent << " base=" << e.base;
  std::cout << '\n';
  return rep.feasible ? 0 : 1;
}

int cmd_oracle(const Common& c, const std::string& what) {
  std::istringstream in(slurp(c.input));
  if (what == "csp") {
    CspInstance inst = read_csp(in);
    CspSolution s = brute_max2csp(inst);
    std::cout << "score " << s.score << '\n';
    for (int v : inst.graph.vertices()) std::cout << "v " << v << ' ' << s.assignment[v] << '\n';
  } else if (what == "ds") {
    print_counts(brute_domset(read_labeled(in)));
  } else if (what == "sc") {
    print_counts(brute_setcover(read_setcover(in)));
  } else if (what == "bisect") {
    std::cout << "bisection_width " << brute_min_bisection(read_graph(in)) << '\n';
  } else if (what == "pw") {
    std::cout << "pathwidth " << brute_pathwidth(read_graph(in)) << '\n';
  } else {
    throw ParseError("unknown oracle '" + what + "'");
  }
  (void)c;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separator based exact solvers for Max 2-CSP, #Dominating Set and #Set Cover"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_flag("--stats", c.stats, "search statistics on stderr");
  app.add_flag("--json", c.json_out, "one JSON object on stdout");
  app.add_flag("--audit-measure", c.audit, "check every recursive step against the measure");
  app.add_option("--policy", c.policy, "separator or local")
      ->check(CLI::IsMember({"separator", "local"}))
      ->capture_default_str();
  app.add_option("--weights", c.weights, "weights file");

  auto input_opt = [&](CLI::App* s) { s->add_option("input", c.input, "input file (default stdin)"); };

  auto* csp = app.add_subcommand("solve-csp", "Max 2-CSP in the max2csp text format");
  input_opt(csp);
  auto* cut = app.add_subcommand("maxcut", "maximum cut of a graph");
  input_opt(cut);
  auto* sat = app.add_subcommand("max2sat", "Max 2-SAT from DIMACS 2-CNF");
  input_opt(sat);
  bool subcubic = false;
  auto* cds = app.add_subcommand("count-ds", "dominating sets by size");
  input_opt(cds);
  cds->add_flag("--subcubic", subcubic, "labelled subcubic solver instead of the set cover reduction");
  auto* csc = app.add_subcommand("count-sc", "set covers by size");
  input_opt(csc);
  bool balanced = false;
  auto* sep = app.add_subcommand("separate", "separation of a graph");
  input_opt(sep);
  sep->add_flag("--balanced", balanced, "bag sweep balanced by the right-side weights");

  GenArgs ga;
  std::string kind;
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("family", kind, "g3 g4 g5 cubic subcubic graph csp")->required();
  gen->add_option("--n", ga.n, "order");
  gen->add_option("--n3", ga.n3);
  gen->add_option("--n4", ga.n4);
  gen->add_option("--m", ga.m, "edges (csp)");
  gen->add_option("--r", ga.r, "domain size (csp)");
  gen->add_option("--p", ga.p, "edge probability (graph)");
  gen->add_option("--density", ga.density, "edge density (subcubic)");
  gen->add_flag("--connected", ga.connected);

  std::string fam;
  auto* tr = app.add_subcommand("trace-lb", "Reduction III count on the lower bound families");
  tr->add_option("--family", fam)->required();
  tr->add_option("--n", ga.n);
  tr->add_option("--n3", ga.n3);
  tr->add_option("--n4", ga.n4);

  std::string system = "csp";
  int improve = 0, r = 2;
  auto* au = app.add_subcommand("audit-measure", "check a weight table against its constraint system");
  au->add_option("--system", system)->check(CLI::IsMember({"csp", "sc"}))->capture_default_str();
  au->add_option("--improve", improve, "coordinate search budget");
  au->add_option("--r", r, "domain size for the csp base")->capture_default_str();

  std::string which;
  auto* orc = app.add_subcommand("oracle", "exhaustive reference answers");
  orc->add_option("problem", which, "csp ds sc bisect pw")->required();
  input_opt(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* t = std::getenv("SMC_THREADS"); t && c.stats)
    std::cerr << "threads=sequential (SMC_THREADS=" << t << ")\n";

  try {
    if (csp->parsed()) return run_csp(c, parse_csp(slurp(c.input)), true, "max2csp");
    if (cut->parsed()) return run_csp(c, encode_maxcut(parse_graph(slurp(c.input))), true, "maxcut");
    if (sat->parsed()) {
      std::istringstream in(slurp(c.input));
      return run_csp(c, encode_max2sat(read_dimacs(in)), true, "max2sat");
    }
    if (cds->parsed()) return cmd_count_ds(c, subcubic);
    if (csc->parsed()) {
      std::istringstream in(slurp(c.input));
      return run_sc(c, to_incidence(read_setcover(in)), "count-sc");
    }
    if (sep->parsed()) return cmd_separate(c, balanced);
    if (gen->parsed()) return cmd_gen(c, kind, ga);
    if (tr->parsed()) return cmd_trace(c, fam, ga);
    if (au->parsed()) return cmd_audit(c, system, improve, r);
    if (orc->parsed()) return cmd_oracle(c, which);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
