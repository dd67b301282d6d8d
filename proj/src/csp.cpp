#include "smc/csp.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smc/error.hpp"

namespace smc {

Score checked_add(Score a, Score b) {
  Score out;
  if (__builtin_add_overflow(a, b, &out)) throw SolverError("score overflow");
  return out;
}

CspInstance::CspInstance(int r_, int n) : r(r_), graph(n) {
  if (r < 2) throw std::invalid_argument("domain size must be at least 2");
  vs.assign(n, std::vector<Score>(r, 0));
}

void CspInstance::add_edge(int u, int v) {
  if (graph.add_edge(u, v)) es[{std::min(u, v), std::max(u, v)}].assign(r * r, 0);
}

Score CspInstance::edge_score(int u, int cu, int v, int cv) const {
  auto it = es.find({std::min(u, v), std::max(u, v)});
  if (it == es.end()) return 0;
  return u < v ? it->second[cu * r + cv] : it->second[cv * r + cu];
}

void CspInstance::add_edge_score(int u, int cu, int v, int cv, Score s) {
  auto& t = es.at({std::min(u, v), std::max(u, v)});
  Score& cell = u < v ? t[cu * r + cv] : t[cv * r + cu];
  cell = checked_add(cell, s);
}

void CspInstance::remove_vertex(int v) {
  for (int u : graph.neighbors(v)) es.erase({std::min(u, v), std::max(u, v)});
  graph.remove_vertex(v);
  vs[v].clear();
}

bool CspInstance::consistent() const {
  if (static_cast<int>(es.size()) != graph.num_edges()) return false;
  for (auto& [k, t] : es)
    if (!graph.has_edge(k.first, k.second) || static_cast<int>(t.size()) != r * r) return false;
  for (int v : graph.vertices())
    if (v >= static_cast<int>(vs.size()) || static_cast<int>(vs[v].size()) != r) return false;
  return true;
}

Score evaluate(const CspInstance& inst, const std::vector<int>& phi) {
  Score s = inst.nil;
  for (int v : inst.graph.vertices()) {
    if (v >= static_cast<int>(phi.size()) || phi[v] < 0 || phi[v] >= inst.r)
      throw std::invalid_argument("assignment misses vertex " + std::to_string(v));
    s = checked_add(s, inst.vs[v][phi[v]]);
  }
  for (auto& [k, t] : inst.es) s = checked_add(s, t[phi[k.first] * inst.r + phi[k.second]]);
  return s;
}

void apply_reduce0(CspInstance& inst, int y, int* choice) {
  if (inst.graph.degree(y) != 0) throw std::invalid_argument("reduce0 needs degree 0");
  const auto& sy = inst.vs[y];
  int best = 0;
  for (int c = 1; c < inst.r; ++c)
    if (sy[c] > sy[best]) best = c;
  inst.nil = checked_add(inst.nil, sy[best]);
  if (choice) *choice = best;
  inst.remove_vertex(y);
}

void apply_reduceI(CspInstance& inst, int y, std::vector<int>* choice) {
  if (inst.graph.degree(y) != 1) throw std::invalid_argument("reduceI needs degree 1");
  const int r = inst.r;
  int x = inst.graph.neighbors(y)[0];
  if (choice) choice->assign(r, 0);
  for (int c = 0; c < r; ++c) {
    Score best = 0;
    int arg = -1;
    for (int d = 0; d < r; ++d) {
      Score v = checked_add(inst.edge_score(x, c, y, d), inst.vs[y][d]);
      if (arg < 0 || v > best) {
        best = v;
        arg = d;
      }
    }
    inst.vs[x][c] = checked_add(inst.vs[x][c], best);
    if (choice) (*choice)[c] = arg;
  }
  inst.remove_vertex(y);
}

void apply_reduceII(CspInstance& inst, int y, std::vector<int>* choice) {
  if (inst.graph.degree(y) != 2) throw std::invalid_argument("reduceII needs degree 2");
  const int r = inst.r;
  int x = inst.graph.neighbors(y)[0], z = inst.graph.neighbors(y)[1];  // x < z
  std::vector<Score> add(r * r);
  if (choice) choice->assign(r * r, 0);
  for (int c = 0; c < r; ++c)
    for (int d = 0; d < r; ++d) {
      Score best = 0;
      int arg = -1;
      for (int f = 0; f < r; ++f) {
        Score v = checked_add(checked_add(inst.edge_score(x, c, y, f), inst.edge_score(y, f, z, d)),
                              inst.vs[y][f]);
        if (arg < 0 || v > best) {
          best = v;
          arg = f;
        }
      }
      add[c * r + d] = best;
      if (choice) (*choice)[c * r + d] = arg;
    }
  inst.remove_vertex(y);
  inst.add_edge(x, z);
  for (int c = 0; c < r; ++c)
    for (int d = 0; d < r; ++d) inst.add_edge_score(x, c, z, d, add[c * r + d]);
}

void apply_reduceIII(CspInstance& inst, int y, int color) {
  if (inst.graph.degree(y) < 3) throw std::invalid_argument("reduceIII needs degree >= 3");
  inst.nil = checked_add(inst.nil, inst.vs[y][color]);
  for (int x : inst.graph.neighbors(y))
    for (int d = 0; d < inst.r; ++d)
      inst.vs[x][d] = checked_add(inst.vs[x][d], inst.edge_score(x, d, y, color));
  inst.remove_vertex(y);
}

CspInstance reduce0(const CspInstance& inst, int y, int* choice) {
  CspInstance out = inst;
  apply_reduce0(out, y, choice);
  return out;
}

CspInstance reduceI(const CspInstance& inst, int y, std::vector<int>* choice) {
  CspInstance out = inst;
  apply_reduceI(out, y, choice);
  return out;
}

CspInstance reduceII(const CspInstance& inst, int y, std::vector<int>* choice) {
  CspInstance out = inst;
  apply_reduceII(out, y, choice);
  return out;
}

std::vector<CspInstance> reduceIII(const CspInstance& inst, int y) {
  std::vector<CspInstance> out;
  for (int c = 0; c < inst.r; ++c) {
    out.push_back(inst);
    apply_reduceIII(out.back(), y, c);
  }
  return out;
}

CspInstance encode_maxcut(const Graph& g) {
  CspInstance inst(2, g.id_bound());
  for (int v = 0; v < g.id_bound(); ++v)
    if (!g.has_vertex(v)) {
      inst.graph.remove_vertex(v);
      inst.vs[v].clear();
    }
  for (auto [u, v] : g.edges()) {
    inst.add_edge(u, v);
    inst.es[{u, v}] = {0, 1, 1, 0};
  }
  return inst;
}

namespace {

std::string strip(const std::string& line, char comment) {
  auto p = line.find(comment);
  std::string s = p == std::string::npos ? line : line.substr(0, p);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Cnf read_dimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  bool header = false;
  long nclauses = 0;
  int lineno = 0;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line, '%');
    if (s.empty() || s[0] == 'c') continue;
    std::istringstream ls(s);
    if (s[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> nclauses;
      if (!ls || fmt != "cnf" || cnf.num_vars < 0 || nclauses < 0) fail(lineno, "bad problem line");
      header = true;
      continue;
    }
    if (!header) fail(lineno, "clause before problem line");
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
        continue;
      }
      if (std::labs(lit) > cnf.num_vars) fail(lineno, "variable out of range");
      cur.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) fail(lineno, "bad literal");
  }
  if (!header) throw ParseError("missing 'p cnf' line");
  if (!cur.empty()) cnf.clauses.push_back(cur);
  if (static_cast<long>(cnf.clauses.size()) != nclauses)
    throw ParseError("clause count mismatch");
  return cnf;
}

CspInstance encode_max2sat(const Cnf& cnf) {
  CspInstance inst(2, cnf.num_vars);
  for (const auto& cl : cnf.clauses) {
    if (cl.size() > 2) throw ParseError("clause of width > 2");
    if (cl.empty()) continue;
    // color 1 = true
    auto sat = [](int lit, int color) { return (lit > 0) == (color == 1); };
    if (cl.size() == 1 || cl[0] == cl[1]) {
      int v = std::abs(cl[0]) - 1;
      for (int c = 0; c < 2; ++c)
        if (sat(cl[0], c)) inst.vs[v][c] += 1;
      continue;
    }
    if (cl[0] == -cl[1]) {
      inst.nil += 1;
      continue;
    }
    int a = std::abs(cl[0]) - 1, b = std::abs(cl[1]) - 1;
    inst.add_edge(a, b);
    for (int ca = 0; ca < 2; ++ca)
      for (int cb = 0; cb < 2; ++cb)
        if (sat(cl[0], ca) || sat(cl[1], cb)) inst.add_edge_score(a, ca, b, cb, 1);
  }
  return inst;
}

CspInstance read_csp(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool header = false, have_nil = false;
  long r = 0, n = 0, m = 0;
  CspInstance inst;
  std::vector<char> seen_v;
  long nv = 0, ne = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line, '#');
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    auto read_score = [&](Score& x) {
      if (!(ls >> x)) fail(lineno, "bad score");
    };
    if (!header) {
      ls >> r >> n >> m;
      if (kw != "max2csp" || !ls || r < 2 || n < 0 || m < 0)
        fail(lineno, "expected 'max2csp <r> <n> <m>'");
      inst = CspInstance(static_cast<int>(r), static_cast<int>(n));
      seen_v.assign(n, 0);
      header = true;
    } else if (kw == "nil") {
      if (have_nil) fail(lineno, "duplicate nil");
      read_score(inst.nil);
      have_nil = true;
    } else if (kw == "v") {
      long id;
      if (!(ls >> id) || id < 0 || id >= n) fail(lineno, "bad vertex id");
      if (seen_v[id]) fail(lineno, "duplicate vertex");
      seen_v[id] = 1;
      for (int c = 0; c < r; ++c) read_score(inst.vs[id][c]);
      ++nv;
    } else if (kw == "e") {
      long u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "bad edge");
      if (u == v) fail(lineno, "self-loop");
      if (inst.graph.has_edge(static_cast<int>(u), static_cast<int>(v)))
        fail(lineno, "duplicate edge");
      std::vector<Score> t(r * r);
      for (auto& x : t) read_score(x);
      int a = static_cast<int>(u), b = static_cast<int>(v);
      inst.add_edge(a, b);
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) inst.add_edge_score(a, c, b, d, t[c * r + d]);
      ++ne;
    } else {
      fail(lineno, "unknown keyword '" + kw + "'");
    }
    std::string rest;
    if (ls >> rest) fail(lineno, "trailing tokens");
  }
  if (!header) throw ParseError("missing max2csp header");
  if (nv != n) throw ParseError("expected " + std::to_string(n) + " vertex lines");
  if (ne != m) throw ParseError("expected " + std::to_string(m) + " edge lines");
  return inst;
}

void write_csp(std::ostream& out, const CspInstance& inst) {
  auto verts = inst.graph.vertices();
  out << "max2csp " << inst.r << ' ' << inst.graph.id_bound() << ' ' << inst.es.size() << '\n';
  out << "nil " << inst.nil << '\n';
  for (int v = 0; v < inst.graph.id_bound(); ++v) {
    out << "v " << v;
    for (int c = 0; c < inst.r; ++c)
      out << ' ' << (inst.graph.has_vertex(v) ? inst.vs[v][c] : 0);
    out << '\n';
  }
  for (auto& [k, t] : inst.es) {
    out << "e " << k.first << ' ' << k.second;
    for (Score x : t) out << ' ' << x;
    out << '\n';
  }
}

CspInstance parse_csp(const std::string& text) {
  std::istringstream in(text);
  return read_csp(in);
}

std::string format_csp(const CspInstance& inst) {
  std::ostringstream os;
  write_csp(os, inst);
  return os.str();
}

}  // namespace smc
