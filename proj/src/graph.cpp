#include "smc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smc/error.hpp"

namespace smc {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, {});
  alive_.assign(n, 1);
  nv_ = n;
}

bool Graph::has_vertex(int v) const {
  return v >= 0 && v < id_bound() && alive_[v];
}

void Graph::check(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

void Graph::add_vertex(int v) {
  if (v < 0) throw std::invalid_argument("negative vertex id");
  if (v >= id_bound()) {
    adj_.resize(v + 1);
    alive_.resize(v + 1, 0);
  }
  if (!alive_[v]) {
    alive_[v] = 1;
    ++nv_;
  }
}

bool Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop on " + std::to_string(u));
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return false;
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++ne_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return false;
  a.erase(it);
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --ne_;
  return true;
}

void Graph::remove_vertex(int v) {
  check(v);
  for (int u : adj_[v]) {
    auto& b = adj_[u];
    b.erase(std::lower_bound(b.begin(), b.end(), v));
  }
  ne_ -= static_cast<int>(adj_[v].size());
  adj_[v].clear();
  alive_[v] = 0;
  --nv_;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check(v);
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(nv_);
  for (int v = 0; v < id_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(ne_);
  for (int u = 0; u < id_bound(); ++u)
    if (alive_[u])
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < id_bound(); ++v)
    if (alive_[v]) d = std::max(d, static_cast<int>(adj_[v].size()));
  return d;
}

bool Graph::operator==(const Graph& o) const {
  return vertices() == o.vertices() && edges() == o.edges();
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  Graph h;
  for (int v : s) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    h.add_vertex(v);
  }
  for (int v : s)
    for (int u : g.neighbors(v))
      if (u > v && h.has_vertex(u)) h.add_edge(v, u);
  return h;
}

Graph remove_vertex(const Graph& g, int v) {
  Graph h = g;
  h.remove_vertex(v);
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.id_bound(), 0);
  for (int s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

MultiGraph cubic_structure(const Graph& g) {
  if (g.max_degree() > 3) throw std::invalid_argument("cubic_structure needs max degree <= 3");
  // incidence lists of edge ids; edges may become loops or parallels
  std::vector<std::pair<int, int>> ends;
  std::vector<char> live_edge;
  std::map<int, std::vector<int>> inc;
  for (int v : g.vertices()) inc[v];
  for (auto [u, v] : g.edges()) {
    int id = static_cast<int>(ends.size());
    ends.emplace_back(u, v);
    live_edge.push_back(1);
    inc[u].push_back(id);
    inc[v].push_back(id);
  }
  auto deg = [&](int v) { return static_cast<int>(inc[v].size()); };
  auto drop = [&](int v, int e) {
    auto& l = inc[v];
    l.erase(std::find(l.begin(), l.end(), e));
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = inc.begin(); it != inc.end();) {
      int v = it->first;
      int d = deg(v);
      if (d >= 3) {
        ++it;
        continue;
      }
      std::vector<int> es = it->second;
      if (d == 2 && es[0] != es[1]) {
        // suppress v: its two edges become one
        int a = ends[es[0]].first == v ? ends[es[0]].second : ends[es[0]].first;
        int b = ends[es[1]].first == v ? ends[es[1]].second : ends[es[1]].first;
        for (int e : es) live_edge[e] = 0;
        drop(a, es[0]);
        drop(b, es[1]);
        int id = static_cast<int>(ends.size());
        ends.emplace_back(std::min(a, b), std::max(a, b));
        live_edge.push_back(1);
        inc[a].push_back(id);
        inc[b].push_back(id);
      } else {
        // degree 0, 1, or a lone loop: the vertex disappears
        for (int e : es) {
          if (!live_edge[e]) continue;
          live_edge[e] = 0;
          int o = ends[e].first == v ? ends[e].second : ends[e].first;
          if (o != v) drop(o, e);
        }
      }
      it = inc.erase(it);
      changed = true;
    }
  }
  MultiGraph m;
  for (auto& [v, l] : inc) m.vertices.push_back(v);
  for (std::size_t e = 0; e < ends.size(); ++e)
    if (live_edge[e]) m.edges.push_back(ends[e]);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Graph multigraph_to_simple(const MultiGraph& m) {
  Graph h;
  for (int v : m.vertices) h.add_vertex(v);
  for (auto [u, v] : m.edges) {
    if (u == v) throw std::invalid_argument("loop in multigraph");
    if (!h.add_edge(u, v)) throw std::invalid_argument("parallel edge in multigraph");
  }
  return h;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  std::string s = p == std::string::npos ? line : line.substr(0, p);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph read_graph(std::istream& in, std::vector<std::string>* extra) {
  std::string line;
  bool header = false;
  long n = 0, m = 0, seen = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    if (!header) {
      std::string kw;
      ls >> kw >> n >> m;
      if (kw != "graph" || !ls || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'graph <n> <m>'");
      g = Graph(static_cast<int>(n));
      header = true;
      continue;
    }
    long u, v;
    if (std::isdigit(static_cast<unsigned char>(s[0]))) {
      if (!(ls >> u >> v))
        throw ParseError("line " + std::to_string(lineno) + ": bad edge");
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
      if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
      if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
        throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
      ++seen;
    } else if (extra) {
      extra->push_back(s);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unexpected '" + s + "'");
    }
  }
  if (!header) throw ParseError("missing graph header");
  if (seen != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                     std::to_string(seen));
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << "graph " << g.id_bound() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

Graph parse_graph(const std::string& text, std::vector<std::string>* extra) {
  std::istringstream in(text);
  return read_graph(in, extra);
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace smc
