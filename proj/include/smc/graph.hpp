#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace smc {

// Simple undirected graph.  Vertex ids are stable: removing a vertex never
// renumbers the others, so side data keyed by id stays valid.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // vertices 0..n-1, no edges

  int id_bound() const { return static_cast<int>(adj_.size()); }
  bool has_vertex(int v) const;
  void add_vertex(int v);
  // returns false when the edge already exists
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  void remove_vertex(int v);

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  std::vector<int> vertices() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  int num_vertices() const { return nv_; }
  int num_edges() const { return ne_; }
  int max_degree() const;
  bool empty() const { return nv_ == 0; }

  bool operator==(const Graph& o) const;

 private:
  void check(int v) const;
  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
  int nv_ = 0;
  int ne_ = 0;
};

struct MultiGraph {
  std::vector<int> vertices;                // sorted
  std::vector<std::pair<int, int>> edges;   // u <= v, sorted; u == v is a loop
  int degree(int v) const;
  bool operator==(const MultiGraph& o) const = default;
};

Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph remove_vertex(const Graph& g, int v);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
MultiGraph cubic_structure(const Graph& g);
// the degree-3 core as a simple graph; throws if the structure has loops or parallels
Graph multigraph_to_simple(const MultiGraph& m);

// Lines that are neither edges nor comments go to *extra when given, else
// they are a parse error.
Graph read_graph(std::istream& in, std::vector<std::string>* extra = nullptr);
void write_graph(std::ostream& out, const Graph& g);
Graph parse_graph(const std::string& text, std::vector<std::string>* extra = nullptr);
std::string format_graph(const Graph& g);

}  // namespace smc
