#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "smc/countvec.hpp"
#include "smc/graph.hpp"

namespace smc {

enum class Side : signed char { None = -1, Left = 0, Sep = 1, Right = 2 };

// (L,S,R) keyed by stable vertex id.
struct Separation {
  std::vector<Side> side;

  Side get(int v) const {
    return v >= 0 && v < static_cast<int>(side.size()) ? side[v] : Side::None;
  }
  void set(int v, Side s);
  void erase(int v) { set(v, Side::None); }
  std::vector<int> left() const { return collect(Side::Left); }
  std::vector<int> sep() const { return collect(Side::Sep); }
  std::vector<int> right() const { return collect(Side::Right); }
  bool sep_empty() const;
  void swap_sides();
  // true iff every vertex of g has a side and no other id does
  bool partitions(const Graph& g) const;
  Separation restricted(const std::vector<int>& keep) const;

  static Separation trivial(const Graph& g);  // (∅,∅,V)
  static Separation from_sets(const std::vector<int>& l, const std::vector<int>& s,
                              const std::vector<int>& r);

  bool operator==(const Separation& o) const;

 private:
  std::vector<int> collect(Side s) const;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;
};

struct Bisection {
  std::vector<int> a, b;
  int cut = 0;
};

// throws std::invalid_argument when s does not partition V(g)
bool verify_separation(const Graph& g, const Separation& s);

int cut_size(const Graph& g, const std::vector<int>& a);
Bisection bisect_heuristic(const Graph& g, std::uint64_t seed = 0, int starts = 8);

struct CubicSeparation {
  Separation sep;
  int cut = 0;           // cut of the underlying bisection
  double sep_frac = 0;   // |S| / |V|
};
CubicSeparation separate_cubic(const Graph& g, std::uint64_t seed = 0);

bool is_path_decomposition(const Graph& g, const PathDecomposition& pd);
bool is_nice(const PathDecomposition& pd);
PathDecomposition nice_path_decomposition(const Graph& g);

struct BalancedSeparation {
  Separation sep;
  int bag = -1;          // index of the chosen bag
  Rational left_weight, right_weight;
  bool balanced = false; // |mu(L) - mu(R)| <= B
};
using VertexWeight = std::function<Rational(int)>;
BalancedSeparation separate_balanced_by_measure(const Graph& g, const VertexWeight& w,
                                                const Rational& cap);

}  // namespace smc
