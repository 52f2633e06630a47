#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matwalk/matrix.hpp"
#include "matwalk/scalar.hpp"

namespace matwalk {

// Weighted digraph on vertices 1..n; every stored edge weight is nonzero.
// Loops are permitted.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("digraph order must be positive");
  }

  int order() const { return n_; }

  void add_edge(int u, int v, Scalar w);
  bool has_edge(int u, int v) const;
  const Scalar& weight(int u, int v) const;

  const std::map<std::pair<int, int>, Scalar>& edges() const { return edges_; }

  // Successors of u in ascending vertex order.
  std::vector<int> successors(int u) const;

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
  }

  int n_;
  std::map<std::pair<int, int>, Scalar> edges_;
};

// Vertex sequence x_0..x_m validated against an ambient digraph at
// construction; length is the number of edges.
class Walk {
 public:
  static Walk make(const WeightedDigraph& g, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  int start() const { return vertices_.front(); }
  int end() const { return vertices_.back(); }

  bool operator==(const Walk& o) const { return vertices_ == o.vertices_; }

 private:
  explicit Walk(std::vector<int> v) : vertices_(std::move(v)) {}
  std::vector<int> vertices_;
};

// Simple undirected graph: no loops, no multi-edges. Edges stored as
// ordered pairs (u, v) with u < v.
struct UndirectedGraph {
  int n;
  std::set<std::pair<int, int>> edges;

  explicit UndirectedGraph(int order) : n(order) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

WeightedDigraph digraph_of_matrix(const ExactMatrix& a);

Scalar walk_weight(const WeightedDigraph& g, const Walk& l);

std::vector<int> reverse_walk(const Walk& l);
std::vector<int> reverse_sequence(const std::vector<int>& seq);
bool is_walk(const WeightedDigraph& g, const std::vector<int>& seq);

Walk concat_walks(const WeightedDigraph& g, const Walk& l1, const Walk& l2);

struct EnumerationLimits {
  int max_n = 8;
  int max_len = 12;
};

// All length-m walks from u to v, in lexicographic order of their vertex
// sequences.
std::vector<Walk> enumerate_walks(const WeightedDigraph& g, int u, int v, int m,
                                  const EnumerationLimits& limits = {});

UndirectedGraph underlying_graph(const WeightedDigraph& g);

struct AcyclicityResult {
  bool acyclic;
  // A directed simple cycle of length >= 3, minimal vertex first, when
  // acyclic is false.
  std::optional<std::vector<int>> witness;
};

// True iff the digraph has no simple directed cycle of length >= 3
// (loops and digons allowed). Decided structurally: every intra-SCC
// non-loop edge must be bidirected and the intra-SCC undirected skeleton
// must be a forest.
AcyclicityResult is_acyclic(const WeightedDigraph& g);

// All simple directed cycles of length 1..max_len, each reported once,
// rotated so the minimal vertex comes first. Test oracle; exponential.
std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedDigraph& g,
                                                      int max_len,
                                                      int max_n = 8);

}  // namespace matwalk
