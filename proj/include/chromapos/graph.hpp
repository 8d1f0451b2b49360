#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chromapos {

// A labeled simple graph on vertices 1..d. The labeling is part of the value:
// chromatic symmetric functions in non-commuting variables depend on it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return d_; }
  int edge_count() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // BadParameter on loops and duplicates
  void remove_edge(int u, int v);  // BadParameter when absent

  // Bitmask of neighbors of v (bit w set iff v ~ w).
  std::uint64_t neighbors_mask(int v) const;
  int degree(int v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  const std::string& name(int v) const;
  void set_name(int v, std::string name);

  void check_vertex(int v) const;  // NoSuchVertex

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_ == b.d_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  int d_ = 0;
  std::vector<std::uint64_t> adj_;    // index 0 unused
  std::vector<std::string> names_;    // index 0 unused
};

// Family constructors, labeled as in the source figures.
Graph path(int n);                    // P_n, n >= 1
Graph cycle(int n);                   // C_n, n >= 2; cycle(2) is K_2
Graph complete(int n);                // K_n, n >= 0
Graph tadpole(int a, int b);          // cycle v_1..v_a, tail v_{a+1}..v_{a+b} at v_a
Graph path_with_leaf(int m, int n);   // P_{m,n}: leaf v_{m+1} on the n-th vertex of P_m
Graph fork();                         // u-v-w path, leaves x,y on w (labels 1..5)
Graph claw();                         // K_{1,3}, center labeled 4
Graph net();
Graph bull();
Graph s_graph();                      // the 5-vertex cycle part of the twinned tadpole

// Adds v' appended last, adjacent to v and to every neighbor of v.
Graph twin(const Graph& g, int v);

// Replaces v by a (k+1)-clique whose members share v's outside neighborhood;
// equals k successive twin operations. clan(g, v, 0) = g.
Graph clan(const Graph& g, int v, int k);

Graph disjoint_union(const Graph& g, const Graph& h);

// perm maps old labels to new labels (1-based, a bijection).
Graph relabel(const Graph& g, const std::vector<int>& perm);

// True iff some vertex subset of g induces a graph isomorphic to `pattern`.
// Pattern size guarded at kInducedPatternMaxVertices.
bool contains_induced(const Graph& g, const Graph& pattern);

bool is_isomorphic(const Graph& a, const Graph& b);

// Graph file format: '#' comment lines, then "p <d>", then "e <u> <v>" lines
// with 1-based labels, u != v, duplicates rejected.
std::string to_graph_file(const Graph& g);
Graph graph_from_file_text(const std::string& text);  // ParseError
Graph load_graph_file(const std::string& path);       // "-" reads stdin

std::vector<int> degree_sequence(const Graph& g);  // sorted descending

}  // namespace chromapos
