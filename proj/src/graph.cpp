#include "chromapos/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"

namespace chromapos {

Graph::Graph(int vertex_count) : d_(vertex_count) {
  if (vertex_count < 0) fail(ErrorKind::BadParameter, "negative vertex count");
  if (vertex_count > kGraphMaxVertices) {
    fail(ErrorKind::TooLarge, "graph has " + std::to_string(vertex_count) +
                                  " vertices, kGraphMaxVertices=" +
                                  std::to_string(kGraphMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(d_) + 1, 0);
  names_.resize(static_cast<std::size_t>(d_) + 1);
  for (int v = 1; v <= d_; ++v) names_[static_cast<std::size_t>(v)] = "v" + std::to_string(v);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > d_) {
    fail(ErrorKind::NoSuchVertex,
         "vertex " + std::to_string(v) + " not in 1.." + std::to_string(d_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 1; v <= d_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::BadParameter, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    fail(ErrorKind::BadParameter,
         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) {
    fail(ErrorKind::BadParameter,
         "no edge " + std::to_string(u) + " " + std::to_string(v) + " to remove");
  }
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::neighbors_mask(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return std::popcount(neighbors_mask(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= d_; ++u) {
    for (int v = u + 1; v <= d_; ++v) {
      if ((adj_[static_cast<std::size_t>(u)] >> v) & 1) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::name(int v) const {
  check_vertex(v);
  return names_[static_cast<std::size_t>(v)];
}

void Graph::set_name(int v, std::string name) {
  check_vertex(v);
  names_[static_cast<std::size_t>(v)] = std::move(name);
}

Graph path(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "path needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 2) fail(ErrorKind::BadParameter, "cycle needs n >= 2");
  if (n == 2) return path(2);  // C_2 := K_2, so that X_{C_2} = 2e_2
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n, 1);
  return g;
}

Graph complete(int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "complete needs n >= 0");
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph tadpole(int a, int b) {
  if (a < 3) fail(ErrorKind::BadParameter, "tadpole needs a >= 3");
  if (b < 1) fail(ErrorKind::BadParameter, "tadpole needs b >= 1");
  Graph g = cycle(a);
  Graph out(a + b);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int t = 0; t < b; ++t) out.add_edge(a + t, a + t + 1);
  return out;
}

Graph path_with_leaf(int m, int n) {
  if (n < 1 || n > m) fail(ErrorKind::BadParameter, "path_with_leaf needs 1 <= n <= m");
  Graph g(m + 1);
  for (int v = 1; v < m; ++v) g.add_edge(v, v + 1);
  g.add_edge(n, m + 1);
  return g;
}

Graph fork() {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.set_name(1, "u");
  g.set_name(2, "v");
  g.set_name(3, "w");
  g.set_name(4, "x");
  g.set_name(5, "y");
  return g;
}

Graph claw() {
  // Center labeled last so the NCSym pipeline can single it out as i = 4.
  Graph g(4);
  g.add_edge(1, 4);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  return g;
}

Graph net() {
  Graph g(6);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  return g;
}

Graph bull() {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

Graph s_graph() { return twin(cycle(4), 4); }

Graph twin(const Graph& g, int v) {
  g.check_vertex(v);
  int d = g.vertex_count();
  Graph out(d + 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (int u = 1; u <= d; ++u) out.set_name(u, g.name(u));
  out.set_name(d + 1, g.name(v) + "'");
  out.add_edge(v, d + 1);
  for (int u = 1; u <= d; ++u) {
    if (u != v && g.has_edge(u, v)) out.add_edge(u, d + 1);
  }
  return out;
}

Graph clan(const Graph& g, int v, int k) {
  g.check_vertex(v);
  if (k < 0) fail(ErrorKind::BadParameter, "clan needs k >= 0");
  Graph out = g;
  for (int i = 0; i < k; ++i) out = twin(out, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.vertex_count() + h.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int shift = g.vertex_count();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  for (int v = 1; v <= g.vertex_count(); ++v) out.set_name(v, g.name(v));
  for (int v = 1; v <= h.vertex_count(); ++v) out.set_name(v + shift, h.name(v));
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int d = g.vertex_count();
  if (static_cast<int>(perm.size()) != d + 1 && static_cast<int>(perm.size()) != d) {
    fail(ErrorKind::BadParameter, "permutation must have one entry per vertex");
  }
  // Accept either 0-padded (perm[1..d]) or plain (perm[0..d-1]) layouts.
  auto image = [&](int v) {
    return static_cast<int>(perm.size()) == d + 1 ? perm[static_cast<std::size_t>(v)]
                                                  : perm[static_cast<std::size_t>(v - 1)];
  };
  std::vector<bool> hit(static_cast<std::size_t>(d) + 1, false);
  for (int v = 1; v <= d; ++v) {
    int w = image(v);
    if (w < 1 || w > d || hit[static_cast<std::size_t>(w)]) {
      fail(ErrorKind::BadParameter, "not a permutation of 1..d");
    }
    hit[static_cast<std::size_t>(w)] = true;
  }
  Graph out(d);
  for (auto [u, v] : g.edges()) out.add_edge(image(u), image(v));
  for (int v = 1; v <= d; ++v) out.set_name(image(v), g.name(v));
  return out;
}

namespace {

// Backtracking injective embedding; `induced` demands non-edges map to
// non-edges, which for equal sizes plus equal edge counts is an isomorphism.
bool embed(const Graph& g, const Graph& pattern, const std::vector<int>& order,
           std::vector<int>& image, std::uint64_t used, std::size_t at) {
  if (at == order.size()) return true;
  int pv = order[at];
  for (int gv = 1; gv <= g.vertex_count(); ++gv) {
    if ((used >> gv) & 1) continue;
    if (g.degree(gv) < pattern.degree(pv)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < at && ok; ++k) {
      bool pe = pattern.has_edge(pv, order[k]);
      bool ge = g.has_edge(gv, image[static_cast<std::size_t>(order[k])]);
      if (pe != ge) ok = false;
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(pv)] = gv;
    if (embed(g, pattern, order, image, used | (std::uint64_t{1} << gv), at + 1)) return true;
  }
  return false;
}

std::vector<int> by_degree_desc(const Graph& g) {
  std::vector<int> order;
  for (int v = 1; v <= g.vertex_count(); ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

bool contains_induced(const Graph& g, const Graph& pattern) {
  check_vertex_guard("contains_induced", "kInducedPatternMaxVertices",
                     kInducedPatternMaxVertices, pattern.vertex_count());
  if (pattern.vertex_count() > g.vertex_count()) return false;
  std::vector<int> image(static_cast<std::size_t>(pattern.vertex_count()) + 1, 0);
  return embed(g, pattern, by_degree_desc(pattern), image, 0, 0);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<int> image(static_cast<std::size_t>(b.vertex_count()) + 1, 0);
  return embed(a, b, by_degree_desc(b), image, 0, 0);
}

std::string to_graph_file(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph graph_from_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::string where = "line " + std::to_string(lineno);
    if (!have_header) {
      long d = -1;
      std::string extra;
      if (tag != "p" || !(ls >> d) || (ls >> extra) || d < 0) {
        fail(ErrorKind::ParseError, where + ": expected 'p <vertex count>'");
      }
      if (d > kGraphMaxVertices) {
        fail(ErrorKind::ParseError, where + ": vertex count " + std::to_string(d) +
                                        " exceeds kGraphMaxVertices=" +
                                        std::to_string(kGraphMaxVertices));
      }
      g = Graph(static_cast<int>(d));
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    std::string extra;
    if (tag != "e" || !(ls >> u >> v) || (ls >> extra)) {
      fail(ErrorKind::ParseError, where + ": expected 'e <u> <v>'");
    }
    try {
      g.add_edge(u, v);
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  if (!have_header) fail(ErrorKind::ParseError, "missing 'p <vertex count>' line");
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open graph file: " + path);
    buffer << in.rdbuf();
  }
  return graph_from_file_text(buffer.str());
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

}  // namespace chromapos
