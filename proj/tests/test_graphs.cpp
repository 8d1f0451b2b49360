#include "doctest.h"

#include <random>
#include <set>

#include "chromapos/error.hpp"
#include "chromapos/graph.hpp"
#include "oracles.hpp"

using namespace chromapos;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

Graph random_graph(std::mt19937& gen, int d) {
  Graph g(d);
  for (int u = 1; u <= d; ++u) {
    for (int v = u + 1; v <= d; ++v) {
      if (gen() % 2 == 0) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("family constructors") {
  Graph t = tadpole(4, 1);
  CHECK(t.vertex_count() == 5);
  CHECK(t.edge_count() == 5);
  CHECK(degree_sequence(t) == std::vector<int>{3, 2, 2, 2, 1});

  Graph f = fork();
  CHECK(f.vertex_count() == 5);
  CHECK(edge_set(f) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  CHECK(f.name(3) == "w");

  Graph s = s_graph();
  CHECK(s.vertex_count() == 5);
  CHECK(s.edge_count() == 7);

  CHECK(cycle(2).edge_count() == 1);
  CHECK(claw().degree(4) == 3);
  CHECK(net().vertex_count() == 6);
  CHECK(bull().vertex_count() == 5);
  CHECK(path_with_leaf(4, 3).edge_count() == 4);

  CHECK_THROWS_AS(path(0), Error);
  CHECK_THROWS_AS(cycle(1), Error);
  CHECK_THROWS_AS(tadpole(2, 1), Error);
  CHECK_THROWS_AS(tadpole(3, 0), Error);
  CHECK_THROWS_AS(path_with_leaf(3, 4), Error);
}

TEST_CASE("twin") {
  Graph fw = twin(fork(), 3);
  CHECK(fw.vertex_count() == 6);
  // 4 fork edges plus deg(w) + 1 = 4 new ones.
  CHECK(fw.edge_count() == 8);
  CHECK(fw.name(6) == "w'");

  CHECK(twin(path(1), 1) == path(2));

  // Figure transcription: twin of T^{<4,2>} at v4; v4' is the last label (7).
  Graph tw = twin(tadpole(4, 2), 4);
  std::set<std::pair<int, int>> want = {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6},
                                        {4, 7}, {3, 7}, {1, 7}, {5, 7}};
  CHECK(edge_set(tw) == want);

  // v and v' end with identical closed neighborhoods.
  for (int v = 1; v <= 5; ++v) {
    Graph g = twin(tadpole(4, 1), v);
    int vp = 6;
    auto closed = [&g](int x) {
      return g.neighbors_mask(x) | (std::uint64_t{1} << x);
    };
    CHECK(closed(v) == closed(vp));
    // Removing v' recovers the original graph.
    Graph back(5);
    for (auto [a, b] : g.edges()) {
      if (a != vp && b != vp) back.add_edge(a, b);
    }
    CHECK(back == tadpole(4, 1));
  }

  CHECK_THROWS_AS(twin(fork(), 9), Error);
}

TEST_CASE("clan") {
  Graph f2 = clan(fork(), 3, 2);
  CHECK(f2.vertex_count() == 7);
  // The copies {3,6,7} form a triangle, each adjacent to v=2, x=4, y=5.
  for (int c : {3, 6, 7}) {
    for (int u : {2, 4, 5}) CHECK(f2.has_edge(c, u));
  }
  CHECK(f2.has_edge(3, 6));
  CHECK(f2.has_edge(3, 7));
  CHECK(f2.has_edge(6, 7));
  CHECK(f2.edge_count() == 13);

  CHECK(clan(fork(), 3, 0) == fork());
  CHECK(clan(fork(), 3, 1) == twin(fork(), 3));

  // clan = iterated twin, as labeled values and up to isomorphism.
  std::mt19937 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(gen, 4 + static_cast<int>(gen() % 3));
    int v = 1 + static_cast<int>(gen() % g.vertex_count());
    int k = static_cast<int>(gen() % 4);
    Graph by_twins = g;
    for (int i = 0; i < k; ++i) by_twins = twin(by_twins, v);
    CHECK(clan(g, v, k) == by_twins);
    CHECK(is_isomorphic(clan(g, v, k), by_twins));
  }

  // Copies share v's outside neighborhood.
  Graph g = tadpole(4, 1);
  Graph c = clan(g, 4, 3);
  std::uint64_t outside = g.neighbors_mask(4);
  for (int copy : {6, 7, 8}) {
    std::uint64_t mask = c.neighbors_mask(copy);
    std::uint64_t clique = (std::uint64_t{1} << 4) | (std::uint64_t{1} << 6) |
                           (std::uint64_t{1} << 7) | (std::uint64_t{1} << 8);
    CHECK((mask & ~clique) == outside);
  }
}

TEST_CASE("disjoint union") {
  Graph u = disjoint_union(path(1), path(1));
  CHECK(u.vertex_count() == 2);
  CHECK(u.edge_count() == 0);

  Graph g = disjoint_union(path(3), s_graph());
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 2 + 7);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(4, 5));  // shifted edge 1-2 of S
}

TEST_CASE("deleting the decomposition edges splits the twinned tadpole") {
  // Removing v4'v5 and v4v5 leaves P_b disjoint from the 5-vertex cycle part.
  for (int b = 1; b <= 3; ++b) {
    Graph g = twin(tadpole(4, b), 4);
    g.remove_edge(5 + b, 5);
    g.remove_edge(4, 5);
    CHECK(is_isomorphic(g, disjoint_union(path(b), s_graph())));
  }
}

TEST_CASE("contains_induced") {
  CHECK_FALSE(contains_induced(net(), claw()));
  CHECK(contains_induced(claw(), claw()));
  CHECK(contains_induced(tadpole(4, 2), claw()));
  CHECK(contains_induced(cycle(6), path(1)));

  std::mt19937 gen(21);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_graph(gen, 6);
    for (const Graph& pattern : {claw(), path(3), cycle(3), path(4)}) {
      CHECK(contains_induced(g, pattern) ==
            oracles::contains_induced_by_subsets(g, pattern));
    }
  }

  // Claw-freeness survives the clan operation on claw-free corpus graphs.
  for (const Graph& g : {cycle(5), bull(), tadpole(4, 1), complete(4)}) {
    if (contains_induced(g, claw())) continue;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      for (int k = 1; k <= 2; ++k) {
        CHECK_FALSE(contains_induced(clan(g, v, k), claw()));
      }
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(cycle(5), relabel(cycle(5), {0, 3, 1, 4, 2, 5})));
  CHECK_FALSE(is_isomorphic(path(4), claw()));
  CHECK_FALSE(is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST_CASE("graph file round trip") {
  Graph f = fork();
  std::string text = to_graph_file(f);
  CHECK(text == "p 5\ne 1 2\ne 2 3\ne 3 4\ne 3 5\n");
  CHECK(graph_from_file_text(text) == f);
  CHECK(graph_from_file_text("# a comment\n\np 2\ne 1 2\n") == path(2));

  CHECK_THROWS_AS(graph_from_file_text("e 1 2\n"), Error);
  CHECK_THROWS_AS(graph_from_file_text("p 2\ne 1 1\n"), Error);
  CHECK_THROWS_AS(graph_from_file_text("p 2\ne 1 2\ne 2 1\n"), Error);
  CHECK_THROWS_AS(graph_from_file_text("p 2\ne 1 3\n"), Error);
  CHECK_THROWS_AS(graph_from_file_text("p 2\nq 1 2\n"), Error);
  CHECK_THROWS_AS(graph_from_file_text(""), Error);
}
