#include "chromapos/csf.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"
#include "chromapos/rim_hooks.hpp"

namespace chromapos {

long long StablePartitionCensus::count_of(const Partition& type) const {
  auto it = counts.find(type);
  return it == counts.end() ? 0 : it->second;
}

namespace {

struct CensusBuilder {
  const Graph& g;
  bool keep_witnesses;
  StablePartitionCensus out;
  std::vector<std::uint64_t> blocks;

  void record() {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (auto b : blocks) sizes.push_back(std::popcount(b));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    Partition type(std::move(sizes));
    out.counts[type] += 1;
    if (keep_witnesses) {
      std::vector<std::vector<int>> labeled;
      for (auto b : blocks) {
        std::vector<int> members;
        for (int v = 1; v <= g.vertex_count(); ++v) {
          if ((b >> v) & 1) members.push_back(v);
        }
        labeled.push_back(std::move(members));
      }
      out.witnesses[type].push_back(std::move(labeled));
    }
  }

  void extend(int v) {
    if (v > g.vertex_count()) {
      record();
      return;
    }
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t nbrs = g.neighbors_mask(v);
    // Index loop: the recursion grows `blocks`, which may reallocate.
    std::size_t count = blocks.size();
    for (std::size_t i = 0; i < count; ++i) {
      if ((blocks[i] & nbrs) == 0) {
        blocks[i] |= bit;
        extend(v + 1);
        blocks[i] &= ~bit;
      }
    }
    blocks.push_back(bit);
    extend(v + 1);
    blocks.pop_back();
  }
};

}  // namespace

StablePartitionCensus stable_partition_census(const Graph& g, bool keep_witnesses) {
  check_vertex_guard("stable_partition_census", "kCsfMaxVertices", kCsfMaxVertices,
                     g.vertex_count());
  CensusBuilder builder{g, keep_witnesses && g.vertex_count() <= 9, {}, {}};
  builder.out.vertex_count = g.vertex_count();
  if (g.vertex_count() == 0) {
    builder.out.counts[Partition()] = 1;
    return std::move(builder.out);
  }
  builder.extend(1);
  return std::move(builder.out);
}

SymFn csf(const Graph& g) {
  check_vertex_guard("csf", "kCsfMaxVertices", kCsfMaxVertices, g.vertex_count());
  StablePartitionCensus census = stable_partition_census(g);
  SymFn out(Basis::M);
  for (const auto& [type, a] : census.counts) {
    out.add_term(type, Rational(Integer(static_cast<long>(a)) * type.multiplicity_factorial()));
  }
  return out;
}

namespace {

long long count_colorings(const Graph& g, int v, std::vector<int>& remaining,
                          std::vector<std::uint64_t>& classes) {
  if (v > g.vertex_count()) return 1;
  long long total = 0;
  std::uint64_t nbrs = g.neighbors_mask(v);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (remaining[c] == 0 || (classes[c] & nbrs) != 0) continue;
    --remaining[c];
    classes[c] |= std::uint64_t{1} << v;
    total += count_colorings(g, v + 1, remaining, classes);
    classes[c] &= ~(std::uint64_t{1} << v);
    ++remaining[c];
  }
  return total;
}

}  // namespace

Integer csf_coloring_oracle(const Graph& g, const Partition& lambda) {
  check_vertex_guard("csf_coloring_oracle", "kColoringOracleMaxVertices",
                     kColoringOracleMaxVertices, g.vertex_count());
  if (lambda.degree() != g.vertex_count()) return 0;
  std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
  std::vector<std::uint64_t> classes(remaining.size(), 0);
  return Integer(static_cast<long>(count_colorings(g, 1, remaining, classes)));
}

namespace {

Edge normalized(Edge e) {
  return e.first < e.second ? e : Edge{e.second, e.first};
}

}  // namespace

bool triangle_relation_check(const Graph& g, Edge e1, Edge e2, Edge e3) {
  e1 = normalized(e1);
  e2 = normalized(e2);
  e3 = normalized(e3);
  for (Edge e : {e1, e2, e3}) {
    if (!g.has_edge(e.first, e.second)) {
      fail(ErrorKind::NotATriangle, "edge " + std::to_string(e.first) + " " +
                                        std::to_string(e.second) + " not in the graph");
    }
  }
  std::uint64_t span = 0;
  for (Edge e : {e1, e2, e3}) {
    span |= std::uint64_t{1} << e.first;
    span |= std::uint64_t{1} << e.second;
  }
  if (std::popcount(span) != 3 || e1 == e2 || e1 == e3 || e2 == e3) {
    fail(ErrorKind::NotATriangle, "edges do not form a triangle");
  }
  Graph g1 = g;
  g1.remove_edge(e1.first, e1.second);
  Graph g2 = g;
  g2.remove_edge(e2.first, e2.second);
  Graph g12 = g1;
  g12.remove_edge(e2.first, e2.second);
  return csf(g) == csf(g1) + csf(g2) - csf(g12);
}

bool edge_swap_relation_check(const Graph& g, int v1, int v2, int v3) {
  g.check_vertex(v1);
  g.check_vertex(v2);
  g.check_vertex(v3);
  if (v1 == v2 || v1 == v3 || v2 == v3) {
    fail(ErrorKind::PreconditionViolated, "vertices must be distinct");
  }
  if (!g.has_edge(v1, v3) || !g.has_edge(v2, v3) || g.has_edge(v1, v2)) {
    fail(ErrorKind::PreconditionViolated,
         "need v1v3, v2v3 edges and v1v2 a non-edge");
  }
  Graph a = g;  // (G - e1) + e3
  a.remove_edge(v1, v3);
  a.add_edge(v1, v2);
  Graph b = g;  // G - e2
  b.remove_edge(v2, v3);
  Graph c = g;  // (G - {e1,e2}) + e3
  c.remove_edge(v1, v3);
  c.remove_edge(v2, v3);
  c.add_edge(v1, v2);
  return csf(g) == csf(a) + csf(b) - csf(c);
}

SymFn path_csf(int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "path_csf needs n >= 0");
  check_param_guard("path_csf", "kPathClosedFormMax", kPathClosedFormMax, n);
  SymFn out(Basis::E);
  for (const Partition& lambda : partitions_of(n)) {
    std::vector<long> r = lambda.multiplicities();
    std::vector<long> counts(r.begin() + 1, r.end());  // r_1..r_n
    Integer c = multinomial(counts);
    for (int j = 1; j <= n; ++j) c *= int_pow(j - 1, r[static_cast<std::size_t>(j)]);
    for (int i = 1; i <= n; ++i) {
      if (r[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<long> dec = counts;
      dec[static_cast<std::size_t>(i - 1)] -= 1;
      Integer term = multinomial(dec) * int_pow(i - 1, r[static_cast<std::size_t>(i)] - 1);
      for (int j = 1; j <= n; ++j) {
        if (j != i) term *= int_pow(j - 1, r[static_cast<std::size_t>(j)]);
      }
      c += term;
    }
    out.add_term(lambda, Rational(c));
  }
  return out;
}

SymFn cycle_csf(int n) {
  if (n < 2) fail(ErrorKind::BadParameter, "cycle_csf needs n >= 2");
  check_param_guard("cycle_csf", "kCycleClosedFormMax", kCycleClosedFormMax, n);
  if (n == 2) return SymFn::term(Basis::E, Partition({2}), Rational(2));
  static std::mutex mutex;
  static std::map<int, SymFn> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, to_basis(csf(cycle(n)), Basis::E)).first;
  return it->second;
}

SymFn tadpole_csf(int a, int b) {
  if (a < 3 || b < 1) fail(ErrorKind::BadParameter, "tadpole_csf needs a >= 3, b >= 1");
  check_param_guard("tadpole_csf", "kTadpoleCycleMax", kTadpoleCycleMax, a);
  check_param_guard("tadpole_csf", "kTadpoleTotalMax", kTadpoleTotalMax, a + b);
  SymFn out = Rational(a - 1) * path_csf(a + b);
  for (int i = 2; i <= a - 1; ++i) {
    out -= multiply(cycle_csf(i), path_csf(a + b - i));
  }
  return out;
}

SymFn path_with_leaf_csf(int m, int n) {
  if (n < 1 || n > m) fail(ErrorKind::BadParameter, "path_with_leaf_csf needs 1 <= n <= m");
  check_param_guard("path_with_leaf_csf", "kPathWithLeafMMax", kPathWithLeafMMax, m);
  SymFn e1 = SymFn::term(Basis::E, Partition({1}), Rational(1));
  return path_csf(m + 1) + multiply(e1, path_csf(m)) -
         multiply(path_csf(n), path_csf(m - n + 1));
}

namespace {

SymFn e_term(std::vector<int> parts, long coeff) {
  return SymFn::term(Basis::E, Partition(std::move(parts)), Rational(coeff));
}

}  // namespace

SymFn twinned_tadpole4_csf(int b) {
  if (b < 1) fail(ErrorKind::BadParameter, "twinned_tadpole4_csf needs b >= 1");
  check_param_guard("twinned_tadpole4_csf", "kTwinnedTadpoleBMax", kTwinnedTadpoleBMax, b);
  SymFn out = Rational(20) * path_csf(b + 5);
  out += multiply(e_term({1}, 2), path_csf(b + 4));
  out -= multiply(e_term({2}, 16), path_csf(b + 3));
  out -= multiply(e_term({2, 1}, 2) + e_term({3}, 42), path_csf(b + 2));
  out -= multiply(e_term({4}, 56) + e_term({2, 2}, 4) + e_term({3, 1}, 4), path_csf(b + 1));
  out -= multiply(e_term({4, 1}, 6) + e_term({3, 2}, 4) + e_term({5}, 50), path_csf(b));
  return out;
}

SymFn hb_csf(int b) {
  if (b < 1) fail(ErrorKind::BadParameter, "hb_csf needs b >= 1");
  check_param_guard("hb_csf", "kTwinnedTadpoleBMax", kTwinnedTadpoleBMax, b);
  SymFn e1 = e_term({1}, 1);
  SymFn out = Rational(10) * path_csf(b + 5);
  out += multiply(e1, path_csf(b + 4));
  out -= Rational(4) * multiply(cycle_csf(2), path_csf(b + 3));
  out -= multiply(Rational(4) * cycle_csf(3) + multiply(e1, cycle_csf(2)) - path_csf(3),
                  path_csf(b + 2));
  out -= multiply(Rational(3) * cycle_csf(4) + multiply(e1, cycle_csf(3)) -
                      Rational(2) * path_csf(4),
                  path_csf(b + 1));
  return out;
}

Graph hb_graph(int b) {
  Graph g = twin(tadpole(4, b), 4);
  g.remove_edge(5, 5 + b);  // v4'v5
  return g;
}

Integer schur_coeff_via_tabloids(const Graph& g, const Partition& lambda) {
  if (lambda.degree() != g.vertex_count()) {
    fail(ErrorKind::DegreeMismatch, "schur_coeff_via_tabloids needs |lambda| = d(G)");
  }
  check_vertex_guard("schur_coeff_via_tabloids", "kTabloidMaxVertices",
                     kTabloidMaxVertices, g.vertex_count());
  StablePartitionCensus census = stable_partition_census(g);
  Integer total = 0;
  for (const RimHookTabloid& t : enumerate_special_rim_hook_tabloids(lambda)) {
    Partition kappa = t.hook_type();
    long long a = census.count_of(kappa);
    if (a == 0) continue;  // kappa_T not realizable as a stable-partition type
    Integer n_t = Integer(static_cast<long>(a)) * kappa.multiplicity_factorial();
    total += t.sign() * n_t;
  }
  return total;
}

SymFn fork_clan_schur_closed_form(int k) {
  if (k < 1) fail(ErrorKind::BadParameter, "fork_clan_schur_closed_form needs k >= 1");
  check_param_guard("fork_clan_schur_closed_form", "kForkClanKMax", kForkClanKMax, k);
  Integer base = factorial(k + 1);
  SymFn out(Basis::S);
  out.add_term(Partition::with_ones({3, 2}, k), Rational(base));
  out.add_term(Partition::with_ones({3}, k + 2), Rational(Integer(k + 3) * base));
  out.add_term(Partition::with_ones({2, 2, 2}, k - 1), Rational(Integer(-2) * base));
  out.add_term(Partition::with_ones({2, 2}, k + 1), Rational(Integer(5) * (k + 1) * base));
  Integer cubic = Integer(k) * k * k + 5 * Integer(k) * k + 14 * Integer(k) + 14;
  out.add_term(Partition::with_ones({2}, k + 3), Rational(cubic * base));
  Integer kp2 = Integer(k) + 2;
  out.add_term(Partition::with_ones({}, k + 5), Rational(Integer(2) * kp2 * kp2 * kp2 * base));
  return out;
}

}  // namespace chromapos
