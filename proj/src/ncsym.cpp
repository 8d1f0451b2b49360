#include "chromapos/ncsym.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"

namespace chromapos {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : d_(ground_size), blocks_(std::move(blocks)) {
  if (d_ < 0 || d_ > kGraphMaxVertices) {
    fail(ErrorKind::BadParameter, "bad ground-set size");
  }
  std::uint64_t seen = 0;
  for (auto& block : blocks_) {
    if (block.empty()) fail(ErrorKind::BadParameter, "empty block in set partition");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > d_) fail(ErrorKind::BadParameter, "element out of range");
      if ((seen >> x) & 1) fail(ErrorKind::BadParameter, "repeated element in set partition");
      seen |= std::uint64_t{1} << x;
    }
  }
  if (std::popcount(seen) != d_) {
    fail(ErrorKind::BadParameter, "blocks do not cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  masks_.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    std::uint64_t m = 0;
    for (int x : block) m |= std::uint64_t{1} << x;
    masks_.push_back(m);
  }
}

SetPartition SetPartition::singletons(int d) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= d; ++i) blocks.push_back({i});
  return SetPartition(d, std::move(blocks));
}

Partition SetPartition::type() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(std::move(sizes));
}

int SetPartition::block_size_containing(int i) const {
  for (const auto& b : blocks_) {
    if (std::binary_search(b.begin(), b.end(), i)) return static_cast<int>(b.size());
  }
  fail(ErrorKind::BadParameter, "element " + std::to_string(i) + " not in ground set");
}

std::string SetPartition::to_text() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

bool SetPartitionOrder::operator()(const SetPartition& a, const SetPartition& b) const {
  Partition ta = a.type(), tb = b.type();
  if (ta != tb) {
    if (ta.degree() != tb.degree()) return ta.degree() < tb.degree();
    return partition_precedes(ta, tb);
  }
  return a.blocks() < b.blocks();
}

namespace {

// Set partitions of an explicit element list, as block masks, via
// first-element anchoring.
void set_partitions_of_elements(const std::vector<int>& elements, std::size_t at,
                                std::vector<std::uint64_t>& blocks,
                                std::vector<std::vector<std::uint64_t>>& out) {
  if (at == elements.size()) {
    out.push_back(blocks);
    return;
  }
  std::uint64_t bit = std::uint64_t{1} << elements[at];
  // Index loop: the recursion grows `blocks`, which may reallocate.
  std::size_t count = blocks.size();
  for (std::size_t i = 0; i < count; ++i) {
    blocks[i] |= bit;
    set_partitions_of_elements(elements, at + 1, blocks, out);
    blocks[i] &= ~bit;
  }
  blocks.push_back(bit);
  set_partitions_of_elements(elements, at + 1, blocks, out);
  blocks.pop_back();
}

long long mobius_factor(int merged_block_count) {
  // (-1)^(n-1) (n-1)! for an interval isomorphic to Pi_n
  long long f = 1;
  for (int i = 1; i < merged_block_count; ++i) f *= i;
  return merged_block_count % 2 == 1 ? f : -f;
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::uint64_t> canonical_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return std::countr_zero(a) < std::countr_zero(b);
            });
  return masks;
}

// Refinement-lattice tables for Pi_d: every comparable pair with its Moebius
// value, plus mu(0-hat, tau).
struct LatticeTables {
  std::vector<SetPartition> items;
  std::map<std::vector<std::uint64_t>, int> index;
  std::vector<std::vector<std::pair<int, long long>>> refinements;  // sigma <= tau, by tau
  std::vector<std::vector<std::pair<int, long long>>> coarsenings;  // tau >= pi, by pi
  std::vector<long long> mobius0;
};

const LatticeTables& lattice_tables(int d) {
  check_vertex_guard("set_partitions_of", "kNCSymMaxVertices", kNCSymMaxVertices, d);
  static std::mutex mutex;
  static std::map<int, LatticeTables> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  LatticeTables t;
  std::vector<int> ground;
  for (int i = 1; i <= d; ++i) ground.push_back(i);
  std::vector<std::vector<std::uint64_t>> all;
  std::vector<std::uint64_t> scratch;
  set_partitions_of_elements(ground, 0, scratch, all);
  for (const auto& masks : all) {
    std::vector<std::vector<int>> blocks;
    for (auto m : masks) blocks.push_back(mask_elements(m));
    t.items.emplace_back(d, std::move(blocks));
  }
  std::sort(t.items.begin(), t.items.end(), [](const SetPartition& a, const SetPartition& b) {
    return SetPartitionOrder{}(a, b);
  });
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    t.index[t.items[i].block_masks()] = static_cast<int>(i);
  }

  std::size_t count = t.items.size();
  t.refinements.resize(count);
  t.coarsenings.resize(count);
  t.mobius0.resize(count);

  for (std::size_t ti = 0; ti < count; ++ti) {
    const auto& tau = t.items[ti];
    long long m0 = 1;
    for (const auto& b : tau.blocks()) m0 *= mobius_factor(static_cast<int>(b.size()));
    t.mobius0[ti] = m0;

    // sigma <= tau: independent set partitions of each block of tau.
    std::vector<std::vector<std::vector<std::uint64_t>>> per_block;
    for (const auto& block : tau.blocks()) {
      std::vector<std::vector<std::uint64_t>> parts;
      std::vector<std::uint64_t> sc;
      set_partitions_of_elements(block, 0, sc, parts);
      per_block.push_back(std::move(parts));
    }
    std::vector<std::uint64_t> sigma;
    long long mu = 1;
    auto combine = [&](auto&& self, std::size_t blk) -> void {
      if (blk == per_block.size()) {
        auto at = t.index.find(canonical_masks(sigma));
        t.refinements[ti].emplace_back(at->second, mu);
        return;
      }
      for (const auto& choice : per_block[blk]) {
        std::size_t before = sigma.size();
        sigma.insert(sigma.end(), choice.begin(), choice.end());
        long long saved = mu;
        mu *= mobius_factor(static_cast<int>(choice.size()));
        self(self, blk + 1);
        mu = saved;
        sigma.resize(before);
      }
    };
    combine(combine, 0);

    // tau' >= tau: groupings of tau's blocks.
    int m = static_cast<int>(tau.blocks().size());
    std::vector<int> block_ids;
    for (int i = 0; i < m; ++i) block_ids.push_back(i + 1);
    std::vector<std::vector<std::uint64_t>> groupings;
    std::vector<std::uint64_t> sc2;
    set_partitions_of_elements(block_ids, 0, sc2, groupings);
    for (const auto& grouping : groupings) {
      std::vector<std::uint64_t> merged;
      long long mu2 = 1;
      for (std::uint64_t group : grouping) {
        std::uint64_t u = 0;
        int g = 0;
        for (int i : mask_elements(group)) {
          u |= tau.block_masks()[static_cast<std::size_t>(i - 1)];
          ++g;
        }
        merged.push_back(u);
        mu2 *= mobius_factor(g);
      }
      auto at = t.index.find(canonical_masks(merged));
      t.coarsenings[ti].emplace_back(at->second, mu2);
    }
  }
  return cache.emplace(d, std::move(t)).first->second;
}

std::vector<Rational> dense_terms(const NCSymFn& f, const LatticeTables& t) {
  std::vector<Rational> v(t.items.size(), Rational(0));
  for (const auto& [pi, c] : f.terms()) {
    v[static_cast<std::size_t>(t.index.at(pi.block_masks()))] = c;
  }
  return v;
}

}  // namespace

const std::vector<SetPartition>& set_partitions_of(int d) {
  return lattice_tables(d).items;
}

void NCSymFn::add_term(const SetPartition& pi, const Rational& coeff) {
  if (pi.ground_size() != d_) {
    fail(ErrorKind::PreconditionViolated, "term ground-set size mismatch");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(pi, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NCSymFn y_graph(const Graph& g) {
  check_vertex_guard("y_graph", "kNCSymMaxVertices", kNCSymMaxVertices, g.vertex_count());
  int d = g.vertex_count();
  NCSymFn out(d, NCBasis::MPi);
  for (const SetPartition& pi : set_partitions_of(d)) {
    bool stable = true;
    for (std::uint64_t block : pi.block_masks()) {
      std::uint64_t rest = block;
      while (rest && stable) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors_mask(v) & block) stable = false;
      }
      if (!stable) break;
    }
    if (stable) out.add_term(pi, Rational(1));
  }
  return out;
}

NCSymFn e_pi_in_m(const SetPartition& pi) {
  int d = pi.ground_size();
  check_vertex_guard("e_pi_in_m", "kNCSymMaxVertices", kNCSymMaxVertices, d);
  NCSymFn out(d, NCBasis::MPi);
  for (const SetPartition& sigma : set_partitions_of(d)) {
    bool meet_trivial = true;
    for (std::uint64_t a : sigma.block_masks()) {
      for (std::uint64_t b : pi.block_masks()) {
        if (std::popcount(a & b) > 1) {
          meet_trivial = false;
          break;
        }
      }
      if (!meet_trivial) break;
    }
    if (meet_trivial) out.add_term(sigma, Rational(1));
  }
  return out;
}

NCSymFn to_e_basis(const NCSymFn& f) {
  if (f.basis() != NCBasis::MPi) {
    fail(ErrorKind::PreconditionViolated, "to_e_basis expects an m_pi expansion");
  }
  const LatticeTables& t = lattice_tables(f.ground_size());
  std::vector<Rational> m = dense_terms(f, t);
  // [sigma meet pi = 0-hat] = (Z diag(mu0) Z^T)[sigma][pi]; solve by Moebius
  // inversion on both sides.
  std::size_t count = t.items.size();
  std::vector<Rational> h(count, Rational(0));
  for (std::size_t ti = 0; ti < count; ++ti) {
    Rational g(0);
    for (const auto& [si, mu] : t.refinements[ti]) {
      if (m[static_cast<std::size_t>(si)] != 0) {
        g += Rational(static_cast<long>(mu)) * m[static_cast<std::size_t>(si)];
      }
    }
    if (t.mobius0[ti] == 0) fail(ErrorKind::Internal, "vanishing Moebius value");
    h[ti] = g / Rational(static_cast<long>(t.mobius0[ti]));
  }
  NCSymFn out(f.ground_size(), NCBasis::EPi);
  for (std::size_t pi = 0; pi < count; ++pi) {
    Rational c(0);
    for (const auto& [ti, mu] : t.coarsenings[pi]) {
      if (h[static_cast<std::size_t>(ti)] != 0) {
        c += Rational(static_cast<long>(mu)) * h[static_cast<std::size_t>(ti)];
      }
    }
    if (c != 0) out.add_term(t.items[pi], c);
  }
  return out;
}

NCSymFn to_m_basis(const NCSymFn& f) {
  if (f.basis() != NCBasis::EPi) {
    fail(ErrorKind::PreconditionViolated, "to_m_basis expects an e_pi expansion");
  }
  const LatticeTables& t = lattice_tables(f.ground_size());
  std::vector<Rational> c = dense_terms(f, t);
  std::size_t count = t.items.size();
  std::vector<Rational> zc(count, Rational(0));
  for (std::size_t ti = 0; ti < count; ++ti) {
    Rational s(0);
    for (const auto& [ci, mu] : t.coarsenings[ti]) {
      (void)mu;
      if (c[static_cast<std::size_t>(ci)] != 0) s += c[static_cast<std::size_t>(ci)];
    }
    zc[ti] = s * Rational(static_cast<long>(t.mobius0[ti]));
  }
  NCSymFn out(f.ground_size(), NCBasis::MPi);
  for (std::size_t si = 0; si < count; ++si) {
    Rational s(0);
    for (const auto& [ti, mu] : t.refinements[si]) {
      (void)mu;
      if (zc[static_cast<std::size_t>(ti)] != 0) s += zc[static_cast<std::size_t>(ti)];
    }
    if (s != 0) out.add_term(t.items[si], s);
  }
  return out;
}

std::pair<Partition, int> congruence_class(const SetPartition& pi, int i) {
  if (i < 1 || i > pi.ground_size()) {
    fail(ErrorKind::BadParameter, "congruence index out of range");
  }
  return {pi.type(), pi.block_size_containing(i)};
}

std::string ModPositivityReport::to_text() const {
  std::ostringstream out;
  for (const auto& cls : classes) {
    out << "(" << cls.type.to_text() << ", " << cls.block_size << ") -> "
        << to_string(cls.sum) << "\n";
  }
  return out.str();
}

ModPositivityReport e_positive_mod(const NCSymFn& f, int i) {
  if (f.basis() != NCBasis::EPi) {
    fail(ErrorKind::PreconditionViolated, "e_positive_mod expects an e_pi expansion");
  }
  if (i < 1 || i > f.ground_size()) {
    fail(ErrorKind::BadParameter, "congruence index out of range");
  }
  std::map<std::pair<std::vector<int>, int>, Rational> sums;
  for (const SetPartition& pi : set_partitions_of(f.ground_size())) {
    auto key = congruence_class(pi, i);
    sums.try_emplace({key.first.parts(), key.second}, Rational(0));
  }
  for (const auto& [pi, c] : f.terms()) {
    auto key = congruence_class(pi, i);
    sums[{key.first.parts(), key.second}] += c;
  }
  ModPositivityReport report;
  report.index = i;
  std::vector<std::pair<std::pair<std::vector<int>, int>, Rational>> items(sums.begin(),
                                                                           sums.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  for (auto& [key, sum] : items) {
    if (sum < 0) report.positive = false;
    report.classes.push_back({Partition(key.first), key.second, sum});
  }
  return report;
}

SymFn commutative_image(const NCSymFn& f) {
  SymFn out(f.basis() == NCBasis::MPi ? Basis::M : Basis::E);
  for (const auto& [pi, c] : f.terms()) {
    Partition type = pi.type();
    if (f.basis() == NCBasis::MPi) {
      out.add_term(type, c * Rational(type.multiplicity_factorial()));
    } else {
      Integer parts_factorial = 1;
      for (int p : type.parts()) parts_factorial *= factorial(p);
      out.add_term(type, c * Rational(parts_factorial));
    }
  }
  return out;
}

Graph append_clique(const Graph& g, int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "append_clique needs n >= 1");
  int d = g.vertex_count();
  if (d < 1) fail(ErrorKind::BadParameter, "append_clique needs a nonempty graph");
  Graph out(d + n - 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 1; v <= d; ++v) out.set_name(v, g.name(v));
  for (int u = d; u <= d + n - 1; ++u) {
    for (int v = u + 1; v <= d + n - 1; ++v) out.add_edge(u, v);
  }
  return out;
}

bool verify_gs_chain(int a, int b) {
  if (a < 3 || b < 0) fail(ErrorKind::BadParameter, "verify_gs_chain needs a >= 3, b >= 0");
  check_vertex_guard("verify_gs_chain", "kNCSymMaxVertices", kNCSymMaxVertices, a + b);
  Graph g = cycle(a);
  for (int j = 0; j <= b; ++j) {
    if (j > 0) g = append_clique(g, 2);
    ModPositivityReport report = e_positive_mod(to_e_basis(y_graph(g)), a + j);
    if (!report.positive) return false;
  }
  return true;
}

}  // namespace chromapos
