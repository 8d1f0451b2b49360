#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chromapos/graph.hpp"
#include "chromapos/symfunc.hpp"

namespace chromapos {

// A set partition of {1..d} in canonical form: blocks sorted by minimum
// element, elements ascending.
class SetPartition {
 public:
  SetPartition(int ground_size, std::vector<std::vector<int>> blocks);
  static SetPartition singletons(int d);

  int ground_size() const { return d_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<std::uint64_t>& block_masks() const { return masks_; }

  Partition type() const;                 // lambda(pi): block sizes, decreasing
  int block_size_containing(int i) const; // |B_{pi,i}|

  std::string to_text() const;  // "{1,3}{2}"

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.d_ == b.d_ && a.masks_ == b.masks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) {
    return !(a == b);
  }

 private:
  int d_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::uint64_t> masks_;
};

// Order: type in the canonical partition order, then lexicographic on the
// canonical block lists.
struct SetPartitionOrder {
  bool operator()(const SetPartition& a, const SetPartition& b) const;
};

// All set partitions of {1..d} in SetPartitionOrder; memoized. Guarded at
// d <= kNCSymMaxVertices.
const std::vector<SetPartition>& set_partitions_of(int d);

enum class NCBasis { MPi, EPi };

// A homogeneous element of NCSym at degree d: exact rational coefficients on
// set partitions of {1..d}, in the m_pi or e_pi basis.
class NCSymFn {
 public:
  using TermMap = std::map<SetPartition, Rational, SetPartitionOrder>;

  NCSymFn(int ground_size, NCBasis basis) : d_(ground_size), basis_(basis) {}

  int ground_size() const { return d_; }
  NCBasis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SetPartition& pi, const Rational& coeff);

  friend bool operator==(const NCSymFn& a, const NCSymFn& b) {
    return a.d_ == b.d_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCSymFn& a, const NCSymFn& b) { return !(a == b); }

 private:
  int d_;
  NCBasis basis_;
  TermMap terms_;
};

// Y_G = sum of m_pi over set partitions pi whose blocks are all stable in G,
// under G's fixed vertex labeling.
NCSymFn y_graph(const Graph& g);

// e_pi = sum of m_sigma over sigma with sigma meet pi = 0-hat (every block of
// sigma meets every block of pi in at most one element).
NCSymFn e_pi_in_m(const SetPartition& pi);

// Exact change of basis: the unique solution of the linear system whose
// columns are e_pi_in_m(pi), computed through the zeta/Moebius factorization
// of the refinement lattice. Round-trips with to_m_basis.
NCSymFn to_e_basis(const NCSymFn& f);
NCSymFn to_m_basis(const NCSymFn& f);

// The class invariant of the congruence sigma ==_i tau: (lambda(pi), |B_{pi,i}|).
std::pair<Partition, int> congruence_class(const SetPartition& pi, int i);

struct ClassSum {
  Partition type;
  int block_size;  // |B_{tau,i}| for the class
  Rational sum;    // c_{(tau)}
};

struct ModPositivityReport {
  int index = 0;  // the i of ==_i
  bool positive = true;
  std::vector<ClassSum> classes;  // every class of Pi_d, deterministic order

  std::string to_text() const;  // lines "((lambda), b) -> c"
};

// Class sums of an e_pi-expansion modulo i; positive iff all sums are >= 0.
ModPositivityReport e_positive_mod(const NCSymFn& f, int i);

// Commutative image: m_pi -> (prod_j r_j!) m_{lambda(pi)} in the M basis,
// e_pi -> lambda(pi)! e_{lambda(pi)} in the E basis.
SymFn commutative_image(const NCSymFn& f);

// G + K_n: appends vertices d+1..d+n-1 so that {d, ..., d+n-1} is a clique.
// append_clique(g, 1) = g.
Graph append_clique(const Graph& g, int n);

// Checks that every stage of the chain cycle(a) -> +K_2 -> ... -> tadpole(a,b)
// is (e)-positive modulo its distinguished vertex a, a+1, ..., a+b.
bool verify_gs_chain(int a, int b);

}  // namespace chromapos
