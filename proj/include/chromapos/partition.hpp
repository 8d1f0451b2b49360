#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromapos/rational.hpp"

namespace chromapos {

// An integer partition: weakly decreasing positive parts. The empty partition
// (degree 0) is valid and indexes the unit of every basis.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // <head..., part repeated count times>, e.g. with_ones({3,2}, k) = (3,2,1^k).
  static Partition with_ones(std::vector<int> head, int ones);
  static Partition rectangle(int part, int count);  // (part^count)

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // r[j] = number of parts equal to j, for j = 1..degree (index 0 unused).
  std::vector<long> multiplicities() const;
  Integer multiplicity_factorial() const;  // prod_j r_j!

  std::string to_text() const;  // "[3,2,1]", "[]"
  static Partition from_text(const std::string& text);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

Partition conjugate(const Partition& lambda);

// Dominance order on partitions of equal degree; DegreeMismatch otherwise.
bool dominates(const Partition& lambda, const Partition& mu);

// Canonical linear order within a degree: descending lexicographic on part
// lists. It refines dominance, so transition matrices are positionally
// triangular. Returns true when a is listed before b.
bool partition_precedes(const Partition& a, const Partition& b);

// Order used for term maps and printing: degree descending, then canonical.
struct TermOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n in canonical order; memoized, treat as immutable.
const std::vector<Partition>& partitions_of(int n);

// Multiset union of parts, re-sorted (e-basis product rule).
Partition union_parts(const Partition& a, const Partition& b);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace chromapos
