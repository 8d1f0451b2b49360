#pragma once

#include <vector>

#include "chromapos/partition.hpp"

namespace chromapos {

// Number of semi-standard Young tableaux of the given shape and content,
// by backtracking enumeration. DegreeMismatch when degrees differ.
long long kostka(const Partition& shape, const Partition& content);

// f^lambda by the hook length formula. EmptyShape when degree is 0.
Integer num_standard_tableaux(const Partition& shape);

// Row lambda of the inverse Kostka matrix over the given ordering, i.e. the
// coefficients of m_lambda on the Schur basis. `ordering` must list every
// partition of |lambda| exactly once as a linear extension of dominance
// (dominance-greater first); BadParameter otherwise.
std::vector<Rational> inverse_kostka_row(const Partition& lambda,
                                         const std::vector<Partition>& ordering);

// Per-degree transition tables in the canonical partition order.
struct KostkaTables {
  std::vector<Partition> parts;
  std::vector<int> conjugate_index;
  std::vector<std::vector<long long>> kostka;  // upper unitriangular
  std::vector<std::vector<Rational>> inverse;  // entries are integral
  int index_of(const Partition& p) const;
};

// Memoized; DegreeCapExceeded beyond kDegreeCap.
const KostkaTables& kostka_tables(int degree);

}  // namespace chromapos
