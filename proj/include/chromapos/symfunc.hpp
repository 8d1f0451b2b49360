#pragma once

#include <map>
#include <optional>
#include <string>

#include "chromapos/partition.hpp"

namespace chromapos {

enum class Basis { M, E, S };

char basis_char(Basis b);
Basis basis_from_char(char c);  // BadParameter on anything but m/e/s

// A sparse exact linear combination of basis elements, possibly mixed-degree.
// Zero coefficients are never stored.
class SymFn {
 public:
  using TermMap = std::map<Partition, Rational, TermOrder>;

  SymFn() = default;
  explicit SymFn(Basis basis) : basis_(basis) {}

  static SymFn zero(Basis basis) { return SymFn(basis); }
  // The constant 1 = u_[] in any basis.
  static SymFn unit(Basis basis);
  static SymFn term(Basis basis, Partition p, Rational coeff);

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  void add_term(const Partition& p, const Rational& coeff);

  // Addition requires matching bases (PreconditionViolated otherwise);
  // convert explicitly first.
  SymFn& operator+=(const SymFn& other);
  SymFn& operator-=(const SymFn& other);
  SymFn& operator*=(const Rational& scale);

  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(const Rational& c, SymFn f) { return f *= c; }

  friend bool operator==(const SymFn& a, const SymFn& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymFn& a, const SymFn& b) { return !(a == b); }

 private:
  Basis basis_ = Basis::E;
  TermMap terms_;
};

// Change of basis. m<->s and e<->s are degree-by-degree triangular transitions
// through the Kostka tables; e<->m composes through s. DegreeCapExceeded when
// any term degree exceeds kDegreeCap.
SymFn to_basis(const SymFn& f, Basis target);

// Product, returned in the E basis (where it is a part-multiset union);
// inputs are converted to E first.
SymFn multiply(const SymFn& f, const SymFn& g);

// [u_lambda] f in the requested basis.
Rational coefficient(const SymFn& f, Basis basis, const Partition& lambda);

struct PositivityResult {
  bool positive = true;
  // Present iff !positive: the most-negative coefficient, ties broken by the
  // term order.
  std::optional<std::pair<Partition, Rational>> witness;
};

PositivityResult is_positive(const SymFn& f, Basis basis);

// Evaluates f at x_1 = ... = x_n = 1, x_i = 0 beyond; for f = X_G this is the
// chromatic polynomial chi_G(n).
Rational principal_specialization_count(const SymFn& f, int n);

// Text form: one term per line, "<coeff> <basis>[parts]", degree descending
// then canonical partition order.
std::string to_text(const SymFn& f);
SymFn symfn_from_text(const std::string& text);  // ParseError

std::ostream& operator<<(std::ostream& os, const SymFn& f);

}  // namespace chromapos
