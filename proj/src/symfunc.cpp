#include "chromapos/symfunc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"
#include "chromapos/tableaux.hpp"

namespace chromapos {

char basis_char(Basis b) {
  switch (b) {
    case Basis::M: return 'm';
    case Basis::E: return 'e';
    case Basis::S: return 's';
  }
  fail(ErrorKind::Internal, "bad basis tag");
}

Basis basis_from_char(char c) {
  switch (c) {
    case 'm': case 'M': return Basis::M;
    case 'e': case 'E': return Basis::E;
    case 's': case 'S': return Basis::S;
  }
  fail(ErrorKind::BadParameter, std::string("unknown basis '") + c + "' (want m, e or s)");
}

SymFn SymFn::unit(Basis basis) {
  SymFn f(basis);
  f.add_term(Partition(), Rational(1));
  return f;
}

SymFn SymFn::term(Basis basis, Partition p, Rational coeff) {
  SymFn f(basis);
  f.add_term(p, coeff);
  return f;
}

int SymFn::max_degree() const {
  int out = 0;
  for (const auto& [p, c] : terms_) out = std::max(out, p.degree());
  return out;
}

void SymFn::add_term(const Partition& p, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFn& SymFn::operator+=(const SymFn& other) {
  if (basis_ != other.basis_ && !other.terms_.empty() && !terms_.empty()) {
    fail(ErrorKind::PreconditionViolated, "adding terms in different bases; convert first");
  }
  if (terms_.empty() && !other.terms_.empty()) basis_ = other.basis_;
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& other) {
  if (basis_ != other.basis_ && !other.terms_.empty() && !terms_.empty()) {
    fail(ErrorKind::PreconditionViolated, "subtracting terms in different bases; convert first");
  }
  if (terms_.empty() && !other.terms_.empty()) basis_ = other.basis_;
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SymFn& SymFn::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

namespace {

using Dense = std::vector<Rational>;

Dense dense_stratum(const SymFn& f, int degree, const KostkaTables& t) {
  Dense v(t.parts.size(), Rational(0));
  for (const auto& [p, c] : f.terms()) {
    if (p.degree() == degree) v[static_cast<std::size_t>(t.index_of(p))] = c;
  }
  return v;
}

Dense m_to_s(const Dense& in, const KostkaTables& t) {
  Dense out(in.size(), Rational(0));
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == 0) continue;
    for (std::size_t j = i; j < in.size(); ++j) {
      if (t.inverse[i][j] != 0) out[j] += in[i] * t.inverse[i][j];
    }
  }
  return out;
}

Dense s_to_m(const Dense& in, const KostkaTables& t) {
  Dense out(in.size(), Rational(0));
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == 0) continue;
    for (std::size_t j = i; j < in.size(); ++j) {
      if (t.kostka[i][j] != 0) {
        out[j] += in[i] * Rational(static_cast<long>(t.kostka[i][j]));
      }
    }
  }
  return out;
}

Dense e_to_s(const Dense& in, const KostkaTables& t) {
  // e_mu = sum_lambda K_{lambda', mu} s_lambda
  Dense out(in.size(), Rational(0));
  for (std::size_t j = 0; j < in.size(); ++j) {
    if (in[j] == 0) continue;
    for (std::size_t r = 0; r <= j; ++r) {
      if (t.kostka[r][j] != 0) {
        auto lambda = static_cast<std::size_t>(t.conjugate_index[r]);
        out[lambda] += in[j] * Rational(static_cast<long>(t.kostka[r][j]));
      }
    }
  }
  return out;
}

Dense s_to_e(const Dense& in, const KostkaTables& t) {
  // e-coefficient of mu: sum_lambda Kinv[mu][lambda'] d_lambda
  Dense out(in.size(), Rational(0));
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == 0) continue;
    auto jc = static_cast<std::size_t>(t.conjugate_index[i]);
    for (std::size_t r = 0; r <= jc; ++r) {
      if (t.inverse[r][jc] != 0) out[r] += in[i] * t.inverse[r][jc];
    }
  }
  return out;
}

Dense convert_stratum(Dense v, Basis from, Basis to, const KostkaTables& t) {
  if (from == to) return v;
  // All routes pass through the Schur basis.
  if (from == Basis::M) v = m_to_s(v, t);
  if (from == Basis::E) v = e_to_s(v, t);
  if (to == Basis::S) return v;
  return to == Basis::M ? s_to_m(v, t) : s_to_e(v, t);
}

}  // namespace

SymFn to_basis(const SymFn& f, Basis target) {
  if (f.basis() == target || f.is_zero()) {
    SymFn out = f;
    if (out.is_zero()) out = SymFn::zero(target);
    return out;
  }
  if (f.max_degree() > kDegreeCap) {
    fail(ErrorKind::DegreeCapExceeded,
         "term degree " + std::to_string(f.max_degree()) + " exceeds kDegreeCap=" +
             std::to_string(kDegreeCap));
  }
  std::vector<int> degrees;
  for (const auto& [p, c] : f.terms()) {
    if (degrees.empty() || degrees.back() != p.degree()) degrees.push_back(p.degree());
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  SymFn out(target);
  for (int n : degrees) {
    const KostkaTables& t = kostka_tables(n);
    Dense v = convert_stratum(dense_stratum(f, n, t), f.basis(), target, t);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out.add_term(t.parts[i], v[i]);
    }
  }
  return out;
}

SymFn multiply(const SymFn& f, const SymFn& g) {
  SymFn a = to_basis(f, Basis::E);
  SymFn b = to_basis(g, Basis::E);
  SymFn out(Basis::E);
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      out.add_term(union_parts(pa, pb), ca * cb);
    }
  }
  return out;
}

Rational coefficient(const SymFn& f, Basis basis, const Partition& lambda) {
  SymFn g = to_basis(f, basis);
  auto it = g.terms().find(lambda);
  return it == g.terms().end() ? Rational(0) : it->second;
}

PositivityResult is_positive(const SymFn& f, Basis basis) {
  SymFn g = to_basis(f, basis);
  PositivityResult out;
  for (const auto& [p, c] : g.terms()) {
    if (c >= 0) continue;
    if (!out.witness || c < out.witness->second) out.witness = {p, c};
    out.positive = false;
  }
  return out;
}

Rational principal_specialization_count(const SymFn& f, int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "negative number of colors");
  SymFn g = to_basis(f, Basis::M);
  Rational total(0);
  for (const auto& [p, c] : g.terms()) {
    int len = p.length();
    if (len > n) continue;
    // m_lambda(1^n) = n! / ((n - l)! * prod_j r_j!)
    Integer ways = factorial(n) / factorial(n - len) / p.multiplicity_factorial();
    total += c * Rational(ways);
  }
  return total;
}

std::string to_text(const SymFn& f) {
  std::string out;
  for (const auto& [p, c] : f.terms()) {
    out += to_string(c);
    out += ' ';
    out += basis_char(f.basis());
    out += p.to_text();
    out += '\n';
  }
  return out;
}

SymFn symfn_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SymFn out;
  bool have_basis = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string coeff_text, term_text, extra;
    if (!(ls >> coeff_text >> term_text) || (ls >> extra)) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) +
                                      ": expected '<coeff> <basis>[parts]'");
    }
    Rational coeff = rational_from_text(coeff_text);
    if (term_text.size() < 3) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad term " + term_text);
    }
    Basis basis = basis_from_char(term_text[0]);
    Partition p = Partition::from_text(term_text.substr(1));
    if (!have_basis) {
      out = SymFn(basis);
      have_basis = true;
    } else if (basis != out.basis()) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": mixed bases in one listing");
    }
    out.add_term(p, coeff);
  }
  if (!have_basis) fail(ErrorKind::ParseError, "empty term listing");
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymFn& f) { return os << to_text(f); }

}  // namespace chromapos
