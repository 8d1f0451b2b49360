#include "chromapos/tableaux.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"

namespace chromapos {

namespace {

// Backtracking SSYT fill in row-major order: rows weakly increase, columns
// strictly increase. `grid` holds 0-based values, -1 for unfilled.
long long count_fillings(const std::vector<int>& rows,
                         const std::vector<std::pair<int, int>>& cells,
                         std::size_t at, std::vector<std::vector<int>>& grid,
                         std::vector<int>& remaining) {
  if (at == cells.size()) return 1;
  auto [r, c] = cells[at];
  int lo = c > 0 ? grid[r][c - 1] : 0;
  if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
  long long total = 0;
  for (int v = lo; v < static_cast<int>(remaining.size()); ++v) {
    if (remaining[v] == 0) continue;
    grid[r][c] = v;
    --remaining[v];
    total += count_fillings(rows, cells, at + 1, grid, remaining);
    ++remaining[v];
  }
  grid[r][c] = -1;
  return total;
}

}  // namespace

long long kostka(const Partition& shape, const Partition& content) {
  if (shape.degree() != content.degree()) {
    fail(ErrorKind::DegreeMismatch, "kostka needs |shape| = |content|: " +
                                        shape.to_text() + " vs " + content.to_text());
  }
  if (shape.degree() > kDegreeCap) {
    fail(ErrorKind::DegreeCapExceeded,
         "kostka degree " + std::to_string(shape.degree()) + " exceeds kDegreeCap=" +
             std::to_string(kDegreeCap));
  }
  if (shape.empty()) return 1;
  const auto& rows = shape.parts();
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < rows[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
  for (int r = 0; r < shape.length(); ++r) {
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]), -1);
  }
  std::vector<int> remaining(content.parts().begin(), content.parts().end());
  return count_fillings(rows, cells, 0, grid, remaining);
}

Integer num_standard_tableaux(const Partition& shape) {
  if (shape.degree() == 0) {
    fail(ErrorKind::EmptyShape, "num_standard_tableaux of the empty shape");
  }
  const auto& rows = shape.parts();
  Partition conj = conjugate(shape);
  const auto& cols = conj.parts();
  Integer hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  Integer result = factorial(shape.degree());
  if (!mpz_divisible_p(result.get_mpz_t(), hooks.get_mpz_t())) {
    fail(ErrorKind::Internal, "hook product does not divide n!");
  }
  return result / hooks;
}

std::vector<Rational> inverse_kostka_row(const Partition& lambda,
                                         const std::vector<Partition>& ordering) {
  int n = lambda.degree();
  const auto& all = partitions_of(n);
  if (ordering.size() != all.size()) {
    fail(ErrorKind::BadParameter, "ordering must list all partitions of " + std::to_string(n));
  }
  std::set<std::vector<int>> seen;
  for (const auto& p : ordering) {
    if (p.degree() != n) {
      fail(ErrorKind::BadParameter, "ordering contains a partition of the wrong degree");
    }
    if (!seen.insert(p.parts()).second) {
      fail(ErrorKind::BadParameter, "ordering repeats " + p.to_text());
    }
  }
  std::size_t count = ordering.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (ordering[j] != ordering[i] && dominates(ordering[j], ordering[i])) {
        fail(ErrorKind::BadParameter,
             "ordering is not a linear extension of dominance: " +
                 ordering[j].to_text() + " dominates " + ordering[i].to_text());
      }
    }
  }

  std::size_t row = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (ordering[i] == lambda) row = i;
  }
  if (row == count) fail(ErrorKind::BadParameter, "lambda missing from ordering");

  std::vector<std::vector<long long>> k(count, std::vector<long long>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) k[i][j] = kostka(ordering[i], ordering[j]);
    if (k[i][i] != 1) fail(ErrorKind::Internal, "Kostka diagonal is not 1");
  }

  std::vector<Rational> x(count, Rational(0));
  for (std::size_t j = row; j < count; ++j) {
    Rational s = j == row ? Rational(1) : Rational(0);
    for (std::size_t i = row; i < j; ++i) s -= x[i] * Rational(static_cast<long>(k[i][j]));
    x[j] = s;  // diagonal entry is 1
  }
  return x;
}

int KostkaTables::index_of(const Partition& p) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), p,
                             [](const Partition& a, const Partition& b) {
                               return partition_precedes(a, b);
                             });
  if (it == parts.end() || *it != p) {
    fail(ErrorKind::Internal, "partition missing from tables: " + p.to_text());
  }
  return static_cast<int>(it - parts.begin());
}

const KostkaTables& kostka_tables(int degree) {
  if (degree < 0) fail(ErrorKind::BadParameter, "negative degree");
  if (degree > kDegreeCap) {
    fail(ErrorKind::DegreeCapExceeded,
         "degree " + std::to_string(degree) + " exceeds kDegreeCap=" + std::to_string(kDegreeCap));
  }
  static std::mutex mutex;
  static std::map<int, KostkaTables> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;

  KostkaTables t;
  t.parts = partitions_of(degree);
  std::size_t count = t.parts.size();
  t.conjugate_index.resize(count);
  t.kostka.assign(count, std::vector<long long>(count, 0));
  t.inverse.assign(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t i = 0; i < count; ++i) {
    Partition conj = conjugate(t.parts[i]);
    for (std::size_t j = 0; j < count; ++j) {
      if (t.parts[j] == conj) t.conjugate_index[i] = static_cast<int>(j);
      if (j >= i) t.kostka[i][j] = kostka(t.parts[i], t.parts[j]);
    }
    if (t.kostka[i][i] != 1) fail(ErrorKind::Internal, "Kostka diagonal is not 1");
  }
  // Back substitution row by row; entries of the inverse are integral.
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t j = r; j < count; ++j) {
      Rational s = j == r ? Rational(1) : Rational(0);
      for (std::size_t i = r; i < j; ++i) {
        s -= t.inverse[r][i] * Rational(static_cast<long>(t.kostka[i][j]));
      }
      if (!is_integer(s)) fail(ErrorKind::Internal, "inverse Kostka entry not integral");
      t.inverse[r][j] = s;
    }
  }
  return cache.emplace(degree, std::move(t)).first->second;
}

}  // namespace chromapos
