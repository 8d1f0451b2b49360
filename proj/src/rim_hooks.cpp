#include "chromapos/rim_hooks.hpp"

#include <algorithm>

#include "chromapos/error.hpp"

namespace chromapos {

int RimHook::rows_spanned() const {
  int lo = cells.front().first, hi = cells.front().first;
  for (const auto& [r, c] : cells) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi - lo + 1;
}

Partition RimHookTabloid::hook_type() const {
  std::vector<int> lengths;
  lengths.reserve(hooks.size());
  for (const auto& h : hooks) lengths.push_back(h.length());
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

int RimHookTabloid::even_row_span_count() const {
  int count = 0;
  for (const auto& h : hooks) {
    if (h.rows_spanned() % 2 == 0) ++count;
  }
  return count;
}

int RimHookTabloid::sign() const { return even_row_span_count() % 2 == 0 ? 1 : -1; }

namespace {

// Scans rows bottom-up. A hook entering row i from below starts at the column
// where it ended in row i+1; consecutive entry columns tile the row, and the
// leftover prefix [1, first_entry-1] forces a fresh hook starting in column 1.
// The only free choice is which hooks continue upward.
struct Enumerator {
  const std::vector<int>& rows;  // rows[0] is the top row
  std::vector<std::vector<std::pair<int, int>>> hook_cells;
  std::vector<RimHookTabloid>& out;
  const Partition& shape;

  Enumerator(const Partition& shape_, std::vector<RimHookTabloid>& out_)
      : rows(shape_.parts()), out(out_), shape(shape_) {}

  // entries: (entry column, hook id), sorted by column, for the current row.
  void scan(int row, std::vector<std::pair<int, int>> entries) {
    if (row == 0) {
      RimHookTabloid t;
      t.shape = shape;
      for (auto& cells : hook_cells) t.hooks.push_back(RimHook{cells});
      out.push_back(std::move(t));
      return;
    }
    int width = rows[static_cast<std::size_t>(row - 1)];
    bool fresh = entries.empty() || entries.front().first > 1;
    std::size_t fresh_id = hook_cells.size();
    if (fresh) {
      hook_cells.emplace_back();
      entries.insert(entries.begin(), {1, static_cast<int>(fresh_id)});
    }
    // Lay out the forced intervals and remember each hook's right end.
    std::vector<std::pair<int, int>> ends;  // (right end column, hook id)
    for (std::size_t k = 0; k < entries.size(); ++k) {
      int from = entries[k].first;
      int to = k + 1 < entries.size() ? entries[k + 1].first - 1 : width;
      int id = entries[k].second;
      for (int c = from; c <= to; ++c) {
        hook_cells[static_cast<std::size_t>(id)].emplace_back(row, c);
      }
      ends.emplace_back(to, id);
    }
    if (row == 1) {
      scan(0, {});
    } else {
      // Each hook present in this row independently stops or continues.
      std::size_t m = ends.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::pair<int, int>> next;
        for (std::size_t k = 0; k < m; ++k) {
          if (mask & (std::size_t{1} << k)) next.push_back(ends[k]);
        }
        scan(row - 1, std::move(next));
      }
    }
    // Undo this row's cells.
    for (const auto& [to, id] : ends) {
      auto& cells = hook_cells[static_cast<std::size_t>(id)];
      while (!cells.empty() && cells.back().first == row) cells.pop_back();
    }
    if (fresh) hook_cells.pop_back();
  }
};

}  // namespace

std::vector<RimHookTabloid> enumerate_special_rim_hook_tabloids(const Partition& shape) {
  std::vector<RimHookTabloid> out;
  Enumerator e(shape, out);
  e.scan(shape.length(), {});
  return out;
}

}  // namespace chromapos
