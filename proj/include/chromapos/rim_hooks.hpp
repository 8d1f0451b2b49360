#pragma once

#include <utility>
#include <vector>

#include "chromapos/partition.hpp"

namespace chromapos {

// A border strip: connected cells with no 2x2 block, stored row-major with
// 1-based (row, column) coordinates.
struct RimHook {
  std::vector<std::pair<int, int>> cells;

  int length() const { return static_cast<int>(cells.size()); }
  int rows_spanned() const;
};

// A tiling of the Young diagram of `shape` by disjoint rim hooks, each of
// which contains a cell in column 1.
struct RimHookTabloid {
  Partition shape;
  std::vector<RimHook> hooks;

  Partition hook_type() const;     // kappa_T: hook lengths, sorted decreasing
  int even_row_span_count() const; // |W_T|
  int sign() const;                // (-1)^{|W_T|}
};

// All special rim hook tabloids of the given shape. The empty shape yields
// exactly one empty tabloid.
std::vector<RimHookTabloid> enumerate_special_rim_hook_tabloids(const Partition& shape);

}  // namespace chromapos
