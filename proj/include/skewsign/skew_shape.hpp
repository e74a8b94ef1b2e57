#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "skewsign/partition.hpp"

namespace skewsign {

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Skew diagram outer/inner in English notation (row 1 on top, 1-based
// rows and columns). The cell set is { (i,j) : inner_i < j <= outer_i }.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  // Parses "OUTER/INNER"; a bare "OUTER" means the straight shape OUTER/[].
  static SkewShape parse(std::string_view text);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.rows(); }

  bool in_shape(int row, int col) const;
  std::vector<Cell> cells() const;  // row-major order

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

// Constant-time lookup from (row, col) to the row-major cell index of a shape.
class CellIndexer {
 public:
  explicit CellIndexer(const SkewShape& shape);

  // Row-major index of the cell, or -1 when (row, col) is not in the shape.
  int index(int row, int col) const;
  int count() const { return count_; }

 private:
  SkewShape shape_;
  std::vector<int> row_offsets_;
  int count_ = 0;
};

}  // namespace skewsign
