#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "skewsign/skew_shape.hpp"
#include "skewsign/tableaux.hpp"

namespace skewsign {

enum class Orientation { horizontal, vertical };

// Two adjacent cells; the anchor is the top/left cell. A horizontal domino
// covers (row, col) and (row, col+1), a vertical one (row, col) and (row+1, col).
struct Domino {
  int row = 1;
  int col = 1;
  Orientation orientation = Orientation::horizontal;

  Cell first_cell() const { return {row, col}; }
  Cell second_cell() const {
    return orientation == Orientation::horizontal ? Cell{row, col + 1} : Cell{row + 1, col};
  }

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Labeled domino tiling whose prefixes form a chain of skew shapes: the union
// of the inner shape and the dominoes labeled <= t is a skew shape for every t.
// The domino at index t carries label t + 1.
class StandardDominoTableau {
 public:
  StandardDominoTableau(SkewShape shape, std::vector<Domino> dominoes);

  const SkewShape& shape() const { return shape_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }

  static bool is_valid_chain(const SkewShape& shape, const std::vector<Domino>& dominoes);

 private:
  SkewShape shape_;
  std::vector<Domino> dominoes_;
};

// Unlabeled exact domino cover; dominoes kept in (row, col, orientation) order.
class DominoTiling {
 public:
  DominoTiling(SkewShape shape, std::vector<Domino> dominoes);

  const SkewShape& shape() const { return shape_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }

  friend bool operator==(const DominoTiling&, const DominoTiling&) = default;

 private:
  SkewShape shape_;
  std::vector<Domino> dominoes_;
};

// Exact complex integer a + b*i. Fourth roots of unity land here because
// (-1)^spin = i^(vertical count) and spin may be half-integral.
struct GaussianInt {
  long long re = 0;
  long long im = 0;

  static GaussianInt unit_power(long long k);  // i^k for any sign of k

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

// v(outer), v(inner), the tiling-independent value nv - bv, and the parity of
// the vertical-domino count. Construction checks v_outer + v_inner == v_prime mod 2.
struct ShapeInvariants {
  int v_outer = 0;
  int v_inner = 0;
  int v_prime = 0;
  int vertical_parity = 0;
};

// Standard domino tableaux via chain-of-partitions backtracking. Yields
// nothing when the cell count is odd or no chain reaches the outer shape.
void for_each_sdt(const SkewShape& shape,
                  const std::function<void(const StandardDominoTableau&)>& fn);
std::vector<StandardDominoTableau> enumerate_sdt(const SkewShape& shape);

// Replaces the domino labeled i by the numbers 2i-1 and 2i (left/right for
// horizontal, top/bottom for vertical).
StandardYoungTableau expand_to_syt(const StandardDominoTableau& d);

int sign_domino(const StandardDominoTableau& d);
int vertical_count(const StandardDominoTableau& d);

// A vertical domino in column j with bottom cell in row i is nice when
// j - inner_i is even, i.e. an odd number of shape cells lies to its left.
bool is_nice(const Domino& d, const Partition& inner);

// (nice vertical count, bad vertical count).
std::pair<int, int> nice_and_bad_counts(const StandardDominoTableau& d);
int nice_minus_bad(const DominoTiling& t);

// Sum over standard domino tableaux of i^(vertical count).
GaussianInt spin_sum(const SkewShape& shape);

// All exact domino covers, no labels, deterministic order.
void for_each_tiling(const SkewShape& shape, const std::function<void(const DominoTiling&)>& fn);
std::vector<DominoTiling> enumerate_tilings(const SkewShape& shape);
std::optional<DominoTiling> first_tiling(const SkewShape& shape);

// Tilings reachable by one flip: a 2x2 block of two side-by-side verticals
// exchanged with two stacked horizontals.
std::vector<DominoTiling> flip_neighbors(const DominoTiling& t);

struct FlipGraphSummary {
  long long tiling_count = 0;
  long long edge_count = 0;
  int component_count = 0;
  bool connected = false;
};

// Breadth-first exploration of the flip graph. Throws NoTiling when the shape
// has no domino tiling.
FlipGraphSummary flip_graph_summary(const SkewShape& shape);

// Computes nv - bv on the first tiling found. Throws NoTiling.
ShapeInvariants shape_invariants(const SkewShape& shape);

}  // namespace skewsign
