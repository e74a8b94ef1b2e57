#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace skewsign {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction, so equality is structural.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses the canonical bracketed form, e.g. "[3,2,1]" or "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }

  // 1-based row access; rows beyond the last part read as 0.
  int part(int row) const;

  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Sum of the parts in even row positions: p2 + p4 + p6 + ...
int v_statistic(const Partition& p);

// All partitions containing alpha with exactly n extra cells and at most
// row_bound rows, in descending lexicographic order. Throws BoundTooSmall
// when row_bound cannot even hold alpha. A row_bound of rows(alpha) + n is
// always enough to make the list complete.
std::vector<Partition> enumerate_outer_extensions(const Partition& alpha, int n, int row_bound);

// All partitions contained in alpha with exactly n fewer cells, in descending
// lexicographic order. Empty when n exceeds the size of alpha.
std::vector<Partition> enumerate_inner_restrictions(const Partition& alpha, int n);

// All partitions of n, descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// Row-wise maximum / minimum of two partitions (both are partitions again).
Partition rowwise_max(const Partition& a, const Partition& b);
Partition rowwise_min(const Partition& a, const Partition& b);

}  // namespace skewsign
