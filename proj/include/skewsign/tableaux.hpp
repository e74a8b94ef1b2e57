#pragma once

#include <functional>
#include <vector>

#include "skewsign/skew_shape.hpp"

namespace skewsign {

// Row-major concatenation of the labels of a tableau; a permutation of 1..n.
using ReadingWord = std::vector<int>;

// Bijective filling of a skew shape with 1..n, strictly increasing along rows
// and down columns. Labels are stored in row-major cell order, which is also
// the reading order.
class StandardYoungTableau {
 public:
  StandardYoungTableau(SkewShape shape, std::vector<int> labels);

  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }

  static bool is_valid_filling(const SkewShape& shape, const std::vector<int>& labels);

 private:
  SkewShape shape_;
  std::vector<int> labels_;
};

// Visits every standard Young tableau of the shape exactly once, in a fixed
// deterministic order. The empty shape yields one empty tableau.
void for_each_syt(const SkewShape& shape,
                  const std::function<void(const StandardYoungTableau&)>& fn);

std::vector<StandardYoungTableau> enumerate_syt(const SkewShape& shape);
long long count_syt(const SkewShape& shape);

// Rows read left to right, top row first.
ReadingWord reading_word(const StandardYoungTableau& t);

// (-1)^inversions. Throws NotAPermutation unless w is a permutation of 1..n;
// the empty word has sign +1.
int permutation_sign(const ReadingWord& w);

// Sum of reading-word signs over all standard Young tableaux of the shape.
long long imbalance(const SkewShape& shape);

}  // namespace skewsign
