#include "skewsign/tableaux.hpp"

#include <algorithm>

#include "skewsign/errors.hpp"

namespace skewsign {

StandardYoungTableau::StandardYoungTableau(SkewShape shape, std::vector<int> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (!is_valid_filling(shape_, labels_))
    throw InvalidShape("filling is not a standard Young tableau of " + shape_.to_string());
}

bool StandardYoungTableau::is_valid_filling(const SkewShape& shape, const std::vector<int>& labels) {
  const int n = shape.size();
  if (static_cast<int>(labels.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : labels) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const CellIndexer idx(shape);
  const std::vector<Cell> cells = shape.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int left = idx.index(cells[i].row, cells[i].col - 1);
    if (left >= 0 && labels[static_cast<std::size_t>(left)] > labels[i]) return false;
    const int up = idx.index(cells[i].row - 1, cells[i].col);
    if (up >= 0 && labels[static_cast<std::size_t>(up)] > labels[i]) return false;
  }
  return true;
}

void for_each_syt(const SkewShape& shape,
                  const std::function<void(const StandardYoungTableau&)>& fn) {
  const int n = shape.size();
  const CellIndexer idx(shape);
  const std::vector<Cell> cells = shape.cells();

  // left_of[i] / above[i]: row-major index of the in-shape neighbor, or -1.
  std::vector<int> left_of(cells.size()), above(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    left_of[i] = idx.index(cells[i].row, cells[i].col - 1);
    above[i] = idx.index(cells[i].row - 1, cells[i].col);
  }

  std::vector<int> labels(cells.size(), 0);
  auto rec = [&](auto&& self, int next_label) -> void {
    if (next_label > n) {
      fn(StandardYoungTableau(shape, labels));
      return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (labels[i] != 0) continue;
      if (left_of[i] >= 0 && labels[static_cast<std::size_t>(left_of[i])] == 0) continue;
      if (above[i] >= 0 && labels[static_cast<std::size_t>(above[i])] == 0) continue;
      labels[i] = next_label;
      self(self, next_label + 1);
      labels[i] = 0;
    }
  };
  rec(rec, 1);
}

std::vector<StandardYoungTableau> enumerate_syt(const SkewShape& shape) {
  std::vector<StandardYoungTableau> out;
  for_each_syt(shape, [&](const StandardYoungTableau& t) { out.push_back(t); });
  return out;
}

long long count_syt(const SkewShape& shape) {
  long long n = 0;
  for_each_syt(shape, [&](const StandardYoungTableau&) { ++n; });
  return n;
}

ReadingWord reading_word(const StandardYoungTableau& t) {
  return t.labels();  // labels are stored in reading order
}

int permutation_sign(const ReadingWord& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw NotAPermutation("word is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inversions;
  return inversions % 2 == 0 ? +1 : -1;
}

long long imbalance(const SkewShape& shape) {
  long long total = 0;
  for_each_syt(shape, [&](const StandardYoungTableau& t) {
    total += permutation_sign(t.labels());
  });
  return total;
}

}  // namespace skewsign
