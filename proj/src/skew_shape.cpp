#include "skewsign/skew_shape.hpp"

#include "skewsign/errors.hpp"

namespace skewsign {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw InvalidShape("inner partition " + inner_.to_string() +
                       " is not contained in outer partition " + outer_.to_string());
}

SkewShape SkewShape::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return SkewShape(Partition::parse(text), Partition{});
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

bool SkewShape::in_shape(int row, int col) const {
  return row >= 1 && row <= rows() && col > inner_.part(row) && col <= outer_.part(row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= rows(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
  return out;
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "/" + inner_.to_string();
}

CellIndexer::CellIndexer(const SkewShape& shape) : shape_(shape) {
  row_offsets_.assign(static_cast<std::size_t>(shape.rows()) + 1, 0);
  for (int r = 1; r <= shape.rows(); ++r) {
    row_offsets_[static_cast<std::size_t>(r) - 1] = count_;
    count_ += shape.outer().part(r) - shape.inner().part(r);
  }
  if (shape.rows() > 0) row_offsets_[static_cast<std::size_t>(shape.rows())] = count_;
}

int CellIndexer::index(int row, int col) const {
  if (!shape_.in_shape(row, col)) return -1;
  return row_offsets_[static_cast<std::size_t>(row) - 1] + (col - shape_.inner().part(row) - 1);
}

}  // namespace skewsign
