#include "skewsign/dominoes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "skewsign/errors.hpp"

namespace skewsign {

namespace {

// Padded copy of the inner partition, one entry per row of the outer shape.
std::vector<int> padded_inner(const SkewShape& shape) {
  std::vector<int> nu(static_cast<std::size_t>(shape.rows()), 0);
  for (int r = 1; r <= shape.rows(); ++r)
    nu[static_cast<std::size_t>(r) - 1] = shape.inner().part(r);
  return nu;
}

// Dominoes addable to the partition nu (within outer), sorted by
// (row, col, orientation).
std::vector<Domino> addable_dominoes(const std::vector<int>& nu, const Partition& outer) {
  std::vector<Domino> out;
  const int rows = outer.rows();
  for (int r = 1; r <= rows; ++r) {
    const int cur = nu[static_cast<std::size_t>(r) - 1];
    const int prev = r == 1 ? std::numeric_limits<int>::max() : nu[static_cast<std::size_t>(r) - 2];
    if (outer.part(r) >= cur + 2 && prev >= cur + 2)
      out.push_back({r, cur + 1, Orientation::horizontal});
    if (r < rows && nu[static_cast<std::size_t>(r)] == cur &&
        outer.part(r + 1) >= cur + 1 && prev >= cur + 1)
      out.push_back({r, cur + 1, Orientation::vertical});
  }
  return out;
}

void apply_domino(std::vector<int>& nu, const Domino& d) {
  if (d.orientation == Orientation::horizontal) {
    nu[static_cast<std::size_t>(d.row) - 1] += 2;
  } else {
    nu[static_cast<std::size_t>(d.row) - 1] += 1;
    nu[static_cast<std::size_t>(d.row)] += 1;
  }
}

void unapply_domino(std::vector<int>& nu, const Domino& d) {
  if (d.orientation == Orientation::horizontal) {
    nu[static_cast<std::size_t>(d.row) - 1] -= 2;
  } else {
    nu[static_cast<std::size_t>(d.row) - 1] -= 1;
    nu[static_cast<std::size_t>(d.row)] -= 1;
  }
}

int nice_minus_bad_of(const std::vector<Domino>& dominoes, const Partition& inner) {
  int value = 0;
  for (const Domino& d : dominoes)
    if (d.orientation == Orientation::vertical) value += is_nice(d, inner) ? +1 : -1;
  return value;
}

}  // namespace

StandardDominoTableau::StandardDominoTableau(SkewShape shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
  if (!is_valid_chain(shape_, dominoes_))
    throw InvalidShape("labeled dominoes do not form a standard domino tableau of " +
                       shape_.to_string());
}

bool StandardDominoTableau::is_valid_chain(const SkewShape& shape,
                                           const std::vector<Domino>& dominoes) {
  if (2 * static_cast<int>(dominoes.size()) != shape.size()) return false;
  std::vector<int> nu = padded_inner(shape);
  const Partition& outer = shape.outer();
  for (const Domino& d : dominoes) {
    if (d.row < 1) return false;
    const int r = d.row;
    if (d.orientation == Orientation::horizontal) {
      if (r > outer.rows()) return false;
      const int cur = nu[static_cast<std::size_t>(r) - 1];
      if (d.col != cur + 1) return false;
      if (outer.part(r) < cur + 2) return false;
      if (r > 1 && nu[static_cast<std::size_t>(r) - 2] < cur + 2) return false;
    } else {
      if (r + 1 > outer.rows()) return false;
      const int cur = nu[static_cast<std::size_t>(r) - 1];
      if (d.col != cur + 1) return false;
      if (nu[static_cast<std::size_t>(r)] != cur) return false;
      if (outer.part(r + 1) < cur + 1) return false;
      if (r > 1 && nu[static_cast<std::size_t>(r) - 2] < cur + 1) return false;
    }
    apply_domino(nu, d);
  }
  for (int r = 1; r <= outer.rows(); ++r)
    if (nu[static_cast<std::size_t>(r) - 1] != outer.part(r)) return false;
  return true;
}

DominoTiling::DominoTiling(SkewShape shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
  std::sort(dominoes_.begin(), dominoes_.end());
  const CellIndexer idx(shape_);
  std::vector<char> covered(static_cast<std::size_t>(idx.count()), 0);
  int placed = 0;
  for (const Domino& d : dominoes_) {
    for (const Cell& c : {d.first_cell(), d.second_cell()}) {
      const int i = idx.index(c.row, c.col);
      if (i < 0 || covered[static_cast<std::size_t>(i)])
        throw InvalidShape("dominoes do not tile " + shape_.to_string());
      covered[static_cast<std::size_t>(i)] = 1;
      ++placed;
    }
  }
  if (placed != shape_.size())
    throw InvalidShape("dominoes do not cover " + shape_.to_string());
}

GaussianInt GaussianInt::unit_power(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void for_each_sdt(const SkewShape& shape,
                  const std::function<void(const StandardDominoTableau&)>& fn) {
  if (shape.size() % 2 != 0) return;
  const int k = shape.size() / 2;
  std::vector<int> nu = padded_inner(shape);
  std::vector<Domino> placed;
  placed.reserve(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(placed.size()) == k) {
      fn(StandardDominoTableau(shape, placed));
      return;
    }
    for (const Domino& d : addable_dominoes(nu, shape.outer())) {
      apply_domino(nu, d);
      placed.push_back(d);
      self(self);
      placed.pop_back();
      unapply_domino(nu, d);
    }
  };
  rec(rec);
}

std::vector<StandardDominoTableau> enumerate_sdt(const SkewShape& shape) {
  std::vector<StandardDominoTableau> out;
  for_each_sdt(shape, [&](const StandardDominoTableau& d) { out.push_back(d); });
  return out;
}

StandardYoungTableau expand_to_syt(const StandardDominoTableau& d) {
  const CellIndexer idx(d.shape());
  std::vector<int> labels(static_cast<std::size_t>(idx.count()), 0);
  for (std::size_t t = 0; t < d.dominoes().size(); ++t) {
    const Domino& dom = d.dominoes()[t];
    const int label = 2 * static_cast<int>(t) + 1;
    labels[static_cast<std::size_t>(idx.index(dom.first_cell().row, dom.first_cell().col))] = label;
    labels[static_cast<std::size_t>(idx.index(dom.second_cell().row, dom.second_cell().col))] = label + 1;
  }
  return StandardYoungTableau(d.shape(), std::move(labels));
}

int sign_domino(const StandardDominoTableau& d) {
  return permutation_sign(reading_word(expand_to_syt(d)));
}

int vertical_count(const StandardDominoTableau& d) {
  int n = 0;
  for (const Domino& dom : d.dominoes())
    if (dom.orientation == Orientation::vertical) ++n;
  return n;
}

bool is_nice(const Domino& d, const Partition& inner) {
  if (d.orientation != Orientation::vertical)
    throw std::logic_error("nice test applies to vertical dominoes only");
  const int bottom_row = d.row + 1;
  return (d.col - inner.part(bottom_row)) % 2 == 0;
}

std::pair<int, int> nice_and_bad_counts(const StandardDominoTableau& d) {
  int nice = 0, bad = 0;
  for (const Domino& dom : d.dominoes())
    if (dom.orientation == Orientation::vertical) (is_nice(dom, d.shape().inner()) ? nice : bad) += 1;
  return {nice, bad};
}

int nice_minus_bad(const DominoTiling& t) {
  return nice_minus_bad_of(t.dominoes(), t.shape().inner());
}

GaussianInt spin_sum(const SkewShape& shape) {
  GaussianInt total{0, 0};
  for_each_sdt(shape, [&](const StandardDominoTableau& d) {
    total = total + GaussianInt::unit_power(vertical_count(d));
  });
  return total;
}

void for_each_tiling(const SkewShape& shape, const std::function<void(const DominoTiling&)>& fn) {
  const CellIndexer idx(shape);
  const std::vector<Cell> cells = shape.cells();
  std::vector<char> covered(cells.size(), 0);
  std::vector<Domino> placed;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    while (from < cells.size() && covered[from]) ++from;
    if (from == cells.size()) {
      fn(DominoTiling(shape, placed));
      return;
    }
    const Cell cell = cells[from];
    covered[from] = 1;
    const int right = idx.index(cell.row, cell.col + 1);
    if (right >= 0 && !covered[static_cast<std::size_t>(right)]) {
      covered[static_cast<std::size_t>(right)] = 1;
      placed.push_back({cell.row, cell.col, Orientation::horizontal});
      self(self, from + 1);
      placed.pop_back();
      covered[static_cast<std::size_t>(right)] = 0;
    }
    const int below = idx.index(cell.row + 1, cell.col);
    if (below >= 0 && !covered[static_cast<std::size_t>(below)]) {
      covered[static_cast<std::size_t>(below)] = 1;
      placed.push_back({cell.row, cell.col, Orientation::vertical});
      self(self, from + 1);
      placed.pop_back();
      covered[static_cast<std::size_t>(below)] = 0;
    }
    covered[from] = 0;
  };
  if (shape.size() % 2 != 0) return;
  rec(rec, 0);
}

std::vector<DominoTiling> enumerate_tilings(const SkewShape& shape) {
  std::vector<DominoTiling> out;
  for_each_tiling(shape, [&](const DominoTiling& t) { out.push_back(t); });
  return out;
}

std::optional<DominoTiling> first_tiling(const SkewShape& shape) {
  // Same search as for_each_tiling, stopping at the first full cover.
  if (shape.size() % 2 != 0) return std::nullopt;
  const CellIndexer idx(shape);
  const std::vector<Cell> cells = shape.cells();
  std::vector<char> covered(cells.size(), 0);
  std::vector<Domino> placed;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    while (from < cells.size() && covered[from]) ++from;
    if (from == cells.size()) return true;
    const Cell cell = cells[from];
    covered[from] = 1;
    const int right = idx.index(cell.row, cell.col + 1);
    if (right >= 0 && !covered[static_cast<std::size_t>(right)]) {
      covered[static_cast<std::size_t>(right)] = 1;
      placed.push_back({cell.row, cell.col, Orientation::horizontal});
      if (self(self, from + 1)) return true;
      placed.pop_back();
      covered[static_cast<std::size_t>(right)] = 0;
    }
    const int below = idx.index(cell.row + 1, cell.col);
    if (below >= 0 && !covered[static_cast<std::size_t>(below)]) {
      covered[static_cast<std::size_t>(below)] = 1;
      placed.push_back({cell.row, cell.col, Orientation::vertical});
      if (self(self, from + 1)) return true;
      placed.pop_back();
      covered[static_cast<std::size_t>(below)] = 0;
    }
    covered[from] = 0;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return DominoTiling(shape, std::move(placed));
}

std::vector<DominoTiling> flip_neighbors(const DominoTiling& t) {
  std::set<Domino> have(t.dominoes().begin(), t.dominoes().end());
  std::vector<DominoTiling> out;
  auto replaced = [&](const Domino& a, const Domino& b, const Domino& c, const Domino& d) {
    std::vector<Domino> next;
    next.reserve(t.dominoes().size());
    for (const Domino& dom : t.dominoes())
      if (dom != a && dom != b) next.push_back(dom);
    next.push_back(c);
    next.push_back(d);
    out.emplace_back(t.shape(), std::move(next));
  };
  for (const Domino& d : t.dominoes()) {
    if (d.orientation == Orientation::vertical) {
      const Domino partner{d.row, d.col + 1, Orientation::vertical};
      if (have.count(partner))
        replaced(d, partner, {d.row, d.col, Orientation::horizontal},
                 {d.row + 1, d.col, Orientation::horizontal});
    } else {
      const Domino partner{d.row + 1, d.col, Orientation::horizontal};
      if (have.count(partner))
        replaced(d, partner, {d.row, d.col, Orientation::vertical},
                 {d.row, d.col + 1, Orientation::vertical});
    }
  }
  return out;
}

FlipGraphSummary flip_graph_summary(const SkewShape& shape) {
  const std::vector<DominoTiling> tilings = enumerate_tilings(shape);
  if (tilings.empty()) throw NoTiling("no domino tiling of " + shape.to_string());

  std::map<std::vector<Domino>, int> index;
  for (std::size_t i = 0; i < tilings.size(); ++i)
    index.emplace(tilings[i].dominoes(), static_cast<int>(i));

  FlipGraphSummary summary;
  summary.tiling_count = static_cast<long long>(tilings.size());

  long long degree_total = 0;
  std::vector<char> visited(tilings.size(), 0);
  for (std::size_t start = 0; start < tilings.size(); ++start) {
    if (visited[start]) continue;
    ++summary.component_count;
    std::vector<int> queue{static_cast<int>(start)};
    visited[start] = 1;
    while (!queue.empty()) {
      const int cur = queue.back();
      queue.pop_back();
      for (const DominoTiling& nb : flip_neighbors(tilings[static_cast<std::size_t>(cur)])) {
        const auto it = index.find(nb.dominoes());
        if (it == index.end())
          throw std::logic_error("flip produced a tiling missing from the enumeration");
        ++degree_total;
        if (!visited[static_cast<std::size_t>(it->second)]) {
          visited[static_cast<std::size_t>(it->second)] = 1;
          queue.push_back(it->second);
        }
      }
    }
  }
  summary.edge_count = degree_total / 2;
  summary.connected = summary.component_count == 1;
  return summary;
}

ShapeInvariants shape_invariants(const SkewShape& shape) {
  const std::optional<DominoTiling> tiling = first_tiling(shape);
  if (!tiling) throw NoTiling("no domino tiling of " + shape.to_string());

  ShapeInvariants inv;
  inv.v_outer = v_statistic(shape.outer());
  inv.v_inner = v_statistic(shape.inner());
  inv.v_prime = nice_minus_bad(*tiling);
  int verticals = 0;
  for (const Domino& d : tiling->dominoes())
    if (d.orientation == Orientation::vertical) ++verticals;
  inv.vertical_parity = verticals % 2;
  if ((inv.v_outer + inv.v_inner - inv.v_prime) % 2 != 0)
    throw std::logic_error("v(outer) + v(inner) and nv - bv disagree mod 2 on " +
                           shape.to_string());
  return inv;
}

}  // namespace skewsign
