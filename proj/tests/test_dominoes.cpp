#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "skewsign/dominoes.hpp"
#include "skewsign/errors.hpp"
#include "test_support.hpp"

using namespace skewsign;

namespace {

const Domino H11{1, 1, Orientation::horizontal};
const Domino H21{2, 1, Orientation::horizontal};
const Domino V11{1, 1, Orientation::vertical};
const Domino V12{1, 2, Orientation::vertical};

// Row-major expansion labels of an arbitrary labeled tiling, bypassing the
// chain validation of StandardDominoTableau.
std::vector<int> expansion_labels(const SkewShape& shape, const std::vector<Domino>& dominoes) {
  const CellIndexer idx(shape);
  std::vector<int> labels(static_cast<std::size_t>(idx.count()), 0);
  for (std::size_t t = 0; t < dominoes.size(); ++t) {
    const Cell a = dominoes[t].first_cell();
    const Cell b = dominoes[t].second_cell();
    labels[static_cast<std::size_t>(idx.index(a.row, a.col))] = 2 * static_cast<int>(t) + 1;
    labels[static_cast<std::size_t>(idx.index(b.row, b.col))] = 2 * static_cast<int>(t) + 2;
  }
  return labels;
}

}  // namespace

TEST_CASE("standard domino tableaux of small shapes") {
  const auto square = enumerate_sdt(SkewShape::parse("[2,2]"));
  REQUIRE(square.size() == 2);
  CHECK(square[0].dominoes() == std::vector<Domino>{H11, H21});
  CHECK(square[1].dominoes() == std::vector<Domino>{V11, V12});

  CHECK(enumerate_sdt(SkewShape::parse("[1]")).empty());

  const auto hook = enumerate_sdt(SkewShape::parse("[2,1,1]"));
  REQUIRE(hook.size() == 1);
  CHECK(hook[0].dominoes() == std::vector<Domino>{H11, Domino{2, 1, Orientation::vertical}});

  CHECK(enumerate_sdt(SkewShape::parse("[]")).size() == 1);
}

TEST_CASE("expansion to standard Young tableaux") {
  const SkewShape column = SkewShape::parse("[1,1]");
  const auto column_sdt = enumerate_sdt(column);
  REQUIRE(column_sdt.size() == 1);
  CHECK(expand_to_syt(column_sdt[0]).labels() == std::vector<int>{1, 2});

  const auto square = enumerate_sdt(SkewShape::parse("[2,2]"));
  CHECK(expand_to_syt(square[0]).labels() == std::vector<int>{1, 2, 3, 4});  // horizontals
  CHECK(expand_to_syt(square[1]).labels() == std::vector<int>{1, 3, 2, 4});  // verticals
}

TEST_CASE("domino sign via the expanded reading word") {
  const auto square = enumerate_sdt(SkewShape::parse("[2,2]"));
  CHECK(sign_domino(square[0]) == 1);
  CHECK(sign_domino(square[1]) == -1);
  const auto hook = enumerate_sdt(SkewShape::parse("[2,1,1]"));
  CHECK(sign_domino(hook[0]) == 1);
}

TEST_CASE("vertical counts") {
  const auto square = enumerate_sdt(SkewShape::parse("[2,2]"));
  CHECK(vertical_count(square[0]) == 0);
  CHECK(vertical_count(square[1]) == 2);
  const auto column = enumerate_sdt(SkewShape::parse("[1,1]"));
  CHECK(vertical_count(column[0]) == 1);
}

TEST_CASE("nice and bad vertical dominoes") {
  const auto square = enumerate_sdt(SkewShape::parse("[2,2]"));
  CHECK(nice_and_bad_counts(square[1]) == std::pair<int, int>{1, 1});
  CHECK(nice_and_bad_counts(square[0]) == std::pair<int, int>{0, 0});
  const auto column = enumerate_sdt(SkewShape::parse("[1,1]"));
  CHECK(nice_and_bad_counts(column[0]) == std::pair<int, int>{0, 1});
}

TEST_CASE("nice test follows the bottom row of the inner partition") {
  // Column 2 vertical over inner [1,1]: bottom row 2 has inner part 1, and
  // 2 - 1 is odd, so the domino is bad; over inner [1] the bottom row reads 0
  // and 2 - 0 is even, so it is nice.
  const Domino v{1, 2, Orientation::vertical};
  CHECK_FALSE(is_nice(v, Partition::parse("[1,1]")));
  CHECK(is_nice(v, Partition::parse("[1]")));
}

TEST_CASE("spin sums over standard domino tableaux") {
  CHECK(spin_sum(SkewShape::parse("[2,2]")) == GaussianInt{0, 0});
  CHECK(spin_sum(SkewShape::parse("[2,1,1]")) == GaussianInt{0, 1});
  CHECK(spin_sum(SkewShape::parse("[1]")) == GaussianInt{0, 0});
  CHECK(spin_sum(SkewShape::parse("[]")) == GaussianInt{1, 0});
}

TEST_CASE("gaussian unit powers") {
  CHECK(GaussianInt::unit_power(0) == GaussianInt{1, 0});
  CHECK(GaussianInt::unit_power(1) == GaussianInt{0, 1});
  CHECK(GaussianInt::unit_power(2) == GaussianInt{-1, 0});
  CHECK(GaussianInt::unit_power(3) == GaussianInt{0, -1});
  CHECK(GaussianInt::unit_power(-1) == GaussianInt{0, -1});
  CHECK(GaussianInt::unit_power(-2) == GaussianInt{-1, 0});
  CHECK(GaussianInt{1, 2} * GaussianInt{3, -1} == GaussianInt{5, 5});
}

TEST_CASE("tiling enumeration on small shapes") {
  CHECK(enumerate_tilings(SkewShape::parse("[2,2]")).size() == 2);
  CHECK(enumerate_tilings(SkewShape::parse("[3,3]")).size() == 3);
  CHECK(enumerate_tilings(SkewShape::parse("[2,1]")).empty());
  CHECK(enumerate_tilings(SkewShape::parse("[3,2,1]")).empty());  // staircase is untileable
  CHECK(enumerate_tilings(SkewShape::parse("[]")).size() == 1);
}

TEST_CASE("tiling enumeration matches the matching-count oracle") {
  for (const SkewShape& shape : testing::all_skew_shapes(8)) {
    const auto tilings = enumerate_tilings(shape);
    CHECK(static_cast<long long>(tilings.size()) == testing::oracle_tiling_count(shape));
    std::set<std::vector<Domino>> unique;
    for (const DominoTiling& t : tilings) CHECK(unique.insert(t.dominoes()).second);
  }
}

TEST_CASE("first tiling agrees with enumeration") {
  for (const SkewShape& shape : testing::all_skew_shapes(7)) {
    const auto tilings = enumerate_tilings(shape);
    const auto first = first_tiling(shape);
    CHECK(first.has_value() == !tilings.empty());
    if (first) CHECK(*first == tilings.front());
  }
}

TEST_CASE("flip neighbors on small tilings") {
  const auto square = enumerate_tilings(SkewShape::parse("[2,2]"));
  REQUIRE(square.size() == 2);
  const auto& horizontals = square[0];
  const auto& verticals = square[1];
  CHECK(flip_neighbors(verticals) == std::vector<DominoTiling>{horizontals});
  CHECK(flip_neighbors(horizontals) == std::vector<DominoTiling>{verticals});

  const auto hook = enumerate_tilings(SkewShape::parse("[2,1,1]"));
  REQUIRE(hook.size() == 1);
  CHECK(flip_neighbors(hook[0]).empty());

  const auto empty = enumerate_tilings(SkewShape::parse("[]"));
  CHECK(flip_neighbors(empty[0]).empty());
}

TEST_CASE("flip graph summaries") {
  const FlipGraphSummary square = flip_graph_summary(SkewShape::parse("[2,2]"));
  CHECK(square.tiling_count == 2);
  CHECK(square.edge_count == 1);
  CHECK(square.component_count == 1);
  CHECK(square.connected);

  const FlipGraphSummary two_by_three = flip_graph_summary(SkewShape::parse("[3,3]"));
  CHECK(two_by_three.tiling_count == 3);
  CHECK(two_by_three.edge_count == 2);
  CHECK(two_by_three.connected);

  const FlipGraphSummary hook = flip_graph_summary(SkewShape::parse("[2,1,1]"));
  CHECK(hook.tiling_count == 1);
  CHECK(hook.edge_count == 0);
  CHECK(hook.connected);

  CHECK_THROWS_AS(flip_graph_summary(SkewShape::parse("[1]")), NoTiling);
  CHECK_THROWS_AS(flip_graph_summary(SkewShape::parse("[3,2,1]")), NoTiling);
}

TEST_CASE("shape invariants on small shapes") {
  const ShapeInvariants square = shape_invariants(SkewShape::parse("[2,2]"));
  CHECK(square.v_prime == 0);
  CHECK(square.v_outer == 2);
  CHECK(square.v_inner == 0);

  const ShapeInvariants column = shape_invariants(SkewShape::parse("[1,1]"));
  CHECK(column.v_prime == -1);
  CHECK(column.v_outer == 1);
  CHECK(column.vertical_parity == 1);

  const ShapeInvariants hook = shape_invariants(SkewShape::parse("[2,1,1]"));
  CHECK(hook.v_prime == -1);
  CHECK(hook.v_outer == 1);

  CHECK_THROWS_AS(shape_invariants(SkewShape::parse("[1]")), NoTiling);
}

TEST_CASE("nice minus bad and vertical parity are tiling independent") {
  for (const SkewShape& shape : testing::all_skew_shapes(8)) {
    const auto tilings = enumerate_tilings(shape);
    if (tilings.empty()) continue;
    const int reference = nice_minus_bad(tilings.front());
    auto parity = [](const DominoTiling& t) {
      int verticals = 0;
      for (const Domino& d : t.dominoes())
        if (d.orientation == Orientation::vertical) ++verticals;
      return verticals % 2;
    };
    const int reference_parity = parity(tilings.front());
    for (const DominoTiling& t : tilings) {
      CHECK(nice_minus_bad(t) == reference);
      CHECK(parity(t) == reference_parity);
    }
    const GaussianInt total = spin_sum(shape);
    CHECK((total.re == 0 || total.im == 0));
  }
}

TEST_CASE("nice plus bad equals the vertical count") {
  for (const SkewShape& shape : testing::all_skew_shapes(8)) {
    if (shape.size() % 2 != 0) continue;
    for_each_sdt(shape, [&](const StandardDominoTableau& d) {
      const auto [nice, bad] = nice_and_bad_counts(d);
      CHECK(nice + bad == vertical_count(d));
    });
  }
}

TEST_CASE("chain condition is equivalent to a valid expanded filling") {
  for (const SkewShape& shape : testing::all_skew_shapes(10)) {
    if (shape.size() % 2 != 0) continue;
    for (const DominoTiling& tiling : enumerate_tilings(shape)) {
      std::vector<Domino> labeled = tiling.dominoes();
      std::sort(labeled.begin(), labeled.end());
      do {
        const bool chain_ok = StandardDominoTableau::is_valid_chain(shape, labeled);
        const bool filling_ok =
            StandardYoungTableau::is_valid_filling(shape, expansion_labels(shape, labeled));
        CHECK(chain_ok == filling_ok);
      } while (std::next_permutation(labeled.begin(), labeled.end()));
    }
  }
}

TEST_CASE("enumerated chains are exactly the valid labelings of tilings") {
  for (const SkewShape& shape : testing::all_skew_shapes(8)) {
    if (shape.size() % 2 != 0) continue;
    std::set<std::vector<Domino>> from_chains;
    for_each_sdt(shape, [&](const StandardDominoTableau& d) {
      CHECK(from_chains.insert(d.dominoes()).second);
    });
    std::set<std::vector<Domino>> from_labelings;
    for (const DominoTiling& tiling : enumerate_tilings(shape)) {
      std::vector<Domino> labeled = tiling.dominoes();
      std::sort(labeled.begin(), labeled.end());
      do {
        if (StandardDominoTableau::is_valid_chain(shape, labeled)) from_labelings.insert(labeled);
      } while (std::next_permutation(labeled.begin(), labeled.end()));
    }
    CHECK(from_chains == from_labelings);
  }
}
