#include <doctest.h>

#include <algorithm>
#include <set>

#include "skewsign/errors.hpp"
#include "skewsign/partition.hpp"
#include "skewsign/skew_shape.hpp"
#include "test_support.hpp"

using namespace skewsign;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("partition parsing accepts the canonical bracketed form") {
  CHECK(P("[]").parts().empty());
  CHECK(P("[3,2,1]").parts() == std::vector<int>{3, 2, 1});
  CHECK(P("[7]").size() == 7);
  CHECK(P("[2,2,2]").rows() == 3);
}

TEST_CASE("partition parsing rejects malformed input") {
  CHECK_THROWS_AS(P("[2,3]"), MalformedPartition);
  CHECK_THROWS_AS(P("[0]"), MalformedPartition);
  CHECK_THROWS_AS(P("3,2"), MalformedPartition);
  CHECK_THROWS_AS(P("[3,]"), MalformedPartition);
  CHECK_THROWS_AS(P("[,3]"), MalformedPartition);
  CHECK_THROWS_AS(P("[3, 2]"), MalformedPartition);
  CHECK_THROWS_AS(P("[-1]"), MalformedPartition);
  CHECK_THROWS_AS(P("[03]"), MalformedPartition);
  CHECK_THROWS_AS(P(""), MalformedPartition);
  CHECK_THROWS_AS(P("[1,2,1]"), MalformedPartition);
}

TEST_CASE("constructor strips trailing zeros and validates monotonicity") {
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition(std::vector<int>{}) == Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), MalformedPartition);
  CHECK_THROWS_AS(Partition({3, -1}), MalformedPartition);
  CHECK_THROWS_AS(Partition({3, 0, 2}), MalformedPartition);
}

TEST_CASE("to_string round trips the canonical form") {
  for (const char* text : {"[]", "[1]", "[4,4,2,2]", "[3,2,1]", "[10,1]"})
    CHECK(P(text).to_string() == text);
}

TEST_CASE("v statistic sums the even-indexed parts") {
  CHECK(v_statistic(Partition{}) == 0);
  CHECK(v_statistic(P("[3,2,1]")) == 2);
  CHECK(v_statistic(P("[4,4,2,2]")) == 6);
  CHECK(v_statistic(P("[5]")) == 0);
  CHECK(v_statistic(P("[5,5]")) == 5);
}

TEST_CASE("v statistic changes by one exactly for even-row cell additions") {
  for (int size = 0; size <= 8; ++size) {
    for (const Partition& p : partitions_of(size)) {
      for (int r = 1; r <= p.rows() + 1; ++r) {
        if (r > 1 && p.part(r) + 1 > p.part(r - 1)) continue;  // addition would break monotonicity
        std::vector<int> parts(p.parts());
        if (r > p.rows()) parts.push_back(0);
        parts[static_cast<std::size_t>(r) - 1] += 1;
        const Partition grown(parts);
        if (r % 2 == 0)
          CHECK(v_statistic(grown) == v_statistic(p) + 1);
        else
          CHECK(v_statistic(grown) == v_statistic(p));
      }
    }
  }
}

TEST_CASE("containment basics") {
  CHECK(P("[3,2]").contains(P("[2,1]")));
  CHECK_FALSE(P("[2,2]").contains(P("[3]")));
  for (int size = 0; size <= 6; ++size) {
    for (const Partition& p : partitions_of(size)) {
      CHECK(p.contains(p));
      CHECK(p.contains(Partition{}));
    }
  }
}

TEST_CASE("outer extensions: fixed small cases") {
  const auto got = enumerate_outer_extensions(P("[1]"), 2, 3);
  const std::vector<Partition> want{P("[3]"), P("[2,1]"), P("[1,1,1]")};
  CHECK(got == want);

  CHECK(enumerate_outer_extensions(P("[2]"), 0, 1) == std::vector<Partition>{P("[2]")});
  CHECK(enumerate_outer_extensions(Partition{}, 2, 2) ==
        std::vector<Partition>{P("[2]"), P("[1,1]")});
  CHECK_THROWS_AS(enumerate_outer_extensions(P("[2,1]"), 1, 1), BoundTooSmall);
}

TEST_CASE("outer extensions agree with a naive generate-and-filter oracle") {
  for (int alpha_size = 0; alpha_size <= 4; ++alpha_size) {
    for (const Partition& alpha : partitions_of(alpha_size)) {
      for (int n = 0; n <= 4; ++n) {
        const int bound = alpha.rows() + n;
        const auto got = enumerate_outer_extensions(alpha, n, bound);

        std::set<std::vector<int>> expected;
        for (const auto& parts : testing::naive_partitions(alpha_size + n)) {
          const Partition lambda(parts);
          if (lambda.contains(alpha) && lambda.rows() <= bound) expected.insert(lambda.parts());
        }
        std::set<std::vector<int>> seen;
        for (const Partition& lambda : got) {
          CHECK(lambda.contains(alpha));
          CHECK(lambda.size() == alpha.size() + n);
          CHECK(seen.insert(lambda.parts()).second);  // no duplicates
        }
        CHECK(seen == expected);
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const Partition& a, const Partition& b) { return a > b; }));
      }
    }
  }
}

TEST_CASE("inner restrictions: fixed small cases") {
  CHECK(enumerate_inner_restrictions(Partition{}, 2).empty());
  CHECK(enumerate_inner_restrictions(P("[2]"), 2) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_inner_restrictions(P("[2,1]"), 1) ==
        std::vector<Partition>{P("[2]"), P("[1,1]")});
  CHECK(enumerate_inner_restrictions(P("[3,1]"), 5).empty());
}

TEST_CASE("inner restrictions of zero cells give back the partition itself") {
  for (int size = 0; size <= 6; ++size)
    for (const Partition& alpha : partitions_of(size))
      CHECK(enumerate_inner_restrictions(alpha, 0) == std::vector<Partition>{alpha});
}

TEST_CASE("inner restrictions agree with a naive generate-and-filter oracle") {
  for (int alpha_size = 0; alpha_size <= 6; ++alpha_size) {
    for (const Partition& alpha : partitions_of(alpha_size)) {
      for (int n = 0; n <= alpha_size; ++n) {
        std::set<std::vector<int>> expected;
        for (const auto& parts : testing::naive_partitions(alpha_size - n)) {
          const Partition mu(parts);
          if (alpha.contains(mu)) expected.insert(mu.parts());
        }
        std::set<std::vector<int>> seen;
        for (const Partition& mu : enumerate_inner_restrictions(alpha, n))
          CHECK(seen.insert(mu.parts()).second);
        CHECK(seen == expected);
      }
    }
  }
}

TEST_CASE("rowwise max and min stay partitions and bracket their arguments") {
  for (const Partition& a : partitions_of(4)) {
    for (const Partition& b : partitions_of(3)) {
      const Partition hi = rowwise_max(a, b);
      const Partition lo = rowwise_min(a, b);
      CHECK(hi.contains(a));
      CHECK(hi.contains(b));
      CHECK(a.contains(lo));
      CHECK(b.contains(lo));
    }
  }
}

TEST_CASE("skew shape construction and cells") {
  const SkewShape shape(P("[3,2]"), P("[1]"));
  CHECK(shape.size() == 4);
  CHECK(shape.to_string() == "[3,2]/[1]");
  CHECK(shape.cells() == std::vector<Cell>{{1, 2}, {1, 3}, {2, 1}, {2, 2}});
  CHECK(shape.in_shape(1, 2));
  CHECK_FALSE(shape.in_shape(1, 1));
  CHECK_FALSE(shape.in_shape(3, 1));
  CHECK_THROWS_AS(SkewShape(P("[2,2]"), P("[3]")), InvalidShape);
}

TEST_CASE("skew shape parsing") {
  CHECK(SkewShape::parse("[3,2]/[1]").to_string() == "[3,2]/[1]");
  CHECK(SkewShape::parse("[2,1]").to_string() == "[2,1]/[]");
  CHECK(SkewShape::parse("[]/[]").size() == 0);
  CHECK_THROWS_AS(SkewShape::parse("[1]/[2]"), InvalidShape);
  CHECK_THROWS_AS(SkewShape::parse("[2,3]/[]"), MalformedPartition);
}

TEST_CASE("cell indexer matches the row-major cell list") {
  for (const SkewShape& shape : testing::all_skew_shapes(6)) {
    const CellIndexer idx(shape);
    const auto cells = shape.cells();
    CHECK(idx.count() == static_cast<int>(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i)
      CHECK(idx.index(cells[i].row, cells[i].col) == static_cast<int>(i));
    CHECK(idx.index(0, 1) == -1);
    CHECK(idx.index(1, 0) == -1);
  }
}
