#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kschur/enumeration.hpp"
#include "kschur/partition.hpp"
#include "test_support.hpp"

using namespace kschur;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("4,3,2,2,1,1").parts() ==
        std::vector<int>{4, 3, 2, 2, 1, 1});
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse(" 3 , 1 ") == Partition({3, 1}));
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition::sorted({1, 3, 2, 0}) == Partition({3, 2, 1}));
  CHECK(Partition().empty());
  CHECK(Partition().degree() == 0);
  CHECK(Partition({4, 2, 1}).degree() == 7);
  CHECK(Partition({4, 2, 1}).length() == 3);

  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3 1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
}

TEST_CASE("part access, text, containment") {
  const Partition p({4, 2, 1});
  CHECK(p.part(1) == 4);
  CHECK(p.part(3) == 1);
  CHECK(p.part(4) == 0);
  CHECK_THROWS_AS(p.part(0), std::invalid_argument);
  CHECK(p.to_text() == "4,2,1");
  CHECK(Partition().to_text() == "");
  CHECK(p.contains_cell(1, 4));
  CHECK(!p.contains_cell(1, 5));
  CHECK(!p.contains_cell(2, 3));
  CHECK(p.contains(Partition({3, 2})));
  CHECK(!p.contains(Partition({3, 3})));
  CHECK(p.tail() == Partition({2, 1}));
  CHECK(Partition().tail() == Partition());
  CHECK(p.prepend(4) == Partition({4, 4, 2, 1}));
  CHECK_THROWS_AS(p.prepend(3), std::invalid_argument);
}

TEST_CASE("conjugate and hooks against cell counting") {
  CHECK(Partition({4, 3, 1}).conjugate() == Partition({3, 2, 2, 1}));
  for (const Partition& p : partitions_of(7)) {
    CHECK(p.conjugate() == test_support::brute_conjugate(p));
    CHECK(p.conjugate().conjugate() == p);
    for (const Cell& c : test_support::all_cells(p))
      CHECK(p.hook_length(c.row, c.col) ==
            test_support::brute_hook(p, c.row, c.col));
  }
  CHECK_THROWS_AS(Partition({2, 1}).hook_length(2, 2), std::invalid_argument);
}

TEST_CASE("hooks of a known diagram") {
  // 6-core (4,3,3,1), rows bottom-up; hook lengths per row.
  const Partition p({4, 3, 3, 1});
  const std::vector<std::vector<int>> expected = {
      {7, 5, 4, 1}, {5, 3, 2}, {4, 2, 1}, {1}};
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      CHECK(p.hook_length(i, j) == expected[i - 1][j - 1]);
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
  CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK(dominates(Partition({2, 2}), Partition({2, 1, 1})));
  CHECK(!dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK(!dominates(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK(dominates(Partition({2, 1}), Partition({2, 1})));
  CHECK(!dominates(Partition({3}), Partition({2})));
}

TEST_CASE("descending lexicographic order refines dominance") {
  for (int n = 0; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      CHECK(PartitionDescLex{}(all[i], all[i + 1]));
    for (const Partition& a : all)
      for (const Partition& b : all)
        if (!(a == b) && dominates(a, b)) CHECK(PartitionDescLex{}(a, b));
  }
}

TEST_CASE("corners and extremal cells") {
  const Partition p({3, 2, 2, 1});
  CHECK(removable_corners(p) ==
        std::vector<Cell>{{1, 3}, {3, 2}, {4, 1}});
  CHECK(addable_corners(p) ==
        std::vector<Cell>{{1, 4}, {2, 3}, {4, 2}, {5, 1}});
  CHECK(extremal_cells(p) ==
        std::vector<Cell>{{1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {4, 1}});
  CHECK(addable_corners(Partition()) == std::vector<Cell>{{1, 1}});
  CHECK(removable_corners(Partition()).empty());

  for (const Partition& q : partitions_of(6)) {
    // Removing a removable corner and adding an addable one both give
    // partitions, and the two corner kinds are disjoint.
    for (const Cell& c : removable_corners(q)) {
      std::vector<int> parts = q.parts();
      parts[c.row - 1] -= 1;
      CHECK_NOTHROW(Partition{parts});
    }
    for (const Cell& c : addable_corners(q)) {
      std::vector<int> parts = q.parts();
      if (c.row > q.length())
        parts.push_back(1);
      else
        parts[c.row - 1] += 1;
      CHECK_NOTHROW(Partition{parts});
    }
  }
}

TEST_CASE("skew shapes and strips") {
  const SkewShape s(Partition({4, 2, 1}), Partition({2, 1}));
  CHECK(s.degree() == 4);
  CHECK(s.cells() == std::vector<Cell>{{1, 3}, {1, 4}, {2, 2}, {3, 1}});
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})),
                  std::invalid_argument);

  for (const Partition& outer : partitions_of(6))
    for (const Partition& inner : partitions_of(4)) {
      if (!outer.contains(inner)) continue;
      const SkewShape skew(outer, inner);
      CHECK(skew.is_horizontal_strip() ==
            test_support::brute_horizontal_strip(outer, inner));
      CHECK(skew.is_vertical_strip() ==
            test_support::brute_vertical_strip(outer, inner));
    }
}
