#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kschur/core.hpp"
#include "kschur/enumeration.hpp"
#include "kschur/partition.hpp"

using namespace kschur;

namespace {

bool is_core_shape(const Partition& p, int k) {
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      if (p.hook_length(i, j) == k + 1) return false;
  return true;
}

}  // namespace

TEST_CASE("residues") {
  CHECK(residue(1, 1, 3) == 0);
  CHECK(residue(1, 2, 3) == 1);
  CHECK(residue(1, 4, 3) == 3);
  CHECK(residue(1, 5, 3) == 0);
  CHECK(residue(2, 1, 3) == 3);
  CHECK(residue(3, 1, 3) == 2);
  CHECK(residue(1, 1, 4) == 0);
  CHECK(residue(2, 1, 4) == 4);
  CHECK(residue(1, 6, 4) == 0);
}

TEST_CASE("core validation") {
  CHECK_NOTHROW(Core(Partition({3, 1, 1}), 3));
  CHECK_NOTHROW(Core(Partition({2, 2}), 3));
  CHECK_NOTHROW(Core(Partition(), 1));
  CHECK_THROWS_AS(Core(Partition({4}), 3), std::invalid_argument);
  CHECK_THROWS_AS(Core(Partition({2, 1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(Core(Partition({1}), 0), std::invalid_argument);
}

TEST_CASE("bounded partition to core and back") {
  CHECK(Core::from_bounded(Partition({4, 3, 2, 2, 1, 1}), 4).shape() ==
        Partition({9, 5, 3, 2, 1, 1}));
  CHECK(Core::from_bounded(Partition({2, 1, 1}), 3).shape() ==
        Partition({3, 1, 1}));
  CHECK(Core::from_bounded(Partition({2, 2, 2, 1}), 4).shape() ==
        Partition({3, 2, 2, 1}));
  CHECK(Core::from_bounded(Partition({4, 3, 2, 2, 2, 1}), 6).shape() ==
        Partition({6, 4, 2, 2, 2, 1}));
  CHECK(Core::from_bounded(Partition({4, 4, 3, 3, 2, 1, 1}), 6).shape() ==
        Partition({7, 6, 4, 3, 2, 1, 1}));
  CHECK(Core::from_bounded(Partition({4, 4, 3, 2, 2, 1}), 6).shape() ==
        Partition({6, 6, 3, 2, 2, 1}));
  // With k at least the degree the core is the partition itself.
  CHECK(Core::from_bounded(Partition({2, 1}), 9).shape() == Partition({2, 1}));
  CHECK(Core::from_bounded(Partition(), 3).shape() == Partition());
  CHECK_THROWS_AS(Core::from_bounded(Partition({4}), 3),
                  std::invalid_argument);

  CHECK(Core(Partition({8, 5, 2, 1}), 3).to_bounded() ==
        Partition({3, 3, 2, 1}));
  CHECK(Core(Partition({9, 5, 3, 2, 1, 1}), 4).to_bounded() ==
        Partition({4, 3, 2, 2, 1, 1}));

  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const Partition& lambda : partitions_of(n, k)) {
        const Core c = Core::from_bounded(lambda, k);
        CHECK(c.to_bounded() == lambda);
        CHECK(c.bounded_cells() == n);
        // The rows above the first row form the core of the tail.
        CHECK(c.tail() == Core::from_bounded(lambda.tail(), k));
      }

  // The inverse direction: every core of bounded size comes back.
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 8; ++n)
      for (const Partition& shape : partitions_of(n))
        if (is_core_shape(shape, k)) {
          const Core c(shape, k);
          CHECK(Core::from_bounded(c.to_bounded(), k) == c);
        }
}

TEST_CASE("residue sets") {
  const ResidueSet s(8, {0, 1, 3, 4, 6, 8});
  CHECK(s.size() == 6);
  CHECK(s.contains(0));
  CHECK(s.contains(9));   // reduced mod 9
  CHECK(s.contains(-1));  // = 8
  CHECK(!s.contains(2));
  CHECK(s.elements() == std::vector<int>{0, 1, 3, 4, 6, 8});
  CHECK(s.to_text() == "{0,1,3,4,6,8}");
  CHECK(s.cyclic_components() ==
        std::vector<std::pair<int, int>>{{3, 4}, {6, 6}, {8, 1}});
  CHECK(s.with(2).size() == 7);
  CHECK(s.without(3).size() == 5);
  CHECK(s == ResidueSet::from_mask(8, s.mask()));

  CHECK(!ResidueSet(2, {0, 1, 2}).proper());
  CHECK_THROWS_AS(ResidueSet(2, {0, 1, 2}).cyclic_components(),
                  std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet::from_mask(2, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(0), std::invalid_argument);
  CHECK(ResidueSet(4).empty());
}

TEST_CASE("single residue action") {
  // The word sigma_2 sigma_3 sigma_1 sigma_0 (rightmost first) grows
  // the empty shape into the 4-core (3,1,1).
  Core c(Partition(), 3);
  for (int i : {0, 1, 3, 2}) {
    auto moved = sigma(c, i);
    REQUIRE(moved.has_value());
    c = *moved;
  }
  CHECK(c.shape() == Partition({3, 1, 1}));

  const Core one(Partition({1}), 3);
  CHECK(sigma(one, 0)->shape() == Partition());
  CHECK(sigma(one, 1)->shape() == Partition({2}));
  CHECK(sigma(one, 3)->shape() == Partition({1, 1}));
  CHECK(!sigma(one, 2).has_value());

  // Where defined, the action is an involution and preserves coreness.
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const Partition& shape : partitions_of(n))
        if (is_core_shape(shape, k)) {
          const Core core(shape, k);
          for (int i = 0; i <= k; ++i) {
            auto moved = sigma(core, i);
            if (!moved) continue;
            CHECK(is_core_shape(moved->shape(), k));
            auto back = sigma(*moved, i);
            REQUIRE(back.has_value());
            CHECK(*back == core);
          }
        }
}

TEST_CASE("residue set action walks each cyclic run upward") {
  const Core start(Partition({6, 4, 2, 2, 2, 1}), 6);
  const auto moved = sigma(start, ResidueSet(6, {6, 0, 1, 2}));
  REQUIRE(moved.has_value());
  CHECK(moved->shape() == Partition({10, 4, 4, 2, 2, 1, 1}));
  CHECK(moved->to_bounded() == Partition({6, 3, 3, 2, 2, 1, 1}));

  // The same walk step by step.
  Core c = start;
  for (int i : {6, 0, 1, 2}) c = *sigma(c, i);
  CHECK(c == *moved);

  // The empty set fixes everything.
  CHECK(*sigma(start, ResidueSet(6)) == start);
  CHECK_THROWS_AS(sigma(start, ResidueSet(5, {1})), std::invalid_argument);
}

TEST_CASE("transpositions") {
  const Core c(Partition({3, 1, 1}), 3);
  const auto t = transposition(c, 1, 3);
  REQUIRE(t.has_value());
  CHECK(t->shape() == Partition({1, 1, 1}));
  // t_{1,3} = sigma_1 sigma_2 sigma_1.
  Core byhand = c;
  for (int i : {1, 2, 1}) byhand = *sigma(byhand, i);
  CHECK(*t == byhand);
  // Where defined on both sides, the transposition is an involution.
  const auto back = transposition(*t, 1, 3);
  REQUIRE(back.has_value());
  CHECK(*back == c);
  // Residues reduce mod k+1.
  CHECK(*transposition(c, 1, 7) == *t);
  CHECK_THROWS_AS(transposition(c, 2, 6), std::invalid_argument);
}

TEST_CASE("strong covers and ribbon decomposition") {
  const Core top(Partition({6, 6, 3, 3, 3, 1, 1, 1, 1}), 5);
  const Core mid(Partition({6, 4, 3, 3, 1, 1, 1, 1, 1}), 5);
  const Core bot(Partition({5, 4, 3, 2, 1, 1, 1, 1, 1}), 5);
  CHECK(is_strong_cover(mid, top));
  CHECK(is_strong_cover(bot, mid));
  CHECK(!is_strong_cover(bot, top));
  CHECK(!is_strong_cover(top, mid));

  const auto ribbons = ribbon_components(mid, top);
  REQUIRE(ribbons.size() == 2);
  CHECK(ribbons[0].cells == std::vector<Cell>{{2, 5}, {2, 6}});
  CHECK(ribbons[1].cells == std::vector<Cell>{{5, 2}, {5, 3}});
  CHECK(ribbons[0].head == Cell{2, 6});
  CHECK(ribbons[1].head == Cell{5, 3});
  CHECK(ribbons[0].horizontal());
  CHECK(ribbons[1].horizontal());
  CHECK(ribbons[0].lowest_row() == 2);
  CHECK(ribbons[1].lowest_row() == 5);
  CHECK(ribbons[0].residue_hi == ribbons[1].residue_hi);
  // Head diagonals are consecutive multiples of k+1 apart.
  CHECK((ribbons[1].head.col - ribbons[1].head.row) + 6 ==
        ribbons[0].head.col - ribbons[0].head.row);

  CHECK_THROWS_AS(ribbon_components(bot, top), std::invalid_argument);

  // Every strong cover reached by a transposition decomposes cleanly.
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n <= 8; ++n)
      for (const Partition& shape : partitions_of(n))
        if (is_core_shape(shape, k)) {
          const Core gamma(shape, k);
          for (int a = 0; a <= k; ++a)
            for (int d = 1; d <= k; ++d) {
              const auto moved = transposition(gamma, a, a + d);
              if (!moved || !is_strong_cover(*moved, gamma)) continue;
              const auto parts = ribbon_components(*moved, gamma);
              CHECK(!parts.empty());
              int cells = 0;
              for (const Ribbon& r : parts)
                cells += static_cast<int>(r.cells.size());
              CHECK(cells == gamma.degree() - moved->degree());
            }
        }
}
