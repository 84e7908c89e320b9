#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kschur/classical.hpp"
#include "kschur/enumeration.hpp"
#include "kschur/ktableau.hpp"
#include "test_support.hpp"

using namespace kschur;

TEST_CASE("the three tableaux of a known core shape") {
  const Partition mu({3, 3, 2, 1});  // bounded partition of core (8,5,2,1)
  const std::vector<int> weight{1, 3, 1, 2, 1, 1};
  const auto tableaux = enumerate_k_tableaux(mu, weight, 3);
  REQUIRE(tableaux.size() == 3);
  CHECK(k_kostka(mu, weight, 3) == 3);

  std::set<std::vector<std::vector<int>>> got;
  for (const KTableau& t : tableaux) {
    CHECK(t.shape.shape() == Partition({8, 5, 2, 1}));
    got.insert(t.rows);
  }
  // Rows listed bottom-up.
  const std::set<std::vector<std::vector<int>>> expected{
      {{1, 2, 2, 2, 3, 4, 4, 6}, {2, 3, 4, 4, 6}, {4, 6}, {5}},
      {{1, 2, 2, 2, 3, 4, 4, 5}, {2, 3, 4, 4, 5}, {4, 5}, {6}},
      {{1, 2, 2, 2, 4, 4, 5, 6}, {2, 4, 4, 5, 6}, {3, 6}, {4}}};
  CHECK(got == expected);
}

TEST_CASE("tableau counts match enumeration, also for compositions") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n)
      for (const Partition& mu : partitions_of(n, k))
        for (const Partition& alpha : partitions_of(n)) {
          std::vector<int> weight = alpha.parts();
          std::sort(weight.begin(), weight.end());
          do {
            CHECK(k_kostka(mu, weight, k) ==
                  static_cast<std::int64_t>(
                      enumerate_k_tableaux(mu, weight, k).size()));
          } while (std::next_permutation(weight.begin(), weight.end()));
        }
  CHECK_THROWS_AS(k_kostka(Partition({3}), {3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(k_kostka(Partition({2}), {1}, 2), std::invalid_argument);
}

TEST_CASE("large k degenerates to classical Kostka numbers") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const Partition& alpha : partitions_of(n))
        for (int k : {n, n + 1})
          CHECK(k_kostka(mu, alpha.parts(), k) ==
                test_support::brute_ssyt_count(mu, alpha.parts()));
}

TEST_CASE("tableau count matrix") {
  const KMatrix m = k_kostka_matrix(2, 3);
  REQUIRE(m.index.size() == 2);
  CHECK(m.index[0] == Partition({2, 1}));
  CHECK(m.index[1] == Partition({1, 1, 1}));
  CHECK(m.values[0][0] == 1);
  CHECK(m.values[1][1] == 1);
  CHECK(m.values[1][0] == 0);
  CHECK(m.position(Partition({1, 1, 1})) == 1);
  CHECK_THROWS_AS(m.position(Partition({3})), std::invalid_argument);

  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n) {
      const KMatrix km = k_kostka_matrix(k, n);
      for (std::size_t i = 0; i < km.index.size(); ++i) {
        CHECK(km.values[i][i] == 1);
        for (std::size_t j = 0; j < i; ++j) CHECK(km.values[i][j] == 0);
      }
    }
}

TEST_CASE("h expansion by inverting tableau counts") {
  CHECK(h_expansion_via_kostka(Partition({1, 1}), 1) ==
        LinComb::unit(Basis::h, Partition({1, 1})));

  LinComb s11(Basis::h);
  s11.add_term(Partition({1, 1}), 1);
  s11.add_term(Partition({2}), -1);
  CHECK(h_expansion_via_kostka(Partition({1, 1}), 2) == s11);

  // With k >= degree the expansion is the classical one.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n))
      CHECK(h_expansion_via_kostka(lambda, n) ==
            classical::schur_in_h(lambda));

  CHECK_THROWS_AS(h_expansion_via_kostka(Partition({3}), 2),
                  std::invalid_argument);
}

TEST_CASE("tableau count cache round trip and tamper recovery") {
  namespace fs = std::filesystem;
  const fs::path path =
      fs::temp_directory_path() / "kschur_cache_test.json";
  fs::remove(path);

  const KMatrix fresh = k_kostka_matrix(3, 5);
  {
    KMatrixCache cache(path);
    const KMatrix& got = cache.get(3, 5);
    CHECK(got.values == fresh.values);
    cache.flush();
  }
  REQUIRE(fs::exists(path));
  {
    KMatrixCache cache(path);
    CHECK(cache.get(3, 5).values == fresh.values);
  }

  // A tampered value must fail its checksum and be recomputed.
  {
    std::ifstream in(path);
    nlohmann::json doc;
    in >> doc;
    doc["entries"][0]["values"][0][0] = 99;
    std::ofstream out(path);
    out << doc.dump();
  }
  {
    KMatrixCache cache(path);
    CHECK(cache.get(3, 5).values == fresh.values);
  }

  // A file that is not JSON at all behaves as an empty cache.
  {
    std::ofstream out(path);
    out << "not json";
  }
  {
    KMatrixCache cache(path);
    CHECK(cache.get(3, 5).values == fresh.values);
  }
  fs::remove(path);
}
