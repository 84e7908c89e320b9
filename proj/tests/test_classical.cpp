#include <stdexcept>

#include "doctest.h"
#include "kschur/classical.hpp"
#include "kschur/enumeration.hpp"
#include "test_support.hpp"

using namespace kschur;

TEST_CASE("classical Pieri products") {
  LinComb expected(Basis::schur);
  for (const char* t : {"4,1", "3,2", "3,1,1", "2,2,1"})
    expected.add_term(Partition::parse(t), 1);
  CHECK(classical::pieri_h(2, Partition({2, 1})) == expected);

  CHECK(classical::pieri_h(3, Partition()) ==
        LinComb::unit(Basis::schur, Partition({3})));
  CHECK(classical::pieri_h(0, Partition({2, 1})) ==
        LinComb::unit(Basis::schur, Partition({2, 1})));

  // Against the strip definition.
  for (const Partition& lambda : partitions_of(5))
    for (int ell = 0; ell <= 3; ++ell) {
      LinComb strips(Basis::schur);
      for (const Partition& mu : partitions_of(5 + ell))
        if (mu.contains(lambda) &&
            test_support::brute_horizontal_strip(mu, lambda))
          strips.add_term(mu, 1);
      CHECK(classical::pieri_h(ell, lambda) == strips);
    }
}

TEST_CASE("classical e-perp skewing") {
  LinComb expected(Basis::schur);
  expected.add_term(Partition({2}), 1);
  expected.add_term(Partition({1, 1}), 1);
  CHECK(classical::e_perp(1, Partition({2, 1})) == expected);
  CHECK(classical::e_perp(2, Partition({2, 1})) ==
        LinComb::unit(Basis::schur, Partition({1})));
  CHECK(classical::e_perp(0, Partition({2, 1})) ==
        LinComb::unit(Basis::schur, Partition({2, 1})));
  CHECK(classical::e_perp(1, Partition()).is_zero());

  for (const Partition& lambda : partitions_of(6))
    for (int m = 0; m <= 4; ++m) {
      LinComb strips(Basis::schur);
      for (const Partition& mu : partitions_of(6 - m))
        if (lambda.contains(mu) &&
            test_support::brute_vertical_strip(lambda, mu))
          strips.add_term(mu, 1);
      CHECK(classical::e_perp(m, lambda) == strips);
    }
}

TEST_CASE("Kostka numbers count semistandard fillings") {
  CHECK(classical::kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(classical::kostka(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(classical::kostka(Partition({1, 1, 1}), Partition({3})) == 0);
  for (int n = 1; n <= 6; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const Partition& alpha : partitions_of(n))
        CHECK(classical::kostka(mu, alpha) ==
              test_support::brute_ssyt_count(mu, alpha.parts()));
}

TEST_CASE("Schur functions in the h basis") {
  LinComb s21(Basis::h);
  s21.add_term(Partition({2, 1}), 1);
  s21.add_term(Partition({3}), -1);
  CHECK(classical::schur_in_h(Partition({2, 1})) == s21);

  LinComb s11(Basis::h);
  s11.add_term(Partition({1, 1}), 1);
  s11.add_term(Partition({2}), -1);
  CHECK(classical::schur_in_h(Partition({1, 1})) == s11);

  LinComb s22(Basis::h);
  s22.add_term(Partition({2, 2}), 1);
  s22.add_term(Partition({3, 1}), -1);
  CHECK(classical::schur_in_h(Partition({2, 2})) == s22);

  CHECK(classical::schur_in_h(Partition()) ==
        LinComb::unit(Basis::h, Partition()));

  // Substituting h_mu = sum_nu K_{nu mu} s_nu back in returns h_mu.
  for (int n = 1; n <= 6; ++n)
    for (const Partition& mu : partitions_of(n)) {
      LinComb back(Basis::h);
      for (const Partition& nu : partitions_of(n)) {
        const std::int64_t c = classical::kostka(nu, mu);
        if (c != 0) back += classical::schur_in_h(nu) * c;
      }
      CHECK(back == LinComb::unit(Basis::h, mu));
    }
}

TEST_CASE("Bernstein operators build Schur functions") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      LinComb f = LinComb::unit(Basis::schur, Partition());
      for (int i = lambda.length(); i >= 1; --i)
        f = classical::bernstein(lambda.part(i), f);
      CHECK(f == LinComb::unit(Basis::schur, lambda));
    }
  CHECK_THROWS_AS(
      classical::bernstein(-1, LinComb::unit(Basis::schur, Partition())),
      std::invalid_argument);
}
