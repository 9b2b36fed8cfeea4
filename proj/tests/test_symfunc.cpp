#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osctab/oscillating.hpp"
#include "osctab/symfunc.hpp"

using namespace osctab;

namespace {

LaurentPoly mono(std::vector<int> e, std::int64_t c) {
  return LaurentPoly::monomial(std::move(e), c);
}

}  // namespace

TEST_CASE("laurent arithmetic is exact and prunes zeros") {
  LaurentPoly x = LaurentPoly::variable(1, 1, 1);
  LaurentPoly xinv = LaurentPoly::variable(1, 1, -1);
  LaurentPoly p = (x + xinv).pow(2);
  CHECK(p == mono({2}, 1) + mono({0}, 2) + mono({-2}, 1));
  CHECK((p - p).is_zero());
  CHECK(p.coeff({0}) == 2);
  CHECK(p.coeff({5}) == 0);
  CHECK_THROWS_AS(x + LaurentPoly::variable(2, 1, 1), std::invalid_argument);
  CHECK((x * xinv) == LaurentPoly::constant(1, 1));
  CHECK(LaurentPoly(3).pow(0) == LaurentPoly::constant(3, 1));
}

TEST_CASE("schur examples") {
  CHECK(schur(Partition({1}), 2) == mono({1, 0}, 1) + mono({0, 1}, 1));
  CHECK(schur(Partition({2, 1}), 2) == mono({2, 1}, 1) + mono({1, 2}, 1));
  CHECK(schur(Partition({1, 1, 1}), 2).is_zero());
  CHECK(schur(Partition(), 3) == LaurentPoly::constant(3, 1));
}

TEST_CASE("fundamental quasisymmetric examples") {
  CHECK(fundamental_qsym({}, 2, 2) ==
        mono({2, 0}, 1) + mono({1, 1}, 1) + mono({0, 2}, 1));
  CHECK(fundamental_qsym({1}, 2, 2) == mono({1, 1}, 1));
  CHECK(fundamental_qsym({2}, 3, 2) == mono({2, 1}, 1));
  CHECK(fundamental_qsym({}, 0, 2) == LaurentPoly::constant(2, 1));
  CHECK_THROWS_AS(fundamental_qsym({3}, 3, 2), std::invalid_argument);
}

TEST_CASE("symplectic characters") {
  CHECK(symplectic_character(Partition({1}), 1) == mono({1}, 1) + mono({-1}, 1));
  CHECK(symplectic_character(Partition({3}), 1) ==
        mono({3}, 1) + mono({1}, 1) + mono({-1}, 1) + mono({-3}, 1));
  CHECK(symplectic_character(Partition(), 2) == LaurentPoly::constant(2, 1));
  CHECK_THROWS_AS(symplectic_character(Partition({1, 1}), 1),
                  std::invalid_argument);
  // defining character of Sp(4)
  CHECK(symplectic_character(Partition({1}), 2) ==
        mono({1, 0}, 1) + mono({-1, 0}, 1) + mono({0, 1}, 1) + mono({0, -1}, 1));
}

TEST_CASE("frobenius characters, both routes") {
  CHECK(frobenius_via_lr(3, Partition({1}), 1, 3) == schur(Partition({2, 1}), 3));
  CHECK(frobenius_via_descents(3, Partition({1}), 1, 3) ==
        schur(Partition({2, 1}), 3));
  CHECK(frobenius_via_lr(0, Partition(), 1, 1) == LaurentPoly::constant(1, 1));
  CHECK(frobenius_via_lr(2, Partition(), 1, 2) == schur(Partition({1, 1}), 2));
  CHECK(frobenius_via_descents(1, Partition({1}), 2, 4) ==
        fundamental_qsym({}, 1, 4));
}

TEST_CASE("invariant characters") {
  CHECK(invariant_character(2, 1, 2) == schur(Partition({1, 1}), 2));
  CHECK(invariant_character(3, 1, 3).is_zero());
  CHECK(invariant_character(5, 2, 5).is_zero());
  CHECK(invariant_character(4, 1, 4) == schur(Partition({2, 2}), 4));
  CHECK(invariant_character(4, 2, 4) ==
        schur(Partition({2, 2}), 4) + schur(Partition({1, 1, 1, 1}), 4));
}

TEST_CASE("schur equals the SYT descent sum, |mu| <= 6") {
  for (int m = 0; m <= 6; ++m)
    for (const Partition& mu : partitions_of(m))
      for (int k : {2, 3, std::max(m, 1)})
        CHECK(schur_qsym_identity(mu, k));
}

TEST_CASE("schur equals the reverse-lattice-word descent sum, |mu| <= 5") {
  CHECK(eq5_identity(Partition({1}), 1));
  CHECK(eq5_identity(Partition({1}), 4));
  for (int m = 0; m <= 5; ++m)
    for (const Partition& mu : partitions_of(m))
      for (int k : {2, std::max(m, 1)})
        CHECK(eq5_identity(mu, k));
}

TEST_CASE("berele expansion at n=1, r=3 by hand") {
  // (x+x^-1)^3 = sp_3 + 2 sp_1
  LaurentPoly x = LaurentPoly::variable(1, 1, 1);
  LaurentPoly xinv = LaurentPoly::variable(1, 1, -1);
  CHECK((x + xinv).pow(3) ==
        symplectic_character(Partition({3}), 1) +
            symplectic_character(Partition({1}), 1) * LaurentPoly::constant(1, 2));
  CHECK(berele_identity(3, 1));
}

TEST_CASE("berele identity, n <= 2, r <= 5") {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 5; ++r) CHECK(berele_identity(r, n));
}

TEST_CASE("frobenius routes agree, n <= 2, r <= 5, k = r") {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 5; ++r) {
      int k = std::max(r, 1);
      for (int m = r % 2; m <= r; m += 2)
        for (const Partition& mu : partitions_of(m)) {
          if (mu.length() > n) continue;
          CHECK(frobenius_via_lr(r, mu, n, k) ==
                frobenius_via_descents(r, mu, n, k));
        }
    }
}

TEST_CASE("invariant character matches the descent route, n <= 2, r <= 5") {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 5; ++r) {
      int k = std::max(r, 1);
      CHECK(frobenius_via_descents(r, Partition(), n, k) ==
            invariant_character(r, n, k));
    }
}

TEST_CASE("schur expansion by leading-term peeling") {
  auto e1 = schur_expand(schur(Partition({2, 1}), 3));
  REQUIRE(e1.has_value());
  REQUIRE(e1->size() == 1);
  CHECK((*e1)[0] == std::pair{Partition({2, 1}), std::int64_t{1}});

  LaurentPoly mix = schur(Partition({2}), 2) +
                    schur(Partition({1, 1}), 2) * LaurentPoly::constant(2, 3);
  auto e2 = schur_expand(mix);
  REQUIRE(e2.has_value());
  CHECK(*e2 == std::vector{std::pair{Partition({1, 1}), std::int64_t{3}},
                           std::pair{Partition({2}), std::int64_t{1}}});

  CHECK(schur_expand(frobenius_via_lr(3, Partition({1}), 1, 3)) ==
        std::vector{std::pair{Partition({2, 1}), std::int64_t{1}}});

  // not symmetric: x1 alone in two variables
  CHECK(!schur_expand(LaurentPoly::variable(2, 1, 1)).has_value());
  // Laurent terms cannot be Schur combinations
  CHECK(!schur_expand(LaurentPoly::variable(1, 1, -1)).has_value());
  auto zero = schur_expand(LaurentPoly(2));
  REQUIRE(zero.has_value());
  CHECK(zero->empty());
}

TEST_CASE("running example contributes its descent term at r=9") {
  OscillatingTableau running({Partition(), Partition({1}), Partition({1, 1}),
                              Partition({2, 1}), Partition({2}), Partition({1}),
                              Partition({2}), Partition({2, 1}),
                              Partition({2, 1, 1}), Partition({2, 1})});
  auto family = enumerate_oscillating(9, 3, Partition({2, 1}));
  bool found = false;
  for (const OscillatingTableau& t : family)
    if (t == running) {
      found = true;
      CHECK(descents(t) == std::set<int>{1, 3, 4, 6, 7, 8});
    }
  CHECK(found);
}
