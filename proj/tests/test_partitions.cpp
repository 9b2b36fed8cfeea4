#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osctab/partition.hpp"

using namespace osctab;

namespace {

std::vector<Partition> all_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m)
    for (const Partition& p : partitions_of(m)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("canonical form and validation") {
  CHECK(Partition().empty());
  CHECK(Partition({3, 2}).size() == 5);
  CHECK(Partition({3, 2}).length() == 2);
  CHECK(Partition({3, 2}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition({4, 4, 1})) == Partition({3, 2, 2, 2}));
}

TEST_CASE("conjugation is an involution and reverses containment") {
  auto ps = all_partitions_up_to(6);
  for (const Partition& p : ps) {
    CHECK(conjugate(conjugate(p)) == p);
    for (const Partition& q : ps)
      CHECK(q.contains(p) == conjugate(q).contains(conjugate(p)));
  }
}

TEST_CASE("covers examples") {
  auto b = covers(Partition(), Partition({1}));
  REQUIRE(b.has_value());
  CHECK(*b == Box{1, 1});
  auto b2 = covers(Partition({2, 1}), Partition({2, 1, 1}));
  REQUIRE(b2.has_value());
  CHECK(*b2 == Box{3, 1});
  CHECK(!covers(Partition({2}), Partition({2})));
  CHECK(!covers(Partition({2}), Partition({1})));
  CHECK(!covers(Partition({1}), Partition({3})));
}

TEST_CASE("covers transposes and is antisymmetric") {
  for (const Partition& p : all_partitions_up_to(6))
    for (const Box& corner : addable_corners(p)) {
      Partition q = add_eps(p, corner.row);
      auto fwd = covers(p, q);
      REQUIRE(fwd.has_value());
      CHECK(*fwd == corner);
      CHECK(!covers(q, p));
      auto tfwd = covers(conjugate(p), conjugate(q));
      REQUIRE(tfwd.has_value());
      CHECK(tfwd->row == fwd->col);
      CHECK(tfwd->col == fwd->row);
    }
}

TEST_CASE("add_eps and sub_eps") {
  CHECK(add_eps(Partition({1}), 2) == Partition({1, 1}));
  CHECK(add_eps(Partition({2, 1}), 1) == Partition({3, 1}));
  CHECK(sub_eps(Partition({2, 1}), 2) == Partition({2}));
  CHECK_THROWS_AS(add_eps(Partition({2, 2}), 2), std::invalid_argument);
  CHECK_THROWS_AS(add_eps(Partition({1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(sub_eps(Partition({2, 2}), 1), std::invalid_argument);
  CHECK_THROWS_AS(sub_eps(Partition(), 1), std::invalid_argument);

  for (const Partition& p : all_partitions_up_to(6))
    for (int i = 1; i <= p.length() + 1; ++i)
      if (p.part(i) < (i == 1 ? INT32_MAX : p.part(i - 1)))
        CHECK(sub_eps(add_eps(p, i), i) == p);
}

TEST_CASE("has_even_columns") {
  CHECK(has_even_columns(Partition({2, 2, 1, 1})));
  CHECK(!has_even_columns(Partition({2, 1})));
  CHECK(has_even_columns(Partition({1, 1}), 2));
  CHECK(!has_even_columns(Partition({1, 1, 1, 1}), 2));
  CHECK(has_even_columns(Partition()));
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("compact strings") {
  CHECK(Partition().to_string() == "0");
  CHECK(Partition({4, 4, 1}).to_string() == "441");
  CHECK(Partition({12, 1}).to_string() == "(12,1)");
}
