#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "osctab/rs.hpp"

using namespace osctab;

namespace {

std::vector<std::vector<int>> permutations_of(int r) {
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_fpf_involution(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == static_cast<int>(i) + 1) return false;
    if (perm[perm[i] - 1] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

// All words over {1..n} of length r.
void for_each_word(int n, int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(r, 1);
  while (true) {
    f(w);
    int i = r - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) return;
    ++w[i];
  }
}

}  // namespace

TEST_CASE("involution construction and descents") {
  PartialInvolution iota({{1, 5}, {2, 4}, {8, 9}});
  CHECK(iota.domain() == std::vector<int>{1, 2, 4, 5, 8, 9});
  CHECK(iota.apply(1) == 5);
  CHECK(iota.apply(9) == 8);
  CHECK(descents(iota) == std::set<int>{1, 4, 8});
  CHECK(descents(PartialInvolution({{1, 2}})) == std::set<int>{1});
  CHECK(descents(PartialInvolution({{1, 3}, {2, 4}})) == std::set<int>{2});
  CHECK_THROWS_AS(PartialInvolution({{3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInvolution({{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("word descents") {
  CHECK(descents_word({5, 4, 2, 1, 9, 8}) == std::set<int>{1, 2, 3, 5});
  CHECK(descents_word({1, 1, 2}) == std::set<int>{});
  CHECK(descents_word({2, 1}) == std::set<int>{1});
}

TEST_CASE("rs on the running-example involution") {
  PartialInvolution iota({{1, 5}, {2, 4}, {8, 9}});
  PartialTableau i = rs_involution(iota);
  CHECK(i == PartialTableau({{1, 8}, {2, 9}, {4}, {5}}));

  auto res = rs_insert_partial({1, 2, 4, 5, 8, 9}, {5, 4, 2, 1, 9, 8});
  CHECK(res.insertion == i);
  CHECK(res.recording == i);
}

TEST_CASE("rs word examples") {
  auto inc = rs_insert_word({1, 2, 3});
  CHECK(inc.insertion == SemistandardTableau({{1, 2, 3}}));
  CHECK(inc.recording == PartialTableau({{1, 2, 3}}));
  auto dec = rs_insert_word({3, 2, 1});
  CHECK(dec.insertion == SemistandardTableau({{1}, {2}, {3}}));
  CHECK(dec.recording == PartialTableau({{1}, {2}, {3}}));
}

TEST_CASE("rs involution examples") {
  CHECK(rs_involution(PartialInvolution({{1, 2}})) == PartialTableau({{1}, {2}}));
  // direct row insertion of 3 4 1 2 and of 2 1 4 3
  CHECK(rs_involution(PartialInvolution({{1, 3}, {2, 4}})) ==
        PartialTableau({{1, 2}, {3, 4}}));
  CHECK(rs_involution(PartialInvolution({{1, 2}, {3, 4}})) ==
        PartialTableau({{1, 3}, {2, 4}}));
}

TEST_CASE("rs_involution_inverse round-trips") {
  for (int r = 2; r <= 6; r += 2)
    for (const auto& perm : permutations_of(r)) {
      if (!is_fpf_involution(perm)) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < r; ++i)
        if (i + 1 < perm[i]) pairs.emplace_back(i + 1, perm[i]);
      PartialInvolution iota(pairs);
      CHECK(rs_involution_inverse(rs_involution(iota)) == iota);
    }
  CHECK_THROWS_AS(rs_involution_inverse(PartialTableau({{1, 2}})),
                  std::invalid_argument);
}

TEST_CASE("descents of a permutation equal descents of its recording tableau") {
  for (int r = 1; r <= 6; ++r)
    for (const auto& perm : permutations_of(r)) {
      auto [p, q] = rs_insert_word(perm);
      CHECK(descents_word(perm) == descents(q));
    }
}

TEST_CASE("fixed-point-free involutions are exactly P=Q with even columns") {
  for (int r = 1; r <= 6; ++r)
    for (const auto& perm : permutations_of(r)) {
      auto [p, q] = rs_insert_word(perm);
      bool image = p.rows() == q.rows() && has_even_columns(q.shape());
      CHECK(image == is_fpf_involution(perm));
    }
}

TEST_CASE("rs is a bijection: word counts match tableau-pair counts") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r) {
      long long words = 1;
      for (int i = 0; i < r; ++i) words *= n;
      long long pairs = 0;
      for (const Partition& mu : partitions_of(r)) {
        if (mu.length() > n) continue;
        pairs += static_cast<long long>(enumerate_ssyt(mu, n).size()) *
                 static_cast<long long>(enumerate_syt(mu).size());
      }
      CHECK(words == pairs);
    }
}

TEST_CASE("rs restricted to reverse lattice words hits SYT(mu) with the same descents") {
  for (int m = 1; m <= 5; ++m)
    for (const Partition& mu : partitions_of(m)) {
      std::set<std::vector<std::vector<int>>> recorded;
      long long count = 0;
      for_each_word(mu.length(), m, [&](const std::vector<int>& w) {
        std::vector<int> mult(mu.length(), 0);
        for (int x : w) ++mult[x - 1];
        if (!std::equal(mult.begin(), mult.end(), mu.parts().begin(),
                        mu.parts().end()))
          return;
        std::vector<int> reversed(w.rbegin(), w.rend());
        if (!is_yamanouchi(reversed)) return;
        auto [p, q] = rs_insert_word(w);
        CHECK(q.shape() == mu);
        CHECK(descents_word(w) == descents(q));
        recorded.insert(q.rows());
        ++count;
      });
      CHECK(count == static_cast<long long>(enumerate_syt(mu).size()));
      CHECK(recorded.size() == enumerate_syt(mu).size());
    }
}
