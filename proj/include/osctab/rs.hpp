#pragma once

#include <set>
#include <utility>
#include <vector>

#include "osctab/tableau.hpp"

namespace osctab {

// Fixed-point-free involution on a finite set of positive integers.
class PartialInvolution {
 public:
  PartialInvolution() = default;
  explicit PartialInvolution(const std::vector<std::pair<int, int>>& pairs);

  std::vector<int> domain() const;  // sorted ascending
  bool in_domain(int k) const;
  int apply(int k) const;  // throws when k is outside the domain
  // Canonical form: each pair (min,max), sorted by first element.
  std::vector<std::pair<int, int>> pairs() const;
  int size() const;  // |A|, always even
  bool empty() const { return map_.empty(); }

  friend bool operator==(const PartialInvolution&,
                         const PartialInvolution&) = default;

 private:
  std::vector<std::pair<int, int>> map_;  // both directions, sorted by key
};

struct RsWordResult {
  SemistandardTableau insertion;
  PartialTableau recording;  // entries 1..len(word)
};

// Robinson-Schensted row insertion of an arbitrary word.
RsWordResult rs_insert_word(const std::vector<int>& word);

struct RsPartialResult {
  PartialTableau insertion;
  PartialTableau recording;  // entries are the domain labels
};

// RS on a partial permutation given as (sorted domain, values); the
// recording tableau carries the domain labels themselves.
RsPartialResult rs_insert_partial(const std::vector<int>& domain,
                                  const std::vector<int>& values);

// The common tableau I with RS(iota) = (I, I); all its columns have even
// length.
PartialTableau rs_involution(const PartialInvolution& iota);

// Inverse of rs_involution: recovers the fixed-point-free involution from
// the tableau with P = Q = I.
PartialInvolution rs_involution_inverse(const PartialTableau& tableau);

// {k : k, k+1 in A and iota(k) > iota(k+1)}.
std::set<int> descents(const PartialInvolution& iota);

// Usual word descents {k : w_k > w_{k+1}}, positions 1-based.
std::set<int> descents_word(const std::vector<int>& word);

}  // namespace osctab
