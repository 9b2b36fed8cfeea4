#pragma once

#include <optional>
#include <set>
#include <vector>

#include "osctab/oscillating.hpp"
#include "osctab/rs.hpp"
#include "osctab/tableau.hpp"

namespace osctab {

// Output of Sundaram's first bijection: a fixed-point-free involution and a
// partial tableau whose entries partition {1..r}.
struct SunIntermediate {
  PartialInvolution iota;
  PartialTableau tableau;
  friend bool operator==(const SunIntermediate&, const SunIntermediate&) = default;
};

SunIntermediate sun1(const OscillatingTableau& t);

// Per-step record of sun1, matching the worked layout: step index, kind,
// box, the pair adjoined on a contraction, and the tableau after the step.
struct Sun1Step {
  int k = 0;
  bool expansion = true;
  Box box;
  std::optional<std::pair<int, int>> pair_added;
  PartialTableau tableau_after;
};

std::vector<Sun1Step> sun1_trace(const OscillatingTableau& t);

// Runs the steps r..1 backwards; entries of iota and tableau must
// partition {1..r}.
OscillatingTableau sun1_inverse(const SunIntermediate& p, int r);

// Des(iota) + Des(T) + Des(T/iota) with
// Des(A/B) = {k : k in A, k+1 in B}; disjoint union by construction.
std::set<int> descents(const SunIntermediate& p);

struct Sun2Result {
  PartialTableau q;
  SkewTableau s;
};

// Column-inserts the reverse reading word of i_tab into t, recording row
// indices of i_tab in the boxes added.
Sun2Result sun2(const PartialTableau& i_tab, const PartialTableau& t);

struct SunResult {
  SunIntermediate intermediate;
  PartialTableau i;  // RS image of the involution
  PartialTableau q;
  SkewTableau s;
};

// Sun = Sun2 . RS . Sun1 on an n-symplectic oscillating tableau.
SunResult sun(const OscillatingTableau& t, int n);

// Inverse of Sun: reverse column-insertion driven by s, then inverse RS,
// then sun1_inverse.  s must be an n-symplectic Littlewood-Richardson
// tableau of shape sh(q)/mu.
OscillatingTableau sun_inverse(const PartialTableau& q, const SkewTableau& s,
                               int n, const Partition& mu);

// Reverse reading word is a lattice word whose weight has all columns of
// even length, and entries in row n+i+1 are at least 2i+2 for i >= 0.
bool is_n_symplectic_lr(const SkewTableau& s, int n);

// Number of n-symplectic LR tableaux of shape lambda/mu and weight beta.
long long count_c(const Partition& lambda, const Partition& mu,
                  const Partition& beta, int n);

// a(lambda, mu) = sum of count_c over even-column beta of |lambda|-|mu|.
long long coeff_a(const Partition& lambda, const Partition& mu, int n);

}  // namespace osctab
