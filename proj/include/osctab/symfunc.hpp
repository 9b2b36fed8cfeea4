#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "osctab/laurent.hpp"
#include "osctab/partition.hpp"

namespace osctab {

// Schur polynomial in k variables as the sum over SSYT(mu, k); zero when
// mu has more than k rows.
LaurentPoly schur(const Partition& mu, int k);

// Fundamental quasisymmetric polynomial F_D in k variables: monomials over
// weakly increasing index chains of length r, strict at positions in D.
LaurentPoly fundamental_qsym(const std::set<int>& descent_set, int r, int k);

// Symplectic character sp_mu as the King-tableau generating function; a
// Laurent polynomial in n variables (letter i contributes x_i, letter -i
// contributes x_i^{-1}).
LaurentPoly symplectic_character(const Partition& mu, int n);

// Frobenius character of the weight-mu isotypic component of the r-th
// tensor power, computed two independent ways: from LR-coefficient counts
// against Schur polynomials, and from quasisymmetric descent sums over
// oscillating tableaux.
LaurentPoly frobenius_via_lr(int r, const Partition& mu, int n, int k);
LaurentPoly frobenius_via_descents(int r, const Partition& mu, int n, int k);

// Sum of s_beta over beta of r whose column lengths are all even and at
// most 2n: the invariant isotypic character.
LaurentPoly invariant_character(int r, int n, int k);

// s_mu(k vars) equals the descent sum over SYT(mu).
bool schur_qsym_identity(const Partition& mu, int k);

// Same sum taken over reverse lattice words of weight mu with the usual
// word descents.
bool eq5_identity(const Partition& mu, int k);

// (x_1 + x_1^{-1} + ... + x_n + x_n^{-1})^r equals the sum over mu of
// sp_mu times the number of n-symplectic oscillating tableaux of length r
// and shape mu.
bool berele_identity(int r, int n);

// Greedy expansion of a symmetric polynomial in the Schur basis by peeling
// leading monomials; nullopt when the input is not a (finite, exact)
// combination of Schur polynomials in its variable count.
std::optional<std::vector<std::pair<Partition, std::int64_t>>> schur_expand(
    const LaurentPoly& poly);

}  // namespace osctab
