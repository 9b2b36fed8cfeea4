#include "osctab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "osctab/oscillating.hpp"
#include "osctab/sundaram.hpp"
#include "osctab/tableau.hpp"

namespace osctab {

LaurentPoly schur(const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("variable count must be >= 0");
  LaurentPoly out(k);
  for (const SemistandardTableau& t : enumerate_ssyt(mu, k)) {
    std::vector<int> exps(k, 0);
    for (const auto& row : t.rows())
      for (int x : row) ++exps[x - 1];
    out += LaurentPoly::monomial(std::move(exps), 1);
  }
  return out;
}

namespace {

void qsym_chains(const std::set<int>& descent_set, int r, int k, int pos,
                 int min_index, std::vector<int>& exps, LaurentPoly& out) {
  if (pos > r) {
    out += LaurentPoly::monomial(exps, 1);
    return;
  }
  for (int i = min_index; i <= k; ++i) {
    ++exps[i - 1];
    int next_min = descent_set.count(pos) ? i + 1 : i;
    qsym_chains(descent_set, r, k, pos + 1, next_min, exps, out);
    --exps[i - 1];
  }
}

}  // namespace

LaurentPoly fundamental_qsym(const std::set<int>& descent_set, int r, int k) {
  for (int d : descent_set)
    if (d < 1 || d > r - 1)
      throw std::invalid_argument("descent set must lie inside {1..r-1}");
  LaurentPoly out(k);
  if (r == 0) return LaurentPoly::constant(k, 1);
  std::vector<int> exps(k, 0);
  qsym_chains(descent_set, r, k, 1, 1, exps, out);
  return out;
}

LaurentPoly symplectic_character(const Partition& mu, int n) {
  if (mu.length() > n)
    throw std::invalid_argument("shape has more than n rows");
  LaurentPoly out(n);
  for (const KingTableau& t : enumerate_king(mu, n)) {
    std::vector<int> exps(n, 0);
    for (const auto& row : t.rows())
      for (int letter : row) exps[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    out += LaurentPoly::monomial(std::move(exps), 1);
  }
  return out;
}

LaurentPoly frobenius_via_lr(int r, const Partition& mu, int n, int k) {
  LaurentPoly out(k);
  for (const Partition& lambda : partitions_of(r)) {
    long long a = coeff_a(lambda, mu, n);
    if (a == 0) continue;
    LaurentPoly s = schur(lambda, k);
    out += s * LaurentPoly::constant(k, a);
  }
  return out;
}

LaurentPoly frobenius_via_descents(int r, const Partition& mu, int n, int k) {
  LaurentPoly out(k);
  for (const OscillatingTableau& t : enumerate_oscillating(r, n, mu))
    out += fundamental_qsym(descents(t), r, k);
  return out;
}

LaurentPoly invariant_character(int r, int n, int k) {
  LaurentPoly out(k);
  for (const Partition& beta : partitions_of(r))
    if (has_even_columns(beta, 2 * n)) out += schur(beta, k);
  return out;
}

bool schur_qsym_identity(const Partition& mu, int k) {
  int r = mu.size();
  LaurentPoly rhs(k);
  for (const PartialTableau& q : enumerate_syt(mu))
    rhs += fundamental_qsym(descents(q), r, k);
  return schur(mu, k) == rhs;
}

namespace {

void distinct_words(const std::vector<int>& remaining_content,
                    std::vector<int>& acc, int r,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(acc.size()) == r) {
    emit(acc);
    return;
  }
  for (std::size_t i = 0; i < remaining_content.size(); ++i) {
    if (remaining_content[i] == 0) continue;
    auto next = remaining_content;
    --next[i];
    acc.push_back(static_cast<int>(i) + 1);
    distinct_words(next, acc, r, emit);
    acc.pop_back();
  }
}

}  // namespace

bool eq5_identity(const Partition& mu, int k) {
  int r = mu.size();
  LaurentPoly rhs(k);
  std::vector<int> acc;
  distinct_words(mu.parts(), acc, r, [&](const std::vector<int>& w) {
    std::vector<int> reversed(w.rbegin(), w.rend());
    if (!is_yamanouchi(reversed)) return;
    rhs += fundamental_qsym(descents_word(w), r, k);
  });
  return schur(mu, k) == rhs;
}

bool berele_identity(int r, int n) {
  LaurentPoly defining(n);
  for (int i = 1; i <= n; ++i) {
    defining += LaurentPoly::variable(n, i, 1);
    defining += LaurentPoly::variable(n, i, -1);
  }
  LaurentPoly lhs = defining.pow(static_cast<unsigned>(r));

  LaurentPoly rhs(n);
  for (int m = r; m >= 0; m -= 2)
    for (const Partition& mu : partitions_of(m)) {
      if (mu.length() > n) continue;
      long long count =
          static_cast<long long>(enumerate_oscillating(r, n, mu).size());
      if (count == 0) continue;
      rhs += symplectic_character(mu, n) * LaurentPoly::constant(n, count);
    }
  return lhs == rhs;
}

std::optional<std::vector<std::pair<Partition, std::int64_t>>> schur_expand(
    const LaurentPoly& poly) {
  std::vector<std::pair<Partition, std::int64_t>> out;
  LaurentPoly rest = poly;
  // Peel at most as many summands as the input has terms.
  for (std::size_t guard = poly.terms().size(); !rest.is_zero(); --guard) {
    if (guard == 0) return std::nullopt;
    // leading term: lexicographically largest exponent vector
    auto it = std::prev(rest.terms().end());
    std::vector<int> exps = it->first;
    std::int64_t c = it->second;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) return std::nullopt;
      if (i > 0 && exps[i] > exps[i - 1]) return std::nullopt;
    }
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    Partition lambda(exps);
    out.emplace_back(lambda, c);
    rest -= schur(lambda, poly.nvars()) * LaurentPoly::constant(poly.nvars(), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace osctab
