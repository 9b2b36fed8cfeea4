#include "osctab/sundaram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace osctab {

namespace {

std::vector<std::vector<int>> with_entry(const PartialTableau& t, Box b, int x) {
  auto rows = t.rows();
  if (b.row > static_cast<int>(rows.size())) rows.emplace_back();
  auto& row = rows[b.row - 1];
  if (b.col != static_cast<int>(row.size()) + 1)
    throw std::logic_error("expansion box is not addable");
  row.push_back(x);
  return rows;
}

}  // namespace

std::vector<Sun1Step> sun1_trace(const OscillatingTableau& t) {
  std::vector<Sun1Step> steps;
  PartialTableau cur;
  for (int k = 1; k <= t.length(); ++k) {
    const OscStep& s = t.step(k);
    Sun1Step rec;
    rec.k = k;
    rec.expansion = s.expansion;
    rec.box = s.box;
    if (s.expansion) {
      cur = PartialTableau(with_entry(cur, s.box, k));
    } else {
      auto [x, rest] = column_delete(cur, s.box);
      cur = std::move(rest);
      rec.pair_added = {x, k};
    }
    rec.tableau_after = cur;
    steps.push_back(std::move(rec));
  }
  return steps;
}

SunIntermediate sun1(const OscillatingTableau& t) {
  std::vector<std::pair<int, int>> pairs;
  PartialTableau cur;
  for (int k = 1; k <= t.length(); ++k) {
    const OscStep& s = t.step(k);
    if (s.expansion) {
      cur = PartialTableau(with_entry(cur, s.box, k));
    } else {
      auto [x, rest] = column_delete(cur, s.box);
      cur = std::move(rest);
      pairs.emplace_back(x, k);
    }
  }
  return {PartialInvolution(pairs), cur};
}

OscillatingTableau sun1_inverse(const SunIntermediate& p, int r) {
  std::vector<bool> seen(r + 1, false);
  for (int a : p.iota.domain()) {
    if (a > r) throw std::invalid_argument("involution label exceeds r");
    seen[a] = true;
  }
  for (int a : p.tableau.entries()) {
    if (a > r) throw std::invalid_argument("tableau entry exceeds r");
    if (seen[a])
      throw std::invalid_argument("involution and tableau entries overlap");
    seen[a] = true;
  }
  for (int a = 1; a <= r; ++a)
    if (!seen[a])
      throw std::invalid_argument("entries do not cover {1..r}: missing " +
                                  std::to_string(a));

  std::vector<Partition> shapes(r + 1);
  PartialTableau cur = p.tableau;
  shapes[r] = cur.shape();
  for (int k = r; k >= 1; --k) {
    if (auto b = cur.find(k)) {
      // step k was an expansion placing k at *b
      auto rows = cur.rows();
      rows[b->row - 1].pop_back();
      if (rows[b->row - 1].empty()) rows.pop_back();
      cur = PartialTableau(std::move(rows));
    } else {
      int x = p.iota.apply(k);
      if (x > k)
        throw std::logic_error("pair maximum expected at step " +
                               std::to_string(k));
      auto [grown, box] = column_insert(cur, x);
      cur = std::move(grown);
    }
    shapes[k - 1] = cur.shape();
  }
  return OscillatingTableau(std::move(shapes));
}

std::set<int> descents(const SunIntermediate& p) {
  std::set<int> out = descents(p.iota);
  for (int k : descents(p.tableau)) out.insert(k);
  for (int k : p.tableau.entries())
    if (p.iota.in_domain(k + 1)) out.insert(k);
  return out;
}

Sun2Result sun2(const PartialTableau& i_tab, const PartialTableau& t) {
  int r = i_tab.size() + t.size();
  std::vector<bool> seen(r + 1, false);
  for (int a : i_tab.entries()) {
    if (a > r) throw std::invalid_argument("entries do not cover {1..r}");
    seen[a] = true;
  }
  for (int a : t.entries()) {
    if (a > r) throw std::invalid_argument("entries do not cover {1..r}");
    if (seen[a])
      throw std::invalid_argument("overlapping entry " + std::to_string(a));
    seen[a] = true;
  }

  std::map<int, int> row_in_i;
  const auto& irows = i_tab.rows();
  for (std::size_t i = 0; i < irows.size(); ++i)
    for (int x : irows[i]) row_in_i[x] = static_cast<int>(i) + 1;

  PartialTableau q = t;
  std::map<std::pair<int, int>, int> skew_entries;
  for (int x : reverse_reading_word(i_tab)) {
    auto [grown, box] = column_insert(q, x);
    q = std::move(grown);
    skew_entries[{box.row, box.col}] = row_in_i[x];
  }

  Partition outer = q.shape();
  Partition inner = t.shape();
  std::vector<std::vector<int>> cells(outer.length());
  for (int row = 1; row <= outer.length(); ++row)
    for (int col = inner.part(row) + 1; col <= outer.part(row); ++col)
      cells[row - 1].push_back(skew_entries.at({row, col}));
  return {std::move(q), SkewTableau(std::move(outer), std::move(inner),
                                    std::move(cells))};
}

SunResult sun(const OscillatingTableau& t, int n) {
  if (!is_n_symplectic(t, n))
    throw std::invalid_argument("oscillating tableau is not n-symplectic");
  SunIntermediate inter = sun1(t);
  PartialTableau i = rs_involution(inter.iota);
  Sun2Result qs = sun2(i, inter.tableau);
  return {std::move(inter), std::move(i), std::move(qs.q), std::move(qs.s)};
}

OscillatingTableau sun_inverse(const PartialTableau& q, const SkewTableau& s,
                               int n, const Partition& mu) {
  if (!q.is_standard())
    throw std::invalid_argument("q must be a standard tableau");
  if (!(s.inner() == mu))
    throw std::invalid_argument("skew tableau inner shape must equal mu");
  if (!(s.outer() == q.shape()))
    throw std::invalid_argument("skew tableau outer shape must match sh(q)");
  if (!is_n_symplectic_lr(s, n))
    throw std::invalid_argument("s is not an n-symplectic LR tableau");

  // Un-insert in reverse insertion order: entries descending and, within
  // an entry, columns descending (equal entries were inserted left to
  // right).  Each deletion ejects one letter of the corresponding row of I.
  std::vector<std::pair<std::pair<int, int>, Box>> order;  // ((entry,col), box)
  for (int row = 1; row <= s.outer().length(); ++row)
    for (int col = s.inner().part(row) + 1; col <= s.outer().part(row); ++col)
      order.push_back({{s.at(row, col), col}, Box{row, col}});
  std::sort(order.begin(), order.end());

  PartialTableau cur = q;
  std::map<int, std::vector<int>> i_rows;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [x, rest] = column_delete(cur, it->second);
    cur = std::move(rest);
    i_rows[it->first.first].push_back(x);
  }

  std::vector<std::vector<int>> rows;
  for (auto& [row_index, letters] : i_rows) {
    if (row_index != static_cast<int>(rows.size()) + 1)
      throw std::invalid_argument("skew entries do not index tableau rows");
    std::sort(letters.begin(), letters.end());
    rows.push_back(letters);
  }
  PartialTableau i_tab(std::move(rows));

  PartialInvolution iota = rs_involution_inverse(i_tab);
  OscillatingTableau result =
      sun1_inverse({std::move(iota), std::move(cur)}, q.size());
  if (!is_n_symplectic(result, n))
    throw std::invalid_argument("inputs do not describe an n-symplectic tableau");
  return result;
}

bool is_n_symplectic_lr(const SkewTableau& s, int n) {
  std::vector<int> wrev = reverse_reading_word(s);
  if (!is_yamanouchi(wrev)) return false;
  Partition beta = word_weight(wrev);
  if (!has_even_columns(beta)) return false;
  for (int row = n + 1; row <= s.outer().length(); ++row) {
    int bound = 2 * (row - n - 1) + 2;
    for (int col = s.inner().part(row) + 1; col <= s.outer().part(row); ++col)
      if (s.at(row, col) < bound) return false;
  }
  return true;
}

long long count_c(const Partition& lambda, const Partition& mu,
                  const Partition& beta, int n) {
  if (!lambda.contains(mu)) return 0;
  if (beta.size() != lambda.size() - mu.size()) return 0;
  long long count = 0;
  for (const SkewTableau& s : enumerate_skew_ssyt(lambda, mu, beta.parts()))
    if (is_n_symplectic_lr(s, n)) ++count;
  return count;
}

long long coeff_a(const Partition& lambda, const Partition& mu, int n) {
  if (!lambda.contains(mu)) return 0;
  long long total = 0;
  for (const Partition& beta : partitions_of(lambda.size() - mu.size()))
    if (has_even_columns(beta)) total += count_c(lambda, mu, beta, n);
  return total;
}

}  // namespace osctab
