#include "osctab/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace osctab {

PartialInvolution::PartialInvolution(
    const std::vector<std::pair<int, int>>& pairs) {
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1)
      throw std::invalid_argument("involution labels must be positive");
    if (a == b)
      throw std::invalid_argument("involution has fixed point " +
                                  std::to_string(a));
    map_.emplace_back(a, b);
    map_.emplace_back(b, a);
  }
  std::sort(map_.begin(), map_.end());
  for (std::size_t i = 1; i < map_.size(); ++i)
    if (map_[i].first == map_[i - 1].first)
      throw std::invalid_argument("involution pairs overlap at " +
                                  std::to_string(map_[i].first));
}

std::vector<int> PartialInvolution::domain() const {
  std::vector<int> out;
  for (const auto& [k, v] : map_) out.push_back(k);
  return out;
}

bool PartialInvolution::in_domain(int k) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), std::pair{k, 0});
  return it != map_.end() && it->first == k;
}

int PartialInvolution::apply(int k) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), std::pair{k, 0});
  if (it == map_.end() || it->first != k)
    throw std::invalid_argument("label outside involution domain");
  return it->second;
}

std::vector<std::pair<int, int>> PartialInvolution::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [k, v] : map_)
    if (k < v) out.emplace_back(k, v);
  return out;
}

int PartialInvolution::size() const { return static_cast<int>(map_.size()); }

namespace {

// One step of row insertion: bump the leftmost entry strictly greater
// than the incoming value.  Works for semistandard and partial fillings.
Box bump_row_insert(std::vector<std::vector<int>>& rows, int x) {
  int cur = x;
  std::size_t r = 0;
  while (true) {
    if (r == rows.size()) {
      rows.push_back({cur});
      return {static_cast<int>(r) + 1, 1};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
    }
    std::swap(cur, *it);
    ++r;
  }
}

}  // namespace

RsWordResult rs_insert_word(const std::vector<int>& word) {
  std::vector<std::vector<int>> p, q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 1) throw std::invalid_argument("letters must be positive");
    Box b = bump_row_insert(p, word[k]);
    if (b.row > static_cast<int>(q.size())) q.emplace_back();
    q[b.row - 1].push_back(static_cast<int>(k) + 1);
  }
  return {SemistandardTableau(p), PartialTableau(q)};
}

RsPartialResult rs_insert_partial(const std::vector<int>& domain,
                                  const std::vector<int>& values) {
  if (domain.size() != values.size())
    throw std::invalid_argument("domain and values differ in length");
  if (!std::is_sorted(domain.begin(), domain.end()) ||
      std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw std::invalid_argument("domain must be strictly increasing");
  std::vector<std::vector<int>> p, q;
  for (std::size_t k = 0; k < values.size(); ++k) {
    Box b = bump_row_insert(p, values[k]);
    if (b.row > static_cast<int>(q.size())) q.emplace_back();
    q[b.row - 1].push_back(domain[k]);
  }
  return {PartialTableau(p), PartialTableau(q)};
}

PartialTableau rs_involution(const PartialInvolution& iota) {
  std::vector<int> domain = iota.domain();
  std::vector<int> values;
  values.reserve(domain.size());
  for (int a : domain) values.push_back(iota.apply(a));
  auto [p, q] = rs_insert_partial(domain, values);
  if (!(p == q))
    throw std::logic_error("rs_involution: insertion != recording");
  return p;
}

PartialInvolution rs_involution_inverse(const PartialTableau& tableau) {
  PartialTableau p = tableau;
  std::vector<int> labels = tableau.entries();
  std::vector<std::pair<int, int>> one_line;  // (label, value)
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    Box b = *tableau.find(*it);
    auto [value, rest] = row_delete(p, b);
    one_line.emplace_back(*it, value);
    p = std::move(rest);
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto [label, value] : one_line)
    if (label < value) pairs.emplace_back(label, value);
  PartialInvolution iota(pairs);
  if (iota.size() != static_cast<int>(labels.size()))
    throw std::invalid_argument(
        "tableau is not the RS image of a fixed-point-free involution");
  for (auto [label, value] : one_line)
    if (iota.apply(label) != value)
      throw std::invalid_argument(
          "tableau is not the RS image of a fixed-point-free involution");
  return iota;
}

std::set<int> descents(const PartialInvolution& iota) {
  std::set<int> out;
  for (int k : iota.domain())
    if (iota.in_domain(k + 1) && iota.apply(k) > iota.apply(k + 1))
      out.insert(k);
  return out;
}

std::set<int> descents_word(const std::vector<int>& word) {
  std::set<int> out;
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (word[k] > word[k + 1]) out.insert(static_cast<int>(k) + 1);
  return out;
}

}  // namespace osctab
