#include "osctab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osctab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("not a partition: nonpositive part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("not a partition: parts must weakly decrease");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index must be >= 1");
  return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  bool digits = std::all_of(parts_.begin(), parts_.end(),
                            [](int p) { return p <= 9; });
  std::string out;
  if (!digits) out += '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0 && !digits) out += ',';
    out += std::to_string(parts_[i]);
  }
  if (!digits) out += ')';
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(lambda.part(1), 0);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int c = 0; c < lambda.part(i); ++c) ++cols[c];
  return Partition(std::move(cols));
}

std::optional<Box> covers(const Partition& lambda, const Partition& mu) {
  if (mu.size() != lambda.size() + 1) return std::nullopt;
  if (mu.length() < lambda.length() || mu.length() > lambda.length() + 1)
    return std::nullopt;
  std::optional<Box> added;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) == lambda.part(i)) continue;
    if (mu.part(i) != lambda.part(i) + 1 || added) return std::nullopt;
    added = Box{i, mu.part(i)};
  }
  return added;
}

Partition add_eps(const Partition& lambda, int i) {
  if (i < 1) throw std::invalid_argument("row index must be >= 1");
  int above = (i == 1) ? INT32_MAX : lambda.part(i - 1);
  if (lambda.part(i) >= above)
    throw std::invalid_argument("not a partition: add_eps at row " +
                                std::to_string(i));
  std::vector<int> parts = lambda.parts();
  if (i <= lambda.length())
    ++parts[i - 1];
  else
    parts.push_back(1);
  return Partition(std::move(parts));
}

Partition sub_eps(const Partition& lambda, int i) {
  if (i < 1 || i > lambda.length() || lambda.part(i) <= lambda.part(i + 1))
    throw std::invalid_argument("not a partition: sub_eps at row " +
                                std::to_string(i));
  std::vector<int> parts = lambda.parts();
  --parts[i - 1];
  if (parts[i - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

bool has_even_columns(const Partition& lambda, std::optional<int> max_col) {
  Partition cols = conjugate(lambda);
  for (int c = 1; c <= cols.length(); ++c) {
    if (cols.part(c) % 2 != 0) return false;
    if (max_col && cols.part(c) > *max_col) return false;
  }
  return true;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i)
    parts.push_back(std::max(a.part(i), b.part(i)));
  return Partition(std::move(parts));
}

Partition intersection_of(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  int len = std::min(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    int p = std::min(a.part(i), b.part(i));
    if (p == 0) break;
    parts.push_back(p);
  }
  return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Box> removable_corners(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
  return out;
}

std::vector<Box> addable_corners(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    int above = (i == 1) ? INT32_MAX : lambda.part(i - 1);
    if (lambda.part(i) < above) out.push_back({i, lambda.part(i) + 1});
  }
  return out;
}

}  // namespace osctab
