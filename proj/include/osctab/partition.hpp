#pragma once

#include <optional>
#include <string>
#include <vector>

namespace osctab {

// 1-based cell position in English notation (row 1 at the top).
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Integer partition in canonical form: weakly decreasing positive parts,
// no stored zeros.  The empty partition is the empty sequence.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based part access; returns 0 beyond the last stored part.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  bool contains(const Partition& inner) const;

  // Compact rendering: parts concatenated when all are single digits
  // ("441"), comma-separated in parentheses otherwise; empty prints "0".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Skew shape outer/inner with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

Partition conjugate(const Partition& lambda);

// True (with the added box) iff mu is lambda plus exactly one box.
std::optional<Box> covers(const Partition& lambda, const Partition& mu);

// lambda + eps_i / lambda - eps_i; throws std::invalid_argument when the
// result would not be a partition.
Partition add_eps(const Partition& lambda, int i);
Partition sub_eps(const Partition& lambda, int i);

// Every column length even, and, when max_col is given, at most max_col.
bool has_even_columns(const Partition& lambda,
                      std::optional<int> max_col = std::nullopt);

// Componentwise max/min; both are partitions again.
Partition union_of(const Partition& a, const Partition& b);
Partition intersection_of(const Partition& a, const Partition& b);

// All partitions of n, deterministic (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n);

// Removable corners / addable corners of a shape, top row first.
std::vector<Box> removable_corners(const Partition& lambda);
std::vector<Box> addable_corners(const Partition& lambda);

}  // namespace osctab
