#pragma once

#include <set>
#include <utility>
#include <vector>

#include "osctab/partition.hpp"

namespace osctab {

// Filling of a straight shape with distinct positive integers, strictly
// increasing along rows and down columns.  Standard Young tableaux are the
// special case with entry set {1..r}.
class PartialTableau {
 public:
  PartialTableau() = default;
  explicit PartialTableau(std::vector<std::vector<int>> rows);
  PartialTableau(std::initializer_list<std::vector<int>> rows)
      : PartialTableau(std::vector<std::vector<int>>(rows)) {}

  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int row, int col) const;  // 1-based, throws outside the shape
  bool has_entry(int x) const;
  std::optional<Box> find(int x) const;
  std::vector<int> entries() const;  // sorted ascending
  bool is_standard() const;          // entry set is exactly {1..size}

  friend bool operator==(const PartialTableau&, const PartialTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Straight-shape filling with weakly increasing rows and strictly
// increasing columns (repeated entries allowed).
class SemistandardTableau {
 public:
  SemistandardTableau() = default;
  explicit SemistandardTableau(std::vector<std::vector<int>> rows);
  SemistandardTableau(std::initializer_list<std::vector<int>> rows)
      : SemistandardTableau(std::vector<std::vector<int>>(rows)) {}

  Partition shape() const;
  int size() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> content() const;  // multiplicity of each letter 1..max

  friend bool operator==(const SemistandardTableau&,
                         const SemistandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Semistandard filling of a skew shape outer/inner.
class SkewTableau {
 public:
  SkewTableau() = default;  // empty shape 0/0
  SkewTableau(Partition outer, Partition inner,
              std::vector<std::vector<int>> cell_rows);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  SkewShape shape() const { return {outer_, inner_}; }
  // cell_rows()[i] holds the entries of row i+1, columns inner_{i+1}+1
  // through outer_{i+1}.
  const std::vector<std::vector<int>>& cell_rows() const { return cells_; }
  int at(int row, int col) const;
  int cell_count() const;
  std::vector<int> content() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> cells_;
};

// King's n-symplectic semistandard tableau over 1 < -1 < 2 < -2 < ... with
// the row bound: entries in row i are >= i in that order.
class KingTableau {
 public:
  KingTableau() = default;
  KingTableau(std::vector<std::vector<int>> rows, int n);

  Partition shape() const;
  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend bool operator==(const KingTableau&, const KingTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

// King order encoding: rank(i) = 2i-1, rank(-i) = 2i.
int king_rank(int letter);
int king_letter(int rank);

// Column insertion: x enters column 1 and in each column bumps the topmost
// entry >= x; if none, x lands at the bottom of that column.  Returns the
// new tableau and the added box.
std::pair<PartialTableau, Box> column_insert(const PartialTableau& t, int x);

// Exact inverse: removes the entry at corner box b and reverse-bumps
// through the columns to its left; returns the ejected letter.
std::pair<int, PartialTableau> column_delete(const PartialTableau& t, Box b);

// Row insertion and its inverse (transposes of the column versions).
std::pair<PartialTableau, Box> row_insert(const PartialTableau& t, int x);
std::pair<int, PartialTableau> row_delete(const PartialTableau& t, Box b);

PartialTableau transpose(const PartialTableau& t);

// Reading word: rows concatenated bottom to top, each left to right.
std::vector<int> reading_word(const PartialTableau& t);
std::vector<int> reading_word(const SemistandardTableau& t);
std::vector<int> reading_word(const SkewTableau& t);
std::vector<int> reverse_reading_word(const PartialTableau& t);
std::vector<int> reverse_reading_word(const SkewTableau& t);

// {k : k and k+1 are entries and k+1 lies in a strictly lower row}.
std::set<int> descents(const PartialTableau& t);

// Lattice (Yamanouchi) words: every prefix has at least as many i as i+1.
bool is_yamanouchi(const std::vector<int>& word);

// Multiplicity vector of a word as a partition; throws when the
// multiplicities do not weakly decrease (they do for lattice words).
Partition word_weight(const std::vector<int>& word);

// Exhaustive enumerators, each item exactly once, sorted by reading word.
std::vector<PartialTableau> enumerate_syt(const Partition& shape);
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                int max_entry);
std::vector<KingTableau> enumerate_king(const Partition& shape, int n);

// All skew semistandard fillings of outer/inner whose content is exactly
// the given multiplicity vector (content[i] copies of the letter i+1).
std::vector<SkewTableau> enumerate_skew_ssyt(const Partition& outer,
                                             const Partition& inner,
                                             const std::vector<int>& content);

// All partial tableaux whose entry set is exactly the given set.
std::vector<PartialTableau> enumerate_partial_tableaux(
    const std::vector<int>& entry_set);

}  // namespace osctab
