#include "osctab/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace osctab {

namespace {

// Shared shape/row-length checks for row-based fillings.
void check_row_lengths(const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty())
      throw std::invalid_argument("tableau row may not be empty");
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      throw std::invalid_argument("tableau rows must weakly decrease in length");
  }
}

std::vector<std::vector<int>> to_columns(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> cols;
  if (!rows.empty()) cols.resize(rows[0].size());
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

std::vector<std::vector<int>> to_rows(const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  if (!cols.empty()) rows.resize(cols[0].size());
  for (const auto& col : cols)
    for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
  return rows;
}

}  // namespace

PartialTableau::PartialTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  check_row_lengths(rows_);
  std::set<int> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int x = rows_[i][j];
      if (x < 1) throw std::invalid_argument("entries must be positive");
      if (!seen.insert(x).second)
        throw std::invalid_argument("duplicate entry " + std::to_string(x));
      if (j > 0 && rows_[i][j - 1] >= x)
        throw std::invalid_argument("rows must strictly increase");
      if (i > 0 && rows_[i - 1][j] >= x)
        throw std::invalid_argument("columns must strictly increase");
    }
  }
}

Partition PartialTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int PartialTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int PartialTableau::at(int row, int col) const {
  if (row < 1 || row > static_cast<int>(rows_.size()) || col < 1 ||
      col > static_cast<int>(rows_[row - 1].size()))
    throw std::out_of_range("cell outside tableau");
  return rows_[row - 1][col - 1];
}

bool PartialTableau::has_entry(int x) const { return find(x).has_value(); }

std::optional<Box> PartialTableau::find(int x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto it = std::lower_bound(rows_[i].begin(), rows_[i].end(), x);
    if (it != rows_[i].end() && *it == x)
      return Box{static_cast<int>(i) + 1,
                 static_cast<int>(it - rows_[i].begin()) + 1};
  }
  return std::nullopt;
}

std::vector<int> PartialTableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialTableau::is_standard() const {
  auto es = entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] != static_cast<int>(i) + 1) return false;
  return true;
}

SemistandardTableau::SemistandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  check_row_lengths(rows_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw std::invalid_argument("entries must be positive");
      if (j > 0 && rows_[i][j - 1] > rows_[i][j])
        throw std::invalid_argument("rows must weakly increase");
      if (i > 0 && rows_[i - 1][j] >= rows_[i][j])
        throw std::invalid_argument("columns must strictly increase");
    }
}

Partition SemistandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int SemistandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> SemistandardTableau::content() const {
  std::vector<int> mult;
  for (const auto& row : rows_)
    for (int x : row) {
      if (x > static_cast<int>(mult.size())) mult.resize(x, 0);
      ++mult[x - 1];
    }
  return mult;
}

SkewTableau::SkewTableau(Partition outer, Partition inner,
                         std::vector<std::vector<int>> cell_rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), cells_(std::move(cell_rows)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("skew shape: inner not contained in outer");
  if (static_cast<int>(cells_.size()) != outer_.length())
    throw std::invalid_argument("skew tableau: wrong number of rows");
  for (int i = 1; i <= outer_.length(); ++i) {
    const auto& row = cells_[i - 1];
    if (static_cast<int>(row.size()) != outer_.part(i) - inner_.part(i))
      throw std::invalid_argument("skew tableau: wrong row length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) throw std::invalid_argument("entries must be positive");
      if (j > 0 && row[j - 1] > row[j])
        throw std::invalid_argument("rows must weakly increase");
    }
  }
  // Column strictness between vertically adjacent filled cells.
  for (int i = 2; i <= outer_.length(); ++i)
    for (int col = inner_.part(i) + 1; col <= outer_.part(i); ++col)
      if (col > inner_.part(i - 1) && at(i - 1, col) >= at(i, col))
        throw std::invalid_argument("columns must strictly increase");
}

int SkewTableau::at(int row, int col) const {
  if (row < 1 || row > outer_.length() || col <= inner_.part(row) ||
      col > outer_.part(row))
    throw std::out_of_range("cell outside skew shape");
  return cells_[row - 1][col - inner_.part(row) - 1];
}

int SkewTableau::cell_count() const {
  return outer_.size() - inner_.size();
}

std::vector<int> SkewTableau::content() const {
  std::vector<int> mult;
  for (const auto& row : cells_)
    for (int x : row) {
      if (x > static_cast<int>(mult.size())) mult.resize(x, 0);
      ++mult[x - 1];
    }
  return mult;
}

int king_rank(int letter) {
  if (letter == 0) throw std::invalid_argument("king letter may not be 0");
  return letter > 0 ? 2 * letter - 1 : -2 * letter;
}

int king_letter(int rank) {
  if (rank < 1) throw std::invalid_argument("king rank must be >= 1");
  return rank % 2 == 1 ? (rank + 1) / 2 : -rank / 2;
}

KingTableau::KingTableau(std::vector<std::vector<int>> rows, int n)
    : rows_(std::move(rows)), n_(n) {
  check_row_lengths(rows_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int x = rows_[i][j];
      if (x == 0 || x > n_ || x < -n_)
        throw std::invalid_argument("king letter out of range");
      int rk = king_rank(x);
      if (rk < 2 * (static_cast<int>(i) + 1) - 1)
        throw std::invalid_argument("king row bound violated");
      if (j > 0 && king_rank(rows_[i][j - 1]) > rk)
        throw std::invalid_argument("rows must weakly increase");
      if (i > 0 && king_rank(rows_[i - 1][j]) >= rk)
        throw std::invalid_argument("columns must strictly increase");
    }
}

Partition KingTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::pair<PartialTableau, Box> column_insert(const PartialTableau& t, int x) {
  if (x < 1) throw std::invalid_argument("entries must be positive");
  if (t.has_entry(x))
    throw std::invalid_argument("duplicate entry " + std::to_string(x));
  auto cols = to_columns(t.rows());
  int cur = x;
  std::size_t c = 0;
  Box added;
  while (true) {
    if (c == cols.size()) {
      cols.push_back({cur});
      added = {1, static_cast<int>(c) + 1};
      break;
    }
    auto& col = cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), cur);
    if (it == col.end()) {
      col.push_back(cur);
      added = {static_cast<int>(col.size()), static_cast<int>(c) + 1};
      break;
    }
    std::swap(cur, *it);
    ++c;
  }
  return {PartialTableau(to_rows(cols)), added};
}

std::pair<int, PartialTableau> column_delete(const PartialTableau& t, Box b) {
  Partition shape = t.shape();
  bool corner = b.row >= 1 && b.col == shape.part(b.row) &&
                shape.part(b.row + 1) < b.col;
  if (!corner)
    throw std::invalid_argument("column_delete: box is not a removable corner");
  auto cols = to_columns(t.rows());
  int cur = cols[b.col - 1].back();
  cols[b.col - 1].pop_back();
  if (cols[b.col - 1].empty()) cols.pop_back();
  for (int c = b.col - 2; c >= 0; --c) {
    auto& col = cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), cur);
    if (it == col.begin())
      throw std::logic_error("column_delete: reverse bump has no target");
    // reverse bump: the traveling value replaces the largest entry below it
    --it;
    std::swap(cur, *it);
  }
  return {cur, PartialTableau(to_rows(cols))};
}

std::pair<PartialTableau, Box> row_insert(const PartialTableau& t, int x) {
  auto [tt, box] = column_insert(transpose(t), x);
  return {transpose(tt), Box{box.col, box.row}};
}

std::pair<int, PartialTableau> row_delete(const PartialTableau& t, Box b) {
  auto [x, tt] = column_delete(transpose(t), Box{b.col, b.row});
  return {x, transpose(tt)};
}

PartialTableau transpose(const PartialTableau& t) {
  return PartialTableau(to_columns(t.rows()));
}

namespace {

std::vector<int> read_rows_bottom_up(const std::vector<std::vector<int>>& rows) {
  std::vector<int> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word;
}

}  // namespace

std::vector<int> reading_word(const PartialTableau& t) {
  return read_rows_bottom_up(t.rows());
}

std::vector<int> reading_word(const SemistandardTableau& t) {
  return read_rows_bottom_up(t.rows());
}

std::vector<int> reading_word(const SkewTableau& t) {
  return read_rows_bottom_up(t.cell_rows());
}

std::vector<int> reverse_reading_word(const PartialTableau& t) {
  auto w = reading_word(t);
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> reverse_reading_word(const SkewTableau& t) {
  auto w = reading_word(t);
  std::reverse(w.begin(), w.end());
  return w;
}

std::set<int> descents(const PartialTableau& t) {
  std::map<int, int> row_of;
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int x : rows[i]) row_of[x] = static_cast<int>(i) + 1;
  std::set<int> out;
  for (const auto& [x, r] : row_of) {
    auto it = row_of.find(x + 1);
    if (it != row_of.end() && it->second > r) out.insert(x);
  }
  return out;
}

bool is_yamanouchi(const std::vector<int>& word) {
  std::vector<int> count;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    if (x > static_cast<int>(count.size())) count.resize(x, 0);
    ++count[x - 1];
    if (x > 1 && count[x - 1] > count[x - 2]) return false;
  }
  return true;
}

Partition word_weight(const std::vector<int>& word) {
  std::vector<int> mult;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    if (x > static_cast<int>(mult.size())) mult.resize(x, 0);
    ++mult[x - 1];
  }
  return Partition(std::move(mult));
}

namespace {

void gen_syt(const Partition& target, std::vector<std::vector<int>>& rows,
             const Partition& cur, int next, std::vector<PartialTableau>& out) {
  if (next > target.size()) {
    out.emplace_back(rows);
    return;
  }
  for (const Box& b : addable_corners(cur)) {
    if (b.col > target.part(b.row)) continue;
    if (b.row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[b.row - 1].push_back(next);
    gen_syt(target, rows, add_eps(cur, b.row), next + 1, out);
    rows[b.row - 1].pop_back();
    if (rows.back().empty()) rows.pop_back();
  }
}

// Generic row-major fill of a skew shape with per-cell candidate ranges.
// fill(i, j) enumerates values; constraints are weak left, strict above.
template <typename CellRange, typename Emit>
void fill_skew(const Partition& outer, const Partition& inner,
               const CellRange& candidates, const Emit& emit,
               std::vector<std::vector<int>>& cells, int row, int col) {
  if (row > outer.length()) {
    emit(cells);
    return;
  }
  if (col > outer.part(row)) {
    fill_skew(outer, inner, candidates, emit, cells, row + 1,
              inner.part(row + 1) + 1);
    return;
  }
  int lo = 1;
  if (col > inner.part(row) + 1) {
    lo = cells[row - 1][col - inner.part(row) - 2];  // weak along rows
  }
  if (row > 1 && col > inner.part(row - 1) && col <= outer.part(row - 1)) {
    int above = cells[row - 2][col - inner.part(row - 1) - 1];
    lo = std::max(lo, above + 1);  // strict down columns
  }
  for (int v : candidates(row, lo)) {
    cells[row - 1].push_back(v);
    fill_skew(outer, inner, candidates, emit, cells, row, col + 1);
    cells[row - 1].pop_back();
  }
}

}  // namespace

std::vector<PartialTableau> enumerate_syt(const Partition& shape) {
  std::vector<PartialTableau> out;
  std::vector<std::vector<int>> rows;
  gen_syt(shape, rows, Partition(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                int max_entry) {
  std::vector<SemistandardTableau> out;
  if (shape.length() > max_entry) return out;
  auto candidates = [&](int /*row*/, int lo) {
    std::vector<int> vs;
    for (int v = lo; v <= max_entry; ++v) vs.push_back(v);
    return vs;
  };
  std::vector<std::vector<int>> cells(shape.length());
  fill_skew(shape, Partition(), candidates,
            [&](const std::vector<std::vector<int>>& rows) {
              out.emplace_back(rows);
            },
            cells, 1, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

std::vector<KingTableau> enumerate_king(const Partition& shape, int n) {
  std::vector<KingTableau> out;
  if (shape.length() > 2 * n) return out;
  // Work in rank coordinates; the row bound pins rank >= 2*row-1.
  auto candidates = [&](int row, int lo) {
    std::vector<int> vs;
    for (int v = std::max(lo, 2 * row - 1); v <= 2 * n; ++v) vs.push_back(v);
    return vs;
  };
  std::vector<std::vector<int>> cells(shape.length());
  fill_skew(shape, Partition(), candidates,
            [&](const std::vector<std::vector<int>>& rank_rows) {
              std::vector<std::vector<int>> rows(rank_rows.size());
              for (std::size_t i = 0; i < rank_rows.size(); ++i)
                for (int rk : rank_rows[i]) rows[i].push_back(king_letter(rk));
              out.emplace_back(std::move(rows), n);
            },
            cells, 1, 1);
  std::sort(out.begin(), out.end(), [](const KingTableau& a, const KingTableau& b) {
    auto key = [](const KingTableau& t) {
      std::vector<int> w;
      for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        for (int x : *it) w.push_back(king_rank(x));
      return w;
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<SkewTableau> enumerate_skew_ssyt(const Partition& outer,
                                             const Partition& inner,
                                             const std::vector<int>& content) {
  std::vector<SkewTableau> out;
  if (!outer.contains(inner)) return out;
  int total = 0;
  for (int c : content) total += c;
  if (total != outer.size() - inner.size()) return out;
  std::vector<int> used(content.size(), 0);
  std::vector<std::vector<int>> cells(outer.length());
  auto rec = [&](auto&& self, int row, int col) -> void {
    if (row > outer.length()) {
      out.emplace_back(outer, inner, cells);
      return;
    }
    if (col > outer.part(row)) {
      self(self, row + 1, inner.part(row + 1) + 1);
      return;
    }
    int lo = 1;
    if (col > inner.part(row) + 1)
      lo = cells[row - 1][col - inner.part(row) - 2];
    if (row > 1 && col > inner.part(row - 1) && col <= outer.part(row - 1))
      lo = std::max(lo, cells[row - 2][col - inner.part(row - 1) - 1] + 1);
    for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
      if (used[v - 1] >= content[v - 1]) continue;
      ++used[v - 1];
      cells[row - 1].push_back(v);
      self(self, row, col + 1);
      cells[row - 1].pop_back();
      --used[v - 1];
    }
  };
  rec(rec, 1, inner.part(1) + 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

std::vector<PartialTableau> enumerate_partial_tableaux(
    const std::vector<int>& entry_set) {
  std::vector<int> sorted = entry_set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("entry set has duplicates");
  std::vector<PartialTableau> out;
  for (const Partition& lambda : partitions_of(static_cast<int>(sorted.size()))) {
    for (const PartialTableau& syt : enumerate_syt(lambda)) {
      std::vector<std::vector<int>> rows = syt.rows();
      for (auto& row : rows)
        for (int& x : row) x = sorted[x - 1];
      out.emplace_back(std::move(rows));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

}  // namespace osctab
