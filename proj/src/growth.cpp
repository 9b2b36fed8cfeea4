#include "osctab/growth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace osctab {

namespace {

// "equal or covered": the relation required along every grid edge.
bool grows_to(const Partition& closer, const Partition& further) {
  return closer == further || covers(closer, further).has_value();
}

// Row index of the single added box when mu = lambda + eps_i.
int added_row(const Partition& lambda, const Partition& mu) {
  auto box = covers(lambda, mu);
  if (!box) throw std::logic_error("shapes do not differ by one box");
  return box->row;
}

}  // namespace

Partition forward_rule(const Partition& lambda, const Partition& mu,
                       const Partition& nu, bool cross) {
  if (!grows_to(lambda, mu) || !grows_to(lambda, nu))
    throw std::invalid_argument("forward_rule: corners do not grow from lambda");
  if (cross) {
    if (!(lambda == mu && lambda == nu))
      throw std::invalid_argument("forward_rule: cross requires lambda = mu = nu");
    return add_eps(lambda, 1);
  }
  if (!(mu == nu)) return union_of(mu, nu);          // F1
  if (!(lambda == mu)) {                             // F2
    int i = added_row(lambda, mu);
    return add_eps(mu, i + 1);
  }
  return lambda;                                     // F3, empty cell
}

std::pair<Partition, bool> backward_rule(const Partition& mu,
                                         const Partition& nu,
                                         const Partition& rho) {
  if (!grows_to(mu, rho) || !grows_to(nu, rho))
    throw std::invalid_argument("backward_rule: corners do not grow to rho");
  if (!(mu == nu)) return {intersection_of(mu, nu), false};  // B1
  if (!(mu == rho)) {                                        // B2
    int i = added_row(mu, rho);
    if (i == 1) return {mu, true};
    return {sub_eps(mu, i - 1), false};
  }
  return {mu, false};                                        // B3
}

GrowthDiagram::GrowthDiagram() : corners_{{Partition()}} {}

GrowthDiagram::GrowthDiagram(std::vector<std::vector<Partition>> corners,
                             std::set<std::pair<int, int>> crosses)
    : corners_(std::move(corners)), crosses_(std::move(crosses)) {
  size_ = static_cast<int>(corners_.size()) - 1;
  if (size_ < 0)
    throw std::invalid_argument("growth diagram needs at least one corner row");
  for (const auto& row : corners_)
    if (static_cast<int>(row.size()) != size_ + 1)
      throw std::invalid_argument("growth diagram corner grid must be square");
  std::set<int> rows_used, cols_used;
  for (auto [i, j] : crosses_) {
    if (i < 1 || i > size_ || j < 1 || j > size_)
      throw std::invalid_argument("cross outside the grid");
    if (!rows_used.insert(i).second || !cols_used.insert(j).second)
      throw std::invalid_argument("more than one cross in a row or column");
  }
  for (int i = 0; i <= size_; ++i)
    for (int j = 0; j <= size_; ++j) {
      if (j + 1 <= size_ && !grows_to(corners_[i][j], corners_[i][j + 1]))
        throw std::invalid_argument("edge violates the covering relation");
      if (i + 1 <= size_ && !grows_to(corners_[i + 1][j], corners_[i][j]))
        throw std::invalid_argument("edge violates the covering relation");
    }
  for (int i = 1; i <= size_; ++i)
    for (int j = 1; j <= size_; ++j) {
      Partition rho = forward_rule(corners_[i][j - 1], corners_[i - 1][j - 1],
                                   corners_[i][j], has_cross(i, j));
      if (!(rho == corners_[i - 1][j]))
        throw std::invalid_argument("cell inconsistent with the local rules");
    }
}

const Partition& GrowthDiagram::corner(int i, int j) const {
  if (i < 0 || i > size_ || j < 0 || j > size_)
    throw std::out_of_range("corner index");
  return corners_[i][j];
}

bool GrowthDiagram::has_cross(int cell_row, int cell_col) const {
  return crosses_.count({cell_row, cell_col}) > 0;
}

std::vector<Partition> GrowthDiagram::top_border() const { return corners_[0]; }

std::vector<Partition> GrowthDiagram::bottom_border() const {
  return corners_[size_];
}

std::vector<Partition> tableau_chain(const PartialTableau& t, int length) {
  auto es = t.entries();
  if (!es.empty() && es.back() > length)
    throw std::invalid_argument("tableau entry exceeds chain length");
  std::vector<Partition> chain(length + 1);
  for (int k = 1; k <= length; ++k) {
    chain[k] = chain[k - 1];
    if (auto b = t.find(k)) chain[k] = add_eps(chain[k - 1], b->row);
  }
  return chain;
}

PartialTableau chain_tableau(const std::vector<Partition>& chain) {
  if (chain.empty() || !chain[0].empty())
    throw std::invalid_argument("chain must start at the empty shape");
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k] == chain[k - 1]) continue;
    auto box = covers(chain[k - 1], chain[k]);
    if (!box)
      throw std::invalid_argument("chain step must be constant or add one box");
    if (box->row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[box->row - 1].push_back(static_cast<int>(k));
  }
  return PartialTableau(std::move(rows));
}

std::vector<Partition> grow_row(const std::vector<Partition>& bottom,
                                int cross_col) {
  int m = static_cast<int>(bottom.size()) - 1;
  if (m < 1 || cross_col < 1 || cross_col > m)
    throw std::invalid_argument("grow_row: cross column outside the row");
  chain_tableau(bottom);  // validates the chain
  if (!(bottom[cross_col] == bottom[cross_col - 1]))
    throw std::invalid_argument("grow_row: crossed cell must have equal bottom edge");
  std::vector<Partition> top(m + 1);
  for (int j = 1; j <= m; ++j)
    top[j] = forward_rule(bottom[j - 1], top[j - 1], bottom[j], j == cross_col);
  return top;
}

RobyResult roby(const OscillatingTableau& tableau) {
  int r = tableau.length();
  std::vector<std::vector<Partition>> corners(
      r + 1, std::vector<Partition>(r + 1));
  std::set<std::pair<int, int>> crosses;

  // R1: conjugates down the main diagonal.
  for (int k = 0; k <= r; ++k) corners[k][k] = conjugate(tableau.shape(k));

  // R2: backward rules below the diagonal.  Neighbouring diagonal labels
  // always differ, so the subdiagonal comes straight from B1.
  for (int k = 1; k <= r; ++k)
    corners[k][k - 1] = intersection_of(corners[k - 1][k - 1], corners[k][k]);
  for (int d = 1; d <= r - 1; ++d)
    for (int i = d + 1; i <= r; ++i) {
      int j = i - d;
      auto [lambda, cross] =
          backward_rule(corners[i - 1][j - 1], corners[i][j], corners[i - 1][j]);
      corners[i][j - 1] = lambda;
      if (cross) crosses.insert({i, j});
    }

  // R3: mirror the crosses across the diagonal.
  std::set<std::pair<int, int>> mirrored = crosses;
  for (auto [i, j] : crosses) mirrored.insert({j, i});
  crosses = std::move(mirrored);

  // R4: forward rules on and above the diagonal.
  for (int k = 1; k <= r; ++k)
    corners[k - 1][k] = forward_rule(corners[k][k - 1], corners[k - 1][k - 1],
                                     corners[k][k], false);
  for (int d = 1; d <= r - 1; ++d)
    for (int i = 1; i <= r - d; ++i) {
      int j = i + d;
      corners[i - 1][j] =
          forward_rule(corners[i][j - 1], corners[i - 1][j - 1], corners[i][j],
                       crosses.count({i, j}) > 0);
    }

  RobyResult out;
  out.diagram = GrowthDiagram(corners, crosses);
  out.kappa = out.diagram.top_border();
  out.tau = out.diagram.bottom_border();

  std::vector<Partition> kappa_t, tau_t;
  for (const Partition& p : out.kappa) kappa_t.push_back(conjugate(p));
  for (const Partition& p : out.tau) tau_t.push_back(conjugate(p));
  out.q = chain_tableau(kappa_t);
  out.t = chain_tableau(tau_t);

  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : crosses) {
    out.a.insert(j);
    if (j < i) pairs.emplace_back(j, i);
  }
  out.iota = PartialInvolution(pairs);

  // Second diagram: same crosses, all-empty lower and left borders,
  // forward rules throughout.
  std::vector<std::vector<Partition>> second(r + 1,
                                             std::vector<Partition>(r + 1));
  for (int i = r - 1; i >= 0; --i)
    for (int j = 1; j <= r; ++j)
      second[i][j] = forward_rule(second[i + 1][j - 1], second[i][j - 1],
                                  second[i + 1][j], crosses.count({i + 1, j}) > 0);
  out.second_diagram = GrowthDiagram(second, crosses);
  out.nu = out.second_diagram.top_border();
  std::vector<Partition> nu_t;
  for (const Partition& p : out.nu) nu_t.push_back(conjugate(p));
  out.i = chain_tableau(nu_t);
  return out;
}

std::set<int> descent_visualization(const OscillatingTableau& tableau,
                                    const std::vector<int>& seed_word) {
  RobyResult rb = roby(tableau);
  PartialTableau target = transpose(rb.t);

  PartialTableau inserted;
  for (int x : seed_word) inserted = row_insert(inserted, x).first;
  if (!(inserted == target))
    throw std::invalid_argument(
        "seed permutation does not insert to the transposed tableau");

  int r = tableau.length();
  int h = static_cast<int>(seed_word.size());
  std::map<int, int> cross_row;
  for (auto [i, j] : rb.diagram.crosses()) cross_row[j] = i;
  for (int t = 1; t <= h; ++t) cross_row[seed_word[t - 1]] = r + h - t + 1;
  if (static_cast<int>(cross_row.size()) != r)
    throw std::logic_error("stacked diagram does not cover every column");

  std::set<int> out;
  for (int k = 1; k + 1 <= r; ++k)
    if (cross_row.at(k) > cross_row.at(k + 1)) out.insert(k);
  return out;
}

bool lemma_left_cross(const GrowthDiagram& d, int cell_row, int cell_col) {
  if (cell_row < 1 || cell_row > d.size() || cell_col < 1 ||
      cell_col > d.size())
    throw std::invalid_argument("cell outside the grid");
  for (int i = 0; i <= d.size(); ++i)
    if (!d.corner(i, 0).empty())
      throw std::invalid_argument("lemma requires an empty left border");
  bool left_edge_equal =
      d.corner(cell_row, cell_col - 1) == d.corner(cell_row - 1, cell_col - 1);
  bool cross_left = false;
  for (int j = 1; j < cell_col; ++j)
    if (d.has_cross(cell_row, j)) cross_left = true;
  return left_edge_equal == !cross_left;
}

std::string render_ascii(const GrowthDiagram& d) {
  int width = 1;
  for (int i = 0; i <= d.size(); ++i)
    for (int j = 0; j <= d.size(); ++j)
      width = std::max(width, static_cast<int>(d.corner(i, j).to_string().size()));
  width += 2;
  std::string out;
  for (int i = 0; i <= d.size(); ++i) {
    std::string corner_line, cell_line;
    for (int j = 0; j <= d.size(); ++j) {
      std::string label = d.corner(i, j).to_string();
      label.resize(width, ' ');
      corner_line += label;
      if (i < d.size() && j < d.size()) {
        std::string mark(width, ' ');
        mark[width / 2] = d.has_cross(i + 1, j + 1) ? 'X' : '.';
        cell_line += mark;
      }
    }
    while (!corner_line.empty() && corner_line.back() == ' ') corner_line.pop_back();
    out += corner_line;
    out += '\n';
    if (i < d.size()) {
      while (!cell_line.empty() && cell_line.back() == ' ') cell_line.pop_back();
      out += cell_line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace osctab
