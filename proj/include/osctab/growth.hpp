#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "osctab/oscillating.hpp"
#include "osctab/rs.hpp"
#include "osctab/tableau.hpp"

namespace osctab {

// Forward local rule: the top-right corner rho of a cell from the other
// three corners and the cross status.  Cells carry a cross only when
// lambda = mu = nu.
Partition forward_rule(const Partition& lambda, const Partition& mu,
                       const Partition& nu, bool cross);

// Backward local rule: bottom-left corner lambda and cross status from
// mu, nu, rho.  Exact inverse of forward_rule.
std::pair<Partition, bool> backward_rule(const Partition& mu,
                                         const Partition& nu,
                                         const Partition& rho);

// Square grid of partition-labelled corners with at most one cross per
// row and per column; matrix coordinates, corner (0,0) top-left, cells
// 1-based.  Validated against the local rules on construction.
class GrowthDiagram {
 public:
  GrowthDiagram();  // size 0
  GrowthDiagram(std::vector<std::vector<Partition>> corners,
                std::set<std::pair<int, int>> crosses);

  int size() const { return size_; }
  const Partition& corner(int i, int j) const;  // 0..size
  bool has_cross(int cell_row, int cell_col) const;
  const std::set<std::pair<int, int>>& crosses() const { return crosses_; }
  std::vector<Partition> top_border() const;     // corners (0, j)
  std::vector<Partition> bottom_border() const;  // corners (size, j)

  friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;

 private:
  int size_ = 0;
  std::vector<std::vector<Partition>> corners_;
  std::set<std::pair<int, int>> crosses_;
};

// Chain of shapes of the restrictions of t to entries <= k, k = 0..length.
std::vector<Partition> tableau_chain(const PartialTableau& t, int length);

// Inverse: the partial tableau encoded by a chain in which each step is
// constant or adds one box.
PartialTableau chain_tableau(const std::vector<Partition>& chain);

// Single-row growth: bottom border chain plus one cross in the cell of
// column cross_col; returns the top border chain, which encodes
// row_insert(P, cross_col).
std::vector<Partition> grow_row(const std::vector<Partition>& bottom,
                                int cross_col);

struct RobyResult {
  std::set<int> a;
  PartialInvolution iota;
  PartialTableau t;
  PartialTableau q;
  PartialTableau i;
  std::vector<Partition> kappa;  // upper border of the main diagram
  std::vector<Partition> tau;    // lower border of the main diagram
  std::vector<Partition> nu;     // upper border of the second diagram
  GrowthDiagram diagram;
  GrowthDiagram second_diagram;
};

// Growth-diagram form of Sundaram's correspondence: conjugate shapes down
// the main diagonal, backward rules below, mirrored crosses, forward rules
// above, then a second all-empty-border diagram for I.
RobyResult roby(const OscillatingTableau& tableau);

// Stacks the growth diagram of a seed permutation (insertion tableau T^t)
// under the tableau's diagram and reads descents by comparing cross
// heights in adjacent columns.
std::set<int> descent_visualization(const OscillatingTableau& tableau,
                                    const std::vector<int>& seed_word);

// Checks, for one cell of a diagram whose left border is empty, that
// lambda = mu holds exactly when no cell strictly to its left in the same
// row carries a cross.
bool lemma_left_cross(const GrowthDiagram& d, int cell_row, int cell_col);

// Corner labels as compact partition strings with X marking crossed cells.
std::string render_ascii(const GrowthDiagram& d);

}  // namespace osctab
