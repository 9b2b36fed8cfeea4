#pragma once

#include <set>
#include <vector>

#include "osctab/partition.hpp"
#include "osctab/tableau.hpp"

namespace osctab {

struct OscStep {
  bool expansion = true;
  Box box;
  friend bool operator==(const OscStep&, const OscStep&) = default;
};

// Sequence of partitions starting at the empty shape in which consecutive
// shapes differ by exactly one box.
class OscillatingTableau {
 public:
  OscillatingTableau();  // length 0
  explicit OscillatingTableau(std::vector<Partition> shapes);

  int length() const { return static_cast<int>(shapes_.size()) - 1; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const Partition& shape(int k) const;  // 0..length
  const Partition& final_shape() const { return shapes_.back(); }
  const OscStep& step(int k) const;  // 1..length

  friend bool operator==(const OscillatingTableau&,
                         const OscillatingTableau&) = default;

 private:
  std::vector<Partition> shapes_;
  std::vector<OscStep> steps_;
};

// Word over {+-1, ..., +-n} read as a vertex of the r-fold tensor power of
// the defining symplectic crystal.
struct CrystalWord {
  int n = 0;
  std::vector<int> letters;
  friend bool operator==(const CrystalWord&, const CrystalWord&) = default;
};

// Letter i minus letter -i counts, as an n-vector.
std::vector<int> weight(const CrystalWord& word);

// Mutually inverse; word_to_tableau rejects words that are not highest
// weight, naming the offending prefix.
OscillatingTableau word_to_tableau(const CrystalWord& word);
// n = 0 picks the minimal rank (the largest row index touched).
CrystalWord tableau_to_word(const OscillatingTableau& tableau, int n = 0);

bool is_n_symplectic(const OscillatingTableau& tableau, int n);

// Descents by case analysis on successive steps: expansion/contraction
// always, two expansions by strictly-above rows, two contractions by
// strictly-below rows.
std::set<int> descents(const OscillatingTableau& tableau);

// Chain order 1 < 2 < ... < n < -n < ... < -1; descent at k when w_k
// strictly precedes w_{k+1}.
std::set<int> descents(const CrystalWord& word);

// All n-symplectic oscillating tableaux of length r and final shape,
// deterministic depth-first order (expansions by row, then contractions).
std::vector<OscillatingTableau> enumerate_oscillating(int r, int n,
                                                      const Partition& shape);

}  // namespace osctab
