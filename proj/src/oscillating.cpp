#include "osctab/oscillating.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace osctab {

OscillatingTableau::OscillatingTableau() : shapes_{Partition()} {}

OscillatingTableau::OscillatingTableau(std::vector<Partition> shapes)
    : shapes_(std::move(shapes)) {
  if (shapes_.empty() || !shapes_[0].empty())
    throw std::invalid_argument("oscillating tableau must start at the empty shape");
  steps_.reserve(shapes_.size() - 1);
  for (std::size_t k = 1; k < shapes_.size(); ++k) {
    if (auto box = covers(shapes_[k - 1], shapes_[k])) {
      steps_.push_back({true, *box});
    } else if (auto rbox = covers(shapes_[k], shapes_[k - 1])) {
      steps_.push_back({false, *rbox});
    } else {
      throw std::invalid_argument("consecutive shapes must differ by one box (step " +
                                  std::to_string(k) + ")");
    }
  }
}

const Partition& OscillatingTableau::shape(int k) const {
  if (k < 0 || k > length()) throw std::out_of_range("shape index");
  return shapes_[k];
}

const OscStep& OscillatingTableau::step(int k) const {
  if (k < 1 || k > length()) throw std::out_of_range("step index");
  return steps_[k - 1];
}

std::vector<int> weight(const CrystalWord& word) {
  std::vector<int> wt(word.n, 0);
  for (int l : word.letters) {
    if (l == 0 || l > word.n || l < -word.n)
      throw std::invalid_argument("letter outside {+-1..+-n}");
    wt[std::abs(l) - 1] += l > 0 ? 1 : -1;
  }
  return wt;
}

OscillatingTableau word_to_tableau(const CrystalWord& word) {
  std::vector<int> wt(word.n, 0);
  std::vector<Partition> shapes{Partition()};
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    int l = word.letters[k];
    if (l == 0 || l > word.n || l < -word.n)
      throw std::invalid_argument("letter outside {+-1..+-n}");
    wt[std::abs(l) - 1] += l > 0 ? 1 : -1;
    std::vector<int> parts;
    for (std::size_t i = 0; i < wt.size(); ++i) {
      if (wt[i] < 0 || (i > 0 && wt[i] > wt[i - 1]))
        throw std::invalid_argument(
            "not a highest-weight word: prefix of length " +
            std::to_string(k + 1) + " has non-partition weight");
      if (wt[i] > 0) parts.push_back(wt[i]);
    }
    shapes.emplace_back(parts);
  }
  return OscillatingTableau(std::move(shapes));
}

CrystalWord tableau_to_word(const OscillatingTableau& tableau, int n) {
  int needed = 0;
  for (const Partition& p : tableau.shapes())
    needed = std::max(needed, p.length());
  if (n == 0) n = std::max(needed, 1);
  if (needed > n)
    throw std::invalid_argument("tableau is not n-symplectic for the requested rank");
  CrystalWord word{n, {}};
  for (int k = 1; k <= tableau.length(); ++k) {
    const OscStep& s = tableau.step(k);
    word.letters.push_back(s.expansion ? s.box.row : -s.box.row);
  }
  return word;
}

bool is_n_symplectic(const OscillatingTableau& tableau, int n) {
  for (const Partition& p : tableau.shapes())
    if (p.length() > n) return false;
  return true;
}

std::set<int> descents(const OscillatingTableau& tableau) {
  std::set<int> out;
  for (int k = 1; k + 1 <= tableau.length(); ++k) {
    const OscStep& a = tableau.step(k);
    const OscStep& b = tableau.step(k + 1);
    bool descent = false;
    if (a.expansion && !b.expansion)
      descent = true;
    else if (a.expansion && b.expansion)
      descent = a.box.row < b.box.row;
    else if (!a.expansion && !b.expansion)
      descent = a.box.row > b.box.row;
    if (descent) out.insert(k);
  }
  return out;
}

std::set<int> descents(const CrystalWord& word) {
  auto rank = [&](int l) { return l > 0 ? l : 2 * word.n + 1 + l; };
  std::set<int> out;
  for (std::size_t k = 0; k + 1 < word.letters.size(); ++k)
    if (rank(word.letters[k]) < rank(word.letters[k + 1]))
      out.insert(static_cast<int>(k) + 1);
  return out;
}

namespace {

void gen_oscillating(int remaining, int n, const Partition& target,
                     std::vector<Partition>& acc,
                     std::vector<OscillatingTableau>& out) {
  const Partition cur = acc.back();  // copy: push_back below reallocates
  // At least one step per box of the symmetric difference, matching parity.
  int gap = 0;
  for (int i = 1; i <= std::max(cur.length(), target.length()); ++i)
    gap += std::abs(cur.part(i) - target.part(i));
  if (gap > remaining || (remaining - gap) % 2 != 0) return;
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (const Box& b : addable_corners(cur)) {
    if (b.row > n) continue;
    acc.push_back(add_eps(cur, b.row));
    gen_oscillating(remaining - 1, n, target, acc, out);
    acc.pop_back();
  }
  for (const Box& b : removable_corners(cur)) {
    acc.push_back(sub_eps(cur, b.row));
    gen_oscillating(remaining - 1, n, target, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<OscillatingTableau> enumerate_oscillating(int r, int n,
                                                      const Partition& shape) {
  if (r < 0 || n < 0) throw std::invalid_argument("negative bound");
  std::vector<OscillatingTableau> out;
  if (shape.length() > n) return out;
  std::vector<Partition> acc{Partition()};
  gen_oscillating(r, n, shape, acc, out);
  return out;
}

}  // namespace osctab
