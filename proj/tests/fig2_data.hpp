// Golden corner labels and crosses of the worked 9x9 growth diagram, in
// matrix coordinates (corner (0,0) top-left, cells 1-based).
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "osctab/oscillating.hpp"
#include "osctab/partition.hpp"

namespace fig2 {

inline osctab::OscillatingTableau running_example() {
  using osctab::Partition;
  return osctab::OscillatingTableau(
      {Partition(), Partition({1}), Partition({1, 1}), Partition({2, 1}),
       Partition({2}), Partition({1}), Partition({2}), Partition({2, 1}),
       Partition({2, 1, 1}), Partition({2, 1})});
}

// corner_labels()[i][j] is the compact string of corner (i, j).
inline std::vector<std::vector<std::string>> corner_labels() {
  return {
      {"0", "1", "2", "21", "31", "41", "411", "421", "431", "441"},
      {"0", "1", "2", "21", "31", "31", "311", "321", "331", "431"},
      {"0", "1", "2", "21", "21", "21", "211", "221", "321", "421"},
      {"0", "1", "2", "21", "21", "21", "211", "221", "321", "421"},
      {"0", "1", "1", "11", "11", "11", "111", "211", "311", "411"},
      {"0", "0", "0", "1", "1", "1", "11", "21", "31", "41"},
      {"0", "0", "0", "1", "1", "1", "11", "21", "31", "41"},
      {"0", "0", "0", "1", "1", "1", "11", "21", "31", "41"},
      {"0", "0", "0", "1", "1", "1", "11", "21", "31", "31"},
      {"0", "0", "0", "1", "1", "1", "11", "21", "21", "21"},
  };
}

inline std::set<std::pair<int, int>> below_diagonal_crosses() {
  return {{5, 1}, {4, 2}, {9, 8}};
}

inline std::set<std::pair<int, int>> all_crosses() {
  return {{5, 1}, {4, 2}, {9, 8}, {1, 5}, {2, 4}, {8, 9}};
}

inline std::vector<std::string> kappa_labels() {
  return {"0", "1", "2", "21", "31", "41", "411", "421", "431", "441"};
}

inline std::vector<std::string> tau_labels() {
  return {"0", "0", "0", "1", "1", "1", "11", "21", "21", "21"};
}

inline std::vector<std::string> nu_labels() {
  return {"0", "1", "2", "2", "3", "4", "4", "4", "41", "42"};
}

}  // namespace fig2
