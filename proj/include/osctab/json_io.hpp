#pragma once

#include <json.hpp>

#include "osctab/growth.hpp"
#include "osctab/laurent.hpp"
#include "osctab/oscillating.hpp"
#include "osctab/partition.hpp"
#include "osctab/rs.hpp"
#include "osctab/tableau.hpp"

namespace osctab {

// Wire formats:
//   partition           [2,1], empty as []
//   tableau             array of rows
//   skew tableau        {"inner": [...], "rows": [[null,null,1],...]}
//   king tableau        rows of signed letters (order rank(i)=2i-1,
//                       rank(-i)=2i)
//   involution          sorted list of pairs [[1,5],[2,4],[8,9]]
//   oscillating tableau array of partitions
//   crystal word        {"n": 3, "letters": [1,2,-1,...]}
//   polynomial          {"nvars": k, "terms": [{"exponents": [...],
//                       "coefficient": c}, ...]} sorted by exponents
//   growth diagram      {"size": r, "corners": [[...]], "crosses": [[i,j]]}

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartialTableau& t);
PartialTableau partial_tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SemistandardTableau& t);

nlohmann::json to_json(const SkewTableau& t);
SkewTableau skew_tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KingTableau& t);
KingTableau king_tableau_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const PartialInvolution& iota);
PartialInvolution involution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OscillatingTableau& t);
OscillatingTableau oscillating_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CrystalWord& w);
CrystalWord crystal_word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GrowthDiagram& d);

nlohmann::json to_json(const std::set<int>& s);

}  // namespace osctab
