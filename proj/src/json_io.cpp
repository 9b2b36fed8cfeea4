#include "osctab/json_io.hpp"

#include <stdexcept>

namespace osctab {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  return Partition(j.get<std::vector<int>>());
}

json to_json(const PartialTableau& t) { return json(t.rows()); }

PartialTableau partial_tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
  return PartialTableau(j.get<std::vector<std::vector<int>>>());
}

json to_json(const SemistandardTableau& t) { return json(t.rows()); }

json to_json(const SkewTableau& t) {
  json rows = json::array();
  for (int row = 1; row <= t.outer().length(); ++row) {
    json cells = json::array();
    for (int col = 1; col <= t.outer().part(row); ++col) {
      if (col <= t.inner().part(row))
        cells.push_back(nullptr);
      else
        cells.push_back(t.at(row, col));
    }
    rows.push_back(std::move(cells));
  }
  return json{{"inner", to_json(t.inner())}, {"rows", std::move(rows)}};
}

SkewTableau skew_tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("inner") || !j.contains("rows"))
    throw std::invalid_argument("skew tableau must carry inner and rows");
  Partition inner = partition_from_json(j["inner"]);
  std::vector<int> outer_parts;
  std::vector<std::vector<int>> cells;
  for (const auto& row : j["rows"]) {
    outer_parts.push_back(static_cast<int>(row.size()));
    std::vector<int> entries;
    int seen_nulls = 0;
    for (const auto& cell : row) {
      if (cell.is_null())
        ++seen_nulls;
      else
        entries.push_back(cell.get<int>());
    }
    int expected = inner.part(static_cast<int>(outer_parts.size()));
    if (seen_nulls != expected)
      throw std::invalid_argument("null cells must match the inner shape");
    cells.push_back(std::move(entries));
  }
  return SkewTableau(Partition(std::move(outer_parts)), std::move(inner),
                     std::move(cells));
}

json to_json(const KingTableau& t) { return json(t.rows()); }

KingTableau king_tableau_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
  return KingTableau(j.get<std::vector<std::vector<int>>>(), n);
}

json to_json(const PartialInvolution& iota) {
  json out = json::array();
  for (auto [a, b] : iota.pairs()) out.push_back(json::array({a, b}));
  return out;
}

PartialInvolution involution_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("involution must be a list of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("involution entries must be pairs");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return PartialInvolution(pairs);
}

json to_json(const OscillatingTableau& t) {
  json out = json::array();
  for (const Partition& p : t.shapes()) out.push_back(to_json(p));
  return out;
}

OscillatingTableau oscillating_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("oscillating tableau must be an array of partitions");
  std::vector<Partition> shapes;
  for (const auto& p : j) shapes.push_back(partition_from_json(p));
  return OscillatingTableau(std::move(shapes));
}

json to_json(const CrystalWord& w) {
  return json{{"n", w.n}, {"letters", w.letters}};
}

CrystalWord crystal_word_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("letters"))
    throw std::invalid_argument("crystal word must carry n and letters");
  return {j["n"].get<int>(), j["letters"].get<std::vector<int>>()};
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e}, {"coefficient", c}});
  return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial must carry nvars and terms");
  LaurentPoly out(j["nvars"].get<int>());
  for (const auto& t : j["terms"])
    out += LaurentPoly::monomial(t["exponents"].get<std::vector<int>>(),
                                 t["coefficient"].get<std::int64_t>());
  return out;
}

json to_json(const GrowthDiagram& d) {
  json corners = json::array();
  for (int i = 0; i <= d.size(); ++i) {
    json row = json::array();
    for (int j = 0; j <= d.size(); ++j) row.push_back(to_json(d.corner(i, j)));
    corners.push_back(std::move(row));
  }
  json crosses = json::array();
  for (auto [i, j] : d.crosses()) crosses.push_back(json::array({i, j}));
  return json{{"size", d.size()}, {"corners", std::move(corners)},
              {"crosses", std::move(crosses)}};
}

json to_json(const std::set<int>& s) { return json(s); }

}  // namespace osctab
