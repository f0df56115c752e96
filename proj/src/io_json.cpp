#include "shifted/io_json.hpp"

namespace shifted {

json to_json(const StrictPartition& p) { return json(p.parts()); }

StrictPartition partition_from_json(const json& j) {
  return StrictPartition(j.get<std::vector<int>>());
}

json to_json(const SkewShape& shape) {
  return json{{"outer", shape.outer().parts()}, {"inner", shape.inner().parts()}};
}

SkewShape skew_shape_from_json(const json& j) {
  StrictPartition outer(j.at("outer").get<std::vector<int>>());
  StrictPartition inner = j.contains("inner")
                              ? StrictPartition(j.at("inner").get<std::vector<int>>())
                              : StrictPartition();
  return SkewShape(std::move(outer), std::move(inner));
}

namespace {

template <class E, class Fmt>
json tableau_to_json(const ShiftedTableau<E>& t, Fmt fmt) {
  json entries = json::array();
  for (std::size_t k = 0; k < t.entries().size(); ++k) {
    Cell c = t.shape().cells()[k];
    entries.push_back(json::array({c.row, c.col, fmt(t.entries()[k])}));
  }
  return json{{"shape", to_json(t.shape())}, {"entries", entries}};
}

template <class E, class Parse>
ShiftedTableau<E> tableau_from_json(const json& j, Parse parse) {
  SkewShape shape = skew_shape_from_json(j.at("shape"));
  std::map<Cell, E> by_cell;
  for (const json& item : j.at("entries")) {
    Cell c{item.at(0).get<int>(), item.at(1).get<int>()};
    if (!by_cell.emplace(c, parse(item.at(2).get<std::string>())).second)
      throw std::invalid_argument("duplicate entry for cell " + to_string(c));
  }
  std::vector<E> entries;
  for (Cell c : shape.cells()) {
    auto it = by_cell.find(c);
    if (it == by_cell.end())
      throw std::invalid_argument("missing entry for cell " + to_string(c));
    entries.push_back(it->second);
  }
  if (by_cell.size() != entries.size())
    throw std::invalid_argument("entries outside the shape");
  return ShiftedTableau<E>(shape, std::move(entries));
}

}  // namespace

json to_json(const MarkedTableau& t) {
  return tableau_to_json(t, [](MarkedLetter l) { return to_string(l); });
}

json to_json(const LabeledTableau& t) {
  return tableau_to_json(t, [](LabeledLetter l) { return to_string(l); });
}

json to_json(const VariableTableau& t) {
  return tableau_to_json(t, [](VariableId v) { return to_string(v); });
}

json to_json(const ExponentTableau& t) {
  return tableau_to_json(t, [](const Rational& q) { return q.get_str(); });
}

MarkedTableau marked_tableau_from_json(const json& j) {
  return tableau_from_json<MarkedLetter>(
      j, [](const std::string& s) { return parse_marked_letter(s); });
}

LabeledTableau labeled_tableau_from_json(const json& j) {
  return tableau_from_json<LabeledLetter>(
      j, [](const std::string& s) { return parse_labeled_letter(s); });
}

VariableTableau variable_tableau_from_json(const json& j) {
  return tableau_from_json<VariableId>(j, [](const std::string& s) {
    std::size_t pos = 0;
    VariableId v = parse_variable_id(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters after variable", pos);
    return v;
  });
}

ExponentTableau exponent_tableau_from_json(const json& j) {
  return tableau_from_json<Rational>(j, [](const std::string& s) {
    Rational q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  });
}

json to_json(const std::map<StrictPartition, std::int64_t>& table) {
  json out = json::object();
  for (const auto& [shape, f] : table) out[shape.to_string()] = f;
  return out;
}

std::map<StrictPartition, std::int64_t> coefficient_table_from_json(const json& j) {
  std::map<StrictPartition, std::int64_t> out;
  for (const auto& [key, value] : j.items())
    out.emplace(StrictPartition::parse(key), value.get<std::int64_t>());
  return out;
}

json to_json(const PositionMap& map) {
  json out = json::array();
  for (const auto& [src, dst] : map.forward())
    out.push_back(json::array({json::array({src.row, src.col}), json::array({dst.row, dst.col})}));
  return out;
}

PositionMap position_map_from_json(const json& j) {
  std::map<Cell, Cell> fwd;
  for (const json& pair : j) {
    Cell src{pair.at(0).at(0).get<int>(), pair.at(0).at(1).get<int>()};
    Cell dst{pair.at(1).at(0).get<int>(), pair.at(1).at(1).get<int>()};
    if (!fwd.emplace(src, dst).second)
      throw std::invalid_argument("duplicate source cell in position map");
  }
  return PositionMap(std::move(fwd));
}

json to_json(const CountIdentityReport& report) {
  json rows = json::object();
  for (const auto& [content, row] : report.rows)
    rows[content.to_string()] = json{{"lhs", row.lhs}, {"rhs", row.rhs}};
  return json{{"equal", report.all_equal}, {"rows", rows}};
}

json to_json(const std::vector<DomainViolation>& violations) {
  json out = json::array();
  for (const DomainViolation& v : violations)
    out.push_back(json{{"cell", json::array({v.cell.row, v.cell.col})},
                       {"value", v.value.get_str()},
                       {"requirement", v.requirement}});
  return out;
}

json to_json(const TheoremReport& report) {
  return json{{"lhs", report.lhs.get_str()},
              {"rhs", report.rhs.get_str()},
              {"equal", report.equal},
              {"truncation", report.truncation},
              {"group_order", report.group_order},
              {"distinct_evaluations", report.distinct_evaluations},
              {"domain_warnings", to_json(report.domain_warnings)}};
}

json to_json(const ApproxTheoremReport& report) {
  return json{{"lhs", report.lhs},
              {"rhs", report.rhs},
              {"abs_difference", report.abs_difference},
              {"truncation", report.truncation},
              {"group_order", report.group_order}};
}

}  // namespace shifted
