#pragma once

#include <json.hpp>

#include "shifted/jdt.hpp"
#include "shifted/labeling.hpp"
#include "shifted/lr.hpp"
#include "shifted/mzf.hpp"
#include "shifted/tableau.hpp"
#include "shifted/word.hpp"

namespace shifted {

using nlohmann::json;

// {"outer":[6,3,1],"inner":[3,1]}
json to_json(const SkewShape& shape);
SkewShape skew_shape_from_json(const json& j);

json to_json(const StrictPartition& p);
StrictPartition partition_from_json(const json& j);

// {"shape":{...},"entries":[[1,4,"1"],[1,5,"2'"],...]}
json to_json(const MarkedTableau& t);
json to_json(const LabeledTableau& t);
json to_json(const VariableTableau& t);
json to_json(const ExponentTableau& t);
MarkedTableau marked_tableau_from_json(const json& j);
LabeledTableau labeled_tableau_from_json(const json& j);
VariableTableau variable_tableau_from_json(const json& j);
ExponentTableau exponent_tableau_from_json(const json& j);

// {"(4,2,1)":1,...}
json to_json(const std::map<StrictPartition, std::int64_t>& table);
std::map<StrictPartition, std::int64_t> coefficient_table_from_json(const json& j);

// [[[1,4],[1,1]],...] sorted by source cell
json to_json(const PositionMap& map);
PositionMap position_map_from_json(const json& j);

json to_json(const CountIdentityReport& report);
json to_json(const TheoremReport& report);
json to_json(const ApproxTheoremReport& report);
json to_json(const std::vector<DomainViolation>& violations);

}  // namespace shifted
