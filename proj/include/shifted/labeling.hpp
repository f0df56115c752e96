#pragma once

#include <map>
#include <string>
#include <string_view>

#include "shifted/jdt.hpp"
#include "shifted/tableau.hpp"
#include "shifted/word.hpp"

namespace shifted {

// Subscripts the entries of each base: marked entries top to bottom first,
// then unmarked entries left to right (by column), numbering 1,2,...
// Shape and marks are preserved; the result has pairwise distinct letters
// after unmarking.
LabeledTableau phi_t(const MarkedTableau& t);

// Drops the subscripts.  Throws std::invalid_argument when the stripped
// filling is not a valid Q-tableau.
MarkedTableau phi_t_inverse(const LabeledTableau& t);

// Word counterpart: per base, marked occurrences are numbered right to
// left, then unmarked occurrences left to right; all marks are removed.
LabeledWord phi_w(const MarkedWord& w);

// The variable attached to a box of the source shape.
struct VariableId {
  Cell source;
  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

std::string to_string(VariableId v);  // "v1_4"
VariableId parse_variable_id(std::string_view text, std::size_t* pos);

using VariableTableau = ShiftedTableau<VariableId>;

// v_{ij} in box (i,j).
VariableTableau identity_variables(const SkewShape& shape);

VariableTableau parse_variable_tableau(const SkewShape& shape, std::string_view text);
std::string to_text(const VariableTableau& t);

// Pushes the variables of vars along the box bijection induced by
// rectifying the subscripted copy of filling; the result lives on the
// rectified shape.
VariableTableau transport(const VariableTableau& vars, const MarkedTableau& filling);

// One transported tableau per shape with positive coefficient: the first
// filling, in enumeration order over the matching content, whose
// rectification has that shape.
std::map<StrictPartition, VariableTableau> u_representatives(const SkewShape& shape,
                                                             const VariableTableau& vars);

}  // namespace shifted
