#include "shifted/labeling.hpp"

#include <algorithm>

#include "shifted/lr.hpp"

namespace shifted {

LabeledTableau phi_t(const MarkedTableau& t) {
  const std::vector<Cell>& cells = t.shape().cells();
  std::vector<LabeledLetter> labeled(cells.size());
  const int max_base = content_of(t).max_base();
  for (int base = 1; base <= max_base; ++base) {
    // Marked entries, scanned by row; at most one per row.
    std::vector<std::size_t> marked, plain;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (t.entries()[k].base != base) continue;
      (t.entries()[k].marked ? marked : plain).push_back(k);
    }
    // Unmarked entries continue the numbering by column; at most one per
    // column, so the order is well defined.
    std::sort(plain.begin(), plain.end(), [&](std::size_t a, std::size_t b) {
      return cells[a].col < cells[b].col;
    });
    int sub = 0;
    for (std::size_t k : marked) labeled[k] = {base, ++sub, true};
    for (std::size_t k : plain) labeled[k] = {base, ++sub, false};
  }
  return LabeledTableau(t.shape(), std::move(labeled));
}

MarkedTableau phi_t_inverse(const LabeledTableau& t) {
  std::vector<MarkedLetter> stripped;
  stripped.reserve(t.entries().size());
  for (const LabeledLetter& l : t.entries()) stripped.push_back({l.base, l.marked});
  MarkedTableau out(t.shape(), std::move(stripped));
  if (auto violation = validate(Kind::Q, out))
    throw std::invalid_argument("removing labels yields an invalid tableau: " +
                                to_string(violation->rule) + " at " +
                                to_string(violation->cell));
  return out;
}

LabeledWord phi_w(const MarkedWord& w) {
  LabeledWord out(w.size());
  const int max_base = content_of(w).max_base();
  for (int base = 1; base <= max_base; ++base) {
    int sub = 0;
    for (std::size_t i = w.size(); i-- > 0;)
      if (w[i].base == base && w[i].marked) out[i] = {base, ++sub, false};
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i].base == base && !w[i].marked) out[i] = {base, ++sub, false};
  }
  return out;
}

std::string to_string(VariableId v) {
  return "v" + std::to_string(v.source.row) + "_" + std::to_string(v.source.col);
}

VariableId parse_variable_id(std::string_view text, std::size_t* pos) {
  if (*pos >= text.size() || text[*pos] != 'v') throw ParseError("expected 'v'", *pos);
  ++*pos;
  auto read_int = [&](const char* what) {
    if (*pos >= text.size() || text[*pos] < '0' || text[*pos] > '9')
      throw ParseError(std::string("expected ") + what, *pos);
    int value = 0;
    while (*pos < text.size() && text[*pos] >= '0' && text[*pos] <= '9') {
      value = value * 10 + (text[*pos] - '0');
      ++*pos;
    }
    return value;
  };
  int row = read_int("row");
  if (*pos >= text.size() || text[*pos] != '_') throw ParseError("expected '_'", *pos);
  ++*pos;
  int col = read_int("column");
  return VariableId{{row, col}};
}

VariableTableau identity_variables(const SkewShape& shape) {
  std::vector<VariableId> entries;
  entries.reserve(shape.cells().size());
  for (Cell c : shape.cells()) entries.push_back(VariableId{c});
  return VariableTableau(shape, std::move(entries));
}

VariableTableau parse_variable_tableau(const SkewShape& shape, std::string_view text) {
  // Same row grammar as letter tableaux.
  std::vector<VariableId> entries;
  std::size_t pos = 0;
  for (Cell c : shape.cells()) {
    (void)c;
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ';' || text[pos] == ' ')) ++pos;
    entries.push_back(parse_variable_id(text, &pos));
  }
  while (pos < text.size() && (text[pos] == ',' || text[pos] == ';' || text[pos] == ' ')) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters after variable tableau", pos);
  return VariableTableau(shape, std::move(entries));
}

std::string to_text(const VariableTableau& t) {
  std::string out;
  int row = 1;
  for (std::size_t k = 0; k < t.entries().size(); ++k) {
    Cell c = t.shape().cells()[k];
    if (k > 0 && c.row == row) out += ',';
    for (; row < c.row; ++row) out += ';';
    out += to_string(t.entries()[k]);
  }
  return out;
}

namespace {

VariableTableau apply_positions(const VariableTableau& vars, const PositionMap& positions,
                                const SkewShape& target) {
  std::vector<VariableId> entries;
  entries.reserve(target.cells().size());
  for (Cell c : target.cells()) entries.push_back(vars.at(positions.preimage(c)));
  return VariableTableau(target, std::move(entries));
}

}  // namespace

VariableTableau transport(const VariableTableau& vars, const MarkedTableau& filling) {
  if (vars.shape() != filling.shape())
    throw std::invalid_argument("variable tableau shape " + vars.shape().to_string() +
                                " does not match filling shape " +
                                filling.shape().to_string());
  RectifyResult<LabeledLetter> rect = rectify(phi_t(filling));
  return apply_positions(vars, rect.positions, rect.tableau.shape());
}

std::map<StrictPartition, VariableTableau> u_representatives(const SkewShape& shape,
                                                             const VariableTableau& vars) {
  if (vars.shape() != shape)
    throw std::invalid_argument("variable tableau does not live on " + shape.to_string());
  std::map<StrictPartition, VariableTableau> out;
  if (shape.cell_count() == 0) return out;
  for (const auto& [nu, f] : g_q(shape)) {
    const Content content(nu.parts());
    enumerate(Kind::Q, shape, nu.length(), content, [&](const MarkedTableau& filling) {
      RectifyResult<LabeledLetter> rect = rectify(phi_t(filling));
      if (rect.tableau.shape().outer() != nu) return true;
      out.emplace(nu, apply_positions(vars, rect.positions, rect.tableau.shape()));
      return false;
    });
  }
  return out;
}

}  // namespace shifted
