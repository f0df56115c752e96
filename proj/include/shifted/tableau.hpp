#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/letters.hpp"
#include "shifted/partition.hpp"

namespace shifted {

// Per-base occurrence counts, 1-based, trailing zeros trimmed.
class Content {
 public:
  Content() = default;
  explicit Content(std::vector<int> counts);

  static Content parse(std::string_view text);  // "2,4,2"

  int count(int base) const;
  int max_base() const { return static_cast<int>(counts_.size()); }
  int total() const;
  const std::vector<int>& counts() const { return counts_; }

  Content operator+(const Content& other) const;
  std::string to_string() const;  // "(2,4,2)", "()" when empty

  friend auto operator<=>(const Content&, const Content&) = default;

 private:
  std::vector<int> counts_;
};

// A filling of a skew shifted shape; entries are stored row-major, aligned
// with shape().cells().  Immutable after construction.
template <class E>
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  ShiftedTableau(SkewShape shape, std::vector<E> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.cell_count())
      throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                  " does not match shape " + shape_.to_string());
  }

  const SkewShape& shape() const { return shape_; }
  const std::vector<E>& entries() const { return entries_; }
  bool normal() const { return shape_.normal(); }

  const E& at(Cell c) const {
    int idx = shape_.index_of(c);
    if (idx < 0) throw std::out_of_range("no cell " + shifted::to_string(c) + " in shape");
    return entries_[static_cast<std::size_t>(idx)];
  }

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<E> entries_;
};

using MarkedTableau = ShiftedTableau<MarkedLetter>;
using LabeledTableau = ShiftedTableau<LabeledLetter>;

enum class Kind { P, Q };

enum class Rule { PST1, PST2, PST3, PST4 };

std::string to_string(Rule r);

struct Violation {
  Rule rule;
  Cell cell;
  std::string detail;
};

namespace detail {

// Rule checks shared by the validator and the enumerator.  A candidate at
// `cell` is admissible against already-placed neighbors iff:
//   rows and columns weakly increase              (PST1)
//   no equal marked letter twice in a row         (PST2)
//   no equal unmarked letter twice in a column    (PST3)
//   Kind::P: nothing marked on the diagonal       (PST4)
// Rows and columns of a skew shifted diagram are contiguous, so comparing
// with the left and upper neighbors is enough for PST1-PST3.
template <class E>
std::optional<Rule> local_rule_violation(Kind kind, Cell cell, const E& entry,
                                         const E* left, const E* above) {
  if (kind == Kind::P && entry.marked && cell.diagonal()) return Rule::PST4;
  if (left) {
    if (entry < *left) return Rule::PST1;
    if (entry == *left && entry.marked) return Rule::PST2;
  }
  if (above) {
    if (entry < *above) return Rule::PST1;
    if (entry == *above && !entry.marked) return Rule::PST3;
  }
  return std::nullopt;
}

}  // namespace detail

// Checks PST1-PST3 (and PST4 for Kind::P).  Rules are checked in order
// over row-major cells and the reported cell is the one that breaks the
// rule.  Repeats (PST2/PST3) are detected on adjacent pairs, which is
// complete once PST1 holds; any PST1 break is reported first.
template <class E>
std::optional<Violation> validate(Kind kind, const ShiftedTableau<E>& t);

// Deterministic enumeration of valid fillings over an ascending alphabet,
// lexicographic in (row-major cell position, letter order).  `yield`
// returns false to stop early.
template <class E>
void enumerate_fillings(Kind kind, const SkewShape& shape, const std::vector<E>& alphabet,
                        const std::function<bool(const ShiftedTableau<E>&)>& yield);

// Enumeration over the marked alphabet truncated at max_base, optionally
// restricted to a fixed content.
void enumerate(Kind kind, const SkewShape& shape, int max_base,
               const std::optional<Content>& content,
               const std::function<bool(const MarkedTableau&)>& yield);
std::vector<MarkedTableau> enumerate_all(Kind kind, const SkewShape& shape, int max_base,
                                         const std::optional<Content>& content = std::nullopt);
std::size_t count_tableaux(Kind kind, const SkewShape& shape, int max_base,
                           const std::optional<Content>& content = std::nullopt);

Content content_of(const MarkedTableau& t);
Content content_of(const std::vector<MarkedLetter>& word);

MarkedTableau unmark(const MarkedTableau& t);
LabeledTableau unmark(const LabeledTableau& t);
std::vector<MarkedLetter> unmark(const std::vector<MarkedLetter>& word);
std::vector<LabeledLetter> unmark(const std::vector<LabeledLetter>& word);

// Row text format: rows separated by ';', entries by ','; skipped inner
// cells are implied by the shape.  Example: "1,2',3,4,4;2',4;2'".
MarkedTableau parse_marked_tableau(const SkewShape& shape, std::string_view text);
LabeledTableau parse_labeled_tableau(const SkewShape& shape, std::string_view text);
std::string to_text(const MarkedTableau& t);
std::string to_text(const LabeledTableau& t);

// ---- implementation ----

template <class E>
std::optional<Violation> validate(Kind kind, const ShiftedTableau<E>& t) {
  const SkewShape& shape = t.shape();
  auto entry_at = [&](Cell c) -> const E* {
    int idx = shape.index_of(c);
    return idx < 0 ? nullptr : &t.entries()[static_cast<std::size_t>(idx)];
  };
  // PST1: weakly increasing along rows and columns.
  for (Cell c : shape.cells()) {
    const E& here = *entry_at(c);
    if (const E* right = entry_at({c.row, c.col + 1}); right && *right < here)
      return Violation{Rule::PST1, {c.row, c.col + 1},
                       "row decreases at " + shifted::to_string(Cell{c.row, c.col + 1})};
    if (const E* below = entry_at({c.row + 1, c.col}); below && *below < here)
      return Violation{Rule::PST1, {c.row + 1, c.col},
                       "column decreases at " + shifted::to_string(Cell{c.row + 1, c.col})};
  }
  // PST2: a marked letter at most once per row.
  for (Cell c : shape.cells()) {
    const E& here = *entry_at(c);
    if (const E* left = entry_at({c.row, c.col - 1}); left && here == *left && here.marked)
      return Violation{Rule::PST2, c, "marked letter repeated in row " + std::to_string(c.row)};
  }
  // PST3: an unmarked letter at most once per column.
  for (Cell c : shape.cells()) {
    const E& here = *entry_at(c);
    if (const E* above = entry_at({c.row - 1, c.col}); above && here == *above && !here.marked)
      return Violation{Rule::PST3, c,
                       "unmarked letter repeated in column " + std::to_string(c.col)};
  }
  if (kind == Kind::P) {
    for (Cell c : shape.cells())
      if (c.diagonal() && entry_at(c)->marked)
        return Violation{Rule::PST4, c, "marked letter on the main diagonal"};
  }
  return std::nullopt;
}

template <class E>
void enumerate_fillings(Kind kind, const SkewShape& shape, const std::vector<E>& alphabet,
                        const std::function<bool(const ShiftedTableau<E>&)>& yield) {
  const std::vector<Cell>& cells = shape.cells();
  std::vector<E> filling(cells.size());
  std::vector<int> left_idx(cells.size(), -1), above_idx(cells.size(), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    left_idx[k] = shape.index_of({cells[k].row, cells[k].col - 1});
    above_idx[k] = shape.index_of({cells[k].row - 1, cells[k].col});
  }
  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (!keep_going) return;
    if (k == cells.size()) {
      keep_going = yield(ShiftedTableau<E>(shape, filling));
      return;
    }
    const E* left = left_idx[k] >= 0 ? &filling[static_cast<std::size_t>(left_idx[k])] : nullptr;
    const E* above =
        above_idx[k] >= 0 ? &filling[static_cast<std::size_t>(above_idx[k])] : nullptr;
    for (const E& letter : alphabet) {
      if (detail::local_rule_violation(kind, cells[k], letter, left, above)) continue;
      filling[k] = letter;
      self(self, k + 1);
      if (!keep_going) return;
    }
  };
  rec(rec, 0);
}

}  // namespace shifted
