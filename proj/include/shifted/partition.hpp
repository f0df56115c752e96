#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shifted {

// One box of a shifted diagram, matrix orientation, 1-based.
// Every box of a shifted diagram satisfies col >= row.
struct Cell {
  int row = 0;
  int col = 0;

  bool diagonal() const { return row == col; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);  // "(i,j)"

// Thrown on malformed text input; position() is a byte offset into the
// offending string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A strictly decreasing sequence of positive integers.  The empty sequence
// is a valid value.  Construction rejects non-strict input instead of
// normalizing it.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  // Accepts "6,3,1" and "(6,3,1)"; "" and "0" denote the empty partition.
  static StrictPartition parse(std::string_view text);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 1-based part access; zero beyond the last part.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Containment of shifted diagrams; equivalent to inner.part(i) <= part(i)
  // for all i.
  bool contains(const StrictPartition& inner) const;

  std::string to_string() const;  // "(6,3,1)", "()" for the empty partition

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

// Boxes {(i,j) : 1 <= i <= l(p), i <= j <= p_i + i - 1}.
bool in_diagram(const StrictPartition& p, Cell c);
std::vector<Cell> diagram_cells(const StrictPartition& p);
// Boxes of p with no box below and none to the right.
std::vector<Cell> diagram_corners(const StrictPartition& p);

// A skew shifted shape outer/inner.  Construction rejects pairs where some
// inner part exceeds the corresponding outer part.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(StrictPartition outer);
  SkewShape(StrictPartition outer, StrictPartition inner);

  // "6,3,1/3,1"; the inner part may be omitted ("6,3,1") or empty
  // ("6,3,1/0").
  static SkewShape parse(std::string_view text);

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  bool normal() const { return inner_.empty(); }

  // Boxes of outer not in inner, row-major.
  const std::vector<Cell>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  bool contains(Cell c) const { return index_of(c) >= 0; }
  // Position of c in cells(), or -1.
  int index_of(Cell c) const;

  // Boxes of the skew diagram with no box of the skew diagram below or to
  // the right.  For a normal shape these are the corners of outer.
  std::vector<Cell> corners() const;
  // Corners of the inner shape.
  std::vector<Cell> inside_corners() const;

  // m = min(outer_2, number of boxes below row 1).
  int arm_m() const;
  // The boxes (1, m + inner_1 + 1), ..., (1, outer_1) of row 1, left to
  // right; empty when m + inner_1 + 1 > outer_1.
  std::vector<Cell> arm() const;
  // cells() minus arm(), row-major.
  std::vector<Cell> body() const;

  std::string to_string() const;  // "(6,3,1)/(3,1)"; "(6,3,1)" when normal

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  StrictPartition outer_;
  StrictPartition inner_;
  std::vector<Cell> cells_;
};

// All strict partitions of weight n, decreasing-lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int n);

}  // namespace shifted
