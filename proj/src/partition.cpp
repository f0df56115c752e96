#include "shifted/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace shifted {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("strict partition parts must be positive, got " +
                                  std::to_string(parts_[i]));
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("partition is not strictly decreasing: " +
                                  std::to_string(parts_[i - 1]) + " followed by " +
                                  std::to_string(parts_[i]));
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  if (end > begin && text[begin] == '(') ++begin;
  if (end > begin && text[end - 1] == ')') --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty() || body == "0") return StrictPartition();

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok.empty()) throw ParseError("empty partition part", begin + pos);
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw ParseError(std::string("unexpected character '") + ch + "' in partition",
                         begin + pos);
      value = value * 10 + (ch - '0');
      if (value > 1'000'000) throw ParseError("partition part too large", begin + pos);
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == body.size()) throw ParseError("trailing comma in partition", begin + pos);
  }
  try {
    return StrictPartition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

int StrictPartition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int StrictPartition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i) - 1];
}

bool StrictPartition::contains(const StrictPartition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string StrictPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

bool in_diagram(const StrictPartition& p, Cell c) {
  if (c.row < 1 || c.row > p.length()) return false;
  return c.col >= c.row && c.col <= p.part(c.row) + c.row - 1;
}

std::vector<Cell> diagram_cells(const StrictPartition& p) {
  std::vector<Cell> cells;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = i; j <= p.part(i) + i - 1; ++j) cells.push_back({i, j});
  return cells;
}

std::vector<Cell> diagram_corners(const StrictPartition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i) {
    Cell last{i, p.part(i) + i - 1};
    if (!in_diagram(p, {i + 1, last.col})) out.push_back(last);
  }
  return out;
}

SkewShape::SkewShape(StrictPartition outer) : SkewShape(std::move(outer), StrictPartition()) {}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape " + inner_.to_string() +
                                " is not contained in outer shape " + outer_.to_string());
  for (int i = 1; i <= outer_.length(); ++i) {
    int lo = std::max(i, inner_.part(i) + i);
    int hi = outer_.part(i) + i - 1;
    for (int j = lo; j <= hi; ++j) cells_.push_back({i, j});
  }
}

SkewShape SkewShape::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(StrictPartition::parse(text));
  StrictPartition outer = StrictPartition::parse(text.substr(0, slash));
  StrictPartition inner = StrictPartition::parse(text.substr(slash + 1));
  try {
    return SkewShape(std::move(outer), std::move(inner));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), slash);
  }
}

int SkewShape::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return static_cast<int>(it - cells_.begin());
}

std::vector<Cell> SkewShape::corners() const {
  std::vector<Cell> out;
  for (Cell c : cells_)
    if (!contains({c.row + 1, c.col}) && !contains({c.row, c.col + 1})) out.push_back(c);
  return out;
}

std::vector<Cell> SkewShape::inside_corners() const { return diagram_corners(inner_); }

int SkewShape::arm_m() const {
  int below = 0;
  for (int i = 2; i <= outer_.length(); ++i) below += outer_.part(i) - inner_.part(i);
  return std::min(outer_.part(2), below);
}

std::vector<Cell> SkewShape::arm() const {
  std::vector<Cell> out;
  for (int j = arm_m() + inner_.part(1) + 1; j <= outer_.part(1); ++j) out.push_back({1, j});
  return out;
}

std::vector<Cell> SkewShape::body() const {
  std::vector<Cell> a = arm();
  std::vector<Cell> out;
  for (Cell c : cells_)
    if (std::find(a.begin(), a.end(), c) == a.end()) out.push_back(c);
  return out;
}

std::string SkewShape::to_string() const {
  if (normal()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // Parts below p must fit 1 + 2 + ... + (p-1) at most.
    if (remaining - p > (p - 1) * p / 2) continue;
    acc.push_back(p);
    strict_partitions_rec(remaining - p, p - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<StrictPartition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  strict_partitions_rec(n, n, acc, out);
  return out;
}

}  // namespace shifted
