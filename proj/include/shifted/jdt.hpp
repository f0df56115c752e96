#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "shifted/tableau.hpp"

namespace shifted {

// A tableau with exactly one vacated box (the dot) inside its region.
// Intermediate slide states need not satisfy the tableau rules; a
// completed slide restores them.
template <class E>
struct SlideState {
  SkewShape shape;
  std::map<Cell, E> entries;  // every cell of shape except dot
  Cell dot;
};

// Bijection between the boxes of a skew shape and the boxes of its
// rectification.
class PositionMap {
 public:
  PositionMap() = default;
  explicit PositionMap(std::map<Cell, Cell> forward);

  Cell map(Cell source) const;
  Cell preimage(Cell target) const;
  const std::map<Cell, Cell>& forward() const { return forward_; }
  std::size_t size() const { return forward_.size(); }

  friend bool operator==(const PositionMap& a, const PositionMap& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::map<Cell, Cell> forward_;
  std::map<Cell, Cell> backward_;
};

// Picks the inside corner to vacate next; receives the non-empty,
// row-major sorted corner list of the current inner shape.
using CornerStrategy = std::function<Cell(const std::vector<Cell>&)>;

// Right-most corner of the bottom-most inner row.
CornerStrategy default_corner_strategy();
// Uniform choice driven by a private generator; deterministic per seed.
CornerStrategy random_corner_strategy(std::uint64_t seed);

template <class E>
struct TraceFrame {
  SkewShape shape;
  std::map<Cell, E> entries;
  std::optional<Cell> dot;
};

template <class E>
struct RectifyResult {
  ShiftedTableau<E> tableau;
  PositionMap positions;
};

namespace detail {

template <class E>
struct Slot {
  E entry;
  Cell origin;
};

// One elementary move of the dot.  With a the entry below the dot and b
// the entry to its right: a moves up when a <- b or b is missing, b moves
// left when b <= a or a is missing.  Exception on the diagonal: for a dot
// at (i,i), a marked entry at (i,i+1) and an entry of the same base at
// (i+1,i+1), the right entry moves to (i,i) taking the mark of the lower
// entry, the lower entry moves to (i,i+1) unmarked, and the dot moves to
// (i+1,i+1).
template <class E>
Cell elementary_move(std::map<Cell, Slot<E>>& slots, Cell dot) {
  Cell below{dot.row + 1, dot.col};
  Cell right{dot.row, dot.col + 1};
  auto b_it = slots.find(below);
  auto r_it = slots.find(right);
  bool has_below = b_it != slots.end();
  bool has_right = r_it != slots.end();
  if (!has_below && !has_right)
    throw std::invalid_argument("elementary slide requested at an outside corner " +
                                to_string(dot));

  if (dot.diagonal() && has_right && r_it->second.entry.marked) {
    Cell diag{dot.row + 1, dot.col + 1};
    auto d_it = slots.find(diag);
    if (d_it != slots.end() && d_it->second.entry.base == r_it->second.entry.base) {
      Slot<E> from_right = r_it->second;
      Slot<E> from_below = d_it->second;
      slots.erase(r_it);
      slots.erase(d_it);
      from_right.entry.marked = from_below.entry.marked;
      from_below.entry.marked = false;
      slots.emplace(dot, from_right);
      slots.emplace(right, from_below);
      return diag;
    }
  }

  bool move_below;
  if (has_below && has_right)
    move_below = rel_single(b_it->second.entry, r_it->second.entry);
  else
    move_below = has_below;

  if (move_below) {
    slots.emplace(dot, b_it->second);
    slots.erase(b_it);
    return below;
  }
  slots.emplace(dot, r_it->second);
  slots.erase(r_it);
  return right;
}

// Removes a corner box from a partition given as a parts vector.
void shrink_at_corner(std::vector<int>& parts, Cell corner, const char* what);

template <class E>
class SlideEngine {
 public:
  explicit SlideEngine(const ShiftedTableau<E>& t)
      : outer_(t.shape().outer().parts()), inner_(t.shape().inner().parts()) {
    const std::vector<Cell>& cells = t.shape().cells();
    for (std::size_t k = 0; k < cells.size(); ++k)
      slots_.emplace(cells[k], Slot<E>{t.entries()[k], cells[k]});
  }

  SkewShape current_shape() const {
    return SkewShape(StrictPartition(outer_), StrictPartition(inner_));
  }

  std::vector<Cell> inside_corners() const {
    return diagram_corners(StrictPartition(inner_));
  }

  void slide_from(Cell corner, std::vector<TraceFrame<E>>* trace) {
    shrink_at_corner(inner_, corner, "inside");
    Cell dot = corner;
    record(trace, dot);
    while (slots_.count({dot.row + 1, dot.col}) || slots_.count({dot.row, dot.col + 1})) {
      dot = elementary_move(slots_, dot);
      record(trace, dot);
    }
    shrink_at_corner(outer_, dot, "outside");
    record(trace, std::nullopt);
  }

  void rectify(const CornerStrategy& strategy, std::vector<TraceFrame<E>>* trace) {
    while (true) {
      std::vector<Cell> corners = inside_corners();
      if (corners.empty()) break;
      slide_from(strategy(corners), trace);
    }
  }

  ShiftedTableau<E> tableau() const {
    SkewShape shape = current_shape();
    std::vector<E> entries;
    entries.reserve(slots_.size());
    for (const auto& [cell, slot] : slots_) entries.push_back(slot.entry);
    return ShiftedTableau<E>(shape, std::move(entries));
  }

  PositionMap positions() const {
    std::map<Cell, Cell> fwd;
    for (const auto& [cell, slot] : slots_) fwd.emplace(slot.origin, cell);
    return PositionMap(std::move(fwd));
  }

 private:
  void record(std::vector<TraceFrame<E>>* trace, std::optional<Cell> dot) const {
    if (!trace) return;
    std::map<Cell, E> entries;
    for (const auto& [cell, slot] : slots_) entries.emplace(cell, slot.entry);
    trace->push_back(TraceFrame<E>{current_shape(), std::move(entries), dot});
  }

  std::vector<int> outer_;
  std::vector<int> inner_;
  std::map<Cell, Slot<E>> slots_;
};

}  // namespace detail

template <class E>
SlideState<E> elementary_slide(const SlideState<E>& state) {
  std::map<Cell, detail::Slot<E>> slots;
  for (const auto& [cell, entry] : state.entries)
    slots.emplace(cell, detail::Slot<E>{entry, cell});
  Cell dot = detail::elementary_move(slots, state.dot);
  SlideState<E> next{state.shape, {}, dot};
  for (const auto& [cell, slot] : slots) next.entries.emplace(cell, slot.entry);
  return next;
}

// One full slide from an inside corner; the result has one box fewer on
// both boundaries.
template <class E>
ShiftedTableau<E> slide(const ShiftedTableau<E>& t, Cell inside_corner,
                        std::vector<TraceFrame<E>>* trace = nullptr) {
  std::vector<Cell> corners = t.shape().inside_corners();
  if (std::find(corners.begin(), corners.end(), inside_corner) == corners.end())
    throw std::invalid_argument(to_string(inside_corner) + " is not an inside corner of " +
                                t.shape().to_string());
  detail::SlideEngine<E> engine(t);
  engine.slide_from(inside_corner, trace);
  return engine.tableau();
}

// Slides until no inside corner remains.  The tableau outcome does not
// depend on the strategy; the position map is canonical when the entries
// are pairwise distinct after unmarking.
template <class E>
RectifyResult<E> rectify(const ShiftedTableau<E>& t,
                         const CornerStrategy& strategy = default_corner_strategy(),
                         std::vector<TraceFrame<E>>* trace = nullptr) {
  detail::SlideEngine<E> engine(t);
  engine.rectify(strategy, trace);
  return RectifyResult<E>{engine.tableau(), engine.positions()};
}

}  // namespace shifted
