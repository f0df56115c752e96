#pragma once

#include <random>
#include <vector>

#include "shifted/tableau.hpp"

namespace shifted::testing {

// First valid filling found with a shuffled letter preference at every
// cell; cheap and varied enough for property sweeps.
template <class E>
ShiftedTableau<E> random_filling(std::mt19937_64& rng, const SkewShape& shape,
                                 std::vector<E> alphabet) {
  const std::vector<Cell>& cells = shape.cells();
  std::vector<E> filling(cells.size());
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == cells.size()) return true;
    std::vector<E> order = alphabet;
    std::shuffle(order.begin(), order.end(), rng);
    int left = shape.index_of({cells[k].row, cells[k].col - 1});
    int above = shape.index_of({cells[k].row - 1, cells[k].col});
    for (const E& l : order) {
      if (detail::local_rule_violation(
              Kind::Q, cells[k], l,
              left >= 0 ? &filling[static_cast<std::size_t>(left)] : nullptr,
              above >= 0 ? &filling[static_cast<std::size_t>(above)] : nullptr))
        continue;
      filling[k] = l;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::logic_error("no valid filling for " + shape.to_string());
  return ShiftedTableau<E>(shape, filling);
}

inline MarkedTableau random_marked_tableau(std::mt19937_64& rng, const SkewShape& shape,
                                           int max_base) {
  std::vector<MarkedLetter> alphabet;
  for (int k = 1; k <= max_base; ++k) {
    alphabet.push_back({k, true});
    alphabet.push_back({k, false});
  }
  return random_filling(rng, shape, std::move(alphabet));
}

inline LabeledTableau random_labeled_tableau(std::mt19937_64& rng, const SkewShape& shape,
                                             int max_base, int max_sub) {
  std::vector<LabeledLetter> alphabet;
  for (int k = 1; k <= max_base; ++k)
    for (int s = 1; s <= max_sub; ++s) {
      alphabet.push_back({k, s, true});
      alphabet.push_back({k, s, false});
    }
  return random_filling(rng, shape, std::move(alphabet));
}

// All skew shapes with outer weight <= max_outer_weight and between one
// and max_cells boxes.
inline std::vector<SkewShape> skew_shape_pool(int max_outer_weight, int max_cells) {
  std::vector<SkewShape> out;
  for (int n = 1; n <= max_outer_weight; ++n)
    for (const StrictPartition& outer : strict_partitions_of(n))
      for (int m = 0; m < n; ++m)
        for (const StrictPartition& inner : strict_partitions_of(m))
          if (outer.contains(inner)) {
            SkewShape shape(outer, inner);
            if (shape.cell_count() >= 1 && shape.cell_count() <= max_cells)
              out.push_back(std::move(shape));
          }
  return out;
}

}  // namespace shifted::testing
