#include "shifted/jdt.hpp"

#include <algorithm>

namespace shifted {

PositionMap::PositionMap(std::map<Cell, Cell> forward) : forward_(std::move(forward)) {
  for (const auto& [src, dst] : forward_)
    if (!backward_.emplace(dst, src).second)
      throw std::invalid_argument("position map is not injective at " + to_string(dst));
}

Cell PositionMap::map(Cell source) const {
  auto it = forward_.find(source);
  if (it == forward_.end())
    throw std::out_of_range("no source cell " + to_string(source) + " in position map");
  return it->second;
}

Cell PositionMap::preimage(Cell target) const {
  auto it = backward_.find(target);
  if (it == backward_.end())
    throw std::out_of_range("no target cell " + to_string(target) + " in position map");
  return it->second;
}

CornerStrategy default_corner_strategy() {
  return [](const std::vector<Cell>& corners) { return corners.back(); };
}

CornerStrategy random_corner_strategy(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const std::vector<Cell>& corners) {
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    return corners[pick(*rng)];
  };
}

namespace detail {

void shrink_at_corner(std::vector<int>& parts, Cell corner, const char* what) {
  std::size_t r = static_cast<std::size_t>(corner.row);
  bool is_corner = r >= 1 && r <= parts.size() &&
                   corner.col == parts[r - 1] + corner.row - 1 &&
                   (r == parts.size() || corner.col > parts[r] + corner.row);
  if (!is_corner)
    throw std::logic_error(std::string("cell ") + to_string(corner) + " is not an " + what +
                           " corner");
  parts[r - 1] -= 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace detail

}  // namespace shifted
