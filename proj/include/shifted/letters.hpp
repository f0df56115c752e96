#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace shifted {

// Letter k or k' of the marked alphabet, ordered 1' < 1 < 2' < 2 < ...
struct MarkedLetter {
  int base = 1;
  bool marked = false;

  MarkedLetter unmark() const { return {base, false}; }

  friend bool operator==(MarkedLetter, MarkedLetter) = default;
  friend std::strong_ordering operator<=>(MarkedLetter a, MarkedLetter b) {
    if (a.base != b.base) return a.base <=> b.base;
    return b.marked <=> a.marked;  // the marked letter comes first
  }
};

// Letter k_l or k'_l of the subscripted alphabet, ordered
// 1'_1 < 1_1 < 1'_2 < 1_2 < ... < 2'_1 < 2_1 < ...
struct LabeledLetter {
  int base = 1;
  int sub = 1;
  bool marked = false;

  LabeledLetter unmark() const { return {base, sub, false}; }

  friend bool operator==(LabeledLetter, LabeledLetter) = default;
  friend std::strong_ordering operator<=>(LabeledLetter a, LabeledLetter b) {
    if (a.base != b.base) return a.base <=> b.base;
    if (a.sub != b.sub) return a.sub <=> b.sub;
    return b.marked <=> a.marked;
  }
};

// a <- b : a < b, or a = b with a unmarked.
template <class L>
bool rel_single(L a, L b) {
  return a < b || (a == b && !a.marked);
}

// a <= b : a < b, or a = b with a marked.
template <class L>
bool rel_double(L a, L b) {
  return a < b || (a == b && a.marked);
}

std::string to_string(MarkedLetter l);   // "2", "2'"
std::string to_string(LabeledLetter l);  // "2_3", "2'_3"

// Parse one letter starting at *pos; advances *pos past it.
MarkedLetter parse_marked_letter(std::string_view text, std::size_t* pos);
LabeledLetter parse_labeled_letter(std::string_view text, std::size_t* pos);

MarkedLetter parse_marked_letter(std::string_view text);
LabeledLetter parse_labeled_letter(std::string_view text);

}  // namespace shifted
