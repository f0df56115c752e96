#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shifted/jdt.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

template <class E>
using Word = std::vector<E>;

using MarkedWord = Word<MarkedLetter>;
using LabeledWord = Word<LabeledLetter>;

enum class KnuthTag { I, II, III, IV };

std::string to_string(KnuthTag tag);  // "(i)" ... "(iv)"

// Space-separated letters: "3 2' 2 3 1' 1 2' 2".
MarkedWord parse_marked_word(std::string_view text);
LabeledWord parse_labeled_word(std::string_view text);
std::string to_string(const MarkedWord& w);
std::string to_string(const LabeledWord& w);

// Rows bottom to top, each left to right.
template <class E>
Word<E> row_word(const ShiftedTableau<E>& t) {
  Word<E> out;
  out.reserve(t.entries().size());
  const std::vector<Cell>& cells = t.shape().cells();
  for (int row = t.shape().outer().length(); row >= 1; --row)
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].row == row) out.push_back(t.entries()[k]);
  return out;
}

// The four rewriting rules.  Windows of (i) and (ii) may sit anywhere;
// (iii) and (iv) act on the first two letters only:
//   (i)   u.cab.v ~ u.acb.v   with a <- b <= c
//   (ii)  u.bac.v ~ u.bca.v   with a <= b <- c
//   (iii) ab.w ~ ba.w         with |a| != |b|
//   (iv)  a|a|.w ~ a|a|'.w
// Returns the tag of a single rule relating the two words (both
// directions tried, (i)/(ii) before (iii)/(iv)), or nothing.
template <class E>
std::optional<KnuthTag> knuth_step(const Word<E>& w0, const Word<E>& w1) {
  const std::size_t n = w0.size();
  if (w1.size() != n) return std::nullopt;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < n; ++i)
    if (!(w0[i] == w1[i])) diff.push_back(i);

  if (diff.size() == 2 && diff[1] == diff[0] + 1 && w0[diff[0]] == w1[diff[1]] &&
      w0[diff[1]] == w1[diff[0]]) {
    const std::size_t q = diff[0];
    // (i): the swapped letters are c,a with b just after the window.
    if (q + 2 < n) {
      const E& b = w0[q + 2];
      if (rel_single(w0[q + 1], b) && rel_double(b, w0[q])) return KnuthTag::I;
      if (rel_single(w1[q + 1], b) && rel_double(b, w1[q])) return KnuthTag::I;
    }
    // (ii): the swapped letters are a,c with b just before the window.
    if (q >= 1) {
      const E& b = w0[q - 1];
      if (rel_double(w0[q], b) && rel_single(b, w0[q + 1])) return KnuthTag::II;
      if (rel_double(w1[q], b) && rel_single(b, w1[q + 1])) return KnuthTag::II;
    }
    if (q == 0 && !(w0[0].unmark() == w0[1].unmark())) return KnuthTag::III;
    return std::nullopt;
  }

  if (diff.size() == 1 && diff[0] == 1 && n >= 2) {
    // Only the mark of the second letter differs, and it repeats the
    // first letter's value.
    if (w0[1].unmark() == w1[1].unmark() && w0[1].marked != w1[1].marked &&
        w0[1].unmark() == w0[0].unmark())
      return KnuthTag::IV;
  }
  return std::nullopt;
}

// All words one rule application away, deduplicated.
template <class E>
std::vector<Word<E>> knuth_neighbors(const Word<E>& w) {
  std::vector<Word<E>> out;
  const std::size_t n = w.size();
  auto push_swapped = [&](std::size_t i, std::size_t j) {
    Word<E> v = w;
    std::swap(v[i], v[j]);
    out.push_back(std::move(v));
  };
  for (std::size_t p = 0; p + 2 < n; ++p) {
    // (i) in both directions swaps positions p, p+1.
    const E &x = w[p], &y = w[p + 1], &z = w[p + 2];
    if (rel_single(y, z) && rel_double(z, x)) push_swapped(p, p + 1);      // cab -> acb
    if (rel_single(x, z) && rel_double(z, y)) push_swapped(p, p + 1);      // acb -> cab
    // (ii) in both directions swaps positions p+1, p+2.
    if (rel_double(y, x) && rel_single(x, z)) push_swapped(p + 1, p + 2);  // bac -> bca
    if (rel_double(z, x) && rel_single(x, y)) push_swapped(p + 1, p + 2);  // bca -> bac
  }
  if (n >= 2) {
    if (!(w[0].unmark() == w[1].unmark())) push_swapped(0, 1);  // (iii)
    if (w[0].unmark() == w[1].unmark()) {                       // (iv)
      Word<E> v = w;
      v[1].marked = !v[1].marked;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), w), out.end());
  return out;
}

// Skew tableau with one box per row and row word exactly w: letter k of w
// (1-based) sits alone in row n-k+1, the boxes forming an off-diagonal
// staircase.  Any filling is valid, so rectifying it computes the
// canonical tableau of w.
template <class E>
ShiftedTableau<E> staircase_embedding(const Word<E>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> outer, inner;
  for (int i = 1; i <= n; ++i) {
    outer.push_back(2 * n - 2 * i + 2);
    inner.push_back(2 * n - 2 * i + 1);
  }
  SkewShape shape(StrictPartition(std::move(outer)), StrictPartition(std::move(inner)));
  std::vector<E> entries(w.rbegin(), w.rend());  // row-major = reversed word
  return ShiftedTableau<E>(shape, std::move(entries));
}

// The unique normal tableau whose row word is equivalent to w.
template <class E>
ShiftedTableau<E> canonical_tableau(const Word<E>& w) {
  return rectify(staircase_embedding(w)).tableau;
}

template <class E>
bool knuth_equivalent(const Word<E>& w0, const Word<E>& w1) {
  if (w0.size() != w1.size()) return false;
  // Every rule preserves the multiset of unmarked letters.
  Word<E> u0, u1;
  for (const E& l : w0) u0.push_back(l.unmark());
  for (const E& l : w1) u1.push_back(l.unmark());
  std::sort(u0.begin(), u0.end());
  std::sort(u1.begin(), u1.end());
  if (u0 != u1) return false;
  return canonical_tableau(w0) == canonical_tableau(w1);
}

// Breadth-first closure over single steps, exploring at most max_states
// words; the slow cross-check for the canonical-tableau route.  Returns
// nothing when the cap is hit before the class is exhausted.
template <class E>
std::optional<bool> knuth_equivalent_bounded(const Word<E>& w0, const Word<E>& w1,
                                             std::size_t max_states = 200000) {
  if (w0 == w1) return true;
  std::vector<Word<E>> frontier{w0};
  std::vector<Word<E>> seen{w0};
  std::sort(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Word<E>> next;
    for (const Word<E>& w : frontier) {
      for (Word<E>& v : knuth_neighbors(w)) {
        if (std::binary_search(seen.begin(), seen.end(), v)) continue;
        if (v == w1) return true;
        seen.insert(std::upper_bound(seen.begin(), seen.end(), v), v);
        if (seen.size() > max_states) return std::nullopt;
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace shifted
