#include "shifted/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace shifted {

Content::Content(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw std::invalid_argument("content counts must be non-negative");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Content Content::parse(std::string_view text) {
  // Same grammar as partitions, but zeros are allowed anywhere.
  std::size_t begin = 0, end = text.size();
  if (end > begin && text[begin] == '(') ++begin;
  if (end > begin && text[end - 1] == ')') --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) return Content();
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok.empty()) throw ParseError("empty content entry", begin + pos);
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw ParseError(std::string("unexpected character '") + ch + "' in content",
                         begin + pos);
      value = value * 10 + (ch - '0');
      if (value > 1'000'000) throw ParseError("content entry too large", begin + pos);
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Content(std::move(counts));
}

int Content::count(int base) const {
  if (base < 1 || base > max_base()) return 0;
  return counts_[static_cast<std::size_t>(base) - 1];
}

int Content::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

Content Content::operator+(const Content& other) const {
  std::vector<int> out(std::max(counts_.size(), other.counts_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < counts_.size()) out[i] += counts_[i];
    if (i < other.counts_.size()) out[i] += other.counts_[i];
  }
  return Content(std::move(out));
}

std::string Content::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  out += ')';
  return out;
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::PST1: return "PST1";
    case Rule::PST2: return "PST2";
    case Rule::PST3: return "PST3";
    case Rule::PST4: return "PST4";
  }
  return "?";
}

void enumerate(Kind kind, const SkewShape& shape, int max_base,
               const std::optional<Content>& content,
               const std::function<bool(const MarkedTableau&)>& yield) {
  if (content && content->total() != shape.cell_count()) return;
  if (content && content->max_base() > max_base) return;

  std::vector<MarkedLetter> alphabet;
  for (int k = 1; k <= max_base; ++k) {
    alphabet.push_back({k, true});
    alphabet.push_back({k, false});
  }

  if (!content) {
    enumerate_fillings<MarkedLetter>(kind, shape, alphabet, yield);
    return;
  }

  // Same search, pruned by remaining per-base budget.
  const std::vector<Cell>& cells = shape.cells();
  std::vector<MarkedLetter> filling(cells.size());
  std::vector<int> left_idx(cells.size(), -1), above_idx(cells.size(), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    left_idx[k] = shape.index_of({cells[k].row, cells[k].col - 1});
    above_idx[k] = shape.index_of({cells[k].row - 1, cells[k].col});
  }
  std::vector<int> budget(static_cast<std::size_t>(max_base) + 1, 0);
  for (int k = 1; k <= max_base; ++k) budget[static_cast<std::size_t>(k)] = content->count(k);

  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (!keep_going) return;
    if (k == cells.size()) {
      keep_going = yield(MarkedTableau(shape, filling));
      return;
    }
    const MarkedLetter* left =
        left_idx[k] >= 0 ? &filling[static_cast<std::size_t>(left_idx[k])] : nullptr;
    const MarkedLetter* above =
        above_idx[k] >= 0 ? &filling[static_cast<std::size_t>(above_idx[k])] : nullptr;
    for (const MarkedLetter& letter : alphabet) {
      if (budget[static_cast<std::size_t>(letter.base)] == 0) continue;
      if (detail::local_rule_violation(kind, cells[k], letter, left, above)) continue;
      budget[static_cast<std::size_t>(letter.base)] -= 1;
      filling[k] = letter;
      self(self, k + 1);
      budget[static_cast<std::size_t>(letter.base)] += 1;
      if (!keep_going) return;
    }
  };
  rec(rec, 0);
}

std::vector<MarkedTableau> enumerate_all(Kind kind, const SkewShape& shape, int max_base,
                                         const std::optional<Content>& content) {
  std::vector<MarkedTableau> out;
  enumerate(kind, shape, max_base, content, [&](const MarkedTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::size_t count_tableaux(Kind kind, const SkewShape& shape, int max_base,
                           const std::optional<Content>& content) {
  std::size_t n = 0;
  enumerate(kind, shape, max_base, content, [&](const MarkedTableau&) {
    ++n;
    return true;
  });
  return n;
}

namespace {

Content content_of_letters(const std::vector<MarkedLetter>& letters) {
  std::vector<int> counts;
  for (MarkedLetter l : letters) {
    if (static_cast<std::size_t>(l.base) > counts.size())
      counts.resize(static_cast<std::size_t>(l.base), 0);
    counts[static_cast<std::size_t>(l.base) - 1] += 1;
  }
  return Content(std::move(counts));
}

}  // namespace

Content content_of(const MarkedTableau& t) { return content_of_letters(t.entries()); }

Content content_of(const std::vector<MarkedLetter>& word) { return content_of_letters(word); }

MarkedTableau unmark(const MarkedTableau& t) {
  std::vector<MarkedLetter> out;
  out.reserve(t.entries().size());
  for (MarkedLetter l : t.entries()) out.push_back(l.unmark());
  return MarkedTableau(t.shape(), std::move(out));
}

LabeledTableau unmark(const LabeledTableau& t) {
  std::vector<LabeledLetter> out;
  out.reserve(t.entries().size());
  for (LabeledLetter l : t.entries()) out.push_back(l.unmark());
  return LabeledTableau(t.shape(), std::move(out));
}

std::vector<MarkedLetter> unmark(const std::vector<MarkedLetter>& word) {
  std::vector<MarkedLetter> out;
  out.reserve(word.size());
  for (MarkedLetter l : word) out.push_back(l.unmark());
  return out;
}

std::vector<LabeledLetter> unmark(const std::vector<LabeledLetter>& word) {
  std::vector<LabeledLetter> out;
  out.reserve(word.size());
  for (LabeledLetter l : word) out.push_back(l.unmark());
  return out;
}

namespace {

// Splits "a,b;c" into rows of entry tokens, keeping source offsets.
std::vector<std::vector<std::pair<std::string_view, std::size_t>>> split_rows(
    std::string_view text) {
  std::vector<std::vector<std::pair<std::string_view, std::size_t>>> rows(1);
  std::size_t tok_begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      if (i > tok_begin) rows.back().emplace_back(text.substr(tok_begin, i - tok_begin), tok_begin);
      if (i < text.size() && text[i] == ';') rows.emplace_back();
      tok_begin = i + 1;
    }
  }
  return rows;
}

template <class E, class Parse>
ShiftedTableau<E> parse_tableau_impl(const SkewShape& shape, std::string_view text, Parse parse) {
  auto rows = split_rows(text);
  // Row lengths of the shape.
  std::vector<int> row_len(static_cast<std::size_t>(shape.outer().length()), 0);
  for (Cell c : shape.cells()) row_len[static_cast<std::size_t>(c.row) - 1] += 1;
  while (!row_len.empty() && row_len.back() == 0) row_len.pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.size() != row_len.size())
    throw ParseError("expected " + std::to_string(row_len.size()) + " rows for shape " +
                         shape.to_string() + ", got " + std::to_string(rows.size()),
                     0);
  std::vector<E> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != row_len[r])
      throw ParseError("row " + std::to_string(r + 1) + " needs " + std::to_string(row_len[r]) +
                           " entries, got " + std::to_string(rows[r].size()),
                       rows[r].empty() ? 0 : rows[r].front().second);
    for (auto [tok, offset] : rows[r]) {
      std::size_t pos = 0;
      E letter;
      try {
        letter = parse(tok, &pos);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + e.position());
      }
      if (pos != tok.size()) throw ParseError("trailing characters after entry", offset + pos);
      entries.push_back(letter);
    }
  }
  return ShiftedTableau<E>(shape, std::move(entries));
}

// Rows with no boxes still get their ';' so the text determines the row
// of every entry.
template <class E>
std::string to_text_impl(const ShiftedTableau<E>& t) {
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

}  // namespace

MarkedTableau parse_marked_tableau(const SkewShape& shape, std::string_view text) {
  return parse_tableau_impl<MarkedLetter>(shape, text, [](std::string_view t, std::size_t* p) {
    return parse_marked_letter(t, p);
  });
}

LabeledTableau parse_labeled_tableau(const SkewShape& shape, std::string_view text) {
  return parse_tableau_impl<LabeledLetter>(shape, text, [](std::string_view t, std::size_t* p) {
    return parse_labeled_letter(t, p);
  });
}

std::string to_text(const MarkedTableau& t) { return to_text_impl(t); }
std::string to_text(const LabeledTableau& t) { return to_text_impl(t); }

}  // namespace shifted
