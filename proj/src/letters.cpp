#include "shifted/letters.hpp"

#include "shifted/partition.hpp"

namespace shifted {

std::string to_string(MarkedLetter l) {
  std::string out = std::to_string(l.base);
  if (l.marked) out += '\'';
  return out;
}

std::string to_string(LabeledLetter l) {
  std::string out = std::to_string(l.base);
  if (l.marked) out += '\'';
  out += '_';
  out += std::to_string(l.sub);
  return out;
}

namespace {

int parse_int_at(std::string_view text, std::size_t* pos, const char* what) {
  if (*pos >= text.size() || text[*pos] < '0' || text[*pos] > '9')
    throw ParseError(std::string("expected ") + what, *pos);
  int value = 0;
  while (*pos < text.size() && text[*pos] >= '0' && text[*pos] <= '9') {
    value = value * 10 + (text[*pos] - '0');
    if (value > 1'000'000) throw ParseError(std::string(what) + " too large", *pos);
    ++*pos;
  }
  return value;
}

}  // namespace

MarkedLetter parse_marked_letter(std::string_view text, std::size_t* pos) {
  int base = parse_int_at(text, pos, "letter");
  if (base < 1) throw ParseError("letter base must be positive", *pos);
  bool marked = false;
  if (*pos < text.size() && text[*pos] == '\'') {
    marked = true;
    ++*pos;
  }
  return {base, marked};
}

LabeledLetter parse_labeled_letter(std::string_view text, std::size_t* pos) {
  MarkedLetter head = parse_marked_letter(text, pos);
  if (*pos >= text.size() || text[*pos] != '_')
    throw ParseError("expected '_' and a subscript", *pos);
  ++*pos;
  int sub = parse_int_at(text, pos, "subscript");
  if (sub < 1) throw ParseError("subscript must be positive", *pos);
  return {head.base, sub, head.marked};
}

namespace {

template <class L, class Fn>
L parse_whole(std::string_view text, Fn fn) {
  std::size_t pos = 0;
  L letter = fn(text, &pos);
  if (pos != text.size()) throw ParseError("trailing characters after letter", pos);
  return letter;
}

}  // namespace

MarkedLetter parse_marked_letter(std::string_view text) {
  return parse_whole<MarkedLetter>(text,
                                   [](std::string_view t, std::size_t* p) {
                                     return parse_marked_letter(t, p);
                                   });
}

LabeledLetter parse_labeled_letter(std::string_view text) {
  return parse_whole<LabeledLetter>(text,
                                    [](std::string_view t, std::size_t* p) {
                                      return parse_labeled_letter(t, p);
                                    });
}

}  // namespace shifted
