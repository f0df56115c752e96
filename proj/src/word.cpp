#include "shifted/word.hpp"

namespace shifted {

std::string to_string(KnuthTag tag) {
  switch (tag) {
    case KnuthTag::I: return "(i)";
    case KnuthTag::II: return "(ii)";
    case KnuthTag::III: return "(iii)";
    case KnuthTag::IV: return "(iv)";
  }
  return "?";
}

namespace {

template <class E, class Parse>
std::vector<E> parse_word_impl(std::string_view text, Parse parse) {
  std::vector<E> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    out.push_back(parse(text, &pos));
  }
  return out;
}

template <class E>
std::string word_to_string(const std::vector<E>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

}  // namespace

MarkedWord parse_marked_word(std::string_view text) {
  return parse_word_impl<MarkedLetter>(text, [](std::string_view t, std::size_t* p) {
    return parse_marked_letter(t, p);
  });
}

LabeledWord parse_labeled_word(std::string_view text) {
  return parse_word_impl<LabeledLetter>(text, [](std::string_view t, std::size_t* p) {
    return parse_labeled_letter(t, p);
  });
}

std::string to_string(const MarkedWord& w) { return word_to_string(w); }
std::string to_string(const LabeledWord& w) { return word_to_string(w); }

}  // namespace shifted
