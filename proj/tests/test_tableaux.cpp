#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "shifted/tableau.hpp"
#include "shifted/word.hpp"

using namespace shifted;

namespace {

// Test-only validity check, written directly from the four rules with full
// scans; deliberately independent of the library's validate/enumerate.
bool brute_valid(Kind kind, const MarkedTableau& t) {
  const SkewShape& shape = t.shape();
  auto get = [&](int i, int j) -> const MarkedLetter* {
    int idx = shape.index_of({i, j});
    return idx < 0 ? nullptr : &t.entries()[static_cast<std::size_t>(idx)];
  };
  for (Cell c : shape.cells()) {
    const MarkedLetter& e = *get(c.row, c.col);
    // rows and columns weakly increase
    for (int j = c.col + 1; const MarkedLetter* r = get(c.row, j); ++j)
      if (*r < e) return false;
    for (int i = c.row + 1; const MarkedLetter* b = get(i, c.col); ++i)
      if (*b < e) return false;
    // marked at most once per row
    if (e.marked)
      for (int j = c.col + 1; const MarkedLetter* r = get(c.row, j); ++j)
        if (*r == e) return false;
    // unmarked at most once per column
    if (!e.marked)
      for (int i = c.row + 1; const MarkedLetter* b = get(i, c.col); ++i)
        if (*b == e) return false;
    if (kind == Kind::P && e.marked && c.row == c.col) return false;
  }
  return true;
}

// All fillings by brute product, filtered by brute_valid.
std::vector<MarkedTableau> brute_enumerate(Kind kind, const SkewShape& shape, int max_base,
                                           const std::optional<Content>& content) {
  std::vector<MarkedLetter> alphabet;
  for (int k = 1; k <= max_base; ++k) {
    alphabet.push_back({k, true});
    alphabet.push_back({k, false});
  }
  std::vector<MarkedTableau> out;
  std::vector<MarkedLetter> filling(static_cast<std::size_t>(shape.cell_count()));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == filling.size()) {
      MarkedTableau t(shape, filling);
      if (!brute_valid(kind, t)) return;
      if (content && content_of(t) != *content) return;
      out.push_back(std::move(t));
      return;
    }
    for (MarkedLetter l : alphabet) {
      filling[k] = l;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

MarkedTableau tab(const std::string& shape, const std::string& entries) {
  return parse_marked_tableau(SkewShape::parse(shape), entries);
}

}  // namespace

TEST_CASE("letter order and relations") {
  MarkedLetter m1p{1, true}, m1{1, false}, m2p{2, true}, m2{2, false}, m3p{3, true}, m3{3, false};
  CHECK(m1p < m1);
  CHECK(m1 < m2p);
  CHECK(m2p < m2);

  CHECK(rel_single(m2, m2));        // 2 <- 2
  CHECK(!rel_single(m2p, m2p));     // 2' <- 2' fails
  CHECK(rel_single(m1, m2p));       // 1 <- 2'
  CHECK(rel_double(m2p, m2p));      // 2' <= 2'
  CHECK(!rel_double(m2, m2));       // 2 <= 2 fails
  CHECK(rel_double(m3p, m3));       // 3' <= 3

  LabeledLetter l1{2, 1, true}, l2{2, 2, true};
  CHECK(l1 < l2);
  CHECK(LabeledLetter{2, 3, false} < LabeledLetter{3, 1, true});
  CHECK(!rel_single(l1, l1));
  CHECK(rel_double(l1, l1));
}

TEST_CASE("letter text round-trip") {
  CHECK(to_string(MarkedLetter{2, true}) == "2'");
  CHECK(parse_marked_letter("2'") == MarkedLetter{2, true});
  CHECK(parse_marked_letter("14") == MarkedLetter{14, false});
  CHECK(to_string(LabeledLetter{2, 3, true}) == "2'_3");
  CHECK(parse_labeled_letter("2'_3") == LabeledLetter{2, 3, true});
  CHECK_THROWS_AS(parse_marked_letter("x"), ParseError);
  CHECK_THROWS_AS(parse_labeled_letter("2'"), ParseError);
}

TEST_CASE("validate verdicts") {
  CHECK(!validate(Kind::P, tab("2,1", "1,1;2")));

  auto v = validate(Kind::P, tab("1", "1'"));
  REQUIRE(v);
  CHECK(v->rule == Rule::PST4);
  CHECK(v->cell == Cell{1, 1});
  CHECK(!validate(Kind::Q, tab("1", "1'")));

  auto row_repeat = validate(Kind::Q, tab("2", "2',2'"));
  REQUIRE(row_repeat);
  CHECK(row_repeat->rule == Rule::PST2);

  auto decreasing = validate(Kind::Q, tab("2", "2,1"));
  REQUIRE(decreasing);
  CHECK(decreasing->rule == Rule::PST1);
  CHECK(decreasing->cell == Cell{1, 2});

  auto col_repeat = validate(Kind::Q, tab("2,1", "1,2;2"));
  REQUIRE(col_repeat);
  CHECK(col_repeat->rule == Rule::PST3);
  CHECK(col_repeat->cell == Cell{2, 2});
}

TEST_CASE("enumerate small goldens") {
  auto psst1 = enumerate_all(Kind::P, SkewShape::parse("1"), 2);
  REQUIRE(psst1.size() == 2);
  CHECK(psst1[0].entries() == std::vector<MarkedLetter>{{1, false}});
  CHECK(psst1[1].entries() == std::vector<MarkedLetter>{{2, false}});

  auto qsst1 = enumerate_all(Kind::Q, SkewShape::parse("1"), 1);
  REQUIRE(qsst1.size() == 2);
  CHECK(qsst1[0].entries() == std::vector<MarkedLetter>{{1, true}});
  CHECK(qsst1[1].entries() == std::vector<MarkedLetter>{{1, false}});
}

TEST_CASE("enumerate matches the brute-force oracle") {
  struct Probe {
    const char* shape;
    int max_base;
    std::optional<Content> content;
  };
  const Probe probes[] = {
      {"2,1/1", 2, Content::parse("1,1")},
      {"2,1", 2, std::nullopt},
      {"3,1", 2, std::nullopt},
      {"2,1", 3, Content::parse("1,1,1")},
      {"3/1", 3, std::nullopt},
      {"2", 2, std::nullopt},
  };
  for (const Probe& probe : probes) {
    SkewShape shape = SkewShape::parse(probe.shape);
    for (Kind kind : {Kind::P, Kind::Q}) {
      auto got = enumerate_all(kind, shape, probe.max_base, probe.content);
      auto expected = brute_enumerate(kind, shape, probe.max_base, probe.content);
      REQUIRE(got.size() == expected.size());
      // Both are in lexicographic filling order by construction.
      CHECK(got == expected);
      for (const MarkedTableau& t : got) CHECK(!validate(kind, t));
    }
  }
}

TEST_CASE("validate agrees with the rule-by-rule oracle on arbitrary fillings") {
  std::mt19937_64 rng(3);
  const char* shapes[] = {"2,1", "3,1/1", "3,2", "4,2/2", "2,1/1"};
  std::vector<MarkedLetter> alphabet;
  for (int k = 1; k <= 3; ++k) {
    alphabet.push_back({k, true});
    alphabet.push_back({k, false});
  }
  for (const char* s : shapes) {
    SkewShape shape = SkewShape::parse(s);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<MarkedLetter> filling;
      for (int k = 0; k < shape.cell_count(); ++k)
        filling.push_back(alphabet[rng() % alphabet.size()]);
      MarkedTableau t(shape, filling);
      for (Kind kind : {Kind::P, Kind::Q})
        CHECK(!validate(kind, t).has_value() == brute_valid(kind, t));
    }
  }
}

TEST_CASE("enumeration partitions by content") {
  SkewShape shape = SkewShape::parse("3,1/1");
  const int max_base = 2;
  auto all = enumerate_all(Kind::Q, shape, max_base);
  std::map<Content, std::size_t> by_content;
  for (const MarkedTableau& t : all) by_content[content_of(t)] += 1;
  std::size_t total = 0;
  for (const auto& [content, n] : by_content) {
    CHECK(count_tableaux(Kind::Q, shape, max_base, content) == n);
    total += n;
  }
  CHECK(total == all.size());
}

TEST_CASE("P-tableaux are Q-tableaux") {
  SkewShape shape = SkewShape::parse("3,1");
  for (const MarkedTableau& t : enumerate_all(Kind::P, shape, 3)) CHECK(!validate(Kind::Q, t));
}

TEST_CASE("Q counts are 2^length times P counts per content") {
  for (int n = 1; n <= 5; ++n) {
    for (const StrictPartition& lambda : strict_partitions_of(n)) {
      SkewShape shape{lambda};
      std::map<Content, long long> p_hist, q_hist;
      for (const MarkedTableau& t : enumerate_all(Kind::P, shape, 4)) p_hist[content_of(t)] += 1;
      for (const MarkedTableau& t : enumerate_all(Kind::Q, shape, 4)) q_hist[content_of(t)] += 1;
      long long factor = 1LL << lambda.length();
      REQUIRE(q_hist.size() == p_hist.size());
      for (const auto& [content, count] : p_hist) CHECK(q_hist.at(content) == factor * count);
    }
  }
}

TEST_CASE("content and unmark") {
  MarkedTableau example = tab("4,3,1", "1',1,2',2;2',2,3;3");
  CHECK(content_of(example) == Content::parse("2,4,2"));
  CHECK(content_of(MarkedTableau()) == Content());

  MarkedWord w = parse_marked_word("3 2' 2 3 1' 1 2' 2");
  CHECK(content_of(w) == Content::parse("2,4,2"));
  CHECK(to_string(unmark(w)) == "3 2 2 3 1 1 2 2");
  CHECK(content_of(unmark(w)) == content_of(w));

  LabeledWord lw = parse_labeled_word("3_1 2'_2 2_3");
  CHECK(to_string(unmark(lw)) == "3_1 2_2 2_3");

  MarkedTableau plain = tab("2,1", "1,1;2");
  CHECK(unmark(plain) == plain);
}

TEST_CASE("tableau text round-trip") {
  MarkedTableau t = tab("8,3,1/3,1", "1,2',3,4,4;2',4;2'");
  CHECK(to_text(t) == "1,2',3,4,4;2',4;2'");
  CHECK(t.at({3, 3}) == MarkedLetter{2, true});
  CHECK_THROWS_AS(tab("2,1", "1;2"), ParseError);
  CHECK_THROWS_AS(tab("2,1", "1,2,3;2"), ParseError);
  CHECK_THROWS_AS(tab("2,1", "1,x;2"), ParseError);
}

TEST_CASE("text handles rows without boxes") {
  // leading empty row
  MarkedTableau lead = tab("3,1/3", ";1");
  CHECK(lead.at({2, 2}) == MarkedLetter{1, false});
  CHECK(to_text(lead) == ";1");
  CHECK(tab("3,1/3", to_text(lead)) == lead);
  // empty middle row
  MarkedTableau mid = tab("4,2,1/3,2", "1;;2");
  CHECK(mid.at({1, 4}) == MarkedLetter{1, false});
  CHECK(mid.at({3, 3}) == MarkedLetter{2, false});
  CHECK(to_text(mid) == "1;;2");
  CHECK(tab("4,2,1/3,2", to_text(mid)) == mid);
  CHECK(to_text(MarkedTableau()).empty());
}
