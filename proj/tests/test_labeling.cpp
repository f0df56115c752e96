#include <doctest.h>

#include <random>
#include <set>

#include "shifted/labeling.hpp"
#include "shifted/lr.hpp"
#include "shifted/word.hpp"

using namespace shifted;

namespace {

MarkedTableau tab(const std::string& shape, const std::string& entries) {
  return parse_marked_tableau(SkewShape::parse(shape), entries);
}

LabeledTableau ltab(const std::string& shape, const std::string& entries) {
  return parse_labeled_tableau(SkewShape::parse(shape), entries);
}

}  // namespace

TEST_CASE("subscripting the worked tableaux") {
  CHECK(phi_t(tab("4,3,1", "1',1,2',2;2',2,3;3")) ==
        ltab("4,3,1", "1'_1,1_2,2'_1,2_4;2'_2,2_3,3_2;3_1"));
  CHECK(phi_t(tab("1", "2")) == ltab("1", "2_1"));
  CHECK(phi_t(tab("8,3,1/3,1", "1,2',3,4,4;2',4;2'")) ==
        ltab("8,3,1/3,1", "1_1,2'_1,3_1,4_2,4_3;2'_2,4_1;2'_3"));
}

TEST_CASE("subscripting words") {
  CHECK(to_string(phi_w(parse_marked_word("3 2' 2 3 1' 1 2' 2"))) ==
        "3_1 2_2 2_3 3_2 1_1 1_2 2_1 2_4");
  CHECK(to_string(phi_w(parse_marked_word("1 2 3"))) == "1_1 2_1 3_1");
  CHECK(phi_w(MarkedWord{}).empty());
}

TEST_CASE("label stripping inverts subscripting") {
  MarkedTableau a = tab("4,3,1", "1',1,2',2;2',2,3;3");
  MarkedTableau b = tab("8,3,1/3,1", "1,2',3,4,4;2',4;2'");
  CHECK(phi_t_inverse(phi_t(a)) == a);
  CHECK(phi_t_inverse(phi_t(b)) == b);
  CHECK(phi_t_inverse(ltab("1", "2_1")) == tab("1", "2"));
  // stripping can expose an invalid filling
  CHECK_THROWS_AS(phi_t_inverse(ltab("2", "2_1,1_1")), std::invalid_argument);
}

TEST_CASE("word and tableau subscripting commute with row reading") {
  std::mt19937_64 rng(41);
  std::vector<SkewShape> shapes;
  for (int n = 1; n <= 8; ++n)
    for (const StrictPartition& outer : strict_partitions_of(n))
      for (int m = 0; m < n; ++m)
        for (const StrictPartition& inner : strict_partitions_of(m))
          if (outer.contains(inner) && outer.weight() - inner.weight() <= 8)
            shapes.emplace_back(outer, inner);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    const SkewShape& shape = shapes[pick(rng)];
    MarkedTableau t;
    enumerate(Kind::Q, shape, 4, std::nullopt, [&](const MarkedTableau& found) {
      t = found;
      return rng() % 7 != 0;  // keep a pseudo-random element of the stream
    });
    if (t.shape().cell_count() == 0) continue;
    CHECK(phi_w(row_word(t)) == unmark(row_word(phi_t(t))));
    LabeledTableau labeled = phi_t(t);
    CHECK(!validate(Kind::Q, labeled));
    // letters pairwise distinct after unmarking
    std::set<LabeledLetter> seen;
    for (LabeledLetter l : labeled.entries()) CHECK(seen.insert(l.unmark()).second);
  }
}

TEST_CASE("rectifying commutes with subscripting up to marks") {
  int checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (const StrictPartition& outer : strict_partitions_of(n))
      for (int m = 0; m < n; ++m)
        for (const StrictPartition& inner : strict_partitions_of(m)) {
          if (!outer.contains(inner)) continue;
          SkewShape shape(outer, inner);
          enumerate(Kind::Q, shape, 3, std::nullopt, [&](const MarkedTableau& t) {
            ++checked;
            LabeledTableau lhs = rectify(phi_t(t)).tableau;
            LabeledTableau rhs = phi_t(rectify(t).tableau);
            CHECK(unmark(lhs) == unmark(rhs));
            return true;
          });
        }
  CHECK(checked > 1000);
}

TEST_CASE("variable transport on the worked example") {
  SkewShape shape = SkewShape::parse("8,3,1/3,1");
  MarkedTableau filling = tab("8,3,1/3,1", "1,2',3,4,4;2',4;2'");
  VariableTableau moved = transport(identity_variables(shape), filling);
  CHECK(moved.shape() == SkewShape::parse("6,2"));
  // pinned from the position-tracking rectification, arm variables last
  CHECK(to_text(moved) == "v1_4,v1_5,v3_3,v1_6,v1_7,v1_8;v2_3,v2_4");
  CHECK(moved.at({1, 5}) == VariableId{{1, 7}});
  CHECK(moved.at({1, 6}) == VariableId{{1, 8}});
}

TEST_CASE("transport is a bijection on variables with the rectified shape") {
  SkewShape shape = SkewShape::parse("6,3,1/2,1");
  VariableTableau vars = identity_variables(shape);
  int checked = 0;
  enumerate(Kind::Q, shape, 3, std::nullopt, [&](const MarkedTableau& t) {
    VariableTableau moved = transport(vars, t);
    CHECK(moved.shape().outer() == rectify(t).tableau.shape().outer());
    std::set<VariableId> seen(moved.entries().begin(), moved.entries().end());
    CHECK(seen.size() == moved.entries().size());
    return ++checked < 500;
  });
}

TEST_CASE("representatives cover the expansion table") {
  SkewShape shape = SkewShape::parse("6,3,1/2,1");
  auto reps = u_representatives(shape, identity_variables(shape));
  std::set<StrictPartition> keys;
  for (const auto& [nu, rep] : reps) keys.insert(nu);
  // (6,1) belongs here: the exact polynomial expansion of this skew shape
  // requires it (see test_lr), even though it is easy to miss by hand.
  CHECK(keys == std::set<StrictPartition>{StrictPartition::parse("4,2,1"),
                                          StrictPartition::parse("4,3"),
                                          StrictPartition::parse("5,2"),
                                          StrictPartition::parse("6,1")});
  for (const auto& [nu, rep] : reps) CHECK(rep.shape().outer() == nu);

  SkewShape normal = SkewShape::parse("3,1");
  auto trivial = u_representatives(normal, identity_variables(normal));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.begin()->first == StrictPartition::parse("3,1"));
  CHECK(trivial.begin()->second == identity_variables(normal));

  CHECK(u_representatives(SkewShape(), identity_variables(SkewShape())).empty());
}

TEST_CASE("every representative ends row 1 with the arm variables") {
  SkewShape shape = SkewShape::parse("8,3,1/3,1");
  VariableTableau vars = identity_variables(shape);
  // All transports with a given rectified shape agree on the arm suffix.
  int checked = 0;
  enumerate(Kind::Q, shape, 3, std::nullopt, [&](const MarkedTableau& t) {
    VariableTableau moved = transport(vars, t);
    int nu1 = moved.shape().outer().part(1);
    CHECK(moved.at({1, nu1 - 1}) == VariableId{{1, 7}});
    CHECK(moved.at({1, nu1}) == VariableId{{1, 8}});
    return ++checked < 400;
  });
  CHECK(checked > 100);
}

TEST_CASE("arm variables land in order for every filling, second shape") {
  SkewShape shape = SkewShape::parse("6,3/2,1");
  VariableTableau vars = identity_variables(shape);
  // arm boxes (1,5),(1,6) land in the final two row-1 boxes, in order
  REQUIRE(shape.arm() == std::vector<Cell>{{1, 5}, {1, 6}});
  enumerate(Kind::Q, shape, 3, std::nullopt, [&](const MarkedTableau& t) {
    VariableTableau moved = transport(vars, t);
    int nu1 = moved.shape().outer().part(1);
    CHECK(moved.at({1, nu1 - 1}) == VariableId{{1, 5}});
    CHECK(moved.at({1, nu1}) == VariableId{{1, 6}});
    return true;
  });
}
