#include <doctest.h>

#include <set>

#include "singer/group.hpp"

using namespace singer;

TEST_CASE("cyclic groups") {
  CyclicGroup z7(7);
  CHECK(z7.element_order(z7.generator()) == 7);
  CHECK(CyclicGroup(1).size() == 1);
  CyclicGroup z13(13);
  int g = z13.generator();
  int acc = z13.identity();
  for (int i = 0; i < 13; ++i) acc = z13.mult(acc, g);
  CHECK(acc == z13.identity());
  CHECK(z7.check_axioms());
}

TEST_CASE("heisenberg group structure") {
  CHECK_THROWS_AS(HeisenbergGroup(2), Error);
  HeisenbergGroup e3(3);
  CHECK(e3.size() == 27);
  // [x, y] = z(2), the distinguished central element.
  CHECK(e3.commutator(e3.x_of(1), e3.y_of(1)) == e3.z_of(2));
  // Exhaustive closure of the generators reaches the full group.
  std::vector<int> gens;
  for (long a = 1; a < 3; ++a) {
    gens.push_back(e3.x_of(a));
    gens.push_back(e3.y_of(a));
    gens.push_back(e3.z_of(a));
  }
  CHECK(e3.subgroup_closure(gens).size() == 27);
  CHECK(e3.check_axioms());

  // Center of order q generated by the z(c); derived subgroup = center (odd q).
  auto center = e3.center();
  CHECK(center.size() == 3);
  for (int c : center) CHECK(e3.triple_of(c)[0] == 0);
  CHECK(e3.derived_subgroup() == center);

  HeisenbergGroup e4(4);
  CHECK(e4.size() == 64);
  bool abelian = true;
  for (int a = 0; a < e4.size() && abelian; ++a)
    for (int b = 0; b < e4.size() && abelian; ++b)
      if (e4.commutator(a, b) != e4.identity()) abelian = false;
  CHECK(abelian);
  CHECK(e4.derived_subgroup().size() == 1);
  // Elementary abelian of rank 3 over F_2: every element has order <= 2.
  for (int a = 0; a < e4.size(); ++a) CHECK(e4.element_order(a) <= 2);

  HeisenbergGroup e5(5);
  CHECK(e5.center().size() == 5);
  CHECK(e5.derived_subgroup() == e5.center());
}

TEST_CASE("presentation relators hold in the groups") {
  std::vector<GroupPtr> groups = {
      std::make_shared<CyclicGroup>(7),
      std::make_shared<HeisenbergGroup>(3),
      std::make_shared<HeisenbergGroup>(4),
      std::make_shared<ElementaryAbelianGroup>(4, 2),
      std::make_shared<DirectProductGroup>(std::make_shared<CyclicGroup>(3),
                                           std::make_shared<CyclicGroup>(5)),
  };
  for (const GroupPtr& g : groups) {
    GroupPresentation pres = g->presentation();
    for (const Word& r : pres.relators) CHECK(g->eval_word(r) == g->identity());
    // The named generators generate.
    CHECK(g->subgroup_closure(pres.gen_elements).size() == static_cast<size_t>(g->size()));
  }
}

TEST_CASE("table group round trip") {
  HeisenbergGroup e3(3);
  auto table = to_table_group(e3);
  CHECK(table->size() == e3.size());
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) CHECK(table->mult(a, b) == e3.mult(a, b));
  CHECK(table->check_axioms());
}

TEST_CASE("regular actions and stabilizers") {
  auto z7 = std::make_shared<CyclicGroup>(7);
  GroupAction translation{z7, 7, [](int g, int x) { return (g + x) % 7; }};
  CHECK(translation.check_axioms());
  RegularityResult r = is_regular_action(translation);
  CHECK(r.regular);
  CHECK(stabilizer(translation, 3) == std::vector<int>{0});

  // Two disjoint orbits: transitivity fails with an unreached witness.
  GroupAction split{z7, 14, [](int g, int x) {
                      return x < 7 ? (g + x) % 7 : 7 + (g + x) % 7;
                    }};
  RegularityResult r2 = is_regular_action(split);
  CHECK_FALSE(r2.regular);
  REQUIRE(r2.unreached_point.has_value());
  CHECK(*r2.unreached_point >= 7);

  // A fixing pair is reported for non-free actions.
  GroupAction trivial{z7, 3, [](int, int x) { return x; }};
  RegularityResult r3 = is_regular_action(trivial);
  CHECK_FALSE(r3.regular);
  CHECK(r3.fix_pair.has_value());
}

TEST_CASE("word helpers") {
  Word w = {1, 2, -2, 3};
  CHECK(free_reduce(w) == Word{1, 3});
  CHECK(word_inverse(Word{1, -2}) == Word{2, -1});
  CHECK(free_reduce(Word{1, -1}).empty());
}
