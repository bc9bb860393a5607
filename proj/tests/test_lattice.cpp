#include <doctest.h>

#include "singer/homology.hpp"
#include "singer/lattice.hpp"

using namespace singer;

namespace {

Presentation expected_gamma(long q, const std::array<std::vector<long>, 3>& orderings) {
  // <sigma1, sigma2, sigma3 | sigma^n, sigma1^d1(j) sigma2^d2(j) sigma3^d3(j)>
  long n = q * q + q + 1;
  Presentation p;
  for (int alpha = 0; alpha < 3; ++alpha)
    p.gens.push_back({"sigma" + std::to_string(alpha + 1), n, alpha});
  for (int alpha = 0; alpha < 3; ++alpha)
    p.add_relator(Word(static_cast<size_t>(n), alpha + 1));
  for (long j = 1; j <= q; ++j) {
    Word w;
    for (int alpha = 0; alpha < 3; ++alpha)
      for (long r = 0; r < orderings[alpha][j]; ++r) w.push_back(alpha + 1);
    p.add_relator(w);
  }
  return p;
}

}  // namespace

TEST_CASE("triangle-type complex shape for q = 2") {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
  ComplexOfGroups c = a2_complex_of_groups(spec);
  CHECK(c.base.vertices.size() == 9);   // 3 corners + 3 panels + 3 chambers
  CHECK(c.base.edges.size() == 24);     // 6 + 9 + 9
  CHECK(c.base.dimension() == 2);
  CHECK(c.canonical_tree.size() == 8);
  int nontrivial = 0;
  for (const auto& vg : c.vgroups)
    if (vg.group_size() > 1) ++nontrivial;
  CHECK(nontrivial == 3);
}

TEST_CASE("presentations match the worked lattices") {
  DifferenceSet ds{7, {0, 1, 3}};
  std::vector<int> identity = {0, 1, 2};
  std::vector<int> swapped = {0, 2, 1};

  A2LatticeSpec gamma2 = A2LatticeSpec::cyclic(2, {ds, ds, ds}, {identity, identity, identity});
  CHECK(structurally_equal(a2_presentation(gamma2),
                           expected_gamma(2, {{{0, 1, 3}, {0, 1, 3}, {0, 1, 3}}})));

  A2LatticeSpec gamma2p = A2LatticeSpec::cyclic(2, {ds, ds, ds}, {swapped, identity, identity});
  CHECK(structurally_equal(a2_presentation(gamma2p),
                           expected_gamma(2, {{{0, 3, 1}, {0, 1, 3}, {0, 1, 3}}})));

  A2LatticeSpec gamma3 = A2LatticeSpec::cyclic_default(3);
  CHECK(structurally_equal(a2_presentation(gamma3),
                           expected_gamma(3, {{{0, 1, 3, 9}, {0, 1, 3, 9}, {0, 1, 3, 9}}})));
}

TEST_CASE("fundamental group oracle for the triangle family") {
  DifferenceSet ds{7, {0, 1, 3}};
  std::vector<int> identity = {0, 1, 2};
  std::vector<int> swapped = {0, 2, 1};
  std::vector<A2LatticeSpec> specs = {
      A2LatticeSpec::cyclic(2, {ds, ds, ds}, {identity, identity, identity}),
      A2LatticeSpec::cyclic(2, {ds, ds, ds}, {swapped, identity, identity}),
      A2LatticeSpec::cyclic_default(3),
  };
  for (const auto& spec : specs) {
    ComplexOfGroups c = a2_complex_of_groups(spec);
    Presentation mech = fundamental_group(c, c.canonical_tree);
    Presentation hand = a2_presentation(spec);
    CHECK(structurally_equal(hand, mech));
  }
}

TEST_CASE("generic-group route agrees with the cyclic route") {
  A2LatticeSpec cyclic = A2LatticeSpec::cyclic_default(2);
  A2LatticeSpec generic = A2LatticeSpec::generic_from_cyclic(cyclic);
  CHECK_FALSE(generic.cyclic());
  ComplexOfGroups c = a2_complex_of_groups(generic);
  Presentation mech = fundamental_group(c, c.canonical_tree);
  Presentation hand = a2_presentation(generic);
  CHECK(structurally_equal(hand, mech));
  // Same group as the cyclic route: identical abelianizations.
  CHECK(abelianization(hand) == abelianization(a2_presentation(cyclic)));
}

TEST_CASE("abelianization is invariant under the spanning tree") {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
  ComplexOfGroups c = a2_complex_of_groups(spec);
  // An alternative maximal tree: corner edges v1<e2, v2<e1, v3<e1 plus all
  // chambers attached through e1 instead of e3.
  std::vector<int> alt;
  std::map<std::string, int> by_label;
  for (size_t e = 0; e < c.base.edges.size(); ++e) by_label[c.base.edges[e].label] = static_cast<int>(e);
  alt.push_back(by_label.at("v1<e2"));
  alt.push_back(by_label.at("v2<e1"));
  alt.push_back(by_label.at("v3<e1"));
  alt.push_back(by_label.at("v1<e3"));
  for (long j = 0; j <= spec.q; ++j) alt.push_back(by_label.at("e1<f" + std::to_string(j)));
  Presentation p1 = fundamental_group(c, c.canonical_tree);
  Presentation p2 = fundamental_group(c, alt);
  CHECK(abelianization(p1) == abelianization(p2));
  CHECK_THROWS_AS(fundamental_group(c, std::vector<int>{0, 1, 2}), Error);     // too small
  std::vector<int> cyclic_edges = c.canonical_tree;
  cyclic_edges[7] = by_label.at("v1<e2");  // duplicate: not a tree
  CHECK_THROWS_AS(fundamental_group(c, cyclic_edges), Error);
}

TEST_CASE("local developments of the triangle complexes") {
  for (long q : {2L, 3L}) {
    A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
    ComplexOfGroups c = a2_complex_of_groups(spec);
    auto reports = verify_all_links(c, a2_expected_links(spec), 5000);
    for (const auto& r : reports) {
      INFO("vertex ", r.vertex_label, ": ", r.detail);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("upper link size formula") {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
  ComplexOfGroups c = a2_complex_of_groups(spec);
  for (int v = 0; v < static_cast<int>(c.base.vertices.size()); ++v) {
    Scwol link = upper_link(c, v);
    long expect = 0;
    for (int a : c.base.in_edges()[v])
      expect += c.vgroups[v].group_size() / static_cast<long>(c.mono_image(a).size());
    CHECK(static_cast<long>(link.vertices.size()) == expect);
  }
  // Corner vertex: 35 = 7 + 7 + 21 cosets for q = 2.
  CHECK(upper_link(c, 0).vertices.size() == 35);
}

TEST_CASE("zero twists break the local development") {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
  ComplexOfGroups c = a2_complex_of_groups(spec);
  c.twists.clear();
  c.twist_words.clear();
  c.validate();  // still a valid complex of groups, the sources are trivial
  auto expected = a2_expected_links(spec);
  bool some_fail = false;
  for (int v = 0; v < 3; ++v) {
    LocalCheckResult r = local_development_check(c, v, expected[v].second);
    if (!r.isomorphic) some_fail = true;
  }
  CHECK(some_fail);
}

TEST_CASE("corrupting any single twist breaks some corner development") {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
  ComplexOfGroups clean = a2_complex_of_groups(spec);
  auto expected = a2_expected_links(spec);
  for (const auto& [pair, value] : clean.twists) {
    ComplexOfGroups mutant = clean;
    const auto& group = *mutant.vgroups[mutant.base.edges[pair.first].t].group;
    mutant.twists[pair] = group.mult(value, 1);  // shift by the generator
    mutant.twist_words.erase(pair);
    bool some_fail = false;
    for (int v = 0; v < 3 && !some_fail; ++v)
      if (!local_development_check(mutant, v, expected[v].second).isomorphic) some_fail = true;
    CHECK(some_fail);
  }
}

TEST_CASE("quadrangle-type complexes and presentations") {
  for (long q : {3L, 4L}) {
    for (C2Family family : {C2Family::TwoPanel, C2Family::OnePanel}) {
      C2LatticeSpec spec = C2LatticeSpec::make(q, family);
      ComplexOfGroups c = c2_complex_of_groups(spec);
      Presentation mech = fundamental_group(c, c.canonical_tree);
      Presentation hand = c2_presentation(spec);
      INFO("q = ", q, ", family = ", family == C2Family::TwoPanel ? "two" : "one");
      CHECK(structurally_equal(hand, mech));
    }
  }
}

TEST_CASE("quadrangle-type local developments") {
  for (long q : {3L, 4L}) {
    for (C2Family family : {C2Family::TwoPanel, C2Family::OnePanel}) {
      C2LatticeSpec spec = C2LatticeSpec::make(q, family);
      ComplexOfGroups c = c2_complex_of_groups(spec);
      auto reports = verify_all_links(c, c2_expected_links(spec), 5000);
      for (const auto& r : reports) {
        INFO("q = ", q, " vertex ", r.vertex_label, ": ", r.detail);
        CHECK(r.ok);
      }
    }
  }
}

TEST_CASE("two-panel presentation content for q = 3") {
  C2LatticeSpec spec = C2LatticeSpec::make(3, C2Family::TwoPanel);
  Presentation p = c2_presentation(spec);
  REQUIRE(p.gens.size() == 7);
  CHECK(p.gens[0].name == "x");
  CHECK(p.gens[3].name == "x'");
  CHECK(p.gens[6].name == "c");
  CHECK(p.gens[6].order == 5);
  // 6 + 6 vertex relators, c^5, and q+2 = 5 conjugation relators.
  CHECK(p.relators.size() == 18);
  bool has_c5 = false;
  for (const Word& r : p.relators)
    if (r == Word(5, 7)) has_c5 = true;
  CHECK(has_c5);
}

TEST_CASE("one-panel presentation content") {
  C2LatticeSpec spec = C2LatticeSpec::make(3, C2Family::OnePanel);
  Presentation p = c2_presentation(spec);
  CHECK(p.gens.size() == 6);
  CHECK(p.relators.size() == 12 + 5);  // vertex relators + one commutator per j
  // q = 4: elementary abelian corners, four commutators per j.
  C2LatticeSpec spec4 = C2LatticeSpec::make(4, C2Family::OnePanel);
  Presentation p4 = c2_presentation(spec4);
  CHECK(p4.gens.size() == 12);
  // 6 squares + 15 commutators per side, plus 4 * 6 cross commutators.
  CHECK(p4.relators.size() == 2 * 21 + 4 * 6);
}

TEST_CASE("building skeletons") {
  BuildingSkeleton a2 = building_skeleton(A2LatticeSpec::cyclic_default(2));
  CHECK(a2.vertex_classes.size() == 3);
  CHECK(a2.edge_templates.size() == 3);
  BuildingSkeleton c2 = building_skeleton(C2LatticeSpec::make(3, C2Family::TwoPanel));
  CHECK(c2.vertex_classes == std::vector<std::string>{"Gamma/S", "Gamma/S'", "Gamma/<c>"});
  BuildingSkeleton c2one = building_skeleton(C2LatticeSpec::make(3, C2Family::OnePanel));
  CHECK(c2one.vertex_classes.size() == 2 + 5);
}

TEST_CASE("spec validation") {
  DifferenceSet ds{7, {0, 1, 3}};
  std::vector<int> bad = {1, 0, 2};
  CHECK_THROWS_AS(A2LatticeSpec::cyclic(2, {ds, ds, ds}, {bad, bad, bad}), Error);
  CHECK_THROWS_AS(C2LatticeSpec::make(2, C2Family::TwoPanel), Error);
  C2LatticeSpec spec = C2LatticeSpec::make(3, C2Family::TwoPanel);
  spec.lambda[0] = spec.lambda[1];
  CHECK_THROWS_AS(spec.validate(), Error);
}
