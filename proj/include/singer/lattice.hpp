#pragma once

#include <array>

#include "singer/complex_of_groups.hpp"
#include "singer/singer_geom.hpp"

namespace singer {

// One corner datum: a Singer group with an ordered difference set
// d(0..q), d(0) = identity, and the presentation data used at its vertex.
struct SingerDatum {
  GroupPtr group;
  std::vector<int> ordered_elements;
  std::vector<Word> d_words;           // word of d(j) over the generators
  std::vector<long> ordered_residues;  // cyclic case only: exponents
  std::vector<std::string> gen_names;
  std::vector<int> gen_elements;
  std::vector<Word> relators;
};

struct A2LatticeSpec {
  long q = 0;
  std::array<SingerDatum, 3> data;
  std::array<DifferenceSet, 3> deltas;  // cyclic case
  bool is_cyclic = false;

  bool cyclic() const { return is_cyclic; }
  void validate() const;

  // Classical difference sets with chosen orderings (permutations of the
  // sorted residues, fixing 0 first).
  static A2LatticeSpec cyclic(long q, const std::array<DifferenceSet, 3>& deltas,
                              const std::array<std::vector<int>, 3>& orderings);
  static A2LatticeSpec cyclic_default(long q);  // equal trace-kernel sets, ascending order
  // Same data routed through the generic group interface (the cyclic groups
  // are wrapped as plain finite groups; words are found by factorization).
  static A2LatticeSpec generic_from_cyclic(const A2LatticeSpec& spec);
};

ComplexOfGroups a2_complex_of_groups(const A2LatticeSpec& spec);
Presentation a2_presentation(const A2LatticeSpec& spec);

enum class C2Family { TwoPanel, OnePanel };

struct C2LatticeSpec {
  long q = 0;
  C2Family family = C2Family::TwoPanel;
  std::shared_ptr<const SlantedQuadrangle> quad;    // unprimed copy
  std::shared_ptr<const SlantedQuadrangle> quad2;   // primed copy (may alias)
  std::vector<int> lambda;   // J -> line representative index
  std::vector<int> lambda2;

  void validate() const;
  static C2LatticeSpec make(long q, C2Family family, std::vector<int> lambda = {},
                            std::vector<int> lambda2 = {});
};

ComplexOfGroups c2_complex_of_groups(const C2LatticeSpec& spec);
Presentation c2_presentation(const C2LatticeSpec& spec);

// Symbolic description of the building as a flag complex over coset classes.
struct BuildingSkeleton {
  std::vector<std::string> vertex_classes;
  std::vector<std::pair<int, int>> edge_templates;  // class pairs, one g-orbit each
  std::string description;
};

BuildingSkeleton building_skeleton(const A2LatticeSpec& spec);
BuildingSkeleton building_skeleton(const C2LatticeSpec& spec);

// Expected upper links for every vertex of the generated complexes.
std::vector<std::pair<int, Scwol>> a2_expected_links(const A2LatticeSpec& spec);
std::vector<std::pair<int, Scwol>> c2_expected_links(const C2LatticeSpec& spec);

struct LinkCheckReport {
  int vertex = -1;
  std::string vertex_label;
  bool ok = false;
  std::string detail;
};

std::vector<LinkCheckReport> verify_all_links(const ComplexOfGroups& c,
                                              const std::vector<std::pair<int, Scwol>>& expected,
                                              int max_vertices = 5000);

}  // namespace singer
