#pragma once

#include <functional>

#include "singer/presentation.hpp"
#include "singer/scwol.hpp"

namespace singer {

// Vertex group together with presentation data as used inside a complex;
// a null group means the trivial group.
struct VertexGroupData {
  GroupPtr group;
  std::vector<std::string> gen_names;
  std::vector<int> gen_elements;
  std::vector<Word> relators;
  bool principal = false;  // survives into the fundamental-group presentation

  int group_size() const { return group ? group->size() : 1; }
  int num_gens() const { return static_cast<int>(gen_names.size()); }
};

struct EdgeMono {
  // Full element map G_i(a) -> G_t(a); empty means trivial (only valid when
  // the source group is trivial).
  std::vector<int> element_map;
  // Image of each source generator as a word over the target generators.
  std::vector<Word> gen_image_words;
};

struct ComplexOfGroups {
  Scwol base;
  std::vector<VertexGroupData> vgroups;
  std::vector<EdgeMono> monos;
  std::map<std::pair<int, int>, int> twists;       // composable pair -> element of G_t(a)
  std::map<std::pair<int, int>, Word> twist_words; // same element over t(a)'s generators
  std::vector<int> canonical_tree;                 // edge ids of the reference spanning tree

  int twist_of(int a, int b) const;
  // Image subgroup psi_a(G_i(a)) as a sorted element list of G_t(a).
  std::vector<int> mono_image(int edge) const;
  // Monomorphism injectivity/homomorphism property, compatibility of twists
  // with the edge monomorphisms, cocycle condition on triples.
  void validate() const;
};

// Coset scwol of the local development above v: vertices are cosets
// g psi_a(G_i(a)) for edges a into v, edges are cosets g psi_ab(G_i(b)) for
// composable pairs ending at v, with the terminal map twisted by g_{a,b}^-1.
Scwol upper_link(const ComplexOfGroups& c, int v);

struct LocalCheckResult {
  bool isomorphic = false;
  std::optional<std::vector<int>> iso;
  std::string detail;
};

LocalCheckResult local_development_check(const ComplexOfGroups& c, int v, const Scwol& expected,
                                         int max_vertices = 5000);

// Presentation of the fundamental group over a spanning tree, simplified by
// the two safe Tietze moves (tree edge generators die; generators of
// non-principal vertex groups defined by a single edge relation are
// substituted away) plus removal of relators that became redundant inside a
// single retained vertex group.
Presentation fundamental_group(const ComplexOfGroups& c, const std::vector<int>& tree_edges);

// Shortest word for an element over given generators, BFS, deterministic.
Word factor_element(const FiniteGroup& g, const std::vector<int>& gen_elements, int target);

// Group acting on a scwol (automorphisms, no inversions).
struct ScwolAction {
  GroupPtr group;
  std::function<int(int, int)> on_vertex;
  std::function<int(int, int)> on_edge;

  bool check(const Scwol& x, std::string* why = nullptr) const;
};

// Quotient complex of groups of an action: stabilizer vertex groups,
// conjugation monomorphisms psi_a = Ad(h_a), twists g_{a,b} = h_a h_b h_ab^-1.
ComplexOfGroups quotient_complex_of_groups(const Scwol& x, const ScwolAction& action);

}  // namespace singer
