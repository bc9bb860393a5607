#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singer/incidence.hpp"

namespace singer {

struct ScwolVertex {
  std::string label;
  int type_tag = 0;
};

struct ScwolEdge {
  int i = -1;  // initial vertex
  int t = -1;  // terminal vertex
  std::string label;
};

// Small category without loops: directed edges with a composition defined on
// every pair (a, b) with i(a) = t(b).
struct Scwol {
  std::vector<ScwolVertex> vertices;
  std::vector<ScwolEdge> edges;
  std::map<std::pair<int, int>, int> composition;  // (a, b) -> ab

  int add_vertex(std::string label, int type_tag = 0);
  int add_edge(int i, int t, std::string label = "");
  void set_composition(int a, int b, int ab);

  std::vector<std::pair<int, int>> composable_pairs() const;
  std::vector<std::vector<int>> out_edges() const;  // by i(a)
  std::vector<std::vector<int>> in_edges() const;   // by t(a)
  int dimension() const;

  // No-loops condition, endpoint compatibility of compositions, totality of
  // the composition map, associativity on triples.
  void validate() const;

  std::string to_dot() const;
};

// Vertices P | L | F with edges p <- f and l <- f for every flag f = (p, l).
Scwol scwol_of_incidence(const IncidenceStructure& inc);

// Scwol with n isolated vertices (the upper link of a panel vertex).
Scwol discrete_scwol(int n);

// Directed-multigraph isomorphism respecting the composition, by
// degree-refinement plus backtracking. Returns the vertex bijection.
std::optional<std::vector<int>> find_scwol_isomorphism(const Scwol& a, const Scwol& b,
                                                       int max_vertices = 5000);

}  // namespace singer
