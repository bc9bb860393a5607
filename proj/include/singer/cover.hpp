#pragma once

#include "singer/hjelmslev.hpp"
#include "singer/lattice.hpp"

namespace singer {

// Alternating syllable word over the three corner generators, exponents
// nonzero mod n.
using Syllables = std::vector<std::pair<int, long>>;

// Bounded rewriting over the triangle relators of a cyclic spec: words are
// multiplied by relator variants at arbitrary positions and canonicalized.
class TriangleRewriter {
 public:
  TriangleRewriter(const A2LatticeSpec& spec, int max_depth, int max_syllables);

  Syllables canon(Syllables w) const;
  // True if w provably reduces to a word whose syllable types, in order, form
  // a subsequence of the pattern (e.g. pattern {1,2} accepts 1, 2, 12, empty).
  bool reduces_to_pattern(const Syllables& w, const std::vector<int>& pattern) const;

  long n() const { return n_; }

 private:
  long n_;
  std::vector<Syllables> variants_;
  int max_depth_;
  int max_syllables_;
};

struct CoverBall {
  int radius = 0;
  Scwol fragment;
  std::map<std::string, long> counts;
  std::vector<std::string> diagnostics;
};

// Radius 0/1 star of a minimal base vertex, valid for any complex; radius 2
// requires the cyclic word route and reports BoundExceeded otherwise.
CoverBall universal_cover_ball(const ComplexOfGroups& c, int base_vertex, int radius,
                               int word_bound);

// Radius <= 2 ball around the S1-corner of a cyclic lattice via bounded word
// enumeration; counts are cross-checkable against the level-2 sphere.
CoverBall a2_cover_ball(const A2LatticeSpec& spec, int radius, int word_bound);

// Exhaustive comparison (small q) of the configuration-based adjacency in the
// enumerated ball with the closed-form level-2 adjacency.
bool a2_cover_matches_hjelmslev(const A2LatticeSpec& spec, int word_bound, std::string* detail);

}  // namespace singer
