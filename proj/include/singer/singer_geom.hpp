#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "singer/group.hpp"
#include "singer/incidence.hpp"

namespace singer {

// Perfect difference set modulo n = q^2 + q + 1: every nonzero residue is
// uniquely a difference of two members; 0 is a member.
struct DifferenceSet {
  long n = 0;
  std::vector<long> residues;  // sorted, contains 0

  bool contains(long r) const;
  // Throws InvariantViolation with a witness residue on failure.
  void validate() const;
  std::string to_json() const;
};

// Trace-kernel difference set of the cyclic plane of order q.
DifferenceSet singer_difference_set(long q);

// Cyclic model of the projective plane: points = lines = Z/n, point i on
// line j iff i - j lies in the difference set.
struct SingerPlane {
  long q = 0;
  long n = 0;
  DifferenceSet delta;
  IncidenceStructure plane;

  GroupAction point_action() const;  // generator acts by i -> i+1
  GroupAction line_action() const;
};

SingerPlane plane_from_difference_set(const DifferenceSet& delta);

// Bijection J = {0..q} -> Delta with delta(0) = 0, given as a permutation of
// positions into the sorted residue list.
std::vector<long> ordered_difference_set(const DifferenceSet& delta,
                                         const std::vector<int>& ordering);

// The full symplectic quadrangle W(q): totally isotropic points and lines of
// the alternating form on GF(q)^4.
struct SymplecticQuadrangle {
  long q = 0;
  IncidenceStructure inc;
  std::vector<std::array<long, 4>> point_coords;  // projective representatives
  int p0 = -1;  // span(1,0,0,0)
  int p1 = -1;  // span(0,0,0,1)
};

SymplecticQuadrangle symplectic_quadrangle(long q);

// Payne derivation of W(q) at p0. Points are the q^3 points not collinear
// with p0, identified with coordinate triples; lines are the surviving lines
// of W(q) plus the slanted lines through p0.
struct SlantedQuadrangle {
  long q = 0;
  IncidenceStructure inc;
  std::shared_ptr<const HeisenbergGroup> singer;
  GroupAction action;  // of the Singer group on points
  int base_point = -1;  // the point (0,0,0)
  std::vector<int> line_reps;              // q+2 lines through the base point
  std::vector<std::string> rep_labels;     // "l0" or "l[a:b]"
  std::vector<std::vector<int>> stabilizers;  // per representative
  // Generating words for each stabilizer over the Singer group presentation
  // generators; rank 1 for prime q, rank e for q = p^e.
  std::vector<std::vector<Word>> stabilizer_words;

  std::array<long, 3> point_triple(int point) const;
  int point_of_triple(const std::array<long, 3>& t) const;
  std::string to_json() const;
};

SlantedQuadrangle slanted_quadrangle(long q);

}  // namespace singer
