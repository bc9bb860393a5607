#pragma once

#include "singer/lattice.hpp"

namespace singer {

// Level-2 Hjelmslev plane around the S1-corner vertex: points are the type-2
// vertices at distance two, indexed (j1, j3) with j3 outside -Delta3; lines
// the type-3 vertices, indexed (k1, k2) with k2 outside Delta2.
struct HjelmslevPlane {
  long q = 0;
  long n = 0;
  A2LatticeSpec spec;
  std::vector<std::pair<long, long>> points;  // (j1, j3)
  std::vector<std::pair<long, long>> lines;   // (k1, k2)
  std::vector<std::vector<char>> adjacent;    // points x lines

  int point_index(long j1, long j3) const;  // -1 if not a sphere point
  int line_index(long k1, long k2) const;
  long psi_point(int p) const { return points[p].first; }  // projection to radius 1
  long psi_line(int l) const { return lines[l].first; }

  std::string to_json() const;
  std::string to_dot() const;
};

// Closed-form adjacency table (equal difference sets) or the general
// condition-by-condition evaluation for other cyclic specs.
HjelmslevPlane hjelmslev_plane(const A2LatticeSpec& spec);

// Adjacency from the triangle-relation lookup: (C1) s1^-1 t1 in D1, then
// (C2) existence of n2 in t2 D2^-1 and d2 D2^-1 with s3^-1 d3^-1 e3 in D3.
bool general_adjacency(const A2LatticeSpec& spec, std::pair<long, long> point,
                       std::pair<long, long> line);

// Number of lines incident with both points (or points on both lines).
int common_lines(const HjelmslevPlane& h, int p1, int p2);
int common_points(const HjelmslevPlane& h, int l1, int l2);

// The radius-1 plane around the corner: points/lines Z/n, incident iff
// k - j lies in Delta1.
IncidenceStructure radius1_plane(const A2LatticeSpec& spec);

struct SplittingMap {
  long m = 0;  // chosen residue outside Delta and -Delta
  std::vector<int> point_image;  // radius-1 point j1 -> Hjelmslev point
  std::vector<int> line_image;
};

SplittingMap splitting_map(const HjelmslevPlane& h);

struct Substructure {
  std::vector<char> points;  // indicator over h.points
  std::vector<char> lines;
};

Substructure generate_substructure(const HjelmslevPlane& h, const std::vector<int>& seed_points);

enum class CmszVerdictKind { ProjectivePlaneOfOrder, FullPlane, Other };

struct CmszVerdict {
  CmszVerdictKind kind = CmszVerdictKind::Other;
  long order = 0;
  std::array<long, 4> seeds{};  // the radius-1 quadrangle used
  std::string detail;
};

// Lifts the lexicographically first radius-1 quadrangle in general position
// and classifies the substructure it generates.
CmszVerdict cmsz_test(const HjelmslevPlane& h);

// Serial reference for the adjacency table construction; the builder in
// hjelmslev_plane parallelizes over point rows when OpenMP is available and
// must agree with this exactly.
std::vector<std::vector<char>> hjelmslev_adjacency_serial(const A2LatticeSpec& spec,
                                                          const std::vector<std::pair<long, long>>& points,
                                                          const std::vector<std::pair<long, long>>& lines);

}  // namespace singer
