#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singer/common.hpp"

namespace singer {

// Finite point/line incidence structure. Points and lines are opaque indices;
// labels are optional decoration.
struct IncidenceStructure {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::pair<int, int>> flags;  // (point, line)
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;

  std::vector<std::vector<int>> lines_through_point() const;
  std::vector<std::vector<int>> points_on_line() const;

  std::string to_json() const;
  static IncidenceStructure from_json(const std::string& text);
  std::string to_dot() const;
};

bool collinear(const IncidenceStructure& inc, int p, int q);
std::vector<int> perp_set(const IncidenceStructure& inc, int p);
std::vector<int> double_perp(const IncidenceStructure& inc, int p, int q);

struct PolygonCertificate {
  int m = 0;       // gonality: incidence graph has diameter m, girth 2m
  int s = 0;       // s+1 points per line
  int t = 0;       // t+1 lines per point
  bool thick = false;
};

enum class PolygonFailure {
  None,
  Empty,
  NotConnected,
  NotPolygon,       // girth != 2 * diameter
  NonConstantOrder,
  WrongGonality,    // expected_m given and missed
};

struct PolygonVerdict {
  bool ok = false;
  PolygonCertificate cert;
  PolygonFailure failure = PolygonFailure::None;
  int diameter = -1;
  int girth = -1;
  std::string witness;
};

// Checks the incidence graph for diameter m / girth 2m, constant line size
// and point degree. Uses the parallel sweep kernel when built with OpenMP.
PolygonVerdict verify_generalized_polygon(const IncidenceStructure& inc,
                                          std::optional<int> expected_m = std::nullopt);

// Complete bipartite incidence structure (every point on every line).
IncidenceStructure complete_bipartite(int num_points, int num_lines);

}  // namespace singer
