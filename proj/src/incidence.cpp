#include "singer/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "singer/graph_metrics.hpp"

namespace singer {

std::vector<std::vector<int>> IncidenceStructure::lines_through_point() const {
  std::vector<std::vector<int>> result(num_points);
  for (auto [p, l] : flags) result[p].push_back(l);
  return result;
}

std::vector<std::vector<int>> IncidenceStructure::points_on_line() const {
  std::vector<std::vector<int>> result(num_lines);
  for (auto [p, l] : flags) result[l].push_back(p);
  return result;
}

std::string IncidenceStructure::to_json() const {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (int p = 0; p < num_points; ++p)
    j["points"].push_back(p < static_cast<int>(point_labels.size()) ? point_labels[p]
                                                                    : std::to_string(p));
  j["lines"] = nlohmann::json::array();
  for (int l = 0; l < num_lines; ++l)
    j["lines"].push_back(l < static_cast<int>(line_labels.size()) ? line_labels[l]
                                                                  : std::to_string(l));
  j["flags"] = nlohmann::json::array();
  for (auto [p, l] : flags) j["flags"].push_back({p, l});
  return j.dump(2);
}

IncidenceStructure IncidenceStructure::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  IncidenceStructure inc;
  inc.num_points = static_cast<int>(j.at("points").size());
  inc.num_lines = static_cast<int>(j.at("lines").size());
  for (const auto& entry : j.at("points")) inc.point_labels.push_back(entry.get<std::string>());
  for (const auto& entry : j.at("lines")) inc.line_labels.push_back(entry.get<std::string>());
  for (const auto& f : j.at("flags")) {
    int p = f.at(0).get<int>();
    int l = f.at(1).get<int>();
    if (p < 0 || p >= inc.num_points || l < 0 || l >= inc.num_lines)
      throw Error(ErrorCode::InvariantViolation, "flag outside point/line range");
    inc.flags.emplace_back(p, l);
  }
  return inc;
}

std::string IncidenceStructure::to_dot() const {
  std::ostringstream os;
  os << "graph incidence {\n";
  for (int p = 0; p < num_points; ++p)
    os << "  p" << p << " [shape=circle,label=\""
       << (p < static_cast<int>(point_labels.size()) ? point_labels[p] : std::to_string(p))
       << "\"];\n";
  for (int l = 0; l < num_lines; ++l)
    os << "  l" << l << " [shape=box,label=\""
       << (l < static_cast<int>(line_labels.size()) ? line_labels[l] : std::to_string(l))
       << "\"];\n";
  for (auto [p, l] : flags) os << "  p" << p << " -- l" << l << ";\n";
  os << "}\n";
  return os.str();
}

bool collinear(const IncidenceStructure& inc, int p, int q) {
  if (p < 0 || p >= inc.num_points || q < 0 || q >= inc.num_points)
    throw Error(ErrorCode::UnknownPoint, "point index out of range");
  if (p == q) return true;
  auto lines = inc.lines_through_point();
  std::set<int> lp(lines[p].begin(), lines[p].end());
  for (int l : lines[q])
    if (lp.count(l)) return true;
  return false;
}

std::vector<int> perp_set(const IncidenceStructure& inc, int p) {
  std::vector<int> result;
  for (int r = 0; r < inc.num_points; ++r)
    if (collinear(inc, p, r)) result.push_back(r);
  return result;
}

std::vector<int> double_perp(const IncidenceStructure& inc, int p, int q) {
  std::vector<int> pp = perp_set(inc, p);
  std::vector<int> qp = perp_set(inc, q);
  std::vector<int> meet;
  std::set_intersection(pp.begin(), pp.end(), qp.begin(), qp.end(), std::back_inserter(meet));
  std::vector<int> result;
  for (int r = 0; r < inc.num_points; ++r) {
    bool in_all = true;
    for (int s : meet)
      if (!collinear(inc, s, r)) {
        in_all = false;
        break;
      }
    if (in_all) result.push_back(r);
  }
  return result;
}

PolygonVerdict verify_generalized_polygon(const IncidenceStructure& inc,
                                          std::optional<int> expected_m) {
  PolygonVerdict v;
  if (inc.num_points == 0 && inc.num_lines == 0) {
    v.failure = PolygonFailure::Empty;
    v.witness = "empty structure";
    return v;
  }
  // Constant line size and point degree first.
  auto per_point = inc.lines_through_point();
  auto per_line = inc.points_on_line();
  size_t line_size = per_line.empty() ? 0 : per_line[0].size();
  size_t point_deg = per_point.empty() ? 0 : per_point[0].size();
  for (int l = 0; l < inc.num_lines; ++l)
    if (per_line[l].size() != line_size) {
      v.failure = PolygonFailure::NonConstantOrder;
      v.witness = "line " + std::to_string(l) + " has " + std::to_string(per_line[l].size()) +
                  " points, line 0 has " + std::to_string(line_size);
      return v;
    }
  for (int p = 0; p < inc.num_points; ++p)
    if (per_point[p].size() != point_deg) {
      v.failure = PolygonFailure::NonConstantOrder;
      v.witness = "point " + std::to_string(p) + " lies on " +
                  std::to_string(per_point[p].size()) + " lines, point 0 on " +
                  std::to_string(point_deg);
      return v;
    }

  Graph g;
  g.adj.resize(inc.num_points + inc.num_lines);
  for (auto [p, l] : inc.flags) g.add_edge(p, inc.num_points + l);
  GraphMetrics metrics = graph_metrics(g);
  v.diameter = metrics.diameter;
  v.girth = metrics.girth;
  if (!metrics.connected) {
    v.failure = PolygonFailure::NotConnected;
    v.witness = "incidence graph is disconnected";
    return v;
  }
  if (metrics.girth != 2 * metrics.diameter) {
    v.failure = PolygonFailure::NotPolygon;
    v.witness = "diameter " + std::to_string(metrics.diameter) + ", girth " +
                std::to_string(metrics.girth);
    return v;
  }
  int m = metrics.diameter;
  if (expected_m && *expected_m != m) {
    v.failure = PolygonFailure::WrongGonality;
    v.witness = "expected m = " + std::to_string(*expected_m) + ", got " + std::to_string(m);
    return v;
  }
  v.ok = true;
  v.cert.m = m;
  v.cert.s = static_cast<int>(line_size) - 1;
  v.cert.t = static_cast<int>(point_deg) - 1;
  v.cert.thick = v.cert.s >= 2 && v.cert.t >= 2;
  return v;
}

IncidenceStructure complete_bipartite(int num_points, int num_lines) {
  IncidenceStructure inc;
  inc.num_points = num_points;
  inc.num_lines = num_lines;
  for (int p = 0; p < num_points; ++p)
    for (int l = 0; l < num_lines; ++l) inc.flags.emplace_back(p, l);
  return inc;
}

}  // namespace singer
