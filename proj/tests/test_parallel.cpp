#include <doctest.h>

#include "singer/graph_metrics.hpp"
#include "singer/hjelmslev.hpp"
#include "singer/singer_geom.hpp"

using namespace singer;

namespace {

Graph incidence_to_graph(const IncidenceStructure& inc) {
  Graph g;
  g.adj.resize(inc.num_points + inc.num_lines);
  for (auto [p, l] : inc.flags) g.add_edge(p, inc.num_points + l);
  return g;
}

}  // namespace

TEST_CASE("parallel BFS sweep agrees with the serial reference") {
  std::vector<Graph> graphs;
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
    graphs.push_back(incidence_to_graph(plane_from_difference_set(singer_difference_set(q)).plane));
  graphs.push_back(incidence_to_graph(slanted_quadrangle(3).inc));
  graphs.push_back(incidence_to_graph(slanted_quadrangle(4).inc));
  graphs.push_back(incidence_to_graph(complete_bipartite(6, 9)));
  {
    Graph path;  // tree: no cycles, girth stays -1
    for (int i = 0; i + 1 < 50; ++i) path.add_edge(i, i + 1);
    graphs.push_back(path);
  }
  {
    Graph two_parts;
    two_parts.add_edge(0, 1);
    two_parts.add_edge(2, 3);
    graphs.push_back(two_parts);
  }
  for (const Graph& g : graphs) {
    GraphMetrics serial = graph_metrics_serial(g);
    GraphMetrics parallel = graph_metrics_parallel(g);
    CHECK(serial.connected == parallel.connected);
    CHECK(serial.diameter == parallel.diameter);
    CHECK(serial.girth == parallel.girth);
  }
  // Known values: the Fano incidence graph has diameter 3 and girth 6.
  GraphMetrics fano = graph_metrics(graphs[0]);
  CHECK(fano.diameter == 3);
  CHECK(fano.girth == 6);
}

TEST_CASE("parallel adjacency grid agrees with the serial reference") {
  for (long q : {2L, 3L}) {
    A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
    HjelmslevPlane h = hjelmslev_plane(spec);
    CHECK(hjelmslev_adjacency_serial(spec, h.points, h.lines) == h.adjacent);
  }
  DifferenceSet ds{7, {0, 1, 3}};
  DifferenceSet mirrored{7, {0, 4, 6}};
  std::vector<int> id = {0, 1, 2};
  A2LatticeSpec mixed = A2LatticeSpec::cyclic(2, {ds, mirrored, ds}, {id, id, id});
  HjelmslevPlane h = hjelmslev_plane(mixed);
  CHECK(hjelmslev_adjacency_serial(mixed, h.points, h.lines) == h.adjacent);
}
