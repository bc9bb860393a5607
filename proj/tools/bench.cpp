// Benchmark comparing the serial reference kernels with the OpenMP variants:
// the all-vertex BFS sweep behind the polygon verifier and the level-2
// adjacency grid.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "singer/graph_metrics.hpp"
#include "singer/hjelmslev.hpp"
#include "singer/singer_geom.hpp"

using namespace singer;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_metrics(long q) {
  DifferenceSet ds = singer_difference_set(q);
  SingerPlane sp = plane_from_difference_set(ds);
  Graph g;
  g.adj.resize(sp.plane.num_points + sp.plane.num_lines);
  for (auto [p, l] : sp.plane.flags) g.add_edge(p, sp.plane.num_points + l);

  auto t0 = Clock::now();
  GraphMetrics serial = graph_metrics_serial(g);
  double t_serial = ms_since(t0);
  t0 = Clock::now();
  GraphMetrics parallel = graph_metrics_parallel(g);
  double t_parallel = ms_since(t0);
  bool same = serial.connected == parallel.connected && serial.diameter == parallel.diameter &&
              serial.girth == parallel.girth;
  std::cout << "plane q=" << std::setw(3) << q << "  V=" << std::setw(5) << g.num_vertices()
            << " E=" << std::setw(6) << g.num_edges() << "  bfs-sweep serial " << std::setw(9)
            << std::fixed << std::setprecision(2) << t_serial << " ms, parallel " << std::setw(9)
            << t_parallel << " ms  speedup " << std::setprecision(2)
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x  "
            << (same ? "agree" : "DISAGREE") << "\n";
}

void bench_hjelmslev(long q) {
  A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
  auto t0 = Clock::now();
  HjelmslevPlane h = hjelmslev_plane(spec);  // parallel rows when available
  double t_parallel = ms_since(t0);
  t0 = Clock::now();
  auto serial = hjelmslev_adjacency_serial(spec, h.points, h.lines);
  double t_serial = ms_since(t0);
  bool same = serial == h.adjacent;
  std::cout << "sphere q=" << std::setw(2) << q << "  " << h.points.size() << "x"
            << h.lines.size() << " grid       serial " << std::setw(9) << std::fixed
            << std::setprecision(2) << t_serial << " ms, parallel " << std::setw(9) << t_parallel
            << " ms  speedup " << std::setprecision(2)
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x  "
            << (same ? "agree" : "DISAGREE") << "\n";
}

}  // namespace

int main() {
#ifdef SINGER_HAVE_OPENMP
  std::cout << "OpenMP enabled\n";
#else
  std::cout << "OpenMP not available; parallel variants fall back to serial\n";
#endif
  for (long q : {7L, 9L, 13L, 16L, 19L, 25L}) bench_metrics(q);
  for (long q : {3L, 4L, 5L}) bench_hjelmslev(q);
  return 0;
}
