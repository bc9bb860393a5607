#include "singer/graph_metrics.hpp"

#include <algorithm>
#include <queue>

#ifdef SINGER_HAVE_OPENMP
#include <omp.h>
#endif

namespace singer {

long Graph::num_edges() const {
  long total = 0;
  for (const auto& nbrs : adj) total += static_cast<long>(nbrs.size());
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  int needed = std::max(u, v) + 1;
  if (needed > num_vertices()) adj.resize(needed);
  adj[u].push_back(v);
  adj[v].push_back(u);
}

namespace {

// BFS from root: returns (eccentricity, shortest cycle through root).
// Eccentricity is -1 if the graph is disconnected from root.
// Cycle detection: a non-tree edge (u,w) with dist[w] >= dist[u] closes a
// cycle of length dist[u] + dist[w] + 1 through the root.
std::pair<int, int> bfs_ecc_cycle(const Graph& g, int root, std::vector<int>& dist,
                                  std::vector<int>& parent) {
  const int n = g.num_vertices();
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(parent.begin(), parent.end(), -1);
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  int ecc = 0;
  int best_cycle = -1;
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++reached;
    ecc = std::max(ecc, dist[u]);
    for (int w : g.adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      } else if (w != parent[u] && dist[w] >= dist[u]) {
        int len = dist[u] + dist[w] + 1;
        if (best_cycle < 0 || len < best_cycle) best_cycle = len;
      }
    }
  }
  if (reached < n) ecc = -1;
  return {ecc, best_cycle};
}

}  // namespace

GraphMetrics graph_metrics_serial(const Graph& g) {
  GraphMetrics m;
  const int n = g.num_vertices();
  if (n == 0) return m;
  std::vector<int> dist(n), parent(n);
  int diameter = 0;
  int girth = -1;
  bool connected = true;
  for (int v = 0; v < n; ++v) {
    auto [ecc, cyc] = bfs_ecc_cycle(g, v, dist, parent);
    if (ecc < 0) connected = false;
    diameter = std::max(diameter, ecc);
    if (cyc > 0 && (girth < 0 || cyc < girth)) girth = cyc;
  }
  m.connected = connected;
  m.diameter = connected ? diameter : -1;
  m.girth = girth;
  return m;
}

GraphMetrics graph_metrics_parallel(const Graph& g) {
#ifndef SINGER_HAVE_OPENMP
  return graph_metrics_serial(g);
#else
  GraphMetrics m;
  const int n = g.num_vertices();
  if (n == 0) return m;
  int diameter = 0;
  int girth = -1;
  bool connected = true;
#pragma omp parallel
  {
    std::vector<int> dist(n), parent(n);
    int local_diam = 0;
    int local_girth = -1;
    bool local_conn = true;
#pragma omp for schedule(dynamic, 8) nowait
    for (int v = 0; v < n; ++v) {
      auto [ecc, cyc] = bfs_ecc_cycle(g, v, dist, parent);
      if (ecc < 0) local_conn = false;
      local_diam = std::max(local_diam, ecc);
      if (cyc > 0 && (local_girth < 0 || cyc < local_girth)) local_girth = cyc;
    }
#pragma omp critical
    {
      diameter = std::max(diameter, local_diam);
      if (local_girth > 0 && (girth < 0 || local_girth < girth)) girth = local_girth;
      connected = connected && local_conn;
    }
  }
  m.connected = connected;
  m.diameter = connected ? diameter : -1;
  m.girth = girth;
  return m;
#endif
}

GraphMetrics graph_metrics(const Graph& g) {
#ifdef SINGER_HAVE_OPENMP
  return graph_metrics_parallel(g);
#else
  return graph_metrics_serial(g);
#endif
}

}  // namespace singer
