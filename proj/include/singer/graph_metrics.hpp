#pragma once

#include <vector>

namespace singer {

// Undirected simple graph as adjacency lists.
struct Graph {
  std::vector<std::vector<int>> adj;
  int num_vertices() const { return static_cast<int>(adj.size()); }
  long num_edges() const;
  void add_edge(int u, int v);
};

struct GraphMetrics {
  bool connected = false;
  int diameter = -1;  // -1 when disconnected or empty
  int girth = -1;     // -1 when acyclic
};

// Per-vertex BFS sweep; the parallel variant distributes root vertices over
// OpenMP threads and must agree with the serial one exactly.
GraphMetrics graph_metrics_serial(const Graph& g);
GraphMetrics graph_metrics_parallel(const Graph& g);
GraphMetrics graph_metrics(const Graph& g);  // parallel when available

}  // namespace singer
