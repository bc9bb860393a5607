#include "singer/scwol.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace singer {

int Scwol::add_vertex(std::string label, int type_tag) {
  vertices.push_back({std::move(label), type_tag});
  return static_cast<int>(vertices.size()) - 1;
}

int Scwol::add_edge(int i, int t, std::string label) {
  if (i == t) throw Error(ErrorCode::InvariantViolation, "scwol edge with i(a) = t(a)");
  edges.push_back({i, t, std::move(label)});
  return static_cast<int>(edges.size()) - 1;
}

void Scwol::set_composition(int a, int b, int ab) { composition[{a, b}] = ab; }

std::vector<std::pair<int, int>> Scwol::composable_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(edges.size()); ++a)
    for (int b = 0; b < static_cast<int>(edges.size()); ++b)
      if (edges[a].i == edges[b].t) pairs.emplace_back(a, b);
  return pairs;
}

std::vector<std::vector<int>> Scwol::out_edges() const {
  std::vector<std::vector<int>> out(vertices.size());
  for (int a = 0; a < static_cast<int>(edges.size()); ++a) out[edges[a].i].push_back(a);
  return out;
}

std::vector<std::vector<int>> Scwol::in_edges() const {
  std::vector<std::vector<int>> in(vertices.size());
  for (int a = 0; a < static_cast<int>(edges.size()); ++a) in[edges[a].t].push_back(a);
  return in;
}

int Scwol::dimension() const {
  // Longest chain of composable edges; the no-loops condition makes the
  // vertex graph acyclic, so a DAG longest-path works.
  std::vector<int> depth(vertices.size(), 0);
  bool changed = true;
  int rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > static_cast<int>(vertices.size()) + 1)
      throw Error(ErrorCode::InvariantViolation, "cycle in scwol edges");
    for (const ScwolEdge& e : edges)
      if (depth[e.t] < depth[e.i] + 1) {
        depth[e.t] = depth[e.i] + 1;
        changed = true;
      }
  }
  int d = 0;
  for (int v : depth) d = std::max(d, v);
  return d;
}

void Scwol::validate() const {
  for (const ScwolEdge& e : edges) {
    if (e.i < 0 || e.i >= static_cast<int>(vertices.size()) || e.t < 0 ||
        e.t >= static_cast<int>(vertices.size()))
      throw Error(ErrorCode::InvariantViolation, "edge endpoint out of range");
    if (e.i == e.t) throw Error(ErrorCode::InvariantViolation, "no-loops condition violated");
  }
  for (auto [a, b] : composable_pairs()) {
    auto it = composition.find({a, b});
    if (it == composition.end())
      throw Error(ErrorCode::InvariantViolation, "missing composition for a composable pair");
    int ab = it->second;
    if (edges[ab].i != edges[b].i || edges[ab].t != edges[a].t)
      throw Error(ErrorCode::InvariantViolation, "composition has wrong endpoints");
  }
  for (const auto& [key, ab] : composition) {
    auto [a, b] = key;
    if (edges[a].i != edges[b].t)
      throw Error(ErrorCode::InvariantViolation, "composition defined on a non-composable pair");
    (void)ab;
  }
  // Associativity on chains (vacuous in dimension <= 2, checked regardless).
  for (int a = 0; a < static_cast<int>(edges.size()); ++a)
    for (int b = 0; b < static_cast<int>(edges.size()); ++b) {
      if (edges[a].i != edges[b].t) continue;
      for (int c = 0; c < static_cast<int>(edges.size()); ++c) {
        if (edges[b].i != edges[c].t) continue;
        int ab = composition.at({a, b});
        int bc = composition.at({b, c});
        if (composition.at({ab, c}) != composition.at({a, bc}))
          throw Error(ErrorCode::InvariantViolation, "associativity fails");
      }
    }
  dimension();  // throws on directed cycles
}

std::string Scwol::to_dot() const {
  std::ostringstream os;
  os << "digraph scwol {\n";
  for (size_t v = 0; v < vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << vertices[v].label << "\"];\n";
  for (const ScwolEdge& e : edges) os << "  v" << e.i << " -> v" << e.t << ";\n";
  os << "}\n";
  return os.str();
}

Scwol scwol_of_incidence(const IncidenceStructure& inc) {
  Scwol z;
  for (int p = 0; p < inc.num_points; ++p)
    z.add_vertex("p" + std::to_string(p), 0);
  for (int l = 0; l < inc.num_lines; ++l)
    z.add_vertex("l" + std::to_string(l), 1);
  for (const auto& [p, l] : inc.flags) {
    int f = z.add_vertex("f(" + std::to_string(p) + "," + std::to_string(l) + ")", 2);
    z.add_edge(f, p);
    z.add_edge(f, inc.num_points + l);
  }
  return z;
}

Scwol discrete_scwol(int n) {
  Scwol z;
  for (int v = 0; v < n; ++v) z.add_vertex("v" + std::to_string(v));
  return z;
}

namespace {

// Iterated degree refinement; colors are canonical ints per round.
std::vector<long> wl_colors(const Scwol& s) {
  int n = static_cast<int>(s.vertices.size());
  std::vector<long> color(n);
  auto out = s.out_edges();
  auto in = s.in_edges();
  for (int v = 0; v < n; ++v) color[v] = static_cast<long>(out[v].size()) * 100003 + in[v].size();
  for (int round = 0; round < 6; ++round) {
    std::map<std::tuple<long, std::vector<long>, std::vector<long>>, long> canon;
    std::vector<long> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long> outs, ins;
      for (int a : out[v]) outs.push_back(color[s.edges[a].t]);
      for (int a : in[v]) ins.push_back(color[s.edges[a].i]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      auto key = std::make_tuple(color[v], outs, ins);
      auto it = canon.find(key);
      if (it == canon.end()) it = canon.emplace(key, static_cast<long>(canon.size())).first;
      next[v] = it->second;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

struct EdgeCount {
  std::map<std::pair<int, int>, int> count;
  explicit EdgeCount(const Scwol& s) {
    for (const ScwolEdge& e : s.edges) ++count[{e.i, e.t}];
  }
  int get(int i, int t) const {
    auto it = count.find({i, t});
    return it == count.end() ? 0 : it->second;
  }
};

bool composition_compatible(const Scwol& a, const Scwol& b, const std::vector<int>& vmap) {
  // Map edges: with no parallel edges this is forced by endpoints.
  std::map<std::pair<int, int>, int> edge_of_b;
  for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) {
    auto key = std::make_pair(b.edges[e].i, b.edges[e].t);
    if (edge_of_b.count(key)) return true;  // parallel edges: skip the composition check
    edge_of_b[key] = e;
  }
  std::vector<int> emap(a.edges.size());
  for (int e = 0; e < static_cast<int>(a.edges.size()); ++e) {
    auto it = edge_of_b.find({vmap[a.edges[e].i], vmap[a.edges[e].t]});
    if (it == edge_of_b.end()) return false;
    emap[e] = it->second;
  }
  for (const auto& [key, ab] : a.composition) {
    auto [x, y] = key;
    auto it = b.composition.find({emap[x], emap[y]});
    if (it == b.composition.end() || it->second != emap[ab]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_scwol_isomorphism(const Scwol& a, const Scwol& b,
                                                       int max_vertices) {
  int n = static_cast<int>(a.vertices.size());
  if (n != static_cast<int>(b.vertices.size()) || a.edges.size() != b.edges.size())
    return std::nullopt;
  if (n > max_vertices)
    throw Error(ErrorCode::TooLarge, "scwol exceeds the isomorphism vertex bound");
  if (n == 0) return std::vector<int>{};

  std::vector<long> ca = wl_colors(a);
  std::vector<long> cb = wl_colors(b);
  std::map<long, int> count_a, count_b;
  for (long c : ca) ++count_a[c];
  for (long c : cb) ++count_b[c];
  if (count_a != count_b) return std::nullopt;

  // Connected expansion order: start in the smallest color class and always
  // extend next to a vertex with the most already-ordered neighbors, so the
  // candidate sets stay constrained.
  std::vector<int> order;
  {
    std::vector<std::vector<int>> nbrs(n);
    for (const ScwolEdge& e : a.edges) {
      nbrs[e.i].push_back(e.t);
      nbrs[e.t].push_back(e.i);
    }
    std::vector<char> placed(n, 0);
    std::vector<int> placed_nbrs(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
            (placed_nbrs[v] == placed_nbrs[best] && count_a[ca[v]] < count_a[ca[best]]))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (int w : nbrs[best]) ++placed_nbrs[w];
    }
  }

  EdgeCount ea(a), eb(b);
  auto aout = a.out_edges();
  auto ain = a.in_edges();
  std::vector<int> vmap(n, -1), used(b.vertices.size(), 0);

  std::function<bool(int)> assign = [&](int step) -> bool {
    if (step == n) return composition_compatible(a, b, vmap);
    int u = order[step];
    for (int v = 0; v < n; ++v) {
      if (used[v] || cb[v] != ca[u]) continue;
      bool ok = true;
      for (int e : aout[u]) {
        int w = a.edges[e].t;
        if (vmap[w] >= 0 && eb.get(v, vmap[w]) != ea.get(u, w)) {
          ok = false;
          break;
        }
      }
      if (ok)
        for (int e : ain[u]) {
          int w = a.edges[e].i;
          if (vmap[w] >= 0 && eb.get(vmap[w], v) != ea.get(w, u)) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      vmap[u] = v;
      used[v] = 1;
      if (assign(step + 1)) return true;
      vmap[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return vmap;
}

}  // namespace singer
