#include "singer/complex_of_groups.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace singer {

int ComplexOfGroups::twist_of(int a, int b) const {
  auto it = twists.find({a, b});
  if (it != twists.end()) return it->second;
  const VertexGroupData& tg = vgroups[base.edges[a].t];
  return tg.group ? tg.group->identity() : 0;
}

std::vector<int> ComplexOfGroups::mono_image(int edge) const {
  const VertexGroupData& src = vgroups[base.edges[edge].i];
  const VertexGroupData& dst = vgroups[base.edges[edge].t];
  if (!src.group || src.group_size() == 1) {
    return {dst.group ? dst.group->identity() : 0};
  }
  const EdgeMono& m = monos[edge];
  std::vector<int> image(m.element_map.begin(), m.element_map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

void ComplexOfGroups::validate() const {
  base.validate();
  if (vgroups.size() != base.vertices.size() || monos.size() != base.edges.size())
    throw Error(ErrorCode::SpecInvalid, "complex data sizes do not match the scwol");
  for (size_t a = 0; a < base.edges.size(); ++a) {
    const VertexGroupData& src = vgroups[base.edges[a].i];
    const VertexGroupData& dst = vgroups[base.edges[a].t];
    if (src.group_size() == 1) continue;
    const EdgeMono& m = monos[a];
    if (static_cast<int>(m.element_map.size()) != src.group_size())
      throw Error(ErrorCode::SpecInvalid, "edge monomorphism map has wrong size");
    std::set<int> image;
    for (int x = 0; x < src.group_size(); ++x) image.insert(m.element_map[x]);
    if (static_cast<int>(image.size()) != src.group_size())
      throw Error(ErrorCode::SpecInvalid, "edge monomorphism is not injective");
    for (int x = 0; x < src.group_size(); ++x)
      for (int y = 0; y < src.group_size(); ++y)
        if (m.element_map[src.group->mult(x, y)] !=
            dst.group->mult(m.element_map[x], m.element_map[y]))
          throw Error(ErrorCode::SpecInvalid, "edge map is not a homomorphism");
    for (size_t g = 0; g < m.gen_image_words.size(); ++g) {
      int expect = m.element_map[src.gen_elements[g]];
      int got = dst.group->identity();
      for (int letter : m.gen_image_words[g]) {
        int e = dst.gen_elements[std::abs(letter) - 1];
        got = dst.group->mult(got, letter > 0 ? e : dst.group->inverse(e));
      }
      if (got != expect)
        throw Error(ErrorCode::SpecInvalid, "generator image word evaluates incorrectly");
    }
  }
  // Twist compatibility: Ad(g_{a,b}) psi_ab = psi_a psi_b on G_i(b).
  for (auto [a, b] : base.composable_pairs()) {
    int ab = base.composition.at({a, b});
    const VertexGroupData& top = vgroups[base.edges[a].t];
    const VertexGroupData& low = vgroups[base.edges[b].i];
    int g_ab = twist_of(a, b);
    if (top.group && low.group && low.group_size() > 1) {
      for (int x = 0; x < low.group_size(); ++x) {
        int via_ab = top.group->conjugate(g_ab, monos[ab].element_map[x]);
        int via_chain = monos[a].element_map[monos[b].element_map[x]];
        if (via_ab != via_chain)
          throw Error(ErrorCode::SpecInvalid, "twist incompatible with edge maps");
      }
    }
    auto wit = twist_words.find({a, b});
    if (wit != twist_words.end() && top.group) {
      int got = top.group->identity();
      for (int letter : wit->second) {
        int e = top.gen_elements[std::abs(letter) - 1];
        got = top.group->mult(got, letter > 0 ? e : top.group->inverse(e));
      }
      if (got != g_ab) throw Error(ErrorCode::SpecInvalid, "twist word evaluates incorrectly");
    }
  }
  // Cocycle condition on triples of composable edges.
  for (int a = 0; a < static_cast<int>(base.edges.size()); ++a)
    for (int b = 0; b < static_cast<int>(base.edges.size()); ++b) {
      if (base.edges[a].i != base.edges[b].t) continue;
      for (int c = 0; c < static_cast<int>(base.edges.size()); ++c) {
        if (base.edges[b].i != base.edges[c].t) continue;
        const VertexGroupData& top = vgroups[base.edges[a].t];
        if (!top.group) continue;
        int ab = base.composition.at({a, b});
        int bc = base.composition.at({b, c});
        int lhs = top.group->mult(monos[a].element_map.empty()
                                      ? top.group->identity()
                                      : monos[a].element_map[twist_of(b, c)],
                                  twist_of(a, bc));
        int rhs = top.group->mult(twist_of(a, b), twist_of(ab, c));
        if (lhs != rhs) throw Error(ErrorCode::SpecInvalid, "cocycle condition fails");
      }
    }
}

namespace {

// Left cosets of a subgroup (as sorted element list), represented by their
// minimal member. Returns rep-of-element table.
std::vector<int> coset_reps(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> rep(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (rep[x] >= 0) continue;
    int best = x;
    std::vector<int> members;
    for (int h : subgroup) members.push_back(g.mult(x, h));
    for (int m : members) best = std::min(best, m);
    for (int m : members) rep[m] = best;
  }
  return rep;
}

}  // namespace

Scwol upper_link(const ComplexOfGroups& c, int v) {
  Scwol link;
  const VertexGroupData& gv = c.vgroups[v];
  // Vertices: cosets g psi_a(G_i(a)) per edge a into v.
  std::map<std::pair<int, int>, int> vertex_of;  // (edge, coset rep) -> link vertex
  std::vector<int> in = c.base.in_edges()[v];
  std::map<int, std::vector<int>> rep_table;
  for (int a : in) {
    std::vector<int> image = c.mono_image(a);
    std::vector<int> reps;
    if (gv.group) {
      reps = coset_reps(*gv.group, image);
    } else {
      reps = {0};
    }
    rep_table[a] = reps;
    std::set<int> distinct;
    if (gv.group)
      for (int x = 0; x < gv.group->size(); ++x) distinct.insert(reps[x]);
    else
      distinct.insert(0);
    for (int r : distinct) {
      int id = link.add_vertex("(" + std::to_string(r) + "|" + c.base.edges[a].label + ")", a);
      vertex_of[{a, r}] = id;
    }
  }
  // Edges: cosets g psi_ab(G_i(b)) per composable pair (a, b) with t(a) = v.
  for (auto [a, b] : c.base.composable_pairs()) {
    if (c.base.edges[a].t != v) continue;
    int ab = c.base.composition.at({a, b});
    std::vector<int> image_ab = c.mono_image(ab);
    std::vector<int> reps_ab;
    if (gv.group)
      reps_ab = coset_reps(*gv.group, image_ab);
    else
      reps_ab = {0};
    std::set<int> distinct;
    if (gv.group)
      for (int x = 0; x < gv.group->size(); ++x) distinct.insert(reps_ab[x]);
    else
      distinct.insert(0);
    int twist = c.twist_of(a, b);
    for (int g : distinct) {
      int src = vertex_of.at({ab, rep_table[ab][g]});
      int shifted = gv.group ? gv.group->mult(g, gv.group->inverse(twist)) : 0;
      int dst = vertex_of.at({a, rep_table[a][shifted]});
      link.add_edge(src, dst);
    }
  }
  return link;
}

LocalCheckResult local_development_check(const ComplexOfGroups& c, int v, const Scwol& expected,
                                         int max_vertices) {
  LocalCheckResult r;
  Scwol link = upper_link(c, v);
  if (link.vertices.size() != expected.vertices.size() ||
      link.edges.size() != expected.edges.size()) {
    std::ostringstream os;
    os << "size mismatch: link has " << link.vertices.size() << " vertices / "
       << link.edges.size() << " edges, expected " << expected.vertices.size() << " / "
       << expected.edges.size();
    r.detail = os.str();
    return r;
  }
  auto iso = find_scwol_isomorphism(link, expected, max_vertices);
  if (!iso) {
    r.detail = "no isomorphism between the upper link and the expected scwol";
    return r;
  }
  r.isomorphic = true;
  r.iso = iso;
  return r;
}

Word factor_element(const FiniteGroup& g, const std::vector<int>& gen_elements, int target) {
  std::vector<int> prev(g.size(), -2);
  std::vector<int> letter(g.size(), 0);
  std::queue<int> q;
  prev[g.identity()] = -1;
  q.push(g.identity());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == target) break;
    for (size_t i = 0; i < gen_elements.size(); ++i) {
      for (int sign : {+1, -1}) {
        int e = sign > 0 ? gen_elements[i] : g.inverse(gen_elements[i]);
        int y = g.mult(x, e);
        if (prev[y] == -2) {
          prev[y] = x;
          letter[y] = sign * (static_cast<int>(i) + 1);
          q.push(y);
        }
      }
    }
  }
  if (prev[target] == -2) throw Error(ErrorCode::Internal, "element not generated");
  Word w;
  for (int x = target; prev[x] != -1; x = prev[x]) w.push_back(letter[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

struct TaggedRelator {
  Word w;
  enum Kind { VertexRel, EdgeK, EdgePsi } kind;
  int vertex = -1;    // for VertexRel: originating vertex
  int psi_gen = -1;   // for EdgePsi: global index of the source generator
  bool dead = false;
};

}  // namespace

Presentation fundamental_group(const ComplexOfGroups& c, const std::vector<int>& tree_edges) {
  const Scwol& y = c.base;
  const int nv = static_cast<int>(y.vertices.size());
  const int ne = static_cast<int>(y.edges.size());
  // Spanning tree check on the underlying undirected graph.
  {
    if (static_cast<int>(tree_edges.size()) != nv - 1)
      throw Error(ErrorCode::NotATree, "tree must have |V|-1 edges");
    std::vector<std::vector<int>> adj(nv);
    for (int e : tree_edges) {
      if (e < 0 || e >= ne) throw Error(ErrorCode::NotATree, "tree edge out of range");
      adj[y.edges[e].i].push_back(y.edges[e].t);
      adj[y.edges[e].t].push_back(y.edges[e].i);
    }
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++reached;
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    if (reached != nv) throw Error(ErrorCode::NotATree, "tree does not span the scwol");
  }
  std::vector<char> in_tree(ne, 0);
  for (int e : tree_edges) in_tree[e] = 1;

  // Global generator table: vertex-group generators first, then k_a per
  // non-tree edge.
  struct GenInfo {
    std::string name;
    int vertex;      // -1 for k generators
    int local;       // local index within the vertex group
    int edge = -1;   // for k generators
    bool eliminable;
    bool alive = true;
  };
  std::vector<GenInfo> gens;
  std::vector<std::vector<int>> vertex_gen_base(nv);
  for (int v = 0; v < nv; ++v) {
    const VertexGroupData& vg = c.vgroups[v];
    for (int i = 0; i < vg.num_gens(); ++i) {
      vertex_gen_base[v].push_back(static_cast<int>(gens.size()));
      gens.push_back({vg.gen_names[i], v, i, -1, !vg.principal});
    }
  }
  std::vector<int> k_gen(ne, -1);
  for (int e = 0; e < ne; ++e) {
    if (in_tree[e]) continue;
    k_gen[e] = static_cast<int>(gens.size());
    gens.push_back({"k(" + (y.edges[e].label.empty() ? "e" + std::to_string(e) : y.edges[e].label) + ")",
                    -1, -1, e, true});
  }

  auto shift_word = [&](const Word& local, int vertex) {
    Word out;
    for (int letter : local) {
      int g = vertex_gen_base[vertex][std::abs(letter) - 1] + 1;
      out.push_back(letter > 0 ? g : -g);
    }
    return out;
  };
  auto k_word = [&](int edge) {
    Word w;
    if (k_gen[edge] >= 0) w.push_back(k_gen[edge] + 1);
    return w;
  };

  std::vector<TaggedRelator> relators;
  for (int v = 0; v < nv; ++v)
    for (const Word& r : c.vgroups[v].relators)
      relators.push_back({shift_word(r, v), TaggedRelator::VertexRel, v, -1, false});

  // k_a k_b = g_{a,b} k_ab, as the relator k_a k_b k_ab^-1 g_{a,b}^-1.
  auto pairs = y.composable_pairs();
  std::sort(pairs.begin(), pairs.end());
  for (auto [a, b] : pairs) {
    int ab = y.composition.at({a, b});
    Word w = k_word(a);
    Word wb = k_word(b);
    w.insert(w.end(), wb.begin(), wb.end());
    Word wab = word_inverse(k_word(ab));
    w.insert(w.end(), wab.begin(), wab.end());
    int tv = y.edges[a].t;
    const VertexGroupData& top = c.vgroups[tv];
    int twist = c.twist_of(a, b);
    if (top.group && twist != top.group->identity()) {
      Word tw;
      auto it = c.twist_words.find({a, b});
      if (it != c.twist_words.end())
        tw = shift_word(it->second, tv);
      else
        tw = shift_word(factor_element(*top.group, top.gen_elements, twist), tv);
      Word itw = word_inverse(tw);
      w.insert(w.end(), itw.begin(), itw.end());
    }
    relators.push_back({free_reduce(w), TaggedRelator::EdgeK, -1, -1, false});
  }

  // psi_a(g) = k_a g k_a^-1, as the relator k_a g k_a^-1 psi_a(g)^-1.
  for (int e = 0; e < ne; ++e) {
    int src = y.edges[e].i, dst = y.edges[e].t;
    const VertexGroupData& sg = c.vgroups[src];
    if (sg.group_size() == 1) continue;
    for (int i = 0; i < sg.num_gens(); ++i) {
      Word w = k_word(e);
      int global = vertex_gen_base[src][i];
      w.push_back(global + 1);
      Word ik = word_inverse(k_word(e));
      w.insert(w.end(), ik.begin(), ik.end());
      Word img;
      if (!c.monos[e].gen_image_words.empty())
        img = shift_word(c.monos[e].gen_image_words[i], dst);
      else
        img = shift_word(factor_element(*c.vgroups[dst].group, c.vgroups[dst].gen_elements,
                                        c.monos[e].element_map[sg.gen_elements[i]]),
                         dst);
      Word iimg = word_inverse(img);
      w.insert(w.end(), iimg.begin(), iimg.end());
      relators.push_back({free_reduce(w), TaggedRelator::EdgePsi, -1, global, false});
    }
  }

  // --- Safe Tietze simplification ---
  auto occurrences = [&](const Word& w, int gen) {
    int n = 0;
    for (int letter : w)
      if (std::abs(letter) - 1 == gen) ++n;
    return n;
  };
  auto substitute = [&](int gen, const Word& def) {
    for (TaggedRelator& r : relators) {
      if (r.dead) continue;
      Word out;
      for (int letter : r.w) {
        if (std::abs(letter) - 1 != gen) {
          out.push_back(letter);
        } else if (letter > 0) {
          out.insert(out.end(), def.begin(), def.end());
        } else {
          Word inv = word_inverse(def);
          out.insert(out.end(), inv.begin(), inv.end());
        }
      }
      r.w = free_reduce(out);
    }
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ri = 0; ri < relators.size() && !changed; ++ri) {
      TaggedRelator& r = relators[ri];
      if (r.dead || r.kind == TaggedRelator::VertexRel) continue;
      int target = -1;
      if (r.kind == TaggedRelator::EdgePsi) {
        // Prefer killing the designated source-group generator.
        if (r.psi_gen >= 0 && gens[r.psi_gen].alive && gens[r.psi_gen].eliminable &&
            occurrences(r.w, r.psi_gen) == 1)
          target = r.psi_gen;
      }
      if (target < 0) {
        for (int letter : r.w) {
          int g = std::abs(letter) - 1;
          if (!gens[g].alive || !gens[g].eliminable) continue;
          // Edge-composition relators only define edge generators.
          if (gens[g].vertex >= 0 && r.kind == TaggedRelator::EdgeK) continue;
          if (occurrences(r.w, g) == 1) {
            target = g;
            break;
          }
        }
      }
      if (target < 0) continue;
      // Solve r.w = 1 for the target generator.
      size_t pos = 0;
      while (std::abs(r.w[pos]) - 1 != target) ++pos;
      Word alpha(r.w.begin(), r.w.begin() + pos);
      Word beta(r.w.begin() + pos + 1, r.w.end());
      Word def;
      if (r.w[pos] > 0) {
        def = word_inverse(alpha);
        Word ib = word_inverse(beta);
        def.insert(def.end(), ib.begin(), ib.end());
      } else {
        def = beta;
        def.insert(def.end(), alpha.begin(), alpha.end());
      }
      def = free_reduce(def);
      r.dead = true;
      gens[target].alive = false;
      substitute(target, def);
      changed = true;
    }
  }

  // Cleanup: drop empties and duplicates; drop relators that migrated into a
  // single retained vertex group and hold there.
  auto support_vertex = [&](const Word& w) {
    int v = -2;
    for (int letter : w) {
      const GenInfo& g = gens[std::abs(letter) - 1];
      if (g.vertex < 0) return -2;
      if (v == -2)
        v = g.vertex;
      else if (v != g.vertex)
        return -2;
    }
    return v;
  };
  std::set<Word> seen_words;
  for (TaggedRelator& r : relators) {
    if (r.dead) continue;
    r.w = free_reduce(r.w);
    if (r.w.empty()) {
      r.dead = true;
      continue;
    }
    if (!seen_words.insert(r.w).second) {
      r.dead = true;
      continue;
    }
    int sv = support_vertex(r.w);
    if (sv >= 0 && (r.kind != TaggedRelator::VertexRel || r.vertex != sv)) {
      const VertexGroupData& vg = c.vgroups[sv];
      if (vg.group) {
        int val = vg.group->identity();
        for (int letter : r.w) {
          int e = vg.gen_elements[gens[std::abs(letter) - 1].local];
          val = vg.group->mult(val, letter > 0 ? e : vg.group->inverse(e));
        }
        if (val == vg.group->identity()) r.dead = true;
      }
    }
  }

  // Assemble the output presentation over the surviving generators.
  Presentation pres;
  std::vector<int> remap(gens.size(), -1);
  for (size_t g = 0; g < gens.size(); ++g) {
    if (!gens[g].alive) continue;
    remap[g] = static_cast<int>(pres.gens.size());
    long order = 0;
    if (gens[g].vertex >= 0) {
      const VertexGroupData& vg = c.vgroups[gens[g].vertex];
      order = vg.group->element_order(vg.gen_elements[gens[g].local]);
    }
    pres.gens.push_back({gens[g].name, order, gens[g].vertex});
  }
  for (const TaggedRelator& r : relators) {
    if (r.dead) continue;
    Word w;
    for (int letter : r.w) {
      int g = remap[std::abs(letter) - 1];
      if (g < 0) throw Error(ErrorCode::Internal, "dead generator survived in a relator");
      w.push_back(letter > 0 ? g + 1 : -(g + 1));
    }
    pres.add_relator(w);
  }
  return pres;
}

bool ScwolAction::check(const Scwol& x, std::string* why) const {
  const int n = group->size();
  for (int g = 0; g < n; ++g) {
    for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
      int ge = on_edge(g, e);
      if (x.edges[ge].i != on_vertex(g, x.edges[e].i) ||
          x.edges[ge].t != on_vertex(g, x.edges[e].t)) {
        if (why) *why = "edge action does not commute with i/t";
        return false;
      }
      if (on_vertex(g, x.edges[e].i) == x.edges[e].t) {
        if (why) *why = "action violates g(i(a)) != t(a)";
        return false;
      }
      if (on_vertex(g, x.edges[e].i) == x.edges[e].i && ge != e) {
        if (why) *why = "action does not fix an edge whose initial vertex it fixes";
        return false;
      }
    }
    for (const auto& [key, ab] : x.composition) {
      auto [a, b] = key;
      if (x.composition.at({on_edge(g, a), on_edge(g, b)}) != on_edge(g, ab)) {
        if (why) *why = "action does not respect composition";
        return false;
      }
    }
  }
  return true;
}

ComplexOfGroups quotient_complex_of_groups(const Scwol& x, const ScwolAction& action) {
  std::string why;
  if (!action.check(x, &why)) throw Error(ErrorCode::SpecInvalid, "invalid scwol action: " + why);
  const FiniteGroup& g = *action.group;
  const int n = g.size();

  auto orbit_rep_vertex = [&](int v) {
    int best = v;
    for (int e = 0; e < n; ++e) best = std::min(best, action.on_vertex(e, v));
    return best;
  };
  auto orbit_rep_edge = [&](int a) {
    int best = a;
    for (int e = 0; e < n; ++e) best = std::min(best, action.on_edge(e, a));
    return best;
  };

  std::map<int, int> vclass;  // representative vertex -> quotient index
  std::vector<int> vrep;
  for (int v = 0; v < static_cast<int>(x.vertices.size()); ++v) {
    int r = orbit_rep_vertex(v);
    if (!vclass.count(r)) {
      vclass[r] = static_cast<int>(vrep.size());
      vrep.push_back(r);
    }
  }
  // Preferred lift of each edge orbit: initial vertex is a representative.
  std::map<int, int> eclass;
  std::vector<int> elift;
  for (int a = 0; a < static_cast<int>(x.edges.size()); ++a) {
    int r = orbit_rep_edge(a);
    if (eclass.count(r)) continue;
    int lift = -1;
    for (int e = 0; e < n && lift < 0; ++e) {
      int img = action.on_edge(e, r);
      if (vclass.count(x.edges[img].i) && x.edges[img].i == orbit_rep_vertex(x.edges[img].i))
        lift = img;
    }
    if (lift < 0) throw Error(ErrorCode::Internal, "no lift with representative source");
    eclass[r] = static_cast<int>(elift.size());
    elift.push_back(lift);
  }

  ComplexOfGroups c;
  for (int r : vrep) c.base.add_vertex("[" + x.vertices[r].label + "]", x.vertices[r].type_tag);
  std::vector<int> h_a(elift.size(), g.identity());
  for (size_t q = 0; q < elift.size(); ++q) {
    int bar_a = elift[q];
    int src = vclass.at(orbit_rep_vertex(x.edges[bar_a].i));
    int dst = vclass.at(orbit_rep_vertex(x.edges[bar_a].t));
    c.base.add_edge(src, dst, "[" + x.edges[bar_a].label + "]");
    // h_a carries t(bar a) to the chosen representative.
    int target = vrep[dst];
    for (int e = 0; e < n; ++e)
      if (action.on_vertex(e, x.edges[bar_a].t) == target) {
        h_a[q] = e;
        break;
      }
  }
  // Stabilizer vertex groups as table groups.
  std::vector<std::vector<int>> stab_elems(vrep.size());
  for (size_t qv = 0; qv < vrep.size(); ++qv) {
    for (int e = 0; e < n; ++e)
      if (action.on_vertex(e, vrep[qv]) == vrep[qv]) stab_elems[qv].push_back(e);
    VertexGroupData vd;
    if (stab_elems[qv].size() > 1) {
      std::vector<std::vector<int>> table(stab_elems[qv].size(),
                                          std::vector<int>(stab_elems[qv].size()));
      std::map<int, int> idx;
      for (size_t i = 0; i < stab_elems[qv].size(); ++i) idx[stab_elems[qv][i]] = static_cast<int>(i);
      for (size_t i = 0; i < stab_elems[qv].size(); ++i)
        for (size_t j = 0; j < stab_elems[qv].size(); ++j)
          table[i][j] = idx.at(g.mult(stab_elems[qv][i], stab_elems[qv][j]));
      auto tg = std::make_shared<TableGroup>(table);
      GroupPresentation pres = tg->presentation();
      vd.group = tg;
      vd.gen_names = pres.names;
      vd.gen_elements = pres.gen_elements;
      vd.relators = pres.relators;
      vd.principal = true;
    }
    c.vgroups.push_back(vd);
  }
  // Monomorphisms psi_a = Ad(h_a) restricted to the source stabilizer.
  for (size_t qe = 0; qe < elift.size(); ++qe) {
    int bar_a = elift[qe];
    int sv = vclass.at(orbit_rep_vertex(x.edges[bar_a].i));
    int dv = vclass.at(orbit_rep_vertex(x.edges[bar_a].t));
    EdgeMono m;
    if (stab_elems[sv].size() > 1) {
      std::map<int, int> dst_idx;
      for (size_t i = 0; i < stab_elems[dv].size(); ++i) dst_idx[stab_elems[dv][i]] = static_cast<int>(i);
      for (int s : stab_elems[sv]) {
        int img = g.mult(g.mult(h_a[qe], s), g.inverse(h_a[qe]));
        auto it = dst_idx.find(img);
        if (it == dst_idx.end())
          throw Error(ErrorCode::Internal, "conjugated stabilizer escapes the target stabilizer");
        m.element_map.push_back(it->second);
      }
    }
    c.monos.push_back(m);
  }
  // Compositions and twists g_{a,b} = h_a h_b h_ab^-1.
  auto edge_orbit_index = [&](int a) { return eclass.at(orbit_rep_edge(a)); };
  for (size_t qa = 0; qa < elift.size(); ++qa)
    for (size_t qb = 0; qb < elift.size(); ++qb) {
      const auto& ea = c.base.edges[qa];
      const auto& eb = c.base.edges[qb];
      if (ea.i != eb.t) continue;
      // Translate the canonical lift of a so it starts at t(bar_b); the
      // composite is then the canonical lift of ab (its source is the
      // representative vertex, and such lifts are unique).
      int bar_b = elift[qb];
      int abar = elift[qa];
      int carrier = -1;
      for (int e = 0; e < g.size(); ++e)
        if (action.on_vertex(e, x.edges[abar].i) == x.edges[bar_b].t) {
          carrier = e;
          break;
        }
      if (carrier < 0) throw Error(ErrorCode::Internal, "cannot align composable lift");
      int bar_a2 = action.on_edge(carrier, abar);
      int comp = x.composition.at({bar_a2, bar_b});
      int qab = edge_orbit_index(comp);
      if (elift[qab] != comp) throw Error(ErrorCode::Internal, "composed lift is not canonical");
      c.base.set_composition(static_cast<int>(qa), static_cast<int>(qb), qab);
      int tw = g.mult(g.mult(h_a[qa], h_a[qb]), g.inverse(h_a[qab]));
      int top = c.base.edges[qa].t;
      int local = -1;
      for (size_t i = 0; i < stab_elems[top].size(); ++i)
        if (stab_elems[top][i] == tw) local = static_cast<int>(i);
      if (local < 0) throw Error(ErrorCode::Internal, "twist lies outside the vertex stabilizer");
      if (c.vgroups[top].group && local != c.vgroups[top].group->identity())
        c.twists[{static_cast<int>(qa), static_cast<int>(qb)}] = local;
    }
  c.validate();
  return c;
}

}  // namespace singer
