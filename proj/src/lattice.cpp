#include "singer/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace singer {

void A2LatticeSpec::validate() const {
  if (q < 2) throw Error(ErrorCode::SpecInvalid, "need q >= 2");
  for (const SingerDatum& d : data) {
    if (!d.group) throw Error(ErrorCode::SpecInvalid, "missing Singer group");
    if (static_cast<long>(d.ordered_elements.size()) != q + 1)
      throw Error(ErrorCode::SpecInvalid, "ordered difference set must have q+1 entries");
    if (d.ordered_elements[0] != d.group->identity())
      throw Error(ErrorCode::SpecInvalid, "d(0) must be the identity");
    if (d.d_words.size() != d.ordered_elements.size())
      throw Error(ErrorCode::SpecInvalid, "missing difference-set words");
    for (size_t j = 0; j < d.d_words.size(); ++j) {
      int got = d.group->identity();
      for (int letter : d.d_words[j]) {
        int e = d.gen_elements[std::abs(letter) - 1];
        got = d.group->mult(got, letter > 0 ? e : d.group->inverse(e));
      }
      if (got != d.ordered_elements[j])
        throw Error(ErrorCode::SpecInvalid, "difference-set word evaluates incorrectly");
    }
  }
}

A2LatticeSpec A2LatticeSpec::cyclic(long q, const std::array<DifferenceSet, 3>& deltas,
                                    const std::array<std::vector<int>, 3>& orderings) {
  A2LatticeSpec spec;
  spec.q = q;
  spec.is_cyclic = true;
  spec.deltas = deltas;
  long n = q * q + q + 1;
  for (int alpha = 0; alpha < 3; ++alpha) {
    deltas[alpha].validate();
    if (deltas[alpha].n != n) throw Error(ErrorCode::SpecInvalid, "difference set modulus mismatch");
    std::vector<long> ordered = ordered_difference_set(deltas[alpha], orderings[alpha]);
    SingerDatum d;
    d.group = std::make_shared<CyclicGroup>(n, "sigma" + std::to_string(alpha + 1));
    d.ordered_residues = ordered;
    for (long r : ordered) {
      d.ordered_elements.push_back(static_cast<int>(r));
      d.d_words.push_back(Word(static_cast<size_t>(r), 1));
    }
    GroupPresentation pres = d.group->presentation();
    d.gen_names = pres.names;
    d.gen_elements = pres.gen_elements;
    d.relators = pres.relators;
    spec.data[alpha] = d;
  }
  spec.validate();
  return spec;
}

A2LatticeSpec A2LatticeSpec::cyclic_default(long q) {
  DifferenceSet ds = singer_difference_set(q);
  std::vector<int> identity_order(ds.residues.size());
  for (size_t i = 0; i < identity_order.size(); ++i) identity_order[i] = static_cast<int>(i);
  return cyclic(q, {ds, ds, ds}, {identity_order, identity_order, identity_order});
}

A2LatticeSpec A2LatticeSpec::generic_from_cyclic(const A2LatticeSpec& spec) {
  A2LatticeSpec g = spec;
  g.is_cyclic = false;
  for (int alpha = 0; alpha < 3; ++alpha) {
    SingerDatum& d = g.data[alpha];
    d.ordered_residues.clear();
    d.d_words.clear();
    for (int el : d.ordered_elements)
      d.d_words.push_back(factor_element(*d.group, d.gen_elements, el));
  }
  return g;
}

namespace {

VertexGroupData trivial_vertex() { return VertexGroupData{}; }

VertexGroupData datum_vertex(const SingerDatum& d, bool principal) {
  VertexGroupData v;
  v.group = d.group;
  v.gen_names = d.gen_names;
  v.gen_elements = d.gen_elements;
  v.relators = d.relators;
  v.principal = principal;
  return v;
}

}  // namespace

ComplexOfGroups a2_complex_of_groups(const A2LatticeSpec& spec) {
  spec.validate();
  const long q = spec.q;
  ComplexOfGroups c;
  // Vertices: v1 v2 v3 | e1 e2 e3 | f_0..f_q
  for (int alpha = 0; alpha < 3; ++alpha) c.base.add_vertex("v" + std::to_string(alpha + 1), 0);
  for (int beta = 0; beta < 3; ++beta) c.base.add_vertex("e" + std::to_string(beta + 1), 1);
  for (long j = 0; j <= q; ++j) c.base.add_vertex("f" + std::to_string(j), 2);
  auto v_id = [](int alpha) { return alpha; };
  auto e_id = [](int beta) { return 3 + beta; };
  auto f_id = [](long j) { return 6 + static_cast<int>(j); };

  // Edge order fixes the canonical tree: the five tree corner edges first.
  std::map<std::pair<int, int>, int> edge_of;
  auto add_edge = [&](int i, int t, const std::string& label) {
    int id = c.base.add_edge(i, t, label);
    edge_of[{i, t}] = id;
    return id;
  };
  add_edge(e_id(1), v_id(0), "v1<e2");  // tree
  add_edge(e_id(2), v_id(0), "v1<e3");  // tree
  add_edge(e_id(2), v_id(1), "v2<e3");  // tree
  add_edge(e_id(0), v_id(1), "v2<e1");  // tree
  add_edge(e_id(0), v_id(2), "v3<e1");  // tree
  add_edge(e_id(1), v_id(2), "v3<e2");
  for (long j = 0; j <= q; ++j)
    for (int alpha = 0; alpha < 3; ++alpha)
      add_edge(f_id(j), v_id(alpha), "v" + std::to_string(alpha + 1) + "<f" + std::to_string(j));
  std::vector<int> tree = {0, 1, 2, 3, 4};
  for (long j = 0; j <= q; ++j)
    for (int beta = 0; beta < 3; ++beta) {
      int id = add_edge(f_id(j), e_id(beta),
                        "e" + std::to_string(beta + 1) + "<f" + std::to_string(j));
      if (beta == 2) tree.push_back(id);  // e3 <- f_j
    }
  // Compositions (v_alpha <- e_beta) o (e_beta <- f_j) = v_alpha <- f_j,
  // with the twist d_alpha(j)^-1 when beta - alpha = 2 mod 3.
  for (int alpha = 0; alpha < 3; ++alpha)
    for (int beta = 0; beta < 3; ++beta) {
      if (alpha == beta) continue;
      int a = edge_of.at({e_id(beta), v_id(alpha)});
      for (long j = 0; j <= q; ++j) {
        int b = edge_of.at({f_id(j), e_id(beta)});
        int ab = edge_of.at({f_id(j), v_id(alpha)});
        c.base.set_composition(a, b, ab);
        if (((beta - alpha) % 3 + 3) % 3 == 2) {
          const SingerDatum& d = spec.data[alpha];
          int el = d.group->inverse(d.ordered_elements[j]);
          if (el != d.group->identity()) {
            c.twists[{a, b}] = el;
            c.twist_words[{a, b}] = word_inverse(d.d_words[j]);
          }
        }
      }
    }
  for (int alpha = 0; alpha < 3; ++alpha) c.vgroups.push_back(datum_vertex(spec.data[alpha], true));
  for (int i = 0; i < 3 + static_cast<int>(q) + 1; ++i) c.vgroups.push_back(trivial_vertex());
  c.monos.resize(c.base.edges.size());
  c.canonical_tree = tree;
  c.validate();
  return c;
}

Presentation a2_presentation(const A2LatticeSpec& spec) {
  spec.validate();
  Presentation pres;
  std::array<int, 3> base{};
  for (int alpha = 0; alpha < 3; ++alpha) {
    base[alpha] = static_cast<int>(pres.gens.size());
    const SingerDatum& d = spec.data[alpha];
    for (size_t i = 0; i < d.gen_names.size(); ++i)
      pres.gens.push_back({d.gen_names[i], d.group->element_order(d.gen_elements[i]), alpha});
  }
  auto shift = [&](const Word& w, int alpha) {
    Word out;
    for (int letter : w) {
      int g = base[alpha] + std::abs(letter) - 1 + 1;
      out.push_back(letter > 0 ? g : -g);
    }
    return out;
  };
  for (int alpha = 0; alpha < 3; ++alpha)
    for (const Word& r : spec.data[alpha].relators) pres.add_relator(shift(r, alpha));
  for (long j = 0; j <= spec.q; ++j) {
    Word w;
    for (int alpha = 0; alpha < 3; ++alpha) {
      Word part = shift(spec.data[alpha].d_words[j], alpha);
      w.insert(w.end(), part.begin(), part.end());
    }
    w = free_reduce(w);
    if (!w.empty()) pres.add_relator(w);
  }
  return pres;
}

void C2LatticeSpec::validate() const {
  if (q <= 2) throw Error(ErrorCode::SpecInvalid, "need q > 2");
  if (!quad || !quad2) throw Error(ErrorCode::SpecInvalid, "missing quadrangle data");
  size_t J = static_cast<size_t>(q) + 2;
  if (lambda.size() != J || lambda2.size() != J)
    throw Error(ErrorCode::SpecInvalid, "lambda must enumerate q+2 line representatives");
  for (const auto* lam : {&lambda, &lambda2}) {
    std::vector<char> seen(J, 0);
    for (int r : *lam) {
      if (r < 0 || r >= static_cast<int>(J) || seen[r])
        throw Error(ErrorCode::SpecInvalid, "lambda is not a bijection");
      seen[r] = 1;
    }
  }
}

C2LatticeSpec C2LatticeSpec::make(long q, C2Family family, std::vector<int> lambda,
                                  std::vector<int> lambda2) {
  C2LatticeSpec spec;
  spec.q = q;
  spec.family = family;
  auto sq = std::make_shared<SlantedQuadrangle>(slanted_quadrangle(q));
  spec.quad = sq;
  spec.quad2 = sq;
  size_t J = static_cast<size_t>(q) + 2;
  if (lambda.empty())
    for (size_t j = 0; j < J; ++j) lambda.push_back(static_cast<int>(j));
  if (lambda2.empty()) lambda2 = lambda;
  spec.lambda = std::move(lambda);
  spec.lambda2 = std::move(lambda2);
  spec.validate();
  return spec;
}

namespace {

// Vertex data of a Singer quadrangle group with optionally primed names.
VertexGroupData quad_vertex(const SlantedQuadrangle& quad, bool primed) {
  VertexGroupData v;
  v.group = quad.singer;
  GroupPresentation pres = quad.singer->presentation();
  for (const std::string& n : pres.names) v.gen_names.push_back(primed ? n + "'" : n);
  v.gen_elements = pres.gen_elements;
  v.relators = pres.relators;
  v.principal = true;
  return v;
}

// Elementary abelian copy of (F_q, +), the abstract edge group.
std::shared_ptr<ElementaryAbelianGroup> edge_group(long q, const std::string& prefix) {
  return std::make_shared<ElementaryAbelianGroup>(q, 1, prefix);
}

VertexGroupData group_vertex(const GroupPtr& g, bool principal) {
  VertexGroupData v;
  v.group = g;
  GroupPresentation pres = g->presentation();
  v.gen_names = pres.names;
  v.gen_elements = pres.gen_elements;
  v.relators = pres.relators;
  v.principal = principal;
  return v;
}

// Monomorphism from an elementary abelian edge group into the Singer group,
// sending the basis to the stabilizer generator words.
EdgeMono stabilizer_mono(const ElementaryAbelianGroup& src, const SlantedQuadrangle& quad,
                         int rep) {
  EdgeMono m;
  const std::vector<Word>& words = quad.stabilizer_words[rep];
  if (static_cast<int>(words.size()) != src.dim())
    throw Error(ErrorCode::Internal, "stabilizer rank mismatch");
  std::vector<int> images;
  for (const Word& w : words) images.push_back(quad.singer->eval_word(w));
  for (int x = 0; x < src.size(); ++x) {
    int val = quad.singer->identity();
    int rest = x;
    for (int i = 0; i < src.dim(); ++i) {
      long coord = rest % src.p();
      rest /= static_cast<int>(src.p());
      for (long r = 0; r < coord; ++r) val = quad.singer->mult(val, images[i]);
    }
    m.element_map.push_back(val);
  }
  m.gen_image_words = words;
  return m;
}

}  // namespace

ComplexOfGroups c2_complex_of_groups(const C2LatticeSpec& spec) {
  spec.validate();
  const long q = spec.q;
  const int J = static_cast<int>(q) + 2;
  ComplexOfGroups c;
  if (spec.family == C2Family::TwoPanel) {
    int v = c.base.add_vertex("v", 0);
    int vp = c.base.add_vertex("v'", 0);
    int w = c.base.add_vertex("w", 0);
    int e = c.base.add_vertex("e", 1);
    int ep = c.base.add_vertex("e'", 1);
    std::vector<int> ej(J), fj(J);
    for (int j = 0; j < J; ++j) ej[j] = c.base.add_vertex("e" + std::to_string(j), 1);
    for (int j = 0; j < J; ++j) fj[j] = c.base.add_vertex("f" + std::to_string(j), 2);

    std::map<std::pair<int, int>, int> edge_of;
    auto add_edge = [&](int i, int t, const std::string& label) {
      int id = c.base.add_edge(i, t, label);
      edge_of[{i, t}] = id;
      return id;
    };
    std::vector<int> tree;
    tree.push_back(add_edge(e, w, "w<e"));
    tree.push_back(add_edge(ep, w, "w<e'"));
    tree.push_back(add_edge(e, v, "v<e"));
    tree.push_back(add_edge(ep, vp, "v'<e'"));
    for (int j = 0; j < J; ++j) {
      add_edge(ej[j], vp, "v'<e" + std::to_string(j));  // before v<e_j: defines s_j there
      add_edge(ej[j], v, "v<e" + std::to_string(j));
    }
    for (int j = 0; j < J; ++j) {
      tree.push_back(add_edge(fj[j], w, "w<f" + std::to_string(j)));
      add_edge(fj[j], v, "v<f" + std::to_string(j));
      add_edge(fj[j], vp, "v'<f" + std::to_string(j));
    }
    for (int j = 0; j < J; ++j) {
      add_edge(fj[j], e, "e<f" + std::to_string(j));
      add_edge(fj[j], ep, "e'<f" + std::to_string(j));
      tree.push_back(add_edge(fj[j], ej[j], "e" + std::to_string(j) + "<f" + std::to_string(j)));
    }
    c.canonical_tree = tree;

    c.vgroups.resize(c.base.vertices.size());
    c.vgroups[v] = quad_vertex(*spec.quad, false);
    c.vgroups[vp] = quad_vertex(*spec.quad2, true);
    auto cgroup = std::make_shared<CyclicGroup>(q + 2, "c");
    c.vgroups[w] = group_vertex(cgroup, true);
    std::vector<std::shared_ptr<ElementaryAbelianGroup>> sj(J);
    for (int j = 0; j < J; ++j) {
      sj[j] = edge_group(q, "s" + std::to_string(j) + "_");
      c.vgroups[ej[j]] = group_vertex(sj[j], false);
    }

    c.monos.resize(c.base.edges.size());
    for (int j = 0; j < J; ++j) {
      c.monos[edge_of.at({ej[j], v})] = stabilizer_mono(*sj[j], *spec.quad, spec.lambda[j]);
      c.monos[edge_of.at({ej[j], vp})] = stabilizer_mono(*sj[j], *spec.quad2, spec.lambda2[j]);
    }
    // Compositions; the only nontrivial twists sit over (w <- e <- f_j) = c^j.
    auto compose = [&](int top, int mid, int j) {
      int a = edge_of.at({mid, top});
      int b = edge_of.at({fj[j], mid});
      int ab = edge_of.at({fj[j], top});
      c.base.set_composition(a, b, ab);
      return std::make_pair(a, b);
    };
    for (int j = 0; j < J; ++j) {
      auto key = compose(w, e, j);
      if (j != 0) {
        c.twists[key] = j % (static_cast<int>(q) + 2);
        c.twist_words[key] = Word(static_cast<size_t>(j), 1);
      }
      compose(v, e, j);
      compose(w, ep, j);
      compose(vp, ep, j);
      compose(v, ej[j], j);
      compose(vp, ej[j], j);
    }
    c.validate();
    return c;
  }

  // One-panel family.
  int v = c.base.add_vertex("v", 0);
  int vp = c.base.add_vertex("v'", 0);
  std::vector<int> vj(J);
  for (int j = 0; j < J; ++j) vj[j] = c.base.add_vertex("v" + std::to_string(j), 0);
  int e = c.base.add_vertex("e", 1);
  std::vector<int> ej(J), epj(J), fj(J);
  for (int j = 0; j < J; ++j) ej[j] = c.base.add_vertex("e" + std::to_string(j), 1);
  for (int j = 0; j < J; ++j) epj[j] = c.base.add_vertex("e'" + std::to_string(j), 1);
  for (int j = 0; j < J; ++j) fj[j] = c.base.add_vertex("f" + std::to_string(j), 2);

  std::map<std::pair<int, int>, int> edge_of;
  auto add_edge = [&](int i, int t, const std::string& label) {
    int id = c.base.add_edge(i, t, label);
    edge_of[{i, t}] = id;
    return id;
  };
  std::vector<int> tree;
  tree.push_back(add_edge(e, v, "v<e"));
  tree.push_back(add_edge(e, vp, "v'<e"));
  for (int j = 0; j < J; ++j) {
    tree.push_back(add_edge(ej[j], v, "v<e" + std::to_string(j)));
    tree.push_back(add_edge(ej[j], vj[j], "v" + std::to_string(j) + "<e" + std::to_string(j)));
    add_edge(epj[j], vp, "v'<e'" + std::to_string(j));
    tree.push_back(add_edge(epj[j], vj[j], "v" + std::to_string(j) + "<e'" + std::to_string(j)));
  }
  for (int j = 0; j < J; ++j) {
    add_edge(fj[j], v, "v<f" + std::to_string(j));
    add_edge(fj[j], vp, "v'<f" + std::to_string(j));
    add_edge(fj[j], vj[j], "v" + std::to_string(j) + "<f" + std::to_string(j));
  }
  for (int j = 0; j < J; ++j) {
    add_edge(fj[j], e, "e<f" + std::to_string(j));
    add_edge(fj[j], ej[j], "e" + std::to_string(j) + "<f" + std::to_string(j));
    tree.push_back(add_edge(fj[j], epj[j], "e'" + std::to_string(j) + "<f" + std::to_string(j)));
  }
  c.canonical_tree = tree;

  c.vgroups.resize(c.base.vertices.size());
  c.vgroups[v] = quad_vertex(*spec.quad, false);
  c.vgroups[vp] = quad_vertex(*spec.quad2, true);
  std::vector<std::shared_ptr<ElementaryAbelianGroup>> sj(J), spj(J);
  std::vector<std::shared_ptr<DirectProductGroup>> pj(J);
  for (int j = 0; j < J; ++j) {
    sj[j] = edge_group(q, "s" + std::to_string(j) + "_");
    spj[j] = edge_group(q, "t" + std::to_string(j) + "_");
    pj[j] = std::make_shared<DirectProductGroup>(sj[j], spj[j]);
    c.vgroups[ej[j]] = group_vertex(sj[j], false);
    c.vgroups[epj[j]] = group_vertex(spj[j], false);
    c.vgroups[vj[j]] = group_vertex(pj[j], false);
  }
  c.monos.resize(c.base.edges.size());
  for (int j = 0; j < J; ++j) {
    c.monos[edge_of.at({ej[j], v})] = stabilizer_mono(*sj[j], *spec.quad, spec.lambda[j]);
    c.monos[edge_of.at({epj[j], vp})] = stabilizer_mono(*spj[j], *spec.quad2, spec.lambda2[j]);
    // Inclusions into the product group at v_j.
    EdgeMono left, right;
    int dim = sj[j]->dim();
    for (int x = 0; x < sj[j]->size(); ++x) left.element_map.push_back(pj[j]->pack(x, 0));
    for (int i = 0; i < dim; ++i) left.gen_image_words.push_back({i + 1});
    for (int x = 0; x < spj[j]->size(); ++x) right.element_map.push_back(pj[j]->pack(0, x));
    for (int i = 0; i < dim; ++i) right.gen_image_words.push_back({dim + i + 1});
    c.monos[edge_of.at({ej[j], vj[j]})] = left;
    c.monos[edge_of.at({epj[j], vj[j]})] = right;
  }
  auto compose = [&](int top, int mid, int j) {
    int a = edge_of.at({mid, top});
    int b = edge_of.at({fj[j], mid});
    int ab = edge_of.at({fj[j], top});
    c.base.set_composition(a, b, ab);
  };
  for (int j = 0; j < J; ++j) {
    compose(v, e, j);
    compose(vp, e, j);
    compose(v, ej[j], j);
    compose(vj[j], ej[j], j);
    compose(vp, epj[j], j);
    compose(vj[j], epj[j], j);
  }
  c.validate();
  return c;
}

Presentation c2_presentation(const C2LatticeSpec& spec) {
  spec.validate();
  const long q = spec.q;
  const int J = static_cast<int>(q) + 2;
  Presentation pres;
  VertexGroupData s = quad_vertex(*spec.quad, false);
  VertexGroupData sp = quad_vertex(*spec.quad2, true);
  int base_s = 0;
  for (size_t i = 0; i < s.gen_names.size(); ++i)
    pres.gens.push_back({s.gen_names[i], s.group->element_order(s.gen_elements[i]), 0});
  int base_sp = static_cast<int>(pres.gens.size());
  for (size_t i = 0; i < sp.gen_names.size(); ++i)
    pres.gens.push_back({sp.gen_names[i], sp.group->element_order(sp.gen_elements[i]), 1});
  auto shift = [&](const Word& w, int base) {
    Word out;
    for (int letter : w) {
      int g = base + std::abs(letter) - 1 + 1;
      out.push_back(letter > 0 ? g : -g);
    }
    return out;
  };
  for (const Word& r : s.relators) pres.add_relator(shift(r, base_s));
  for (const Word& r : sp.relators) pres.add_relator(shift(r, base_sp));

  if (spec.family == C2Family::TwoPanel) {
    int c_gen = static_cast<int>(pres.gens.size());
    pres.gens.push_back({"c", q + 2, 2});
    pres.add_relator(Word(static_cast<size_t>(q) + 2, c_gen + 1));
    // c^j psi'_j(s) c^-j = psi_j(s) per stabilizer basis generator.
    for (int j = 0; j < J; ++j) {
      const auto& words = spec.quad->stabilizer_words[spec.lambda[j]];
      const auto& words2 = spec.quad2->stabilizer_words[spec.lambda2[j]];
      for (size_t i = 0; i < words.size(); ++i) {
        Word w(static_cast<size_t>(j), c_gen + 1);
        Word mid = shift(words2[i], base_sp);
        w.insert(w.end(), mid.begin(), mid.end());
        Word back(static_cast<size_t>(j), -(c_gen + 1));
        w.insert(w.end(), back.begin(), back.end());
        Word inv = word_inverse(shift(words[i], base_s));
        w.insert(w.end(), inv.begin(), inv.end());
        pres.add_relator(free_reduce(w));
      }
    }
    return pres;
  }
  // One-panel: commutators [S_lambda(j), S'_lambda2(j)] generator by generator.
  for (int j = 0; j < J; ++j) {
    const auto& words = spec.quad->stabilizer_words[spec.lambda[j]];
    const auto& words2 = spec.quad2->stabilizer_words[spec.lambda2[j]];
    for (size_t i = 0; i < words.size(); ++i)
      for (size_t t = 0; t < words2.size(); ++t) {
        Word a = shift(words[i], base_s);
        Word b = shift(words2[t], base_sp);
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        Word ia = word_inverse(a);
        w.insert(w.end(), ia.begin(), ia.end());
        Word ib = word_inverse(b);
        w.insert(w.end(), ib.begin(), ib.end());
        pres.add_relator(free_reduce(w));
      }
  }
  return pres;
}

BuildingSkeleton building_skeleton(const A2LatticeSpec& spec) {
  spec.validate();
  BuildingSkeleton b;
  b.vertex_classes = {"Gamma/S1", "Gamma/S2", "Gamma/S3"};
  b.edge_templates = {{0, 1}, {1, 2}, {2, 0}};
  std::ostringstream os;
  os << "flag complex over gS1 - gS2 - gS3 - gS1, g in Gamma; identity chamber {S1, S2, S3}; "
     << "each vertex class has " << (spec.q * spec.q + spec.q + 1)
     << " cosets adjacent to a fixed vertex of another type";
  b.description = os.str();
  return b;
}

BuildingSkeleton building_skeleton(const C2LatticeSpec& spec) {
  spec.validate();
  BuildingSkeleton b;
  if (spec.family == C2Family::TwoPanel) {
    b.vertex_classes = {"Gamma/S", "Gamma/S'", "Gamma/<c>"};
    b.edge_templates = {{0, 1}, {0, 2}, {1, 2}};
    b.description = "flag complex over (gS, gS'), (gS, g<c>), (gS', g<c>)";
  } else {
    b.vertex_classes = {"Gamma/S", "Gamma/S'"};
    for (int j = 0; j < static_cast<int>(spec.q) + 2; ++j)
      b.vertex_classes.push_back("Gamma/(S_l(" + std::to_string(j) + ") x S'_l'(" +
                                 std::to_string(j) + "))");
    b.edge_templates = {{0, 1}};
    b.description = "one-panel family: chambers meet the panel orbit in the S, S' corners";
  }
  return b;
}

std::vector<std::pair<int, Scwol>> a2_expected_links(const A2LatticeSpec& spec) {
  std::vector<std::pair<int, Scwol>> expected;
  for (int alpha = 0; alpha < 3; ++alpha) {
    SingerPlane plane = plane_from_difference_set(spec.deltas[alpha]);
    expected.emplace_back(alpha, scwol_of_incidence(plane.plane));
  }
  for (int beta = 0; beta < 3; ++beta)
    expected.emplace_back(3 + beta, discrete_scwol(static_cast<int>(spec.q) + 1));
  for (long j = 0; j <= spec.q; ++j)
    expected.emplace_back(6 + static_cast<int>(j), discrete_scwol(0));
  return expected;
}

std::vector<std::pair<int, Scwol>> c2_expected_links(const C2LatticeSpec& spec) {
  std::vector<std::pair<int, Scwol>> expected;
  const int J = static_cast<int>(spec.q) + 2;
  Scwol zq = scwol_of_incidence(spec.quad->inc);
  Scwol zq2 = scwol_of_incidence(spec.quad2->inc);
  if (spec.family == C2Family::TwoPanel) {
    expected.emplace_back(0, zq);
    expected.emplace_back(1, zq2);
    expected.emplace_back(2, scwol_of_incidence(complete_bipartite(J, J)));
    expected.emplace_back(3, discrete_scwol(J));
    expected.emplace_back(4, discrete_scwol(J));
    for (int j = 0; j < J; ++j)
      expected.emplace_back(5 + j, discrete_scwol(static_cast<int>(spec.q)));
    for (int j = 0; j < J; ++j) expected.emplace_back(5 + J + j, discrete_scwol(0));
  } else {
    expected.emplace_back(0, zq);
    expected.emplace_back(1, zq2);
    for (int j = 0; j < J; ++j)
      expected.emplace_back(
          2 + j, scwol_of_incidence(complete_bipartite(static_cast<int>(spec.q),
                                                       static_cast<int>(spec.q))));
    expected.emplace_back(2 + J, discrete_scwol(J));
    for (int j = 0; j < J; ++j)
      expected.emplace_back(3 + J + j, discrete_scwol(static_cast<int>(spec.q)));
    for (int j = 0; j < J; ++j)
      expected.emplace_back(3 + 2 * J + j, discrete_scwol(static_cast<int>(spec.q)));
    for (int j = 0; j < J; ++j) expected.emplace_back(3 + 3 * J + j, discrete_scwol(0));
  }
  return expected;
}

std::vector<LinkCheckReport> verify_all_links(const ComplexOfGroups& c,
                                              const std::vector<std::pair<int, Scwol>>& expected,
                                              int max_vertices) {
  std::vector<LinkCheckReport> reports;
  for (const auto& [v, scwol] : expected) {
    LinkCheckReport rep;
    rep.vertex = v;
    rep.vertex_label = c.base.vertices[v].label;
    LocalCheckResult res = local_development_check(c, v, scwol, max_vertices);
    rep.ok = res.isomorphic;
    rep.detail = res.detail;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace singer
