// Acceptance suite: one line per criterion, nonzero exit if any fail.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "singer/cover.hpp"
#include "singer/hjelmslev.hpp"
#include "singer/homology.hpp"
#include "singer/lattice.hpp"

using namespace singer;

namespace {

struct Criterion {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

std::vector<int> identity_order(size_t k) {
  std::vector<int> v(k);
  for (size_t i = 0; i < k; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  // 1. Difference sets.
  {
    Criterion c{"1 difference sets"};
    try {
      c.require(singer_difference_set(2).residues == std::vector<long>{0, 1, 3} &&
                    singer_difference_set(2).n == 7,
                "q=2 difference set is not {0,1,3} mod 7");
      c.require(singer_difference_set(3).residues == std::vector<long>{0, 1, 3, 9} &&
                    singer_difference_set(3).n == 13,
                "q=3 difference set is not {0,1,3,9} mod 13");
      for (long q : {2L, 3L, 4L, 5L}) {
        DifferenceSet ds = singer_difference_set(q);
        try {
          ds.validate();
        } catch (const Error& e) {
          c.require(false, "q=" + std::to_string(q) + ": " + e.what());
        }
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 2. Polygon verification.
  {
    Criterion c{"2 polygon verification"};
    try {
      for (long q : {2L, 3L, 4L, 5L}) {
        SingerPlane sp = plane_from_difference_set(singer_difference_set(q));
        PolygonVerdict v = verify_generalized_polygon(sp.plane, 3);
        c.require(v.ok && v.cert.s == q && v.cert.t == q,
                  "plane q=" + std::to_string(q) + " fails the 3-gon check");
        c.require(sp.plane.num_points == q * q + q + 1 && sp.plane.num_lines == q * q + q + 1,
                  "plane q=" + std::to_string(q) + " has wrong counts");
      }
      for (long q : {3L, 4L, 5L}) {
        SlantedQuadrangle sq = slanted_quadrangle(q);
        PolygonVerdict v = verify_generalized_polygon(sq.inc, 4);
        c.require(v.ok && v.cert.s == q - 1 && v.cert.t == q + 1,
                  "quadrangle q=" + std::to_string(q) + " fails the 4-gon check");
        c.require(sq.inc.num_points == q * q * q,
                  "quadrangle q=" + std::to_string(q) + " has wrong point count");
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 3. Regularity.
  {
    Criterion c{"3 regularity"};
    try {
      for (long q : {2L, 3L, 4L, 5L}) {
        SingerPlane sp = plane_from_difference_set(singer_difference_set(q));
        c.require(is_regular_action(sp.point_action()).regular,
                  "Singer cycle not regular on points, q=" + std::to_string(q));
        c.require(is_regular_action(sp.line_action()).regular,
                  "Singer cycle not regular on lines, q=" + std::to_string(q));
      }
      for (long q : {3L, 4L, 5L}) {
        SlantedQuadrangle sq = slanted_quadrangle(q);
        c.require(is_regular_action(sq.action).regular,
                  "Singer group not regular on quadrangle points, q=" + std::to_string(q));
        c.require(sq.stabilizers.size() == static_cast<size_t>(q) + 2,
                  "wrong number of line stabilizers, q=" + std::to_string(q));
        for (const auto& stab : sq.stabilizers)
          c.require(stab.size() == static_cast<size_t>(q),
                    "stabilizer of wrong order, q=" + std::to_string(q));
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 4. Presentation oracle.
  {
    Criterion c{"4 presentation oracle"};
    try {
      DifferenceSet d2 = singer_difference_set(2);
      DifferenceSet d3 = singer_difference_set(3);
      std::vector<int> id2 = identity_order(3), sw2 = {0, 2, 1};
      std::vector<int> id3 = identity_order(4), sw3 = {0, 2, 1, 3};
      std::vector<A2LatticeSpec> specs = {
          A2LatticeSpec::cyclic(2, {d2, d2, d2}, {id2, id2, id2}),
          A2LatticeSpec::cyclic(2, {d2, d2, d2}, {sw2, id2, id2}),
          A2LatticeSpec::cyclic(3, {d3, d3, d3}, {id3, id3, id3}),
          A2LatticeSpec::cyclic(3, {d3, d3, d3}, {sw3, id3, id3}),
      };
      for (size_t i = 0; i < specs.size(); ++i) {
        ComplexOfGroups cg = a2_complex_of_groups(specs[i]);
        bool same = structurally_equal(a2_presentation(specs[i]),
                                       fundamental_group(cg, cg.canonical_tree));
        c.require(same, "triangle-type spec " + std::to_string(i) + " oracle mismatch");
      }
      for (long q : {3L, 4L}) {
        for (C2Family family : {C2Family::TwoPanel, C2Family::OnePanel}) {
          C2LatticeSpec spec = C2LatticeSpec::make(q, family);
          ComplexOfGroups cg = c2_complex_of_groups(spec);
          bool same = structurally_equal(c2_presentation(spec),
                                         fundamental_group(cg, cg.canonical_tree));
          c.require(same, "quadrangle-type oracle mismatch at q=" + std::to_string(q) +
                              (family == C2Family::TwoPanel ? " two-panel" : " one-panel"));
        }
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 5. Local developments.
  {
    Criterion c{"5 local developments"};
    try {
      auto t0 = std::chrono::steady_clock::now();
      for (long q : {2L, 3L}) {
        A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
        ComplexOfGroups cg = a2_complex_of_groups(spec);
        for (const auto& r : verify_all_links(cg, a2_expected_links(spec), 5000))
          c.require(r.ok, "triangle q=" + std::to_string(q) + " vertex " + r.vertex_label +
                              ": " + r.detail);
      }
      double a2_secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      c.require(a2_secs < 10.0, "triangle link sweep took too long");
      for (long q : {3L, 4L}) {
        for (C2Family family : {C2Family::TwoPanel, C2Family::OnePanel}) {
          C2LatticeSpec spec = C2LatticeSpec::make(q, family);
          ComplexOfGroups cg = c2_complex_of_groups(spec);
          for (const auto& r : verify_all_links(cg, c2_expected_links(spec), 5000))
            c.require(r.ok, "quadrangle q=" + std::to_string(q) + " vertex " + r.vertex_label +
                                ": " + r.detail);
        }
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 6. Homology golden values.
  {
    Criterion c{"6 homology golden values"};
    try {
      DifferenceSet d2 = singer_difference_set(2);
      std::vector<int> id2 = identity_order(3), sw2 = {0, 2, 1};
      A2LatticeSpec gamma2 = A2LatticeSpec::cyclic(2, {d2, d2, d2}, {id2, id2, id2});
      A2LatticeSpec gamma2p = A2LatticeSpec::cyclic(2, {d2, d2, d2}, {sw2, id2, id2});
      A2LatticeSpec gamma3 = A2LatticeSpec::cyclic_default(3);
      struct Golden {
        const A2LatticeSpec* spec;
        AbelianGroup h1;
        const char* name;
      } goldens[] = {
          {&gamma2, AbelianGroup{0, {7, 7}}, "Gamma_2"},
          {&gamma2p, AbelianGroup{0, {7}}, "Gamma_2'"},
          {&gamma3, AbelianGroup{0, {13, 13}}, "Gamma_3"},
      };
      for (const auto& g : goldens) {
        AbelianGroup via_pres = abelianization(a2_presentation(*g.spec));
        AbelianGroup via_kernel =
            kernel_mod_n(a2_exponent_matrix(*g.spec), g.spec->q * g.spec->q + g.spec->q + 1);
        c.require(via_pres == g.h1, std::string(g.name) + ": abelianization is " +
                                        via_pres.to_string() + ", expected " + g.h1.to_string());
        c.require(via_kernel == g.h1, std::string(g.name) + ": kernel route is " +
                                          via_kernel.to_string());
        c.require(via_pres == via_kernel, std::string(g.name) + ": the two routes disagree");
      }
      for (long q : {2L, 3L}) {
        A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
        long n = q * q + q + 1;
        HomologyTable t = a2_homology_table(spec, 6);
        c.require(std::get<AbelianGroup>(t.entries.at(0)) == AbelianGroup{1, {}},
                  "degree 0 should be Z");
        c.require(std::get<AbelianGroup>(t.entries.at(2)) == AbelianGroup{q, {}},
                  "degree 2 should be Z^q, q=" + std::to_string(q));
        AbelianGroup odd{0, std::vector<mpz_class>(3, n)};
        c.require(std::get<AbelianGroup>(t.entries.at(3)) == odd &&
                      std::get<AbelianGroup>(t.entries.at(5)) == odd,
                  "odd degrees should be (Z/n)^3, q=" + std::to_string(q));
        c.require(std::get<AbelianGroup>(t.entries.at(4)) == AbelianGroup{0, {}} &&
                      std::get<AbelianGroup>(t.entries.at(6)) == AbelianGroup{0, {}},
                  "even degrees >= 4 should vanish, q=" + std::to_string(q));
        HomologyTable r = a2_rational_homology_table(spec, 4);
        c.require(std::get<AbelianGroup>(r.entries.at(2)) == AbelianGroup{q, {}} &&
                      std::get<AbelianGroup>(r.entries.at(1)) == AbelianGroup{0, {}} &&
                      std::get<AbelianGroup>(r.entries.at(3)) == AbelianGroup{0, {}},
                  "rational table wrong, q=" + std::to_string(q));
      }
      // Quadrangle-type, one-panel family at q = 3: the stated closed form
      // H1 = (Z/3)^6 must hold via BOTH routes. The abelianization of the
      // one-panel presentation gives (Z/3)^4 (the Singer group abelianizes to
      // (Z/q)^2 since z = [x,y]), so this check records an honest failure of
      // the stated value rather than adjusting either route.
      {
        C2LatticeSpec spec = C2LatticeSpec::make(3, C2Family::OnePanel);
        C2HomologyResult r = c2_homology(spec, 4);
        AbelianGroup stated{0, std::vector<mpz_class>(6, 3)};
        c.require(r.h1_closed_form == stated, "closed-form route is not (Z/3)^6");
        c.require(r.h1 == stated,
                  "one-panel q=3: abelianization route gives " + r.h1.to_string() +
                      ", not the stated (Z/3)^6 (closed form disagrees with the presentation)");
        for (int d = 1; d <= 4; ++d)
          c.require(std::get<AbelianGroup>(r.rational.entries.at(d)) == AbelianGroup{0, {}},
                    "quadrangle-type rational homology should vanish in positive degrees");
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 7. Hjelmslev suite.
  {
    Criterion c{"7 level-2 sphere suite"};
    try {
      for (long q : {2L, 3L}) {
        A2LatticeSpec spec = A2LatticeSpec::cyclic_default(q);
        HjelmslevPlane h = hjelmslev_plane(spec);
        long n = h.n;
        c.require(static_cast<long>(h.points.size()) == n * q * q &&
                      static_cast<long>(h.lines.size()) == n * q * q,
                  "sphere size wrong, q=" + std::to_string(q));
        bool dichotomy = true;
        for (size_t p1 = 0; p1 < h.points.size() && dichotomy; ++p1)
          for (size_t p2 = p1 + 1; p2 < h.points.size() && dichotomy; ++p2) {
            int expect = h.psi_point(static_cast<int>(p1)) == h.psi_point(static_cast<int>(p2))
                             ? static_cast<int>(q)
                             : 1;
            if (common_lines(h, static_cast<int>(p1), static_cast<int>(p2)) != expect)
              dichotomy = false;
          }
        for (size_t l1 = 0; l1 < h.lines.size() && dichotomy; ++l1)
          for (size_t l2 = l1 + 1; l2 < h.lines.size() && dichotomy; ++l2) {
            int expect = h.psi_line(static_cast<int>(l1)) == h.psi_line(static_cast<int>(l2))
                             ? static_cast<int>(q)
                             : 1;
            if (common_points(h, static_cast<int>(l1), static_cast<int>(l2)) != expect)
              dichotomy = false;
          }
        c.require(dichotomy, "1-vs-q dichotomy fails, q=" + std::to_string(q));
        bool agree = true;
        for (size_t p = 0; p < h.points.size() && agree; ++p)
          for (size_t l = 0; l < h.lines.size() && agree; ++l)
            if (general_adjacency(spec, h.points[p], h.lines[l]) != (h.adjacent[p][l] == 1))
              agree = false;
        c.require(agree, "general adjacency disagrees with the closed form, q=" +
                             std::to_string(q));
        SplittingMap iota = splitting_map(h);
        bool split_ok = true;
        for (long j = 0; j < n; ++j)
          if (h.psi_point(iota.point_image[j]) != j || h.psi_line(iota.line_image[j]) != j)
            split_ok = false;
        IncidenceStructure r1 = radius1_plane(spec);
        for (auto [pt, ln] : r1.flags)
          if (!h.adjacent[iota.point_image[pt]][iota.line_image[ln]]) split_ok = false;
        c.require(split_ok, "splitting map fails, q=" + std::to_string(q));
        CmszVerdict verdict = cmsz_test(h);
        c.require(verdict.kind == CmszVerdictKind::ProjectivePlaneOfOrder && verdict.order == q,
                  "substructure verdict wrong, q=" + std::to_string(q) + ": " + verdict.detail);
      }
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  // 8. Mutation sensitivity.
  {
    Criterion c{"8 mutation sensitivity"};
    try {
      A2LatticeSpec spec = A2LatticeSpec::cyclic_default(2);
      ComplexOfGroups clean = a2_complex_of_groups(spec);
      auto expected = a2_expected_links(spec);
      for (const auto& [pair, value] : clean.twists) {
        ComplexOfGroups mutant = clean;
        const auto& group = *mutant.vgroups[mutant.base.edges[pair.first].t].group;
        mutant.twists[pair] = group.mult(value, 1);
        mutant.twist_words.erase(pair);
        bool some_fail = false;
        for (int v = 0; v < 3 && !some_fail; ++v)
          if (!local_development_check(mutant, v, expected[v].second).isomorphic)
            some_fail = true;
        c.require(some_fail, "corrupting a twist went unnoticed");
      }
      DifferenceSet bad{7, {0, 1, 2}};
      bool caught = false;
      std::string witness;
      try {
        bad.validate();
      } catch (const Error& e) {
        caught = e.code() == ErrorCode::InvariantViolation;
        witness = e.what();
      }
      c.require(caught && witness.find("residue") != std::string::npos,
                "difference-set perturbation not caught with a witness");
    } catch (const std::exception& e) {
      c.require(false, e.what());
    }
    criteria.push_back(c);
  }

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << c.name << "\n";
    for (const std::string& f : c.failures) std::cout << "     - " << f << "\n";
    all_ok = all_ok && c.ok;
  }
  std::cout << "excluded from desk-scale reproduction: existence of the infinite building, "
               "property (T), classicality of the triangle-type buildings, and H2 of the "
               "Singer groups (reported symbolically).\n";
  return all_ok ? 0 : 1;
}
