#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "singer/cover.hpp"
#include "singer/hjelmslev.hpp"
#include "singer/homology.hpp"
#include "singer/lattice.hpp"

using namespace singer;

namespace {

std::string subscript_num(long v) {
  static const char* subs[] = {"₀", "₁", "₂", "₃", "₄",
                               "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(v)) out += subs[c - '0'];
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

std::vector<int> parse_perm(const std::string& s) {
  std::vector<int> perm;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) perm.push_back(std::stoi(item));
  return perm;
}

DifferenceSet parse_delta(const std::string& s, long q) {
  DifferenceSet ds;
  ds.n = q * q + q + 1;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) ds.residues.push_back(std::stol(item));
  std::sort(ds.residues.begin(), ds.residues.end());
  ds.validate();
  return ds;
}

struct A2Options {
  long q = 2;
  std::string delta;
  std::string order = "identity";

  A2LatticeSpec spec() const {
    DifferenceSet ds = delta.empty() ? singer_difference_set(q) : parse_delta(delta, q);
    std::vector<int> identity(ds.residues.size());
    for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    std::array<std::vector<int>, 3> orderings = {identity, identity, identity};
    if (order != "identity") {
      std::stringstream ss(order);
      std::string part;
      int alpha = 0;
      while (std::getline(ss, part, ';') && alpha < 3) orderings[alpha++] = parse_perm(part);
    }
    return A2LatticeSpec::cyclic(q, {ds, ds, ds}, orderings);
  }
};

std::string delta_line(const DifferenceSet& ds) {
  std::ostringstream os;
  os << "Δ = {";
  for (size_t i = 0; i < ds.residues.size(); ++i) {
    if (i) os << ",";
    os << ds.residues[i];
  }
  os << "} mod " << ds.n;
  return os.str();
}

int run_verify_links(const ComplexOfGroups& c,
                     const std::vector<std::pair<int, Scwol>>& expected, bool full,
                     int max_vertices) {
  std::vector<std::pair<int, Scwol>> todo;
  for (const auto& entry : expected) {
    if (!full && c.vgroups[entry.first].group_size() == 1) continue;
    todo.push_back(entry);
  }
  auto reports = verify_all_links(c, todo, max_vertices);
  bool all_ok = true;
  for (const auto& r : reports) {
    std::cout << (r.ok ? "PASS" : "FAIL") << " local development at " << r.vertex_label;
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << "\n";
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Panel-regular lattice toolkit: Singer planes, slanted quadrangles, "
               "complexes of groups, Hjelmslev spheres and homology"};
  app.require_subcommand(1);

  int link_bound = 5000;
  if (const char* env = std::getenv("SINGER_LATTICE_MAX_SIZE")) {
    long v = std::atol(env);
    if (v > 0) link_bound = static_cast<int>(std::min<long>(v, 1000000));
  }

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text, json or dot")->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  A2Options a2opt;
  long q_geom = 2;
  bool cmsz = false;
  std::string family = "two-panel";
  std::string level = "full";
  int max_degree = 6;
  int radius = 1;

  auto* cmd_diffset = app.add_subcommand("diffset", "Singer perfect difference set");
  cmd_diffset->add_option("--q", q_geom, "plane order (prime power)")->required();

  auto* cmd_plane = app.add_subcommand("plane", "cyclic projective plane of order q");
  cmd_plane->add_option("--q", q_geom)->required();
  std::string plane_delta;
  cmd_plane->add_option("--delta", plane_delta, "difference set override, e.g. 0,1,3");

  auto* cmd_quad = app.add_subcommand("quadrangle", "slanted symplectic quadrangle W(q)<>");
  cmd_quad->add_option("--q", q_geom)->required();

  auto* cmd_present = app.add_subcommand("present", "lattice presentations");
  auto* present_a2 = cmd_present->add_subcommand("a2", "triangle-type lattice");
  present_a2->add_option("--q", a2opt.q)->required();
  present_a2->add_option("--delta", a2opt.delta);
  present_a2->add_option("--order", a2opt.order,
                         "identity or permutations like \"0,2,1;0,1,2;0,1,2\"");
  bool present_check = false;
  present_a2->add_flag("--check", present_check,
                       "verify against the fundamental group of the complex");
  auto* present_c2 = cmd_present->add_subcommand("c2", "quadrangle-type lattice");
  long c2q = 3;
  present_c2->add_option("--q", c2q)->required();
  present_c2->add_option("--family", family, "two-panel or one-panel")->capture_default_str();
  present_c2->add_flag("--check", present_check);

  auto* cmd_links = app.add_subcommand("verify-links", "local development checks");
  auto* links_a2 = cmd_links->add_subcommand("a2", "");
  links_a2->add_option("--q", a2opt.q)->required();
  links_a2->add_option("--delta", a2opt.delta);
  links_a2->add_option("--order", a2opt.order);
  links_a2->add_option("--level", level, "fast (group-carrying vertices) or full");
  auto* links_c2 = cmd_links->add_subcommand("c2", "");
  links_c2->add_option("--q", c2q)->required();
  links_c2->add_option("--family", family);
  links_c2->add_option("--level", level);

  auto* cmd_hjelmslev = app.add_subcommand("hjelmslev", "level-2 sphere data");
  cmd_hjelmslev->add_option("--q", a2opt.q)->required();
  cmd_hjelmslev->add_option("--delta", a2opt.delta);
  cmd_hjelmslev->add_flag("--cmsz", cmsz, "run the substructure classification");

  auto* cmd_homology = app.add_subcommand("homology", "lattice homology tables");
  auto* hom_a2 = cmd_homology->add_subcommand("a2", "");
  hom_a2->add_option("--q", a2opt.q)->required();
  hom_a2->add_option("--delta", a2opt.delta);
  hom_a2->add_option("--order", a2opt.order);
  hom_a2->add_option("--max-degree", max_degree)->capture_default_str();
  auto* hom_c2 = cmd_homology->add_subcommand("c2", "");
  hom_c2->add_option("--q", c2q)->required();
  hom_c2->add_option("--family", family);
  hom_c2->add_option("--max-degree", max_degree)->capture_default_str();

  auto* cmd_export = app.add_subcommand("export", "structure exports");
  std::string what;
  cmd_export->add_option("what", what,
                         "one of: diffset plane quadrangle hjelmslev scwol-a2 scwol-c2 cover")
      ->required();
  cmd_export->add_option("--q", a2opt.q)->required();
  cmd_export->add_option("--delta", a2opt.delta);
  cmd_export->add_option("--order", a2opt.order);
  cmd_export->add_option("--family", family);
  cmd_export->add_option("--radius", radius);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_diffset) {
      DifferenceSet ds = singer_difference_set(q_geom);
      emit(format == "json" ? ds.to_json() : delta_line(ds), out_path);
      return 0;
    }
    if (*cmd_plane) {
      DifferenceSet ds = plane_delta.empty() ? singer_difference_set(q_geom)
                                             : parse_delta(plane_delta, q_geom);
      SingerPlane sp = plane_from_difference_set(ds);
      if (format == "json") {
        emit(sp.plane.to_json(), out_path);
        return 0;
      }
      if (format == "dot") {
        emit(sp.plane.to_dot(), out_path);
        return 0;
      }
      PolygonVerdict v = verify_generalized_polygon(sp.plane, 3);
      auto reg_p = is_regular_action(sp.point_action());
      auto reg_l = is_regular_action(sp.line_action());
      std::ostringstream os;
      os << "plane of order " << sp.q << ": " << sp.n << " points, " << sp.n << " lines, "
         << sp.plane.flags.size() << " flags\n"
         << delta_line(ds) << "\n"
         << "generalized 3-gon: " << (v.ok ? "yes" : ("NO (" + v.witness + ")"))
         << ", order (" << v.cert.s << "," << v.cert.t << ")\n"
         << "Singer cycle regular on points: " << (reg_p.regular ? "yes" : "no")
         << ", on lines: " << (reg_l.regular ? "yes" : "no");
      emit(os.str(), out_path);
      return v.ok && reg_p.regular && reg_l.regular ? 0 : 1;
    }
    if (*cmd_quad) {
      SlantedQuadrangle sq = slanted_quadrangle(q_geom);
      if (format == "json") {
        emit(sq.to_json(), out_path);
        return 0;
      }
      PolygonVerdict v = verify_generalized_polygon(sq.inc, 4);
      auto reg = is_regular_action(sq.action);
      std::ostringstream os;
      os << "W(" << q_geom << ")◇: " << sq.inc.num_points << " points, "
         << sq.inc.num_lines << " lines, " << sq.inc.flags.size() << " flags\n"
         << "generalized 4-gon: " << (v.ok ? "yes" : ("NO (" + v.witness + ")")) << ", order ("
         << v.cert.s << "," << v.cert.t << ")\n"
         << "Singer group regular on points: " << (reg.regular ? "yes" : "no") << "\n";
      for (size_t r = 0; r < sq.line_reps.size(); ++r)
        os << "stabilizer of " << sq.rep_labels[r] << ": order " << sq.stabilizers[r].size()
           << "\n";
      emit(os.str(), out_path);
      return v.ok && reg.regular ? 0 : 1;
    }
    if (*present_a2) {
      A2LatticeSpec spec = a2opt.spec();
      Presentation pres = a2_presentation(spec);
      int code = 0;
      std::ostringstream os;
      if (format == "json")
        os << pres.to_json();
      else
        os << pres.render();
      if (present_check) {
        ComplexOfGroups c = a2_complex_of_groups(spec);
        Presentation mech = fundamental_group(c, c.canonical_tree);
        bool same = structurally_equal(pres, mech);
        os << "\nfundamental-group oracle: " << (same ? "match" : "MISMATCH");
        if (!same) code = 1;
      }
      emit(os.str(), out_path);
      return code;
    }
    if (*present_c2) {
      C2LatticeSpec spec = C2LatticeSpec::make(
          c2q, family == "one-panel" ? C2Family::OnePanel : C2Family::TwoPanel);
      Presentation pres = c2_presentation(spec);
      int code = 0;
      std::ostringstream os;
      if (format == "json")
        os << pres.to_json();
      else
        os << pres.render();
      if (present_check) {
        ComplexOfGroups c = c2_complex_of_groups(spec);
        Presentation mech = fundamental_group(c, c.canonical_tree);
        bool same = structurally_equal(pres, mech);
        os << "\nfundamental-group oracle: " << (same ? "match" : "MISMATCH");
        if (!same) code = 1;
      }
      emit(os.str(), out_path);
      return code;
    }
    if (*links_a2) {
      A2LatticeSpec spec = a2opt.spec();
      ComplexOfGroups c = a2_complex_of_groups(spec);
      return run_verify_links(c, a2_expected_links(spec), level == "full", link_bound);
    }
    if (*links_c2) {
      C2LatticeSpec spec = C2LatticeSpec::make(
          c2q, family == "one-panel" ? C2Family::OnePanel : C2Family::TwoPanel);
      ComplexOfGroups c = c2_complex_of_groups(spec);
      return run_verify_links(c, c2_expected_links(spec), level == "full", link_bound);
    }
    if (*cmd_hjelmslev) {
      A2LatticeSpec spec = a2opt.spec();
      HjelmslevPlane h = hjelmslev_plane(spec);
      if (format == "json") {
        emit(h.to_json(), out_path);
        return 0;
      }
      if (format == "dot") {
        emit(h.to_dot(), out_path);
        return 0;
      }
      std::ostringstream os;
      os << "level-2 sphere around v" << subscript_num(1) << ": |P²| = " << h.points.size()
         << ", |L²| = " << h.lines.size() << " (n·q² = " << h.n * h.q * h.q
         << ")\n";
      if (cmsz) {
        CmszVerdict verdict = cmsz_test(h);
        switch (verdict.kind) {
          case CmszVerdictKind::ProjectivePlaneOfOrder:
            os << "ProjectivePlaneOfOrder(" << verdict.order << "): inconsistent with Sl"
               << subscript_num(3) << "(ℚ" << subscript_num(verdict.order) << ") building\n";
            break;
          case CmszVerdictKind::FullPlane:
            os << "FullPlane: consistent with the residue-field-Q_p building\n";
            break;
          case CmszVerdictKind::Other:
            os << "Other: " << verdict.detail << "\n";
            break;
        }
      }
      emit(os.str(), out_path);
      return 0;
    }
    if (*hom_a2) {
      A2LatticeSpec spec = a2opt.spec();
      Presentation pres = a2_presentation(spec);
      AbelianGroup h1_pres = abelianization(pres);
      HomologyTable integral = a2_homology_table(spec, max_degree);
      HomologyTable rational = a2_rational_homology_table(spec, max_degree);
      AbelianGroup h1_kernel = std::get<AbelianGroup>(integral.entries.at(1));
      std::ostringstream os;
      os << "H" << subscript_num(1) << " = " << h1_pres.to_string()
         << "  (abelianization; ker \U0001d49f route: " << h1_kernel.to_string() << ", "
         << (h1_pres == h1_kernel ? "agree" : "DISAGREE") << ")\n";
      os << "integral homology:\n" << integral.render();
      os << "rational homology:\n" << rational.render();
      emit(format == "json" ? integral.to_json() : os.str(), out_path);
      return h1_pres == h1_kernel ? 0 : 1;
    }
    if (*hom_c2) {
      C2LatticeSpec spec = C2LatticeSpec::make(
          c2q, family == "one-panel" ? C2Family::OnePanel : C2Family::TwoPanel);
      std::ostringstream os;
      if (spec.family == C2Family::OnePanel) {
        C2HomologyResult r = c2_homology(spec, max_degree);
        os << "H" << subscript_num(1) << " = " << r.h1.to_string() << "  (abelianization)\n";
        os << "closed form (ℤ/q)⁶ = " << r.h1_closed_form.to_string() << ": "
           << (r.closed_form_agrees ? "agrees" : "DISAGREES with the abelianization") << "\n";
        os << "H" << subscript_num(2) << " = " << r.h2_symbolic << "  (symbolic)\n";
        os << "rational homology:\n" << r.rational.render();
      } else {
        os << "integral tables are stated for the one-panel family; rational homology:\n"
           << c2_rational_homology_table(max_degree).render();
      }
      emit(os.str(), out_path);
      return 0;
    }
    if (*cmd_export) {
      std::ostringstream os;
      if (what == "diffset") {
        os << singer_difference_set(a2opt.q).to_json();
      } else if (what == "plane") {
        os << plane_from_difference_set(singer_difference_set(a2opt.q)).plane.to_json();
      } else if (what == "quadrangle") {
        os << slanted_quadrangle(a2opt.q).to_json();
      } else if (what == "hjelmslev") {
        HjelmslevPlane h = hjelmslev_plane(a2opt.spec());
        os << (format == "dot" ? h.to_dot() : h.to_json());
      } else if (what == "scwol-a2") {
        ComplexOfGroups c = a2_complex_of_groups(a2opt.spec());
        os << c.base.to_dot();
      } else if (what == "scwol-c2") {
        C2LatticeSpec spec = C2LatticeSpec::make(
            a2opt.q, family == "one-panel" ? C2Family::OnePanel : C2Family::TwoPanel);
        os << c2_complex_of_groups(spec).base.to_dot();
      } else if (what == "cover") {
        CoverBall ball = a2_cover_ball(a2opt.spec(), radius, 2);
        os << "{";
        bool first = true;
        for (const auto& [key, value] : ball.counts) {
          if (!first) os << ",";
          first = false;
          os << "\"" << key << "\":" << value;
        }
        os << "}";
      } else {
        std::cerr << "unknown export target: " << what << "\n";
        return 2;
      }
      emit(os.str(), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
