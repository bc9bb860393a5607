#include "singer/singer_geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace singer {

bool DifferenceSet::contains(long r) const {
  r = ((r % n) + n) % n;
  return std::binary_search(residues.begin(), residues.end(), r);
}

void DifferenceSet::validate() const {
  if (n < 3) throw Error(ErrorCode::InvariantViolation, "modulus too small");
  if (residues.empty() || residues.front() != 0)
    throw Error(ErrorCode::InvariantViolation, "difference set must contain 0");
  if (!std::is_sorted(residues.begin(), residues.end()))
    throw Error(ErrorCode::InvariantViolation, "residues not sorted");
  std::vector<int> count(n, 0);
  for (long d : residues)
    if (d < 0 || d >= n) throw Error(ErrorCode::InvariantViolation, "residue out of range");
  for (long d : residues)
    for (long d2 : residues)
      if (d != d2) ++count[((d - d2) % n + n) % n];
  for (long r = 1; r < n; ++r)
    if (count[r] != 1)
      throw Error(ErrorCode::InvariantViolation,
                  "residue " + std::to_string(r) + " has " + std::to_string(count[r]) +
                      " representations as a difference");
}

std::string DifferenceSet::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["residues"] = residues;
  return j.dump();
}

DifferenceSet singer_difference_set(long q) {
  long p;
  int e;
  if (!factor_prime_power(q, p, e))
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  long n = q * q + q + 1;
  FieldPtr big = make_field(p, 3 * e);
  FieldElement omega = primitive_element(big);
  std::vector<long> raw;
  FieldElement x = fe_one(big);
  for (long i = 0; i < n; ++i) {
    // tr(x) down to GF(q): x + x^q + x^(q^2)
    FieldElement tr = add(add(x, fe_pow(x, q)), fe_pow(x, q * q));
    if (tr.is_zero()) raw.push_back(i);
    x = mul(x, omega);
  }
  if (static_cast<long>(raw.size()) != q + 1)
    throw Error(ErrorCode::Internal, "trace kernel has wrong size");
  long base = raw.front();
  DifferenceSet ds;
  ds.n = n;
  for (long i : raw) ds.residues.push_back(((i - base) % n + n) % n);
  std::sort(ds.residues.begin(), ds.residues.end());
  ds.validate();
  return ds;
}

SingerPlane plane_from_difference_set(const DifferenceSet& delta) {
  delta.validate();
  SingerPlane sp;
  sp.q = static_cast<long>(delta.residues.size()) - 1;
  sp.n = delta.n;
  sp.delta = delta;
  sp.plane.num_points = static_cast<int>(sp.n);
  sp.plane.num_lines = static_cast<int>(sp.n);
  for (long j = 0; j < sp.n; ++j)
    for (long d : delta.residues) sp.plane.flags.emplace_back(static_cast<int>((j + d) % sp.n), static_cast<int>(j));
  std::sort(sp.plane.flags.begin(), sp.plane.flags.end());
  return sp;
}

GroupAction SingerPlane::point_action() const {
  GroupAction a;
  a.group = std::make_shared<CyclicGroup>(n, "sigma");
  a.num_points = static_cast<int>(n);
  long nn = n;
  a.act = [nn](int g, int x) { return static_cast<int>((x + g) % nn); };
  return a;
}

GroupAction SingerPlane::line_action() const { return point_action(); }

std::vector<long> ordered_difference_set(const DifferenceSet& delta,
                                         const std::vector<int>& ordering) {
  size_t k = delta.residues.size();
  if (ordering.size() != k) throw Error(ErrorCode::SpecInvalid, "ordering has wrong length");
  std::vector<char> seen(k, 0);
  for (int idx : ordering) {
    if (idx < 0 || idx >= static_cast<int>(k) || seen[idx])
      throw Error(ErrorCode::SpecInvalid, "ordering is not a permutation");
    seen[idx] = 1;
  }
  if (ordering[0] != 0 || delta.residues[0] != 0)
    throw Error(ErrorCode::ZeroNotFirst, "ordering must send index 0 to residue 0");
  std::vector<long> result;
  result.reserve(k);
  for (int idx : ordering) result.push_back(delta.residues[idx]);
  return result;
}

namespace {

long symplectic_form(const FieldTables& t, const std::array<long, 4>& u,
                     const std::array<long, 4>& v) {
  // h(u,v) = u0 v3 - u3 v0 + u1 v2 - u2 v1
  long s = t.at_mul(u[0], v[3]);
  s = t.at_add(s, t.negv[t.at_mul(u[3], v[0])]);
  s = t.at_add(s, t.at_mul(u[1], v[2]));
  s = t.at_add(s, t.negv[t.at_mul(u[2], v[1])]);
  return s;
}

std::array<long, 4> scale_add(const FieldTables& t, const std::array<long, 4>& u, long lambda,
                              const std::array<long, 4>& v) {
  std::array<long, 4> w{};
  for (int i = 0; i < 4; ++i) w[i] = t.at_add(u[i], t.at_mul(lambda, v[i]));
  return w;
}

}  // namespace

SymplecticQuadrangle symplectic_quadrangle(long q) {
  long p;
  int e;
  if (!factor_prime_power(q, p, e)) throw Error(ErrorCode::NotPrimePower, "q not a prime power");
  FieldPtr field = make_field(p, e);
  FieldTables tab = build_tables(field);
  SymplecticQuadrangle w;
  w.q = q;
  // Projective representatives: first nonzero coordinate equals 1.
  std::map<std::array<long, 4>, int> point_index;
  auto normalize = [&](std::array<long, 4> v) {
    for (int i = 0; i < 4; ++i)
      if (v[i] != 0) {
        long s = fe_pow(fe_from_value(field, v[i]), -1).value();
        for (int k = 0; k < 4; ++k) v[k] = tab.at_mul(s, v[k]);
        return v;
      }
    throw Error(ErrorCode::Internal, "zero vector");
  };
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d) {
          std::array<long, 4> v = {a, b, c, d};
          if (a == 0 && b == 0 && c == 0 && d == 0) continue;
          v = normalize(v);
          if (!point_index.count(v)) {
            point_index[v] = static_cast<int>(w.point_coords.size());
            w.point_coords.push_back(v);
          }
        }
  w.inc.num_points = static_cast<int>(w.point_coords.size());
  // Totally isotropic 2-spaces as sorted member-point lists.
  std::set<std::vector<int>> lines;
  int np = w.inc.num_points;
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      if (symplectic_form(tab, w.point_coords[i], w.point_coords[j]) != 0) continue;
      std::vector<int> members = {j};
      for (long lambda = 0; lambda < q; ++lambda)
        members.push_back(point_index.at(normalize(scale_add(tab, w.point_coords[i], lambda, w.point_coords[j]))));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      lines.insert(members);
    }
  for (const auto& members : lines) {
    int l = w.inc.num_lines++;
    for (int pt : members) w.inc.flags.emplace_back(pt, l);
  }
  std::sort(w.inc.flags.begin(), w.inc.flags.end());
  w.p0 = point_index.at({1, 0, 0, 0});
  w.p1 = point_index.at({0, 0, 0, 1});
  return w;
}

std::array<long, 3> SlantedQuadrangle::point_triple(int point) const {
  long z = point % q;
  long y = (point / q) % q;
  long x = point / (q * q);
  return {x, y, z};
}

int SlantedQuadrangle::point_of_triple(const std::array<long, 3>& t) const {
  return static_cast<int>((t[0] * q + t[1]) * q + t[2]);
}

std::string SlantedQuadrangle::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  j["points"] = nlohmann::json::array();
  for (int pt = 0; pt < inc.num_points; ++pt) {
    auto t = point_triple(pt);
    j["points"].push_back({t[0], t[1], t[2], 1});
  }
  auto per_line = inc.points_on_line();
  j["lines"] = nlohmann::json::array();
  for (int l = 0; l < inc.num_lines; ++l) j["lines"].push_back(per_line[l]);
  j["line_reps"] = line_reps;
  j["rep_labels"] = rep_labels;
  return j.dump(2);
}

SlantedQuadrangle slanted_quadrangle(long q) {
  if (q <= 2) throw Error(ErrorCode::InvalidOrder, "need q > 2");
  SymplecticQuadrangle wq = symplectic_quadrangle(q);
  long p;
  int e;
  factor_prime_power(q, p, e);
  FieldPtr field = make_field(p, e);
  FieldTables tab = build_tables(field);

  SlantedQuadrangle sq;
  sq.q = q;
  sq.inc.num_points = static_cast<int>(q * q * q);
  sq.singer = std::make_shared<HeisenbergGroup>(q);
  sq.base_point = 0;

  // W(q) points surviving the derivation are those with last coordinate != 0.
  auto derived_point = [&](const std::array<long, 4>& v) -> int {
    if (v[3] == 0) return -1;
    long s = fe_pow(fe_from_value(field, v[3]), -1).value();
    return static_cast<int>((tab.at_mul(s, v[0]) * q + tab.at_mul(s, v[1])) * q +
                            tab.at_mul(s, v[2]));
  };

  std::map<std::vector<int>, int> line_of_members;
  auto per_line = wq.inc.points_on_line();
  for (int l = 0; l < wq.inc.num_lines; ++l) {
    bool through_p0 = false;
    std::vector<int> members;
    for (int pt : per_line[l]) {
      if (pt == wq.p0) {
        through_p0 = true;
        break;
      }
      int dp = derived_point(wq.point_coords[pt]);
      if (dp >= 0) members.push_back(dp);
    }
    if (through_p0) continue;
    if (static_cast<long>(members.size()) != q)
      throw Error(ErrorCode::Internal, "derived line has wrong size");
    std::sort(members.begin(), members.end());
    int idx = sq.inc.num_lines++;
    line_of_members[members] = idx;
    for (int pt : members) sq.inc.flags.emplace_back(pt, idx);
    sq.inc.line_labels.push_back("w" + std::to_string(l));
  }
  // Slanted lines: fibers over (y, z).
  for (long y = 0; y < q; ++y)
    for (long z = 0; z < q; ++z) {
      std::vector<int> members;
      for (long c = 0; c < q; ++c) members.push_back(static_cast<int>((c * q + y) * q + z));
      int idx = sq.inc.num_lines++;
      line_of_members[members] = idx;
      for (int pt : members) sq.inc.flags.emplace_back(pt, idx);
      sq.inc.line_labels.push_back("slant(" + std::to_string(y) + "," + std::to_string(z) + ")");
    }
  std::sort(sq.inc.flags.begin(), sq.inc.flags.end());

  auto heis = sq.singer;
  sq.action.group = heis;
  sq.action.num_points = sq.inc.num_points;
  long qq = q;
  sq.action.act = [heis, qq](int g, int pt) {
    std::array<long, 3> t = {pt / (qq * qq), (pt / qq) % qq, pt % qq};
    auto u = heis->apply_to_point(g, t);
    return static_cast<int>((u[0] * qq + u[1]) * qq + u[2]);
  };

  // Line representatives through the base point (0,0,0,1): the slanted fiber
  // l0 over (0,0) and, for [a:b] in P^1, the isotropic line spanned with
  // (0, b, -a, 0).
  {
    std::vector<int> members;
    for (long c = 0; c < q; ++c) members.push_back(static_cast<int>(c * q * q));
    sq.line_reps.push_back(line_of_members.at(members));
    sq.rep_labels.push_back("l0");
  }
  std::vector<std::pair<long, long>> proj_line;  // [a:b]
  proj_line.emplace_back(1, 0);
  for (long a = 0; a < q; ++a) proj_line.emplace_back(a, 1);
  for (auto [a, b] : proj_line) {
    std::vector<int> members;
    for (long nu = 0; nu < q; ++nu) {
      long yy = tab.at_mul(nu, b);
      long zz = tab.negv[tab.at_mul(nu, a)];
      members.push_back(static_cast<int>((0 * q + yy) * q + zz));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    sq.line_reps.push_back(line_of_members.at(members));
    sq.rep_labels.push_back("l[" + std::to_string(a) + ":" + std::to_string(b) + "]");
  }

  // Setwise line stabilizers under the Singer action.
  auto line_points = sq.inc.points_on_line();
  for (size_t r = 0; r < sq.line_reps.size(); ++r) {
    const std::vector<int>& members = line_points[sq.line_reps[r]];
    std::set<int> member_set(members.begin(), members.end());
    std::vector<int> stab;
    for (int g = 0; g < heis->size(); ++g) {
      bool fixes = true;
      for (int pt : members)
        if (!member_set.count(sq.action.act(g, pt))) {
          fixes = false;
          break;
        }
      if (fixes) stab.push_back(g);
    }
    sq.stabilizers.push_back(stab);
  }

  // Stabilizer generating words over the Singer presentation generators.
  GroupPresentation pres = heis->presentation();
  auto letters = [&](int gen_index, long reps) {
    Word w;
    for (long i = 0; i < reps; ++i) w.push_back(gen_index + 1);
    return w;
  };
  for (size_t r = 0; r < sq.line_reps.size(); ++r) {
    std::vector<Word> words;
    if (r == 0) {
      // l0 stabilizer {z(f)}.
      if (e == 1) {
        words.push_back({3});  // z = z(2), generates all z(f) for odd q; q even is e > 1
      } else {
        for (int i = 0; i < e; ++i) words.push_back({2 * e + i + 1});
      }
    } else {
      auto [a, b] = proj_line[r - 1];
      if (e == 1) {
        // x^a y^b z^(-ab/2)
        long inv2 = fe_pow(fe_from_value(field, 2 % q), -1).value();
        long zexp = tab.at_mul(tab.negv[tab.at_mul(a, b)], inv2);
        Word w = letters(0, a);
        Word wy = letters(1, b);
        w.insert(w.end(), wy.begin(), wy.end());
        Word wz = letters(2, zexp);
        w.insert(w.end(), wz.begin(), wz.end());
        words.push_back(w);
      } else {
        // Basis elements M(beta_i) = x(beta_i a) y(beta_i b) z(-beta_i^2 a b).
        for (int i = 0; i < e; ++i) {
          long beta = fe_from_value(field, 1).value();
          long bv = 1;
          for (int k = 0; k < i; ++k) bv *= p;
          beta = bv;
          long vx = tab.at_mul(beta, a);
          long vy = tab.at_mul(beta, b);
          long vz = tab.negv[tab.at_mul(tab.at_mul(beta, beta), tab.at_mul(a, b))];
          Word w;
          FieldElement fx = fe_from_value(field, vx);
          FieldElement fy = fe_from_value(field, vy);
          FieldElement fz = fe_from_value(field, vz);
          for (int k = 0; k < e; ++k)
            for (long rep = 0; rep < fx.coeffs[k]; ++rep) w.push_back(k + 1);
          for (int k = 0; k < e; ++k)
            for (long rep = 0; rep < fy.coeffs[k]; ++rep) w.push_back(e + k + 1);
          for (int k = 0; k < e; ++k)
            for (long rep = 0; rep < fz.coeffs[k]; ++rep) w.push_back(2 * e + k + 1);
          words.push_back(w);
        }
      }
    }
    // The words must generate exactly the computed stabilizer.
    std::vector<int> gens;
    for (const Word& w : words) gens.push_back(heis->eval_word(w));
    std::vector<int> generated = heis->subgroup_closure(gens);
    std::vector<int> stab_sorted = sq.stabilizers[r];
    std::sort(stab_sorted.begin(), stab_sorted.end());
    if (generated != stab_sorted)
      throw Error(ErrorCode::Internal, "stabilizer words do not generate the stabilizer");
    sq.stabilizer_words.push_back(words);
  }
  return sq;
}

}  // namespace singer
