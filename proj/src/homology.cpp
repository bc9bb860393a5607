#include "singer/homology.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "singer/lattice.hpp"

namespace singer {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols != other.rows) throw Error(ErrorCode::Internal, "matrix shape mismatch");
  IntMatrix out(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

std::vector<mpz_class> SNFResult::diagonal() const {
  std::vector<mpz_class> d;
  for (int i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
  return d;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const mpz_class& c) {
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) += c * m.at(src, j);
}

void add_col_multiple(IntMatrix& m, int dst, int src, const mpz_class& c) {
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) += c * m.at(i, src);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult r;
  r.D = m;
  r.S = IntMatrix::identity(m.rows);
  r.T = IntMatrix::identity(m.cols);
  IntMatrix& D = r.D;
  const int k = std::min(m.rows, m.cols);

  auto diagonalize = [&]() {
    for (int t = 0; t < k; ++t) {
      for (;;) {
        // Smallest nonzero entry of the trailing submatrix as pivot.
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < D.rows; ++i)
          for (int j = t; j < D.cols; ++j) {
            if (D.at(i, j) == 0) continue;
            mpz_class v = abs(D.at(i, j));
            if (pi < 0 || v < best) {
              best = v;
              pi = i;
              pj = j;
            }
          }
        if (pi < 0) return;  // trailing submatrix is zero
        swap_rows(D, t, pi);
        swap_rows(r.S, t, pi);
        swap_cols(D, t, pj);
        swap_cols(r.T, t, pj);
        if (D.at(t, t) < 0) {
          negate_row(D, t);
          negate_row(r.S, t);
        }
        bool clean = true;
        for (int i = t + 1; i < D.rows; ++i) {
          if (D.at(i, t) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
          add_row_multiple(D, i, t, -q);
          add_row_multiple(r.S, i, t, -q);
          if (D.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < D.cols; ++j) {
          if (D.at(t, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
          add_col_multiple(D, j, t, -q);
          add_col_multiple(r.T, j, t, -q);
          if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Row and column of the pivot are clear apart from the pivot itself.
        bool zero_elsewhere = true;
        for (int i = t + 1; i < D.rows && zero_elsewhere; ++i)
          if (D.at(i, t) != 0) zero_elsewhere = false;
        for (int j = t + 1; j < D.cols && zero_elsewhere; ++j)
          if (D.at(t, j) != 0) zero_elsewhere = false;
        if (zero_elsewhere) break;
      }
    }
  };

  diagonalize();
  // Enforce the divisibility chain.
  for (int guard = 0; guard < 10000; ++guard) {
    bool fixed = true;
    for (int i = 0; i + 1 < k; ++i) {
      const mpz_class& a = D.at(i, i);
      const mpz_class& b = D.at(i + 1, i + 1);
      if (a == 0 && b != 0) {
        swap_rows(D, i, i + 1);
        swap_rows(r.S, i, i + 1);
        swap_cols(D, i, i + 1);
        swap_cols(r.T, i, i + 1);
        fixed = false;
      } else if (a != 0 && b % a != 0) {
        add_col_multiple(D, i, i + 1, 1);
        add_col_multiple(r.T, i, i + 1, 1);
        diagonalize();
        fixed = false;
      }
    }
    if (fixed) break;
    if (guard == 9999) throw Error(ErrorCode::Internal, "divisibility fix did not converge");
  }
  return r;
}

mpz_class AbelianGroup::torsion_order() const {
  mpz_class o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

namespace {

std::string superscript_num(long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string AbelianGroup::to_string(bool rational) const {
  const char* ring = rational ? "ℚ" : "ℤ";  // Q : Z
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank > 0) {
    std::string s = ring;
    if (rank > 1) s += superscript_num(rank);
    parts.push_back(s);
  }
  size_t i = 0;
  while (i < torsion.size()) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    long count = static_cast<long>(j - i);
    std::string factor = std::string("ℤ/") + torsion[i].get_str();
    std::string s = count > 1 ? "(" + factor + ")" + superscript_num(count) : factor;
    parts.push_back(s);
    i = j;
  }
  std::string out;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (p) out += " ⊕ ";
    out += parts[p];
  }
  return out;
}

std::string AbelianGroup::to_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["torsion"] = nlohmann::json::array();
  for (const auto& d : torsion) j["torsion"].push_back(d.get_str());
  return j.dump();
}

AbelianGroup abelianization(const Presentation& pres) {
  const int g = static_cast<int>(pres.gens.size());
  IntMatrix m(static_cast<int>(pres.relators.size()), g);
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (int letter : pres.relators[r]) m.at(static_cast<int>(r), std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  SNFResult snf = smith_normal_form(m);
  AbelianGroup a;
  int nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) a.torsion.push_back(d);
  }
  a.rank = g - nonzero;
  std::sort(a.torsion.begin(), a.torsion.end());
  return a;
}

AbelianGroup kernel_mod_n(const IntMatrix& m, long n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "modulus must be >= 2");
  SNFResult snf = smith_normal_form(m);
  std::vector<mpz_class> invariants;
  auto diag = snf.diagonal();
  for (const auto& d : diag) {
    mpz_class g;
    mpz_class nn = n;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), nn.get_mpz_t());
    if (g > 1) invariants.push_back(g);
  }
  for (int extra = 0; extra < m.cols - std::min(m.rows, m.cols); ++extra) invariants.push_back(n);
  std::sort(invariants.begin(), invariants.end());
  AbelianGroup result;
  result.torsion = invariants;

  // Exhaustive oracle for small instances.
  double total = 1;
  for (int c = 0; c < m.cols; ++c) total *= static_cast<double>(n);
  if (total <= 1e5 && m.cols > 0) {
    std::vector<long> mm(static_cast<size_t>(m.rows) * m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        mpz_class red = m.at(i, j) % n;
        if (red < 0) red += n;
        mm[static_cast<size_t>(i) * m.cols + j] = red.get_si();
      }
    long count = 0;
    long exponent = 1;
    std::vector<long> x(m.cols, 0);
    for (;;) {
      bool in_kernel = true;
      for (int i = 0; i < m.rows && in_kernel; ++i) {
        long s = 0;
        for (int j = 0; j < m.cols; ++j) s = (s + mm[static_cast<size_t>(i) * m.cols + j] * x[j]) % n;
        if (s % n != 0) in_kernel = false;
      }
      if (in_kernel) {
        ++count;
        long ord = 1;
        for (int j = 0; j < m.cols; ++j) {
          long g = std::__gcd(x[j], n);
          long o = n / (g == 0 ? n : g);
          ord = ord / std::__gcd(ord, o) * o;
        }
        exponent = exponent / std::__gcd(exponent, ord) * ord;
      }
      int pos = 0;
      while (pos < m.cols && ++x[pos] == n) x[pos++] = 0;
      if (pos == m.cols) break;
    }
    mpz_class expected_order = result.torsion_order();
    mpz_class expected_exponent = result.torsion.empty() ? 1 : result.torsion.back();
    if (expected_order != count || expected_exponent != exponent)
      throw Error(ErrorCode::Internal, "kernel_mod_n disagrees with exhaustive enumeration");
  }
  return result;
}

std::string HomologyTable::render() const {
  std::ostringstream os;
  static const char* subs[] = {"₀", "₁", "₂", "₃", "₄",
                               "₅", "₆", "₇", "₈", "₉"};
  for (const auto& [deg, entry] : entries) {
    std::string sub;
    for (char c : std::to_string(deg)) sub += subs[c - '0'];
    os << "H" << sub << " = ";
    if (std::holds_alternative<AbelianGroup>(entry))
      os << std::get<AbelianGroup>(entry).to_string(rational);
    else
      os << std::get<std::string>(entry);
    os << "\n";
  }
  if (!eventual.empty()) os << eventual << "\n";
  return os.str();
}

std::string HomologyTable::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [deg, entry] : entries) {
    nlohmann::json e;
    e["degree"] = deg;
    if (std::holds_alternative<AbelianGroup>(entry)) {
      const AbelianGroup& g = std::get<AbelianGroup>(entry);
      nlohmann::json gj;
      gj["rank"] = g.rank;
      gj["torsion"] = nlohmann::json::array();
      for (const auto& d : g.torsion) gj["torsion"].push_back(d.get_str());
      e["group"] = gj;
    } else {
      e["symbolic"] = std::get<std::string>(entry);
    }
    j.push_back(e);
  }
  return j.dump(2);
}

IntMatrix a2_exponent_matrix(const A2LatticeSpec& spec) {
  if (!spec.cyclic()) throw Error(ErrorCode::NotCyclic, "exponent matrix needs a cyclic spec");
  const long q = spec.q;
  IntMatrix m(static_cast<int>(q), 3);
  for (long j = 1; j <= q; ++j)
    for (int alpha = 0; alpha < 3; ++alpha)
      m.at(static_cast<int>(j - 1), alpha) = spec.data[alpha].ordered_residues[j];
  return m;
}

HomologyTable a2_homology_table(const A2LatticeSpec& spec, int max_degree) {
  const long n = spec.q * spec.q + spec.q + 1;
  HomologyTable t;
  t.entries[0] = AbelianGroup{1, {}};
  t.entries[1] = kernel_mod_n(a2_exponent_matrix(spec), n);
  if (max_degree >= 2) t.entries[2] = AbelianGroup{spec.q, {}};
  AbelianGroup odd{0, std::vector<mpz_class>(3, n)};
  for (int d = 3; d <= max_degree; ++d)
    t.entries[d] = (d % 2 == 1) ? odd : AbelianGroup{0, {}};
  t.eventual = "degree j > " + std::to_string(std::max(max_degree, 2)) + ": " +
               odd.to_string() + " for odd j, 0 for even j";
  return t;
}

HomologyTable a2_rational_homology_table(const A2LatticeSpec& spec, int max_degree) {
  HomologyTable t;
  t.rational = true;
  t.entries[0] = AbelianGroup{1, {}};
  for (int d = 1; d <= max_degree; ++d)
    t.entries[d] = (d == 2) ? AbelianGroup{spec.q, {}} : AbelianGroup{0, {}};
  t.eventual = "degree j > " + std::to_string(max_degree) + ": 0";
  return t;
}

HomologyTable c2_rational_homology_table(int max_degree) {
  HomologyTable t;
  t.rational = true;
  t.entries[0] = AbelianGroup{1, {}};
  for (int d = 1; d <= max_degree; ++d) t.entries[d] = AbelianGroup{0, {}};
  t.eventual = "degree j > " + std::to_string(max_degree) + ": 0";
  return t;
}

C2HomologyResult c2_homology(const C2LatticeSpec& spec, int max_degree) {
  if (spec.family != C2Family::OnePanel)
    throw Error(ErrorCode::FamilyMismatch,
                "integral formulas are stated for the one-panel family only");
  C2HomologyResult r;
  r.h1 = abelianization(c2_presentation(spec));
  r.h1_closed_form = AbelianGroup{0, std::vector<mpz_class>(6, spec.q)};
  r.closed_form_agrees = r.h1 == r.h1_closed_form;
  r.h2_symbolic = "H₂(S) ⊕ H₂(S')";
  r.rational = c2_rational_homology_table(max_degree);
  return r;
}

}  // namespace singer
