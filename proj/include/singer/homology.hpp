#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "singer/presentation.hpp"

namespace singer {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static IntMatrix identity(int n);
  IntMatrix multiply(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
};

struct SNFResult {
  IntMatrix S;     // rows x rows, unimodular
  IntMatrix D;     // diagonal with divisibility chain
  IntMatrix T;     // cols x cols, unimodular
  std::vector<mpz_class> diagonal() const;
};

// S * M * T = D, exact arithmetic.
SNFResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  long rank = 0;
  std::vector<mpz_class> torsion;  // d1 | d2 | ..., all > 1

  bool operator==(const AbelianGroup& other) const = default;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  mpz_class torsion_order() const;
  std::string to_string(bool rational = false) const;  // e.g. "(Z/7)^2" rendered with unicode
  std::string to_json() const;
};

AbelianGroup abelianization(const Presentation& pres);

// Kernel of the reduction of M acting (Z/n)^cols -> (Z/n)^rows; verified by
// exhaustive enumeration whenever n^cols <= 1e5.
AbelianGroup kernel_mod_n(const IntMatrix& m, long n);

struct HomologyTable {
  bool rational = false;
  // degree -> group or symbolic entry
  std::map<int, std::variant<AbelianGroup, std::string>> entries;
  std::string eventual;  // description of degrees beyond the table

  std::string render() const;
  std::string to_json() const;
};

struct A2LatticeSpec;
struct C2LatticeSpec;

// The relator-exponent matrix with rows (delta1(j), delta2(j), delta3(j)),
// j = 1..q (the j = 0 row vanishes under the normalization).
IntMatrix a2_exponent_matrix(const A2LatticeSpec& spec);

// Closed-form integral and rational tables; degree-1 entry from kernel_mod_n.
HomologyTable a2_homology_table(const A2LatticeSpec& spec, int max_degree);
HomologyTable a2_rational_homology_table(const A2LatticeSpec& spec, int max_degree);

struct C2HomologyResult {
  AbelianGroup h1;                  // from abelianization of the presentation
  AbelianGroup h1_closed_form;      // (Z/q)^6 as stated
  bool closed_form_agrees = false;
  std::string h2_symbolic;          // reported symbolically
  HomologyTable rational;
};

C2HomologyResult c2_homology(const C2LatticeSpec& spec, int max_degree);
HomologyTable c2_rational_homology_table(int max_degree);

}  // namespace singer
