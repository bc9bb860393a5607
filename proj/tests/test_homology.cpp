#include <doctest.h>

#include "singer/homology.hpp"
#include "singer/lattice.hpp"

using namespace singer;

namespace {

mpz_class det(const IntMatrix& m) {
  REQUIRE(m.rows == m.cols);
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m.at(0, 0);
  mpz_class result = 0;
  for (int j = 0; j < m.cols; ++j) {
    IntMatrix minor(m.rows - 1, m.cols - 1);
    for (int i = 1; i < m.rows; ++i)
      for (int k = 0, col = 0; k < m.cols; ++k) {
        if (k == j) continue;
        minor.at(i - 1, col++) = m.at(i, k);
      }
    mpz_class term = m.at(0, j) * det(minor);
    result += (j % 2 == 0) ? term : -term;
  }
  return result;
}

void check_snf(const IntMatrix& m) {
  SNFResult r = smith_normal_form(m);
  CHECK(r.S.multiply(m).multiply(r.T) == r.D);
  CHECK(abs(det(r.S)) == 1);
  CHECK(abs(det(r.T)) == 1);
  auto diag = r.diagonal();
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0) CHECK(diag[i + 1] == 0);
    else CHECK(diag[i + 1] % diag[i] == 0);
  }
  for (int i = 0; i < r.D.rows; ++i)
    for (int j = 0; j < r.D.cols; ++j)
      if (i != j) CHECK(r.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form basics") {
  IntMatrix id3 = IntMatrix::identity(3);
  SNFResult r = smith_normal_form(id3);
  CHECK(r.diagonal() == std::vector<mpz_class>{1, 1, 1});
  check_snf(id3);

  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  SNFResult r2 = smith_normal_form(m);
  CHECK(r2.diagonal() == std::vector<mpz_class>{2, 4});  // |det| = 8, gcd 2
  check_snf(m);

  IntMatrix zero(3, 2);
  CHECK(smith_normal_form(zero).diagonal() == std::vector<mpz_class>{0, 0});

  // A few dense matrices exercise the divisibility fix.
  IntMatrix m3(3, 3);
  int vals[] = {6, 10, 15, 4, 9, 25, 12, 20, 30};
  for (int i = 0; i < 9; ++i) m3.a[i] = vals[i];
  check_snf(m3);
  IntMatrix m4(3, 4);
  int vals4[] = {2, 0, 4, 6, 0, 3, 9, 12, 5, 7, 11, 13};
  for (int i = 0; i < 12; ++i) m4.a[i] = vals4[i];
  check_snf(m4);
}

TEST_CASE("abelianization golden values") {
  A2LatticeSpec gamma2 = A2LatticeSpec::cyclic_default(2);
  AbelianGroup h1 = abelianization(a2_presentation(gamma2));
  CHECK(h1 == AbelianGroup{0, {7, 7}});

  DifferenceSet ds{7, {0, 1, 3}};
  std::vector<int> identity = {0, 1, 2};
  std::vector<int> swapped = {0, 2, 1};
  A2LatticeSpec gamma2p = A2LatticeSpec::cyclic(2, {ds, ds, ds}, {swapped, identity, identity});
  CHECK(abelianization(a2_presentation(gamma2p)) == AbelianGroup{0, {7}});

  A2LatticeSpec gamma3 = A2LatticeSpec::cyclic_default(3);
  CHECK(abelianization(a2_presentation(gamma3)) == AbelianGroup{0, {13, 13}});
}

TEST_CASE("kernel mod n with enumeration oracle") {
  IntMatrix d2(2, 3);
  d2.at(0, 0) = d2.at(0, 1) = d2.at(0, 2) = 1;
  d2.at(1, 0) = d2.at(1, 1) = d2.at(1, 2) = 3;
  CHECK(kernel_mod_n(d2, 7) == AbelianGroup{0, {7, 7}});

  IntMatrix zero(1, 3);
  CHECK(kernel_mod_n(zero, 7) == AbelianGroup{0, {7, 7, 7}});

  IntMatrix d3(3, 3);
  for (int j = 0; j < 3; ++j) {
    d3.at(0, j) = 1;
    d3.at(1, j) = 3;
    d3.at(2, j) = 9;
  }
  CHECK(kernel_mod_n(d3, 13) == AbelianGroup{0, {13, 13}});
  CHECK_THROWS_AS(kernel_mod_n(d3, 1), Error);
}

TEST_CASE("triangle-type homology tables") {
  A2LatticeSpec gamma2 = A2LatticeSpec::cyclic_default(2);
  HomologyTable t = a2_homology_table(gamma2, 5);
  CHECK(std::get<AbelianGroup>(t.entries.at(0)) == AbelianGroup{1, {}});
  CHECK(std::get<AbelianGroup>(t.entries.at(1)) == AbelianGroup{0, {7, 7}});
  CHECK(std::get<AbelianGroup>(t.entries.at(2)) == AbelianGroup{2, {}});
  CHECK(std::get<AbelianGroup>(t.entries.at(3)) == AbelianGroup{0, {7, 7, 7}});
  CHECK(std::get<AbelianGroup>(t.entries.at(4)) == AbelianGroup{0, {}});
  CHECK(std::get<AbelianGroup>(t.entries.at(5)) == AbelianGroup{0, {7, 7, 7}});

  // The two routes to H1 agree.
  CHECK(std::get<AbelianGroup>(t.entries.at(1)) == abelianization(a2_presentation(gamma2)));

  A2LatticeSpec gamma3 = A2LatticeSpec::cyclic_default(3);
  HomologyTable r = a2_rational_homology_table(gamma3, 4);
  CHECK(r.rational);
  CHECK(std::get<AbelianGroup>(r.entries.at(0)) == AbelianGroup{1, {}});
  CHECK(std::get<AbelianGroup>(r.entries.at(2)) == AbelianGroup{3, {}});
  CHECK(std::get<AbelianGroup>(r.entries.at(1)) == AbelianGroup{0, {}});
  CHECK(std::get<AbelianGroup>(r.entries.at(3)) == AbelianGroup{0, {}});
}

TEST_CASE("quadrangle-type homology") {
  C2LatticeSpec one = C2LatticeSpec::make(3, C2Family::OnePanel);
  C2HomologyResult r = c2_homology(one, 4);
  // Abelianization of the one-panel presentation: the Singer group has
  // S^ab = (Z/3)^2 (the commutator z dies), so H1 = (Z/3)^4. The stated
  // closed form (Z/q)^6 disagrees and the toolkit flags that.
  CHECK(r.h1 == AbelianGroup{0, {3, 3, 3, 3}});
  CHECK(r.h1_closed_form == AbelianGroup{0, {3, 3, 3, 3, 3, 3}});
  CHECK_FALSE(r.closed_form_agrees);
  CHECK(r.h2_symbolic.find("H₂(S)") != std::string::npos);
  CHECK(std::get<AbelianGroup>(r.rational.entries.at(0)) == AbelianGroup{1, {}});
  for (int d = 1; d <= 4; ++d)
    CHECK(std::get<AbelianGroup>(r.rational.entries.at(d)) == AbelianGroup{0, {}});

  C2LatticeSpec two = C2LatticeSpec::make(3, C2Family::TwoPanel);
  CHECK_THROWS_AS(c2_homology(two, 2), Error);  // FamilyMismatch

  // q = 4: the abelianization is elementary abelian of rank 12.
  C2LatticeSpec four = C2LatticeSpec::make(4, C2Family::OnePanel);
  C2HomologyResult r4 = c2_homology(four, 2);
  CHECK(r4.h1 == AbelianGroup{0, std::vector<mpz_class>(12, 2)});
  CHECK_FALSE(r4.closed_form_agrees);
}

TEST_CASE("abelian group formatting") {
  CHECK(AbelianGroup{0, {7, 7}}.to_string() == "(ℤ/7)²");
  CHECK(AbelianGroup{1, {}}.to_string() == "ℤ");
  CHECK(AbelianGroup{2, {}}.to_string(true) == "ℚ²");
  CHECK(AbelianGroup{0, {}}.to_string() == "0");
  CHECK(AbelianGroup{1, {2, 4}}.to_string() == "ℤ ⊕ ℤ/2 ⊕ ℤ/4");
}
