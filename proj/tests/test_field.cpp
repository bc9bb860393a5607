#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singer/field.hpp"

using namespace singer;

TEST_CASE("modulus selection") {
  CHECK(make_field(2, 1)->modulus == std::vector<long>{0, 1});
  CHECK(make_field(2, 2)->modulus == std::vector<long>{1, 1, 1});
  // Exhaustive irreducibility scan pins these.
  CHECK(make_field(3, 3)->modulus == std::vector<long>{1, 2, 0, 1});
  CHECK(make_field(2, 3)->modulus == std::vector<long>{1, 1, 0, 1});
  CHECK_THROWS_AS(make_field(4, 1), Error);
  CHECK_THROWS_AS(make_field(2, 64), Error);  // beyond the size bound
}

TEST_CASE("arithmetic examples") {
  auto f4 = make_field(2, 2);
  FieldElement x = fe_from_value(f4, 2);       // x
  FieldElement x1 = fe_from_value(f4, 3);      // x + 1
  CHECK(mul(x, x1) == fe_one(f4));             // x^2 + x = 1 mod x^2+x+1
  for (long v = 0; v < 4; ++v) CHECK(mul(fe_from_value(f4, v), fe_one(f4)).value() == v);

  auto f7 = make_field(7, 1);
  CHECK(inv(fe_from_value(f7, 3)).value() == 5);
  // Brute-force scan oracle for the inverse.
  for (long v = 1; v < 7; ++v) {
    long found = -1;
    for (long w = 1; w < 7; ++w)
      if (v * w % 7 == 1) found = w;
    CHECK(inv(fe_from_value(f7, v)).value() == found);
  }
  CHECK_THROWS_AS(inv(fe_zero(f7)), Error);

  auto f8 = make_field(2, 3);
  CHECK_THROWS_AS(add(fe_one(f7), fe_one(f8)), Error);  // SpecMismatch
}

TEST_CASE("field axioms exhaustively on small fields") {
  for (auto [p, e] : {std::pair<long, int>{2, 3}, {3, 2}, {2, 4}, {5, 1}}) {
    auto f = make_field(p, e);
    long q = f->order();
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        FieldElement fa = fe_from_value(f, a), fb = fe_from_value(f, b);
        CHECK(add(fa, fb) == add(fb, fa));
        CHECK(mul(fa, fb) == mul(fb, fa));
        for (long c = 0; c < q; ++c) {
          FieldElement fc = fe_from_value(f, c);
          CHECK(add(add(fa, fb), fc) == add(fa, add(fb, fc)));
          CHECK(mul(mul(fa, fb), fc) == mul(fa, mul(fb, fc)));
          CHECK(mul(fa, add(fb, fc)) == add(mul(fa, fb), mul(fa, fc)));
        }
        if (a != 0) CHECK(mul(fa, inv(fa)) == fe_one(f));
      }
  }
}

TEST_CASE("primitive elements") {
  CHECK(primitive_element(make_field(7, 1)).value() == 3);
  // Brute-force order scan agrees.
  {
    auto f7 = make_field(7, 1);
    long smallest = -1;
    for (long v = 2; v < 7 && smallest < 0; ++v)
      if (element_order(fe_from_value(f7, v)) == 6) smallest = v;
    CHECK(smallest == 3);
  }
  CHECK(primitive_element(make_field(2, 1)).value() == 1);
  auto f8 = make_field(2, 3);
  FieldElement omega = primitive_element(f8);
  CHECK(omega.value() == 2);  // x
  CHECK(element_order(omega) == 7);
  for (auto [p, e] : {std::pair<long, int>{2, 2}, {3, 2}, {5, 1}, {2, 4}}) {
    auto f = make_field(p, e);
    CHECK(element_order(primitive_element(f)) == f->order() - 1);
  }
}

TEST_CASE("trace to subfield") {
  auto f8 = make_field(2, 3);
  CHECK(trace_to_subfield(fe_zero(f8), 3).is_zero());
  // x + x^2 + x^4 mod x^3+x+1 reduces to 0 (polynomial oracle).
  CHECK(trace_to_subfield(fe_from_value(f8, 2), 3).value() == 0);
  CHECK(trace_to_subfield(fe_one(f8), 3).value() == 1);  // 1 + 1 + 1
  CHECK_THROWS_AS(trace_to_subfield(fe_one(f8), 2), Error);  // DegreeMismatch

  // Additivity and Frobenius invariance of the big-field trace sum.
  auto f64 = make_field(2, 6);
  long qsub = 4;
  for (long a = 0; a < 64; a += 7)
    for (long b = 0; b < 64; b += 5) {
      FieldElement fa = fe_from_value(f64, a), fb = fe_from_value(f64, b);
      FieldElement ta = trace_to_subfield(fa, 3);
      FieldElement tb = trace_to_subfield(fb, 3);
      CHECK(trace_to_subfield(add(fa, fb), 3) == add(ta, tb));
      // The raw trace value is fixed by y -> y^(p^e).
      FieldElement raw = add(add(fa, fe_pow(fa, qsub)), fe_pow(fa, qsub * qsub));
      CHECK(fe_pow(raw, qsub) == raw);
    }
}
