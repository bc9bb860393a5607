#pragma once

#include <memory>
#include <vector>

#include "singer/common.hpp"

namespace singer {

// GF(p^e) in a polynomial basis: elements are coefficient vectors of length e
// over GF(p), reduced modulo a fixed monic irreducible polynomial.
struct FieldSpec {
  long p = 0;
  int e = 0;
  // Monic modulus of degree e, coefficient of x^i at index i (length e+1).
  std::vector<long> modulus;

  long order() const;  // p^e
  bool operator==(const FieldSpec& other) const = default;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

struct FieldElement {
  FieldPtr spec;
  std::vector<long> coeffs;  // length e, entries in [0, p)

  bool operator==(const FieldElement& other) const;
  bool is_zero() const;
  // Value in [0, p^e): sum coeffs[i] * p^i. Orders elements canonically.
  long value() const;
};

bool is_prime(long n);
// Factors n = p^e with p prime; returns false if n is not a prime power >= 2.
bool factor_prime_power(long n, long& p, int& e);

// Smallest monic irreducible polynomial of degree e over GF(p), where
// polynomials are ordered by the integer value of their non-leading
// coefficient vector (low-degree coefficients least significant). For e = 1
// the modulus is x.
FieldPtr make_field(long p, int e);

FieldElement fe_zero(const FieldPtr& f);
FieldElement fe_one(const FieldPtr& f);
FieldElement fe_from_value(const FieldPtr& f, long value);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement fe_pow(const FieldElement& a, long k);

// Multiplicative order; a must be nonzero.
long element_order(const FieldElement& a);

// Smallest element (by value) of multiplicative order p^e - 1.
FieldElement primitive_element(const FieldPtr& f);

// Trace from GF(p^(e*k)) down the k-step Frobenius tower to GF(p^e):
// a + a^(p^e) + ... + a^((p^e)^(k-1)), returned as an element of the
// canonical GF(p^e).
FieldElement trace_to_subfield(const FieldElement& a, int k);

// Deterministic embedding of the canonical GF(p^e) into a field containing
// it, realized by the smallest root of the subfield modulus.
struct SubfieldEmbedding {
  FieldPtr sub;
  FieldPtr big;
  std::vector<long> image_values;  // image_values[v] = value of embedded v

  // Inverse lookup; throws Internal if not in the image.
  long preimage_value(long big_value) const;
};

SubfieldEmbedding embed_subfield(const FieldPtr& sub, const FieldPtr& big);

// Value-level arithmetic tables for small fields (order <= 4096); used by the
// matrix groups.
struct FieldTables {
  long q = 0;
  std::vector<long> add;  // q*q
  std::vector<long> mul;  // q*q
  std::vector<long> negv;
  long at_add(long a, long b) const { return add[a * q + b]; }
  long at_mul(long a, long b) const { return mul[a * q + b]; }
};

FieldTables build_tables(const FieldPtr& f);

}  // namespace singer
