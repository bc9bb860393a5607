#include "singer/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace singer {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ZeroNotFirst: return "ZeroNotFirst";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::MissingTriangleRelation: return "MissingTriangleRelation";
    case ErrorCode::NoValidM: return "NoValidM";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

long max_size_bound() {
  static long bound = [] {
    if (const char* env = std::getenv("SINGER_LATTICE_MAX_SIZE")) {
      long v = std::atol(env);
      if (v > 1) return v;
    }
    return 1L << 20;
  }();
  return bound;
}

long FieldSpec::order() const {
  long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  return q;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return *spec == *other.spec && coeffs == other.coeffs;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
}

long FieldElement::value() const {
  long v = 0;
  for (int i = spec->e - 1; i >= 0; --i) v = v * spec->p + coeffs[i];
  return v;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool factor_prime_power(long n, long& p, int& e) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      return n == 1;
    }
  }
  p = n;
  e = 1;
  return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<long>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, long p) {
  a = poly_trim(std::move(a));
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    long lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool poly_is_irreducible(const Poly& f, long p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long k = 0; k < count; ++k) {
      Poly g(d + 1, 0);
      long t = k;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

void check_same_spec(const FieldElement& a, const FieldElement& b) {
  if (!(*a.spec == *b.spec))
    throw Error(ErrorCode::SpecMismatch, "field elements from different fields");
}

}  // namespace

FieldPtr make_field(long p, int e) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::TooLarge, "exponent must be positive");
  long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > max_size_bound())
      throw Error(ErrorCode::TooLarge, "p^e exceeds the configured size bound");
  }
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->e = e;
  if (e == 1) {
    spec->modulus = {0, 1};  // x
    return spec;
  }
  // Scan non-leading coefficient vectors in integer-value order.
  for (long k = 0;; ++k) {
    Poly f(e + 1, 0);
    long t = k;
    for (int i = 0; i < e; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (t != 0) throw Error(ErrorCode::Internal, "no irreducible polynomial found");
    f[e] = 1;
    if (poly_is_irreducible(f, p)) {
      spec->modulus = f;
      return spec;
    }
  }
}

FieldElement fe_zero(const FieldPtr& f) { return {f, std::vector<long>(f->e, 0)}; }

FieldElement fe_one(const FieldPtr& f) {
  FieldElement x = fe_zero(f);
  x.coeffs[0] = 1;
  return x;
}

FieldElement fe_from_value(const FieldPtr& f, long value) {
  FieldElement x = fe_zero(f);
  for (int i = 0; i < f->e; ++i) {
    x.coeffs[i] = value % f->p;
    value /= f->p;
  }
  if (value != 0) throw Error(ErrorCode::TooLarge, "value out of field range");
  return x;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  FieldElement c = a;
  for (int i = 0; i < a.spec->e; ++i) c.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % a.spec->p;
  return c;
}

FieldElement neg(const FieldElement& a) {
  FieldElement c = a;
  for (long& x : c.coeffs) x = (a.spec->p - x) % a.spec->p;
  return c;
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  Poly prod = poly_mul(a.coeffs, b.coeffs, a.spec->p);
  Poly rem = poly_mod(std::move(prod), a.spec->modulus, a.spec->p);
  FieldElement c = fe_zero(a.spec);
  for (size_t i = 0; i < rem.size(); ++i) c.coeffs[i] = rem[i];
  return c;
}

FieldElement fe_pow(const FieldElement& a, long k) {
  long m = a.spec->order() - 1;  // multiplicative group order
  if (!a.is_zero()) {
    k %= m;
    if (k < 0) k += m;
  } else if (k < 0) {
    throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  }
  FieldElement result = fe_one(a.spec);
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return fe_pow(a, a.spec->order() - 2);
}

long element_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "order of zero");
  FieldElement one = fe_one(a.spec);
  FieldElement x = a;
  long ord = 1;
  while (!(x == one)) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

FieldElement primitive_element(const FieldPtr& f) {
  long q = f->order();
  for (long v = 1; v < q; ++v) {
    FieldElement x = fe_from_value(f, v);
    if (element_order(x) == q - 1) return x;
  }
  throw Error(ErrorCode::Internal, "no primitive element found");
}

SubfieldEmbedding embed_subfield(const FieldPtr& sub, const FieldPtr& big) {
  if (sub->p != big->p || big->e % sub->e != 0)
    throw Error(ErrorCode::DegreeMismatch, "not a subfield: degrees incompatible");
  SubfieldEmbedding emb;
  emb.sub = sub;
  emb.big = big;
  // Root of the subfield modulus inside the big field, smallest by value.
  FieldElement root = fe_zero(big);
  bool found = false;
  for (long v = 0; v < big->order(); ++v) {
    FieldElement x = fe_from_value(big, v);
    FieldElement acc = fe_zero(big);
    FieldElement xp = fe_one(big);
    for (size_t i = 0; i < sub->modulus.size(); ++i) {
      if (sub->modulus[i] != 0) {
        FieldElement c = fe_from_value(big, sub->modulus[i]);
        acc = add(acc, mul(c, xp));
      }
      xp = mul(xp, x);
    }
    if (acc.is_zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::Internal, "subfield modulus has no root upstairs");
  emb.image_values.resize(sub->order());
  for (long v = 0; v < sub->order(); ++v) {
    FieldElement s = fe_from_value(sub, v);
    FieldElement acc = fe_zero(big);
    FieldElement rp = fe_one(big);
    for (int i = 0; i < sub->e; ++i) {
      if (s.coeffs[i] != 0) acc = add(acc, mul(fe_from_value(big, s.coeffs[i]), rp));
      rp = mul(rp, root);
    }
    emb.image_values[v] = acc.value();
  }
  return emb;
}

long SubfieldEmbedding::preimage_value(long big_value) const {
  for (size_t v = 0; v < image_values.size(); ++v)
    if (image_values[v] == big_value) return static_cast<long>(v);
  throw Error(ErrorCode::Internal, "value not in the embedded subfield");
}

FieldElement trace_to_subfield(const FieldElement& a, int k) {
  const FieldPtr& big = a.spec;
  if (k < 1 || big->e % k != 0)
    throw Error(ErrorCode::DegreeMismatch, "extension degree not divisible by k");
  int e = big->e / k;
  long qsub = 1;
  for (int i = 0; i < e; ++i) qsub *= big->p;
  FieldElement tr = fe_zero(big);
  FieldElement x = a;
  for (int i = 0; i < k; ++i) {
    tr = add(tr, x);
    x = fe_pow(x, qsub);  // apply the subfield Frobenius k times in total
  }
  FieldPtr sub = make_field(big->p, e);
  if (e == 1) return fe_from_value(sub, tr.coeffs[0]);
  SubfieldEmbedding emb = embed_subfield(sub, big);
  return fe_from_value(sub, emb.preimage_value(tr.value()));
}

FieldTables build_tables(const FieldPtr& f) {
  long q = f->order();
  if (q > 4096) throw Error(ErrorCode::TooLarge, "field too large for value tables");
  FieldTables t;
  t.q = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  t.negv.resize(q);
  std::vector<FieldElement> elems;
  elems.reserve(q);
  for (long v = 0; v < q; ++v) elems.push_back(fe_from_value(f, v));
  for (long i = 0; i < q; ++i) {
    t.negv[i] = neg(elems[i]).value();
    for (long j = 0; j < q; ++j) {
      t.add[i * q + j] = add(elems[i], elems[j]).value();
      t.mul[i * q + j] = mul(elems[i], elems[j]).value();
    }
  }
  return t;
}

}  // namespace singer
