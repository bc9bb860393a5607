#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singer/field.hpp"

namespace singer {

// A word over the generators of a presentation: letters are +/-(index+1).
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word free_reduce(const Word& w);

struct GroupPresentation {
  std::vector<std::string> names;
  std::vector<int> gen_elements;  // element index of each generator
  std::vector<Word> relators;
};

// Finite group with canonically enumerated elements. Element handles are
// indices into the canonical enumeration.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual int size() const = 0;
  virtual int mult(int a, int b) const = 0;
  virtual int inverse(int a) const = 0;
  virtual int identity() const = 0;
  virtual std::string label(int a) const = 0;
  virtual GroupPresentation presentation() const = 0;
  virtual std::string kind() const = 0;

  int conjugate(int g, int x) const;   // g x g^-1
  int commutator(int a, int b) const;  // a b a^-1 b^-1
  long element_order(int a) const;
  int eval_word(const Word& w) const;
  // Verifies associativity/identity/inverse axioms, exhaustively for
  // |G| <= 512 and on pseudo-random samples beyond.
  bool check_axioms(std::string* why = nullptr) const;

  std::vector<int> derived_subgroup() const;
  std::vector<int> center() const;
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class CyclicGroup : public FiniteGroup {
 public:
  CyclicGroup(long n, std::string gen_name = "s");
  int size() const override { return static_cast<int>(n_); }
  int mult(int a, int b) const override { return static_cast<int>((a + b) % n_); }
  int inverse(int a) const override { return static_cast<int>((n_ - a) % n_); }
  int identity() const override { return 0; }
  std::string label(int a) const override;
  GroupPresentation presentation() const override;
  std::string kind() const override { return "cyclic"; }
  long modulus() const { return n_; }
  int generator() const { return n_ > 1 ? 1 : 0; }

 private:
  long n_;
  std::string gen_name_;
};

// F_q^rank as an abelian group, elements indexed in mixed radix over GF(p)
// coordinates (rank * e of them, first coordinate least significant).
class ElementaryAbelianGroup : public FiniteGroup {
 public:
  ElementaryAbelianGroup(long q, int rank, std::string gen_prefix = "a");
  int size() const override { return static_cast<int>(size_); }
  int mult(int a, int b) const override;
  int inverse(int a) const override;
  int identity() const override { return 0; }
  std::string label(int a) const override;
  GroupPresentation presentation() const override;
  std::string kind() const override { return "elementary_abelian"; }
  long p() const { return p_; }
  int dim() const { return dim_; }  // rank * e, over GF(p)
  int basis_element(int i) const;

 private:
  long p_;
  int dim_;
  long size_;
  std::string gen_prefix_;
};

// Group of 4x4 upper unitriangular symplectic matrices generated by
// x(a), y(b), z(c) over GF(q); order q^3. Elements are stored as literal
// matrices; the canonical index of x(a)y(b)z(c) is (a*q + b)*q + c on
// field-element values.
class HeisenbergGroup : public FiniteGroup {
 public:
  explicit HeisenbergGroup(long q);
  int size() const override { return static_cast<int>(q_ * q_ * q_); }
  int mult(int a, int b) const override;
  int inverse(int a) const override;
  int identity() const override { return 0; }
  std::string label(int a) const override;
  GroupPresentation presentation() const override;
  std::string kind() const override { return "heisenberg"; }

  long q() const { return q_; }
  const FieldPtr& field() const { return field_; }
  // Distinguished elements, arguments by field-element value.
  int x_of(long a) const { return index_of_triple(a, 0, 0); }
  int y_of(long b) const { return index_of_triple(0, b, 0); }
  int z_of(long c) const { return index_of_triple(0, 0, c); }
  int index_of_triple(long a, long b, long c) const;
  std::array<long, 3> triple_of(int g) const;
  // Matrix of element g, row-major 4x4 of field-element values.
  std::array<long, 16> matrix_of(int g) const;
  // Action on the points (X, Y, Z) (coordinates of (X,Y,Z,1)^T).
  std::array<long, 3> apply_to_point(int g, const std::array<long, 3>& pt) const;

 private:
  long q_;
  FieldPtr field_;
  FieldTables tab_;
};

class DirectProductGroup : public FiniteGroup {
 public:
  DirectProductGroup(GroupPtr a, GroupPtr b);
  int size() const override { return a_->size() * b_->size(); }
  int mult(int x, int y) const override;
  int inverse(int x) const override;
  int identity() const override;
  std::string label(int x) const override;
  GroupPresentation presentation() const override;
  std::string kind() const override { return "product"; }
  int pack(int x, int y) const { return x * b_->size() + y; }
  std::pair<int, int> unpack(int g) const { return {g / b_->size(), g % b_->size()}; }
  const GroupPtr& left() const { return a_; }
  const GroupPtr& right() const { return b_; }

 private:
  GroupPtr a_, b_;
};

class TableGroup : public FiniteGroup {
 public:
  TableGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  int size() const override { return static_cast<int>(table_.size()); }
  int mult(int a, int b) const override { return table_[a][b]; }
  int inverse(int a) const override { return inv_[a]; }
  int identity() const override { return id_; }
  std::string label(int a) const override;
  GroupPresentation presentation() const override;
  std::string kind() const override { return "table"; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  int id_;
};

// Copies any group into an explicit multiplication table.
std::shared_ptr<TableGroup> to_table_group(const FiniteGroup& g);

struct GroupAction {
  GroupPtr group;
  int num_points = 0;
  std::function<int(int, int)> act;  // (element, point) -> point

  // identity acts trivially; g(h x) = (gh) x, exhaustive for small sizes.
  bool check_axioms(std::string* why = nullptr) const;
};

struct RegularityResult {
  bool regular = false;
  std::optional<int> unreached_point;            // transitivity witness
  std::optional<std::pair<int, int>> fix_pair;   // (element != id, point) witness
};

RegularityResult is_regular_action(const GroupAction& action);
std::vector<int> stabilizer(const GroupAction& action, int point);

}  // namespace singer
