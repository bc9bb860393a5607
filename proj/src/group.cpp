#include "singer/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace singer {

Word word_inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (int letter : w) {
    if (letter == 0) continue;
    if (!r.empty() && r.back() == -letter)
      r.pop_back();
    else
      r.push_back(letter);
  }
  return r;
}

int FiniteGroup::conjugate(int g, int x) const { return mult(mult(g, x), inverse(g)); }

int FiniteGroup::commutator(int a, int b) const {
  return mult(mult(a, b), mult(inverse(a), inverse(b)));
}

long FiniteGroup::element_order(int a) const {
  int x = a;
  long ord = 1;
  while (x != identity()) {
    x = mult(x, a);
    ++ord;
  }
  return ord;
}

int FiniteGroup::eval_word(const Word& w) const {
  const GroupPresentation pres = presentation();
  int g = identity();
  for (int letter : w) {
    int idx = std::abs(letter) - 1;
    int e = pres.gen_elements.at(idx);
    g = mult(g, letter > 0 ? e : inverse(e));
  }
  return g;
}

bool FiniteGroup::check_axioms(std::string* why) const {
  const int n = size();
  const int id = identity();
  for (int a = 0; a < n; ++a) {
    if (mult(id, a) != a || mult(a, id) != a) {
      if (why) *why = "identity fails at " + label(a);
      return false;
    }
    if (mult(a, inverse(a)) != id || mult(inverse(a), a) != id) {
      if (why) *why = "inverse fails at " + label(a);
      return false;
    }
  }
  auto assoc = [&](int a, int b, int c) {
    if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
      if (why)
        *why = "associativity fails at (" + label(a) + ", " + label(b) + ", " + label(c) + ")";
      return false;
    }
    return true;
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int trial = 0; trial < 100000; ++trial)
      if (!assoc(dist(rng), dist(rng), dist(rng))) return false;
  }
  return true;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> seen = {identity()};
  std::vector<int> queue = {identity()};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int g : gens) {
      int next = mult(queue[i], g);
      if (seen.insert(next).second) queue.push_back(next);
      next = mult(queue[i], inverse(g));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) comms.push_back(commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(comms);
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> result;
  for (int a = 0; a < size(); ++a) {
    bool central = true;
    for (int b = 0; b < size() && central; ++b)
      if (mult(a, b) != mult(b, a)) central = false;
    if (central) result.push_back(a);
  }
  return result;
}

// ---------------------------------------------------------------------------

CyclicGroup::CyclicGroup(long n, std::string gen_name) : n_(n), gen_name_(std::move(gen_name)) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "cyclic group needs n >= 1");
}

std::string CyclicGroup::label(int a) const { return std::to_string(a); }

GroupPresentation CyclicGroup::presentation() const {
  GroupPresentation p;
  p.names = {gen_name_};
  p.gen_elements = {generator()};
  Word r(static_cast<size_t>(n_), 1);
  p.relators = {r};
  return p;
}

// ---------------------------------------------------------------------------

ElementaryAbelianGroup::ElementaryAbelianGroup(long q, int rank, std::string gen_prefix)
    : gen_prefix_(std::move(gen_prefix)) {
  long p;
  int e;
  if (!factor_prime_power(q, p, e))
    throw Error(ErrorCode::NotPrimePower, "q must be a prime power");
  p_ = p;
  dim_ = e * rank;
  size_ = 1;
  for (int i = 0; i < dim_; ++i) size_ *= p_;
  if (size_ > max_size_bound()) throw Error(ErrorCode::TooLarge, "group too large");
}

int ElementaryAbelianGroup::mult(int a, int b) const {
  long result = 0, mult = 1;
  for (int i = 0; i < dim_; ++i) {
    long da = a % p_, db = b % p_;
    a /= static_cast<int>(p_);
    b /= static_cast<int>(p_);
    result += ((da + db) % p_) * mult;
    mult *= p_;
  }
  return static_cast<int>(result);
}

int ElementaryAbelianGroup::inverse(int a) const {
  long result = 0, mult = 1;
  for (int i = 0; i < dim_; ++i) {
    long da = a % p_;
    a /= static_cast<int>(p_);
    result += ((p_ - da) % p_) * mult;
    mult *= p_;
  }
  return static_cast<int>(result);
}

int ElementaryAbelianGroup::basis_element(int i) const {
  long v = 1;
  for (int k = 0; k < i; ++k) v *= p_;
  return static_cast<int>(v);
}

std::string ElementaryAbelianGroup::label(int a) const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ",";
    os << a % p_;
    a /= static_cast<int>(p_);
  }
  os << ")";
  return os.str();
}

GroupPresentation ElementaryAbelianGroup::presentation() const {
  GroupPresentation pres;
  for (int i = 0; i < dim_; ++i) {
    pres.names.push_back(gen_prefix_ + std::to_string(i));
    pres.gen_elements.push_back(basis_element(i));
  }
  for (int i = 0; i < dim_; ++i) pres.relators.push_back(Word(static_cast<size_t>(p_), i + 1));
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      pres.relators.push_back({i + 1, j + 1, -(i + 1), -(j + 1)});
  return pres;
}

// ---------------------------------------------------------------------------

HeisenbergGroup::HeisenbergGroup(long q) : q_(q) {
  long p;
  int e;
  if (!factor_prime_power(q, p, e))
    throw Error(ErrorCode::NotPrimePower, "q must be a prime power");
  if (q <= 2) throw Error(ErrorCode::InvalidOrder, "need q > 2");
  field_ = make_field(p, e);
  tab_ = build_tables(field_);
}

int HeisenbergGroup::index_of_triple(long a, long b, long c) const {
  return static_cast<int>((a * q_ + b) * q_ + c);
}

std::array<long, 3> HeisenbergGroup::triple_of(int g) const {
  long c = g % q_;
  long b = (g / q_) % q_;
  long a = g / (q_ * q_);
  return {a, b, c};
}

std::array<long, 16> HeisenbergGroup::matrix_of(int g) const {
  auto [a, b, c] = triple_of(g);
  long ab = tab_.at_mul(a, b);
  // x(a) y(b) z(c)
  std::array<long, 16> m = {1, a, b, tab_.at_add(ab, c),
                            0, 1, 0, b,
                            0, 0, 1, tab_.negv[a],
                            0, 0, 0, 1};
  return m;
}

int HeisenbergGroup::mult(int g, int h) const {
  auto m1 = matrix_of(g);
  auto m2 = matrix_of(h);
  std::array<long, 16> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long s = 0;
      for (int k = 0; k < 4; ++k) s = tab_.at_add(s, tab_.at_mul(m1[i * 4 + k], m2[k * 4 + j]));
      m[i * 4 + j] = s;
    }
  long a = m[1], b = m[2];
  long c = tab_.at_add(m[3], tab_.negv[tab_.at_mul(a, b)]);
  return index_of_triple(a, b, c);
}

int HeisenbergGroup::inverse(int g) const {
  auto [a, b, c] = triple_of(g);
  int candidate = index_of_triple(tab_.negv[a], tab_.negv[b], 0);
  auto [ra, rb, rc] = triple_of(mult(g, candidate));
  (void)ra;
  (void)rb;
  return mult(candidate, z_of(tab_.negv[rc]));
}

std::string HeisenbergGroup::label(int g) const {
  auto [a, b, c] = triple_of(g);
  std::ostringstream os;
  os << "x(" << a << ")y(" << b << ")z(" << c << ")";
  return os.str();
}

std::array<long, 3> HeisenbergGroup::apply_to_point(int g, const std::array<long, 3>& pt) const {
  auto m = matrix_of(g);
  // (X, Y, Z, 1)^T -> rows of m applied; last coordinate stays 1.
  std::array<long, 4> v = {pt[0], pt[1], pt[2], 1};
  std::array<long, 3> out{};
  for (int i = 0; i < 3; ++i) {
    long s = 0;
    for (int k = 0; k < 4; ++k) s = tab_.at_add(s, tab_.at_mul(m[i * 4 + k], v[k]));
    out[i] = s;
  }
  return out;
}

GroupPresentation HeisenbergGroup::presentation() const {
  GroupPresentation pres;
  long p = field_->p;
  int e = field_->e;
  if (e == 1) {
    // <x, y, z | z = [x,y], x^q = y^q = z^q = 1, xz = zx, yz = zy>, z = z(2).
    pres.names = {"x", "y", "z"};
    pres.gen_elements = {x_of(1), y_of(1), z_of(2 % q_)};
    pres.relators.push_back({1, 2, -1, -2, -3});
    pres.relators.push_back(Word(static_cast<size_t>(q_), 1));
    pres.relators.push_back(Word(static_cast<size_t>(q_), 2));
    pres.relators.push_back(Word(static_cast<size_t>(q_), 3));
    pres.relators.push_back({1, 3, -1, -3});
    pres.relators.push_back({2, 3, -2, -3});
    return pres;
  }
  // Basis generators x_i = x(p^i), y_i = y(p^i), z_i = z(p^i).
  for (int i = 0; i < e; ++i) pres.names.push_back("x" + std::to_string(i));
  for (int i = 0; i < e; ++i) pres.names.push_back("y" + std::to_string(i));
  for (int i = 0; i < e; ++i) pres.names.push_back("z" + std::to_string(i));
  auto basis_value = [&](int i) {
    long v = 1;
    for (int k = 0; k < i; ++k) v *= p;
    return v;
  };
  for (int i = 0; i < e; ++i) pres.gen_elements.push_back(x_of(basis_value(i)));
  for (int i = 0; i < e; ++i) pres.gen_elements.push_back(y_of(basis_value(i)));
  for (int i = 0; i < e; ++i) pres.gen_elements.push_back(z_of(basis_value(i)));
  auto xg = [&](int i) { return i + 1; };
  auto yg = [&](int i) { return e + i + 1; };
  auto zg = [&](int i) { return 2 * e + i + 1; };
  // z-word of a field value in the additive basis.
  auto z_word = [&](long value) {
    FieldElement fe = fe_from_value(field_, value);
    Word w;
    for (int i = 0; i < e; ++i)
      for (long r = 0; r < fe.coeffs[i]; ++r) w.push_back(zg(i));
    return w;
  };
  for (int i = 0; i < 3 * e; ++i) pres.relators.push_back(Word(static_cast<size_t>(p), i + 1));
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      pres.relators.push_back({xg(i), xg(j), -xg(i), -xg(j)});
      pres.relators.push_back({yg(i), yg(j), -yg(i), -yg(j)});
      pres.relators.push_back({zg(i), zg(j), -zg(i), -zg(j)});
    }
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      pres.relators.push_back({xg(i), zg(j), -xg(i), -zg(j)});
      pres.relators.push_back({yg(i), zg(j), -yg(i), -zg(j)});
    }
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      // [x_i, y_j] = z(2 * p^i * p^j)
      long v = fe_from_value(field_, 2 % p).is_zero()
                   ? 0
                   : mul(mul(fe_from_value(field_, 2 % p), fe_from_value(field_, basis_value(i))),
                         fe_from_value(field_, basis_value(j)))
                         .value();
      Word w = {xg(i), yg(j), -xg(i), -yg(j)};
      Word zw = z_word(v);
      for (auto it = zw.rbegin(); it != zw.rend(); ++it) w.push_back(-*it);
      pres.relators.push_back(w);
    }
  return pres;
}

// ---------------------------------------------------------------------------

DirectProductGroup::DirectProductGroup(GroupPtr a, GroupPtr b)
    : a_(std::move(a)), b_(std::move(b)) {}

int DirectProductGroup::mult(int x, int y) const {
  auto [xa, xb] = unpack(x);
  auto [ya, yb] = unpack(y);
  return pack(a_->mult(xa, ya), b_->mult(xb, yb));
}

int DirectProductGroup::inverse(int x) const {
  auto [xa, xb] = unpack(x);
  return pack(a_->inverse(xa), b_->inverse(xb));
}

int DirectProductGroup::identity() const { return pack(a_->identity(), b_->identity()); }

std::string DirectProductGroup::label(int x) const {
  auto [xa, xb] = unpack(x);
  return "(" + a_->label(xa) + "," + b_->label(xb) + ")";
}

GroupPresentation DirectProductGroup::presentation() const {
  GroupPresentation pa = a_->presentation();
  GroupPresentation pb = b_->presentation();
  GroupPresentation pres;
  pres.names = pa.names;
  for (const auto& n : pb.names) pres.names.push_back(n + "'");
  for (int e : pa.gen_elements) pres.gen_elements.push_back(pack(e, b_->identity()));
  for (int e : pb.gen_elements) pres.gen_elements.push_back(pack(a_->identity(), e));
  int offset = static_cast<int>(pa.names.size());
  pres.relators = pa.relators;
  for (const Word& w : pb.relators) {
    Word shifted;
    for (int letter : w) shifted.push_back(letter > 0 ? letter + offset : letter - offset);
    pres.relators.push_back(shifted);
  }
  for (int i = 1; i <= offset; ++i)
    for (int j = 1; j <= static_cast<int>(pb.names.size()); ++j)
      pres.relators.push_back({i, offset + j, -i, -(offset + j)});
  return pres;
}

// ---------------------------------------------------------------------------

TableGroup::TableGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  int n = static_cast<int>(table_.size());
  id_ = -1;
  for (int a = 0; a < n; ++a) {
    bool is_id = true;
    for (int b = 0; b < n; ++b)
      if (table_[a][b] != b || table_[b][a] != b) {
        is_id = false;
        break;
      }
    if (is_id) {
      id_ = a;
      break;
    }
  }
  if (id_ < 0) throw Error(ErrorCode::InvariantViolation, "table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == id_ && table_[b][a] == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw Error(ErrorCode::InvariantViolation, "table has no inverses");
  }
}

std::string TableGroup::label(int a) const {
  if (a < static_cast<int>(labels_.size())) return labels_[a];
  return "g" + std::to_string(a);
}

GroupPresentation TableGroup::presentation() const {
  // Multiplication-table presentation: one generator per non-identity element.
  GroupPresentation pres;
  int n = size();
  std::vector<int> gen_of(n, 0);
  for (int a = 0, g = 0; a < n; ++a) {
    if (a == id_) continue;
    pres.names.push_back("g" + std::to_string(a));
    pres.gen_elements.push_back(a);
    gen_of[a] = ++g;
  }
  auto word_of = [&](int a) { return a == id_ ? Word{} : Word{gen_of[a]}; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == id_ || b == id_) continue;
      Word w = word_of(a);
      Word wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      Word rhs = word_of(table_[a][b]);
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) w.push_back(-*it);
      pres.relators.push_back(free_reduce(w));
    }
  return pres;
}

std::shared_ptr<TableGroup> to_table_group(const FiniteGroup& g) {
  int n = g.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = g.label(a);
    for (int b = 0; b < n; ++b) table[a][b] = g.mult(a, b);
  }
  return std::make_shared<TableGroup>(std::move(table), std::move(labels));
}

// ---------------------------------------------------------------------------

bool GroupAction::check_axioms(std::string* why) const {
  const int n = group->size();
  const int id = group->identity();
  for (int x = 0; x < num_points; ++x)
    if (act(id, x) != x) {
      if (why) *why = "identity moves point " + std::to_string(x);
      return false;
    }
  long budget = static_cast<long>(n) * n * num_points;
  if (budget <= 2000000) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int gh = group->mult(g, h);
        for (int x = 0; x < num_points; ++x)
          if (act(g, act(h, x)) != act(gh, x)) {
            if (why) *why = "compatibility fails";
            return false;
          }
      }
  } else {
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> dg(0, n - 1), dx(0, num_points - 1);
    for (int trial = 0; trial < 100000; ++trial) {
      int g = dg(rng), h = dg(rng), x = dx(rng);
      if (act(g, act(h, x)) != act(group->mult(g, h), x)) {
        if (why) *why = "compatibility fails";
        return false;
      }
    }
  }
  return true;
}

RegularityResult is_regular_action(const GroupAction& action) {
  RegularityResult r;
  const int n = action.group->size();
  std::vector<char> reached(action.num_points, 0);
  for (int g = 0; g < n; ++g) reached[action.act(g, 0)] = 1;
  for (int x = 0; x < action.num_points; ++x)
    if (!reached[x]) {
      r.unreached_point = x;
      return r;
    }
  const int id = action.group->identity();
  for (int g = 0; g < n; ++g) {
    if (g == id) continue;
    for (int x = 0; x < action.num_points; ++x)
      if (action.act(g, x) == x) {
        r.fix_pair = std::make_pair(g, x);
        return r;
      }
  }
  r.regular = true;
  return r;
}

std::vector<int> stabilizer(const GroupAction& action, int point) {
  std::vector<int> result;
  for (int g = 0; g < action.group->size(); ++g)
    if (action.act(g, point) == point) result.push_back(g);
  return result;
}

}  // namespace singer
