#include "singer/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace singer {

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

void Presentation::add_relator(Word w) { relators.push_back(std::move(w)); }

namespace {

std::string superscript(long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n);
  std::string out;
  for (char c : s) {
    if (c == '-')
      out += "⁻";
    else
      out += digits[c - '0'];
  }
  return out;
}

}  // namespace

std::string word_to_string(const Presentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  while (i < w.size()) {
    int letter = w[i];
    size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    long count = static_cast<long>(j - i);
    long exp = letter > 0 ? count : -count;
    os << pres.gens[std::abs(letter) - 1].name;
    if (exp != 1) os << superscript(exp);
    i = j;
  }
  return os.str();
}

std::string Presentation::render() const {
  std::ostringstream os;
  os << "⟨";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].name;
  }
  os << " | ";
  bool first = true;
  for (const Word& r : relators) {
    if (!first) os << ", ";
    first = false;
    os << word_to_string(*this, r);
  }
  os << "⟩";
  return os.str();
}

std::string Presentation::to_json() const {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens) j["generators"].push_back({{"name", g.name}, {"order", g.order}});
  j["relators"] = nlohmann::json::array();
  for (const Word& r : relators) {
    nlohmann::json arr = nlohmann::json::array();
    for (int letter : r) {
      const std::string& name = gens[std::abs(letter) - 1].name;
      arr.push_back(letter > 0 ? name : "~" + name);
    }
    j["relators"].push_back(arr);
  }
  return j.dump(2);
}

namespace {

std::vector<Word> reduced_sorted_relators(const Presentation& p) {
  std::vector<Word> out;
  for (const Word& r : p.relators) {
    Word w = free_reduce(r);
    if (!w.empty()) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word cyclic_canonical(const Word& w0) {
  Word w = free_reduce(w0);
  // Cyclically reduce.
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return w;
  Word best;
  for (int invert = 0; invert < 2; ++invert) {
    Word base = invert ? word_inverse(w) : w;
    for (size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

bool structurally_equal(const Presentation& a, const Presentation& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].name != b.gens[i].name) return false;
  return reduced_sorted_relators(a) == reduced_sorted_relators(b);
}

bool equal_up_to_relator_conventions(const Presentation& a, const Presentation& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].name != b.gens[i].name) return false;
  auto canon = [](const Presentation& p) {
    std::vector<Word> out;
    for (const Word& r : p.relators) {
      Word w = cyclic_canonical(r);
      if (!w.empty()) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a) == canon(b);
}

}  // namespace singer
