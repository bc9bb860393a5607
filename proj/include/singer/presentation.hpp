#pragma once

#include <string>
#include <vector>

#include "singer/group.hpp"

namespace singer {

struct PresGenerator {
  std::string name;
  long order = 0;  // order of the generator's image in its vertex group
  int vertex = -1; // originating vertex of the complex, -1 for edge generators
};

// Generators plus relator words. Words use letters +/-(index+1).
struct Presentation {
  std::vector<PresGenerator> gens;
  std::vector<Word> relators;

  int gen_index(const std::string& name) const;  // -1 if absent
  void add_relator(Word w);
  std::string render() const;   // readable <gens | relators> form
  std::string to_json() const;  // {"generators":[{name,order}],"relators":[["s","~s"],...]}
};

// Same generators in the same order and equal relator multisets after free
// reduction and dropping empty words.
bool structurally_equal(const Presentation& a, const Presentation& b);
// Relator multisets equal up to cyclic rotation and inversion.
bool equal_up_to_relator_conventions(const Presentation& a, const Presentation& b);

std::string word_to_string(const Presentation& pres, const Word& w);

}  // namespace singer
