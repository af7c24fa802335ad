#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mwall {

// A letter is +(i+1) for generator i and -(i+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

namespace words {

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // freely reduced product
Word power(const Word& w, long k);
bool is_reduced(const Word& w);

// Position of a letter in the order a < A < b < B < ...
int letter_rank(Letter l);
// Shortlex is not used here: plain lexicographic order under letter_rank.
bool lex_less(const Word& a, const Word& b);
int lex_compare(const Word& a, const Word& b);

// w = u c u^-1 with c cyclically reduced.
struct CyclicSplit {
  Word conjugator;
  Word core;
};
CyclicSplit cyclic_split(const Word& w);

std::size_t common_prefix(const Word& a, const Word& b);
long tree_distance(const Word& a, const Word& b);

// Letters 'a'..'z' are generators, uppercase their inverses; "e" or "" is the identity.
Word parse(std::string_view text, int rank);
std::string format(const Word& w);

}  // namespace words

// Stallings folding of a finite generating set, giving a membership test for
// the subgroup it generates.
class StallingsGraph {
 public:
  StallingsGraph(const std::vector<Word>& generators, int rank);
  bool contains(const Word& w) const;
  std::size_t vertex_count() const { return out_.size(); }

 private:
  int add_vertex();
  void fold();
  struct PendingEdge {
    int from;
    Letter letter;
    int to;
  };
  std::vector<std::map<Letter, int>> out_;
  std::vector<PendingEdge> pending_;
  int rank_;
};

}  // namespace mwall
