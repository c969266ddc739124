#pragma once

#include <vector>

#include "dendrikit/linalg.hpp"
#include "dendrikit/words.hpp"

namespace dendrikit {

struct SylvesterClass {
  Word representative;        // lex-min member
  std::vector<Word> members;  // sorted

  friend bool operator==(const SylvesterClass&, const SylvesterClass&) = default;
};

// Words one rewriting step away, both orientations: swap an adjacent
// pair {a < c} when some strictly later position holds b with a <= b < c.
std::vector<Word> sylv_neighbors(const Word& w);

// Breadth-first closure under sylv_neighbors.
SylvesterClass sylv_class(const Word& w, int bound = kDefaultDegreeBound);

// Number of distinct classes among packed words of length n.
std::size_t sylv_class_count(int n, int bound = kDefaultDegreeBound);

// Class representative of a packed word (rewriting preserves packedness).
PackedWord sylv_representative(const PackedWord& u, int bound = kDefaultDegreeBound);

// M_u ↦ M_{representative(u)}, the projection onto the sylvester quotient.
Element<PackedWord> quotient_project(const Element<PackedWord>& x,
                                     int bound = kDefaultDegreeBound);

}  // namespace dendrikit
