#pragma once

#include <map>
#include <utility>

#include "dendrikit/linalg.hpp"
#include "dendrikit/words.hpp"

namespace dendrikit {

// Internal product on degree-n packed words: the pack of the sequence of
// pairs (u_i, v_i) ranked lexicographically, left operand first.
PackedWord tits_product(const PackedWord& u, const PackedWord& v);

// Linear lift to degree-n elements; one output term per term pair.
Element<PackedWord> tits_product_elt(const Element<PackedWord>& x,
                                     const Element<PackedWord>& y);

// Independent oracle on the face-semigroup side: blocks P_i ∩ Q_j in
// lexicographic (i, j) order, empty intersections dropped.
OrderedSetPartition face_compose(const OrderedSetPartition& p,
                                 const OrderedSetPartition& q);

// Memoized product table for a fixed degree.
class FaceProductTable {
public:
  explicit FaceProductTable(int n) : n_(n) {}

  int degree() const { return n_; }
  const PackedWord& product(const PackedWord& u, const PackedWord& v);

private:
  int n_;
  std::map<std::pair<PackedWord, PackedWord>, PackedWord> memo_;
};

}  // namespace dendrikit
