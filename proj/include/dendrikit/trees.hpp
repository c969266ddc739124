#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dendrikit/words.hpp"

namespace dendrikit {

// Plane tree with all internal arities >= 2. A default-constructed tree
// is a single leaf. Immutable after construction; cheap to copy (shared
// child storage).
class PlaneTree {
public:
  PlaneTree() = default;  // leaf
  explicit PlaneTree(std::vector<PlaneTree> children);

  static PlaneTree leaf() { return PlaneTree(); }
  static PlaneTree parse(std::string_view text);

  bool is_leaf() const { return children_ == nullptr; }
  const std::vector<PlaneTree>& children() const;

  int leaves() const;
  int degree() const { return leaves() - 1; }

  // "o" for a leaf, "(child child ...)" for a node.
  std::string str() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b);
  // Canonical order: lexicographic on serializations. '(' < 'o' in
  // ASCII, so this is what direct string comparison gives.
  friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
    return a.str() <=> b.str();
  }

private:
  std::shared_ptr<const std::vector<PlaneTree>> children_;
};

PlaneTree tree_of_word(const Word& w);
inline PlaneTree tree_of_word(const PackedWord& u) { return tree_of_word(u.word()); }

// All plane trees with n+1 leaves, in canonical (serialization) order.
std::vector<PlaneTree> enumerate_trees(int n, int bound = kDefaultDegreeBound);

}  // namespace dendrikit
