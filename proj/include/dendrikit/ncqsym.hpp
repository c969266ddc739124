#pragma once

#include <optional>
#include <vector>

#include "dendrikit/linalg.hpp"
#include "dendrikit/trees.hpp"
#include "dendrikit/words.hpp"

namespace dendrikit {

using NCQSymElement = Element<PackedWord>;
using QSymElement = Element<Composition>;

// M_[1], the sum of all variables.
NCQSymElement generator();

inline NCQSymElement ncqsym_unit() { return NCQSymElement(PackedWord()); }

// Degree shared by every key, if any. nullopt for inhomogeneous input;
// 0 both for the zero element and for multiples of the unit.
std::optional<int> homogeneous_degree(const NCQSymElement& x);

enum class ProductPart { Full, Prec, Circ, Succ };

// Key-level rule: all packed w of length |u|+|v| whose prefix packs to u
// and suffix packs to v, filtered by comparing max(prefix) to max(suffix)
// for the three split parts (Prec: >, Circ: =, Succ: <).
std::vector<PackedWord> product_keys(const PackedWord& u, const PackedWord& v,
                                     ProductPart part);

NCQSymElement product_full(const NCQSymElement& x, const NCQSymElement& y);
NCQSymElement product_prec(const NCQSymElement& x, const NCQSymElement& y);
NCQSymElement product_circ(const NCQSymElement& x, const NCQSymElement& y);
NCQSymElement product_succ(const NCQSymElement& x, const NCQSymElement& y);

// Alphabet-interval restriction: sum over i of (letters <= i) tensor
// pack(letters > i).
TensorElement<PackedWord> coproduct(const NCQSymElement& x);
Rational counit(const NCQSymElement& x);

// Componentwise product on tensors, (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
TensorElement<PackedWord> tensor_product_full(const TensorElement<PackedWord>& x,
                                              const TensorElement<PackedWord>& y);

// MM_T = sum of M_u over packed u with tree_of_word(u) = T.
NCQSymElement mm_of_tree(const PlaneTree& t);

// All (T, MM_T) at degree n, trees in canonical order.
std::vector<std::pair<PlaneTree, NCQSymElement>> mm_basis(int n, int bound = kDefaultDegreeBound);

// Basis of the degree-n slice of the trialgebra generated by M_[1]:
// closure of lower-degree bases under the three operations, thinned by
// exact rank elimination in canonical candidate order.
std::vector<NCQSymElement> generate_free(int n, int bound = kDefaultDegreeBound);

struct Membership {
  bool member = false;
  Element<PlaneTree> coords;  // x = sum coords[T] * MM_T when member
};

// Echelonized span of generate_free(n) plus the cached MM basis, for
// repeated membership queries at one degree.
class FreeSpan {
public:
  explicit FreeSpan(int n, int bound = kDefaultDegreeBound);

  int degree() const { return n_; }
  std::size_t rank() const { return span_.rank(); }
  bool contains(const NCQSymElement& x) const { return span_.contains(x); }
  const std::vector<std::pair<PlaneTree, NCQSymElement>>& mm() const { return mm_; }

private:
  int n_;
  SpanBasis<PackedWord> span_;
  std::vector<std::pair<PlaneTree, NCQSymElement>> mm_;
};

// Decides x ∈ span(generate_free(n)) and recovers MM-basis coordinates.
Membership membership(const NCQSymElement& x, const FreeSpan& span);
Membership membership(const NCQSymElement& x, int n, int bound = kDefaultDegreeBound);

// M_u ↦ M_evaluation(u), the morphism onto QSym.
QSymElement abelianize(const NCQSymElement& x);

}  // namespace dendrikit
