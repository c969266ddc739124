#pragma once

#include <vector>

#include "dendrikit/linalg.hpp"
#include "dendrikit/words.hpp"

namespace dendrikit {

// Quasi-shuffle of monomial keys, extended bilinearly.
Element<Composition> qsym_product(const Element<Composition>& x,
                                  const Element<Composition>& y);

// All compositions of weight n, in length-lex order.
std::vector<Composition> enumerate_compositions(int n);

}  // namespace dendrikit
