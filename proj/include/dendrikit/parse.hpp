#pragma once

#include <string>
#include <string_view>

#include "dendrikit/ncqsym.hpp"
#include "dendrikit/polyoracle.hpp"

namespace dendrikit {

// Element literal grammar, whitespace-insensitive:
//   element := '0' | [sign] term (sign term)*
//   term    := [coeff '*'] 'M' '[' letters ']'
//   coeff   := digits ['/' digits]
// e.g. "3*M[1,2,1] - 1/2*M[1,1]".
NCQSymElement parse_element(std::string_view text);

std::string element_str(const NCQSymElement& x, const char* basis = "M");
std::string element_str(const QSymElement& x);
std::string element_str(const Element<PlaneTree>& x);
std::string poly_str(const NCPolynomial& p);
std::string tensor_str(const TensorElement<PackedWord>& x);

}  // namespace dendrikit
