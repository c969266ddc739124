#pragma once

#include <json.hpp>

#include "dendrikit/ncqsym.hpp"
#include "dendrikit/polyoracle.hpp"
#include "dendrikit/sylvester.hpp"

namespace dendrikit {

using Json = nlohmann::ordered_json;

Json word_json(const Word& w);
Word word_from_json(const Json& j);

// Shared element schema: {"basis": tag, "terms": [{"key": ..., "coeff": "p/q"}]}
// with terms in canonical key order. Keys: words and compositions as
// integer arrays, trees as serialization strings, tensor keys as pairs.
Json element_json(const NCQSymElement& x, const char* basis = "M");
Json element_json(const QSymElement& x);
Json element_json(const Element<PlaneTree>& x);
Json tensor_json(const TensorElement<PackedWord>& x);
Json poly_json(const NCPolynomial& p);

NCQSymElement element_from_json(const Json& j);

}  // namespace dendrikit
