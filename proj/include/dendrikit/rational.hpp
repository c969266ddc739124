#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dendrikit/errors.hpp"

namespace dendrikit {

// Exact arbitrary-precision rational scalar. Every coefficient in the
// library is one of these; there is no floating-point path anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Accepts an optionally signed integer or "p/q" with q > 0 after
// canonicalization. Anything else is a ParseError.
inline Rational parse_rational(std::string_view text, std::size_t offset_base = 0) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError(offset_base + i, "expected a digit");
  i = num_end;
  if (i < text.size() && text[i] == '/') {
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1) throw ParseError(offset_base + i + 1, "expected a digit after '/'");
    i = den_end;
  }
  if (i != text.size()) throw ParseError(offset_base + i, "trailing characters in rational literal");
  std::string normalized(text);
  if (!normalized.empty() && normalized.front() == '+') normalized.erase(0, 1);
  Rational r(normalized, 10);
  if (sgn(r.get_den()) == 0) throw ParseError(offset_base, "zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace dendrikit
