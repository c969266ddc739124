#pragma once

#include "dendrikit/linalg.hpp"
#include "dendrikit/ncqsym.hpp"
#include "dendrikit/words.hpp"

namespace dendrikit {

// Noncommutative polynomial over a finite alphabet {1..N}. The naive
// word-level realization used as an independent oracle for the key-level
// rules in ncqsym.
struct NCPolynomial {
  int alphabet = 1;
  Element<Word> poly;

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;
};

// Sum of all words over {1..N} packing to u.
NCPolynomial expand(const PackedWord& u, int alphabet);

// Concatenation product and its three max-comparison restrictions:
// uv survives ≺ when max(u) > max(v), ∘ when equal, ≻ when max(u) < max(v).
NCPolynomial poly_mul(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial poly_prec(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial poly_circ(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial poly_succ(const NCPolynomial& p, const NCPolynomial& q);

// Inverse of expand on pack-saturated polynomials: each pack-fiber inside
// {1..N}-words must be fully present with one common coefficient.
NCQSymElement project_pack(const NCPolynomial& p);

}  // namespace dendrikit
