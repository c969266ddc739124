#include <doctest.h>

#include <random>

#include "dendrikit/polyoracle.hpp"

using namespace dendrikit;

namespace {

Word w(std::vector<int> v) { return Word(std::move(v)); }

NCPolynomial poly_of_words(int alphabet, std::vector<Word> words) {
  NCPolynomial p{alphabet, {}};
  for (Word& x : words) p.poly.add_term(std::move(x), Rational(1));
  return p;
}

}  // namespace

TEST_SUITE("polyoracle") {

TEST_CASE("expand") {
  CHECK(expand(PackedWord({1, 1}), 2) == poly_of_words(2, {w({1, 1}), w({2, 2})}));
  CHECK(expand(PackedWord({2, 1}), 2) == poly_of_words(2, {w({2, 1})}));
  CHECK(expand(PackedWord({1, 2}), 3) ==
        poly_of_words(3, {w({1, 2}), w({1, 3}), w({2, 3})}));
  CHECK(expand(PackedWord({1, 2, 3}), 2).poly.is_zero_elt());
  CHECK(expand(PackedWord(), 2) == poly_of_words(2, {Word()}));
}

TEST_CASE("word level products") {
  NCPolynomial a12 = poly_of_words(3, {w({1, 2})});
  NCPolynomial a1 = poly_of_words(3, {w({1})});
  NCPolynomial a2 = poly_of_words(3, {w({2})});
  NCPolynomial a13 = poly_of_words(3, {w({1, 3})});
  CHECK(poly_prec(a12, a1) == poly_of_words(3, {w({1, 2, 1})}));
  CHECK(poly_circ(a1, a1) == poly_of_words(3, {w({1, 1})}));
  CHECK(poly_succ(a1, a1).poly.is_zero_elt());
  CHECK(poly_succ(a2, a13) == poly_of_words(3, {w({2, 1, 3})}));
  CHECK(poly_mul(a12, a1) == poly_of_words(3, {w({1, 2, 1})}));
  CHECK_THROWS_AS(poly_mul(a1, poly_of_words(2, {w({1})})), AlphabetMismatchError);
  CHECK_THROWS_AS(poly_prec(poly_of_words(3, {Word()}), a1), UnitOperandError);
}

TEST_CASE("splitting identity at word level") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 4), letter(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::vector<int> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (int& x : a) x = letter(rng);
    for (int& x : b) x = letter(rng);
    NCPolynomial p = poly_of_words(4, {Word(a)});
    NCPolynomial q = poly_of_words(4, {Word(b)});
    NCPolynomial sum = poly_prec(p, q);
    sum.poly += poly_circ(p, q).poly;
    sum.poly += poly_succ(p, q).poly;
    CHECK(sum == poly_mul(p, q));
  }
}

TEST_CASE("word level trialgebra axioms hold on random triples") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> len(1, 3), letter(1, 6);
  auto rnd = [&] {
    std::vector<int> v(static_cast<std::size_t>(len(rng)));
    for (int& x : v) x = letter(rng);
    return poly_of_words(6, {Word(std::move(v))});
  };
  for (int t = 0; t < 1000; ++t) {
    NCPolynomial x = rnd(), y = rnd(), z = rnd();
    CHECK(poly_prec(poly_prec(x, y), z) == poly_prec(x, poly_mul(y, z)));
    CHECK(poly_prec(poly_succ(x, y), z) == poly_succ(x, poly_prec(y, z)));
    CHECK(poly_succ(poly_mul(x, y), z) == poly_succ(x, poly_succ(y, z)));
    CHECK(poly_circ(poly_succ(x, y), z) == poly_succ(x, poly_circ(y, z)));
    CHECK(poly_circ(poly_prec(x, y), z) == poly_circ(x, poly_succ(y, z)));
    CHECK(poly_prec(poly_circ(x, y), z) == poly_circ(x, poly_prec(y, z)));
    CHECK(poly_circ(poly_circ(x, y), z) == poly_circ(x, poly_circ(y, z)));
  }
}

TEST_CASE("project_pack") {
  CHECK(project_pack(expand(PackedWord({1, 2}), 3)) == NCQSymElement(PackedWord({1, 2})));
  CHECK(project_pack(poly_of_words(2, {w({1, 1}), w({2, 2})})) ==
        NCQSymElement(PackedWord({1, 1})));
  CHECK(project_pack(poly_of_words(2, {w({2, 1})})) == NCQSymElement(PackedWord({2, 1})));
  CHECK(project_pack(NCPolynomial{2, {}}).is_zero_elt());
  CHECK_THROWS_AS(project_pack(poly_of_words(2, {w({1, 1})})), NotSaturatedError);
  CHECK_THROWS_AS(project_pack(poly_of_words(2, {w({1}), w({1, 1}), w({2, 2})})),
                  InhomogeneousInputError);
  CHECK_THROWS_AS(project_pack(poly_of_words(1, {w({1, 2})})), NotSaturatedError);
  CHECK_THROWS_AS(project_pack(poly_of_words(1, {w({1, 1})})), ResourceLimitError);
}

TEST_CASE("oracle equivalence with the key level rules") {
  for (int total = 2; total <= 5; ++total)
    for (int i = 1; i < total; ++i)
      for (const PackedWord& u : enumerate_packed(i))
        for (const PackedWord& v : enumerate_packed(total - i)) {
          NCPolynomial pu = expand(u, total), pv = expand(v, total);
          NCQSymElement x(u), y(v);
          CHECK(project_pack(poly_mul(pu, pv)) == product_full(x, y));
          CHECK(project_pack(poly_prec(pu, pv)) == product_prec(x, y));
          CHECK(project_pack(poly_circ(pu, pv)) == product_circ(x, y));
          CHECK(project_pack(poly_succ(pu, pv)) == product_succ(x, y));
        }
}

TEST_CASE("alphabet stability of the projection") {
  std::mt19937 rng(321);
  std::vector<PackedWord> basis = enumerate_packed(2);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 40; ++t) {
    PackedWord u = basis[pick(rng)], v = basis[pick(rng)];
    NCQSymElement small = project_pack(poly_mul(expand(u, 4), expand(v, 4)));
    NCQSymElement large = project_pack(poly_mul(expand(u, 6), expand(v, 6)));
    CHECK(small == large);
  }
}

}  // TEST_SUITE
