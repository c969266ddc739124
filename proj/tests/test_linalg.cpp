#include <doctest.h>

#include <random>

#include "dendrikit/linalg.hpp"
#include "dendrikit/words.hpp"

using namespace dendrikit;

namespace {

using E = Element<PackedWord>;

E m(std::vector<int> v, Rational c = Rational(1)) { return E(PackedWord(std::move(v)), c); }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("element arithmetic") {
  E x = m({1});
  CHECK((x + x).coeff(PackedWord({1})) == 2);
  CHECK((Rational(0) * x).is_zero_elt());
  CHECK((x - x).is_zero_elt());
  E y = m({1, 2}) + m({2, 1}, Rational("1/2"));
  CHECK((Rational(2) * y).coeff(PackedWord({2, 1})) == 1);
  CHECK(y.term_count() == 2);
  CHECK(y.coeff(PackedWord({1, 1})) == 0);
}

TEST_CASE("terms stay in canonical order and zero-pruned") {
  E z = m({2, 1}) + m({1}) + m({1, 2});
  std::vector<PackedWord> keys;
  for (const auto& [k, c] : z.terms()) keys.push_back(k);
  CHECK(keys == std::vector<PackedWord>{PackedWord({1}), PackedWord({1, 2}), PackedWord({2, 1})});
  z += Rational(-1) * m({1, 2});
  CHECK(z.term_count() == 2);
}

TEST_CASE("bilinear_extend over concatenation") {
  auto cat = [](const PackedWord& a, const PackedWord& b) {
    std::vector<int> v = a.word().letters();
    for (std::size_t i = 0; i < b.size(); ++i) v.push_back(b[i] + a.max_letter());
    return E(PackedWord(std::move(v)));
  };
  E a1 = m({1});
  CHECK(bilinear_extend(cat, a1, m({1}) + m({1, 1})) == m({1, 2}) + m({1, 2, 2}));
  CHECK(bilinear_extend(cat, E(), a1).is_zero_elt());
  E lhs = bilinear_extend(cat, Rational(2) * a1, Rational(3) * a1);
  CHECK(lhs == Rational(6) * bilinear_extend(cat, a1, a1));
}

TEST_CASE("tensor is the outer product") {
  E x = m({1}) + m({1, 1});
  E y = m({1}, Rational(2));
  TensorElement<PackedWord> t = tensor(x, y);
  CHECK(t.term_count() == 2);
  CHECK(t.coeff({PackedWord({1, 1}), PackedWord({1})}) == 2);
  CHECK(tensor(E(), y).is_zero_elt());
  CHECK(tensor(x + x, y) == tensor(x, y) + tensor(x, y));
}

TEST_CASE("rank_of_span basics") {
  CHECK(rank_of_span<PackedWord>({}) == 0);
  CHECK(rank_of_span<PackedWord>({m({1, 1}), m({1, 2})}) == 2);
  E x = m({1}) + m({1, 2}, Rational("2/3"));
  CHECK(rank_of_span<PackedWord>({x, Rational(2) * x}) == 1);
  CHECK(rank_of_span<PackedWord>({x, Rational(2) * x, m({1})}) == 2);
  CHECK(rank_of_span<PackedWord>({E()}) == 0);
}

TEST_CASE("rank invariant under scaling and permutation") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<PackedWord> basis = enumerate_packed(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<E> vecs;
    for (int i = 0; i < 6; ++i) {
      E v;
      for (const PackedWord& u : basis) v += E(u, Rational(coeff(rng)));
      vecs.push_back(v);
    }
    std::size_t r = rank_of_span(vecs);
    std::shuffle(vecs.begin(), vecs.end(), rng);
    for (auto& v : vecs) v *= Rational(1 + std::abs(coeff(rng)));
    CHECK(rank_of_span(vecs) == r);
  }
}

TEST_CASE("echelon membership") {
  SpanBasis<PackedWord> span(enumerate_packed(2));
  CHECK(span.insert(m({1, 1}) + m({1, 2})));
  CHECK(span.insert(m({1, 2}) - m({2, 1})));
  CHECK_FALSE(span.insert(m({1, 1}) + m({2, 1})));
  CHECK(span.rank() == 2);
  CHECK(span.contains(Rational(5) * (m({1, 1}) + m({1, 2}))));
  CHECK_FALSE(span.contains(m({1, 1})));
  CHECK_THROWS_AS((void)span.row_of(m({1})), std::out_of_range);
}

TEST_CASE("exact fractions survive elimination") {
  E a = m({1}, Rational("1/3")) + m({1, 2}, Rational("1/7"));
  E b = m({1}, Rational("2/3")) + m({1, 2}, Rational("2/7"));
  CHECK(rank_of_span<PackedWord>({a, b}) == 1);
  Rational c = a.coeff(PackedWord({1, 2}));
  CHECK(rational_str(c) == "1/7");
}

}  // TEST_SUITE
