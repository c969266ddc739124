#include <doctest.h>

#include "dendrikit/ncqsym.hpp"
#include "dendrikit/qsym.hpp"

using namespace dendrikit;

namespace {

QSymElement q(std::vector<int> parts) { return QSymElement(Composition(std::move(parts))); }

}  // namespace

TEST_SUITE("qsym") {

TEST_CASE("quasi shuffle small cases") {
  CHECK(qsym_product(q({1}), q({1})) == Rational(2) * q({1, 1}) + q({2}));
  CHECK(qsym_product(q({1}), q({2})) == q({1, 2}) + q({2, 1}) + q({3}));
  CHECK(qsym_product(q({}), q({2, 1})) == q({2, 1}));
  CHECK(qsym_product(q({1, 1}), q({2})) ==
        q({1, 1, 2}) + q({1, 2, 1}) + q({2, 1, 1}) + q({1, 3}) + q({3, 1}));
}

TEST_CASE("enumerate_compositions") {
  CHECK(enumerate_compositions(0) == std::vector<Composition>{Composition()});
  CHECK(enumerate_compositions(3) ==
        std::vector<Composition>{Composition({3}), Composition({1, 2}), Composition({2, 1}),
                                 Composition({1, 1, 1})});
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_compositions(n).size() == (1u << (n - 1)));
}

TEST_CASE("commutativity and associativity") {
  for (int total = 2; total <= 6; ++total)
    for (int i = 1; i < total; ++i)
      for (const Composition& a : enumerate_compositions(i))
        for (const Composition& b : enumerate_compositions(total - i))
          CHECK(qsym_product(QSymElement(a), QSymElement(b)) ==
                qsym_product(QSymElement(b), QSymElement(a)));
  for (int total = 3; total <= 6; ++total)
    for (int i = 1; i < total; ++i)
      for (int j = 1; i + j < total; ++j)
        for (const Composition& a : enumerate_compositions(i))
          for (const Composition& b : enumerate_compositions(j))
            for (const Composition& c : enumerate_compositions(total - i - j)) {
              QSymElement x(a), y(b), z(c);
              CHECK(qsym_product(qsym_product(x, y), z) == qsym_product(x, qsym_product(y, z)));
            }
}

TEST_CASE("structure constants are nonnegative integers") {
  for (const Composition& a : enumerate_compositions(3))
    for (const Composition& b : enumerate_compositions(3)) {
      QSymElement p = qsym_product(QSymElement(a), QSymElement(b));
      for (const auto& [k, c] : p.terms()) {
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
    }
}

TEST_CASE("abelianize is an algebra morphism") {
  for (int total = 2; total <= 5; ++total)
    for (int i = 1; i < total; ++i)
      for (const PackedWord& u : enumerate_packed(i))
        for (const PackedWord& v : enumerate_packed(total - i)) {
          NCQSymElement x(u), y(v);
          CHECK(abelianize(product_full(x, y)) ==
                qsym_product(abelianize(x), abelianize(y)));
        }
}

TEST_CASE("split image sums to the quasi shuffle") {
  for (int total = 2; total <= 5; ++total)
    for (int i = 1; i < total; ++i)
      for (const PackedWord& u : enumerate_packed(i))
        for (const PackedWord& v : enumerate_packed(total - i)) {
          NCQSymElement x(u), y(v);
          QSymElement sum = abelianize(product_prec(x, y));
          sum += abelianize(product_circ(x, y));
          sum += abelianize(product_succ(x, y));
          CHECK(sum == qsym_product(abelianize(x), abelianize(y)));
        }
}

}  // TEST_SUITE
