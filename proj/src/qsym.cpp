#include "dendrikit/qsym.hpp"

#include <algorithm>

namespace dendrikit {

namespace {

// M_I · M_J = (i1)·(I' * J) + (j1)·(I * J') + (i1+j1)·(I' * J').
void quasi_shuffle(const std::vector<int>& a, std::size_t i, const std::vector<int>& b,
                   std::size_t j, std::vector<int>& acc, Element<Composition>& out,
                   const Rational& c) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Composition(acc), c);
    return;
  }
  if (i < a.size()) {
    acc.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, acc, out, c);
    acc.pop_back();
  }
  if (j < b.size()) {
    acc.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, acc, out, c);
    acc.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    acc.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, acc, out, c);
    acc.pop_back();
  }
}

}  // namespace

Element<Composition> qsym_product(const Element<Composition>& x,
                                  const Element<Composition>& y) {
  Element<Composition> out;
  std::vector<int> acc;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      quasi_shuffle(a.parts(), 0, b.parts(), 0, acc, out, ca * cb);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      acc.push_back(p);
      self(self, rest - p);
      acc.pop_back();
    }
  };
  if (n < 0) return out;
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dendrikit
