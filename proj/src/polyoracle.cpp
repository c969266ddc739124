#include "dendrikit/polyoracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dendrikit {

namespace {

// Images of u under all strictly increasing maps {1..max(u)} -> {1..N}.
void fiber_words(const PackedWord& u, int alphabet, std::vector<Word>& out) {
  const int k = u.max_letter();
  if (k > alphabet) return;
  std::vector<int> phi(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int j, int lo) -> void {
    if (j == k) {
      std::vector<int> w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = phi[static_cast<std::size_t>(u[i]) - 1];
      out.emplace_back(std::move(w));
      return;
    }
    for (int v = lo; v <= alphabet - (k - 1 - j); ++v) {
      phi[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

enum class Cmp { Any, Gt, Eq, Lt };

NCPolynomial poly_op(const NCPolynomial& p, const NCPolynomial& q, Cmp cmp) {
  if (p.alphabet != q.alphabet) throw AlphabetMismatchError();
  if (cmp != Cmp::Any &&
      (!is_zero(p.poly.coeff(Word())) || !is_zero(q.poly.coeff(Word()))))
    throw UnitOperandError();
  NCPolynomial out{p.alphabet, {}};
  for (const auto& [u, cu] : p.poly.terms())
    for (const auto& [v, cv] : q.poly.terms()) {
      if (cmp != Cmp::Any) {
        int mu = max_letter(u), mv = max_letter(v);
        if (cmp == Cmp::Gt && !(mu > mv)) continue;
        if (cmp == Cmp::Eq && !(mu == mv)) continue;
        if (cmp == Cmp::Lt && !(mu < mv)) continue;
      }
      std::vector<int> w = u.letters();
      w.insert(w.end(), v.letters().begin(), v.letters().end());
      out.poly.add_term(Word(std::move(w)), cu * cv);
    }
  return out;
}

}  // namespace

NCPolynomial expand(const PackedWord& u, int alphabet) {
  if (alphabet < 1) throw ResourceLimitError("alphabet size must be >= 1");
  NCPolynomial out{alphabet, {}};
  std::vector<Word> words;
  fiber_words(u, alphabet, words);
  for (Word& w : words) out.poly.add_term(std::move(w), Rational(1));
  return out;
}

NCPolynomial poly_mul(const NCPolynomial& p, const NCPolynomial& q) {
  return poly_op(p, q, Cmp::Any);
}
NCPolynomial poly_prec(const NCPolynomial& p, const NCPolynomial& q) {
  return poly_op(p, q, Cmp::Gt);
}
NCPolynomial poly_circ(const NCPolynomial& p, const NCPolynomial& q) {
  return poly_op(p, q, Cmp::Eq);
}
NCPolynomial poly_succ(const NCPolynomial& p, const NCPolynomial& q) {
  return poly_op(p, q, Cmp::Lt);
}

NCQSymElement project_pack(const NCPolynomial& p) {
  if (p.poly.is_zero_elt()) return {};
  const int n = static_cast<int>(p.poly.terms().begin()->first.size());
  for (const auto& [w, c] : p.poly.terms()) {
    if (static_cast<int>(w.size()) != n)
      throw InhomogeneousInputError("project_pack input must be homogeneous");
    if (!w.empty() && max_letter(w) > p.alphabet)
      throw NotSaturatedError("letter exceeds declared alphabet");
  }
  if (p.alphabet < n)
    throw ResourceLimitError("project_pack needs alphabet size >= degree");
  std::map<PackedWord, std::pair<Rational, std::size_t>> fibers;
  for (const auto& [w, c] : p.poly.terms()) {
    auto [it, fresh] = fibers.emplace(pack(w), std::make_pair(c, std::size_t{1}));
    if (!fresh) {
      if (it->second.first != c)
        throw NotSaturatedError("coefficients differ on the fiber of [" +
                                it->first.str() + "]");
      ++it->second.second;
    }
  }
  NCQSymElement out;
  for (const auto& [u, cc] : fibers) {
    // Fiber size is C(alphabet, max_letter); all members must be present.
    std::size_t expect = 1;
    for (int i = 0; i < u.max_letter(); ++i)
      expect = expect * static_cast<std::size_t>(p.alphabet - i) / static_cast<std::size_t>(i + 1);
    if (cc.second != expect)
      throw NotSaturatedError("fiber of [" + u.str() + "] is incomplete");
    out.add_term(u, cc.first);
  }
  return out;
}

}  // namespace dendrikit
