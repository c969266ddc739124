#include "dendrikit/ncqsym.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dendrikit {

NCQSymElement generator() { return NCQSymElement(PackedWord({1})); }

std::optional<int> homogeneous_degree(const NCQSymElement& x) {
  std::optional<int> deg;
  for (const auto& [k, c] : x.terms()) {
    int d = key_degree(k);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<int>(0);
}

namespace {

// Levels of the merged alphabet, seen by the prefix only, the suffix
// only, or both.
enum class Level : char { L, B, R };

void merge_patterns(int k1, int k2, const PackedWord& u, const PackedWord& v,
                    ProductPart part, std::vector<PackedWord>& out) {
  const int lo = std::max(k1, k2), hi = k1 + k2;
  std::vector<Level> pat;
  for (int total = lo; total <= hi; ++total) {
    int nb = k1 + k2 - total;
    int nl = k1 - nb, nr = k2 - nb;
    pat.assign(static_cast<std::size_t>(total), Level::L);
    auto rec = [&](auto&& self, int pos, int l, int b, int r) -> void {
      if (pos == total) {
        switch (part) {
          case ProductPart::Full: break;
          case ProductPart::Prec: if (pat.back() != Level::L) return; break;
          case ProductPart::Circ: if (pat.back() != Level::B) return; break;
          case ProductPart::Succ: if (pat.back() != Level::R) return; break;
        }
        std::vector<int> phi, psi;
        for (int i = 0; i < total; ++i) {
          if (pat[static_cast<std::size_t>(i)] != Level::R) phi.push_back(i + 1);
          if (pat[static_cast<std::size_t>(i)] != Level::L) psi.push_back(i + 1);
        }
        std::vector<int> w;
        w.reserve(u.size() + v.size());
        for (std::size_t i = 0; i < u.size(); ++i)
          w.push_back(phi[static_cast<std::size_t>(u[i]) - 1]);
        for (std::size_t i = 0; i < v.size(); ++i)
          w.push_back(psi[static_cast<std::size_t>(v[i]) - 1]);
        out.emplace_back(Word(std::move(w)));
        return;
      }
      if (l) { pat[static_cast<std::size_t>(pos)] = Level::L; self(self, pos + 1, l - 1, b, r); }
      if (b) { pat[static_cast<std::size_t>(pos)] = Level::B; self(self, pos + 1, l, b - 1, r); }
      if (r) { pat[static_cast<std::size_t>(pos)] = Level::R; self(self, pos + 1, l, b, r - 1); }
    };
    rec(rec, 0, nl, nb, nr);
  }
}

}  // namespace

std::vector<PackedWord> product_keys(const PackedWord& u, const PackedWord& v,
                                     ProductPart part) {
  if (u.empty() || v.empty()) {
    if (part != ProductPart::Full) throw UnitOperandError();
    return {u.empty() ? v : u};
  }
  std::vector<PackedWord> out;
  merge_patterns(u.max_letter(), v.max_letter(), u, v, part, out);
  return out;
}

namespace {

NCQSymElement product_part(const NCQSymElement& x, const NCQSymElement& y, ProductPart part) {
  if (part != ProductPart::Full &&
      (!is_zero(x.coeff(PackedWord())) || !is_zero(y.coeff(PackedWord()))))
    throw UnitOperandError();
  return bilinear_extend(
      [part](const PackedWord& u, const PackedWord& v) {
        NCQSymElement out;
        for (PackedWord& w : product_keys(u, v, part)) out.add_term(w, Rational(1));
        return out;
      },
      x, y);
}

}  // namespace

NCQSymElement product_full(const NCQSymElement& x, const NCQSymElement& y) {
  return product_part(x, y, ProductPart::Full);
}
NCQSymElement product_prec(const NCQSymElement& x, const NCQSymElement& y) {
  return product_part(x, y, ProductPart::Prec);
}
NCQSymElement product_circ(const NCQSymElement& x, const NCQSymElement& y) {
  return product_part(x, y, ProductPart::Circ);
}
NCQSymElement product_succ(const NCQSymElement& x, const NCQSymElement& y) {
  return product_part(x, y, ProductPart::Succ);
}

TensorElement<PackedWord> coproduct(const NCQSymElement& x) {
  TensorElement<PackedWord> out;
  for (const auto& [w, c] : x.terms()) {
    for (int i = 0; i <= w.max_letter(); ++i) {
      std::vector<int> left, right;
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] <= i)
          left.push_back(w[p]);
        else
          right.push_back(w[p] - i);
      }
      out.add_term({PackedWord(Word(std::move(left))), PackedWord(Word(std::move(right)))}, c);
    }
  }
  return out;
}

Rational counit(const NCQSymElement& x) { return x.coeff(PackedWord()); }

TensorElement<PackedWord> tensor_product_full(const TensorElement<PackedWord>& x,
                                              const TensorElement<PackedWord>& y) {
  TensorElement<PackedWord> out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      NCQSymElement left = product_full(NCQSymElement(kx.first), NCQSymElement(ky.first));
      NCQSymElement right = product_full(NCQSymElement(kx.second), NCQSymElement(ky.second));
      for (const auto& [kl, cl] : left.terms())
        for (const auto& [kr, cr] : right.terms())
          out.add_term({kl, kr}, cx * cy * cl * cr);
    }
  return out;
}

NCQSymElement mm_of_tree(const PlaneTree& t) {
  NCQSymElement out;
  int n = t.degree();
  for (const PackedWord& u : enumerate_packed(n))
    if (tree_of_word(u) == t) out.add_term(u, Rational(1));
  return out;
}

std::vector<std::pair<PlaneTree, NCQSymElement>> mm_basis(int n, int bound) {
  std::map<std::string, NCQSymElement> fibers;
  for (const PackedWord& u : enumerate_packed(n, bound))
    fibers[tree_of_word(u).str()].add_term(u, Rational(1));
  std::vector<std::pair<PlaneTree, NCQSymElement>> out;
  out.reserve(fibers.size());
  for (auto& [ser, elt] : fibers) out.emplace_back(PlaneTree::parse(ser), std::move(elt));
  return out;
}

std::vector<NCQSymElement> generate_free(int n, int bound) {
  if (n < 1 || n > bound)
    throw ResourceLimitError("generate_free degree " + std::to_string(n) +
                             " outside [1, " + std::to_string(bound) + "]");
  std::vector<std::vector<NCQSymElement>> basis(static_cast<std::size_t>(n) + 1);
  basis[1] = {generator()};
  for (int d = 2; d <= n; ++d) {
    SpanBasis<PackedWord> span(enumerate_packed(d, bound));
    std::vector<NCQSymElement> level;
    for (int i = 1; i < d; ++i)
      for (const NCQSymElement& x : basis[static_cast<std::size_t>(i)])
        for (const NCQSymElement& y : basis[static_cast<std::size_t>(d - i)])
          for (auto op : {ProductPart::Prec, ProductPart::Circ, ProductPart::Succ}) {
            NCQSymElement cand = product_part(x, y, op);
            if (span.insert(cand)) level.push_back(std::move(cand));
          }
    basis[static_cast<std::size_t>(d)] = std::move(level);
  }
  return basis[static_cast<std::size_t>(n)];
}

FreeSpan::FreeSpan(int n, int bound)
    : n_(n), span_(enumerate_packed(n, bound)), mm_(mm_basis(n, bound)) {
  for (const NCQSymElement& b : generate_free(n, bound)) span_.insert(b);
}

Membership membership(const NCQSymElement& x, const FreeSpan& span) {
  auto deg = homogeneous_degree(x);
  if (!deg || (!x.is_zero_elt() && *deg != span.degree()))
    throw InhomogeneousInputError("membership input must be homogeneous of degree " +
                                  std::to_string(span.degree()));
  Membership result;
  result.member = span.contains(x);
  if (!result.member) return result;
  // MM elements have pairwise disjoint supports, so coordinates are read
  // off the fibers directly; reconstruction guards the rank argument.
  NCQSymElement rebuilt;
  for (const auto& [t, mm] : span.mm()) {
    Rational c = x.coeff(mm.terms().begin()->first);
    if (!is_zero(c)) {
      result.coords.add_term(t, c);
      rebuilt += c * mm;
    }
  }
  if (rebuilt != x)
    throw std::logic_error("membership: span test and fiber coordinates disagree");
  return result;
}

Membership membership(const NCQSymElement& x, int n, int bound) {
  return membership(x, FreeSpan(n, bound));
}

QSymElement abelianize(const NCQSymElement& x) {
  QSymElement out;
  for (const auto& [u, c] : x.terms()) out.add_term(evaluation(u), c);
  return out;
}

}  // namespace dendrikit
