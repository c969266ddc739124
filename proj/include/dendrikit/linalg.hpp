#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dendrikit/rational.hpp"

namespace dendrikit {

// Finitely supported K -> Q mapping. The map keeps keys in the canonical
// order of K; zero coefficients are never stored.
template <typename K>
class Element {
public:
  using Terms = std::map<K, Rational>;

  Element() = default;
  explicit Element(K key, Rational c = Rational(1)) {
    if (!is_zero(c)) terms_.emplace(std::move(key), std::move(c));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero_elt() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const K& key, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Element& operator*=(const Rational& c) {
    if (is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element x) { return x *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend bool operator==(const Element&, const Element&) = default;

private:
  Terms terms_;
};

template <typename K>
using TensorElement = Element<std::pair<K, K>>;

template <typename K, typename Rule>
Element<K> bilinear_extend(Rule&& rule, const Element<K>& x, const Element<K>& y) {
  Element<K> out;
  for (const auto& [ku, cu] : x.terms())
    for (const auto& [kv, cv] : y.terms()) {
      Element<K> piece = rule(ku, kv);
      piece *= cu * cv;
      out += piece;
    }
  return out;
}

template <typename K>
TensorElement<K> tensor(const Element<K>& x, const Element<K>& y) {
  TensorElement<K> out;
  for (const auto& [ku, cu] : x.terms())
    for (const auto& [kv, cv] : y.terms())
      out.add_term({ku, kv}, cu * cv);
  return out;
}

// Exact row echelon over Q with uint32 column indices. Rows are sorted
// sparse vectors; insertion keeps the pivot set reduced enough for rank
// and membership queries.
class RowEchelon {
public:
  using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

  std::size_t rank() const { return pivots_.size(); }

  // Reduces row against the current pivots; returns the residual
  // (empty iff row was already in the span).
  SparseRow reduce(SparseRow row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      row = axpy(row, -row.front().second, it->second);
    }
    return row;
  }

  // Returns true if the row enlarged the span.
  bool insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
  }

  bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

private:
  // a + c*b for sorted sparse rows; b's leading entry is a normalized pivot.
  static SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        out.push_back(a[i++]);
      } else if (a[i].first > b[j].first) {
        Rational v = c * b[j].second;
        if (!is_zero(v)) out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        Rational v = a[i].second + c * b[j].second;
        if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      Rational v = c * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, std::move(v));
    }
    return out;
  }

  std::map<std::uint32_t, SparseRow> pivots_;
};

// Span of Elements over a fixed key universe. Columns are indexed by the
// canonical (sorted) order of the keys seen so far; vectors must be added
// before membership queries so the universe is complete.
template <typename K>
class SpanBasis {
public:
  explicit SpanBasis(std::vector<K> universe) : universe_(std::move(universe)) {
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  }

  std::size_t rank() const { return ech_.rank(); }

  bool insert(const Element<K>& x) { return ech_.insert(row_of(x)); }
  bool contains(const Element<K>& x) const { return ech_.contains(row_of(x)); }

  RowEchelon::SparseRow row_of(const Element<K>& x) const {
    RowEchelon::SparseRow row;
    row.reserve(x.term_count());
    for (const auto& [k, c] : x.terms()) {
      auto it = std::lower_bound(universe_.begin(), universe_.end(), k);
      if (it == universe_.end() || !(*it == k))
        throw std::out_of_range("key outside span universe");
      row.emplace_back(static_cast<std::uint32_t>(it - universe_.begin()), c);
    }
    return row;
  }

private:
  std::vector<K> universe_;
  RowEchelon ech_;
};

template <typename K>
std::size_t rank_of_span(const std::vector<Element<K>>& vectors) {
  std::vector<K> universe;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v.terms()) universe.push_back(k);
  SpanBasis<K> span(std::move(universe));
  for (const auto& v : vectors) span.insert(v);
  return span.rank();
}

}  // namespace dendrikit
