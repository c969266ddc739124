#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dendrikit/errors.hpp"

namespace dendrikit {

// Default ceiling on degrees accepted by the exhaustive enumerations.
// The CLI can raise it via DENDRIKIT_MAX_DEGREE.
inline constexpr int kDefaultDegreeBound = 8;

// Word over the positive integers. Ordered by length first, then
// lexicographically; this is the canonical key order used everywhere.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  // Comma-separated positive integers, e.g. "1,2,1". "" is the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<int> letters_;
};

// Word whose letter set is exactly {1..k}. The empty packed word serves
// as the unit basis key of NCQSym.
class PackedWord {
public:
  PackedWord() = default;
  explicit PackedWord(Word w);
  explicit PackedWord(std::vector<int> letters) : PackedWord(Word(std::move(letters))) {}
  static PackedWord parse(std::string_view text) { return PackedWord(Word::parse(text)); }

  const Word& word() const { return w_; }
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  int operator[](std::size_t i) const { return w_[i]; }
  int max_letter() const { return max_; }  // 0 for the empty word
  std::string str() const { return w_.str(); }

  friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.w_ == b.w_; }
  friend std::strong_ordering operator<=>(const PackedWord& a, const PackedWord& b) {
    return a.w_ <=> b.w_;
  }

private:
  Word w_;
  int max_ = 0;
};

// Word whose nondecreasing rearrangement b satisfies b_i <= i.
class ParkingWord {
public:
  ParkingWord() = default;
  explicit ParkingWord(Word w);

  const Word& word() const { return w_; }
  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t i) const { return w_[i]; }
  std::string str() const { return w_.str(); }

  friend bool operator==(const ParkingWord& a, const ParkingWord& b) { return a.w_ == b.w_; }
  friend std::strong_ordering operator<=>(const ParkingWord& a, const ParkingWord& b) {
    return a.w_ <=> b.w_;
  }

private:
  Word w_;
};

// Sequence of pairwise-disjoint nonempty blocks covering {1..n}; the
// block order is significant. Blocks are kept sorted internally.
class OrderedSetPartition {
public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  std::size_t ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::string str() const;  // "({1,3},{2})"

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
  std::vector<std::vector<int>> blocks_;
  std::size_t n_ = 0;
};

// Finite sequence of positive parts; the empty composition is the unit
// key of QSym. Ordered by length, then lexicographically.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const;

  std::string str() const;  // "(2,1)"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

int max_letter(const Word& w);
PackedWord pack(const Word& w);
bool is_packed(const Word& w);

// All packed words of length n in lexicographic order.
std::vector<PackedWord> enumerate_packed(int n, int bound = kDefaultDegreeBound);

// Part j = multiplicity of letter j in u.
Composition evaluation(const PackedWord& u);

OrderedSetPartition to_osp(const PackedWord& u);
PackedWord from_osp(const OrderedSetPartition& p);

bool is_parking(const Word& a);

// All parking words that pack to u, in lexicographic order. Never empty.
std::vector<ParkingWord> parking_fiber(const PackedWord& u);

// Lexicographically greatest element of parking_fiber(u), by the closed
// form: letter j maps to 1 + #positions of u holding letters < j.
ParkingWord detass(const PackedWord& u);

inline int key_degree(const Word& w) { return static_cast<int>(w.size()); }
inline int key_degree(const PackedWord& u) { return static_cast<int>(u.size()); }
inline int key_degree(const Composition& c) { return c.weight(); }

}  // namespace dendrikit
