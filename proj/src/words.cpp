#include "dendrikit/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace dendrikit {

namespace {

void append_int(std::string& out, long long v) { out += std::to_string(v); }

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int a : letters_)
    if (a < 1) throw ParseError(0, "word letters must be >= 1");
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw ParseError(pos, "expected letter");
    if (value < 1) throw ParseError(pos, "letters must be >= 1");
    letters.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
    if (pos == text.size()) throw ParseError(pos, "trailing ','");
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    append_int(out, letters_[i]);
  }
  return out;
}

PackedWord::PackedWord(Word w) : w_(std::move(w)) {
  if (!is_packed(w_)) throw NotPackedError("word [" + w_.str() + "] is not packed");
  max_ = w_.empty() ? 0 : *std::max_element(w_.letters().begin(), w_.letters().end());
}

ParkingWord::ParkingWord(Word w) : w_(std::move(w)) {
  if (!is_parking(w_)) throw NotParkingError("word [" + w_.str() + "] is not a parking word");
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidPartitionError("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1) throw InvalidPartitionError("positions must be >= 1");
      if (!seen.insert(x).second)
        throw InvalidPartitionError("position " + std::to_string(x) + " repeated");
    }
  }
  n_ = seen.size();
  if (n_ && (*seen.begin() != 1 || *seen.rbegin() != static_cast<int>(n_)))
    throw InvalidPartitionError("blocks must cover {1..n}");
}

std::string OrderedSetPartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      append_int(out, blocks_[i][j]);
    }
    out += '}';
  }
  out += ')';
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw ParseError(0, "composition parts must be >= 1");
}

int Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    append_int(out, parts_[i]);
  }
  out += ')';
  return out;
}

int max_letter(const Word& w) {
  if (w.empty()) throw EmptyWordError();
  return *std::max_element(w.letters().begin(), w.letters().end());
}

PackedWord pack(const Word& w) {
  std::vector<int> distinct(w.letters());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(w.size());
  for (int a : w.letters()) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), a);
    out.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return PackedWord(Word(std::move(out)));
}

bool is_packed(const Word& w) {
  int m = 0;
  std::vector<bool> seen;
  for (int a : w.letters()) {
    if (a > m) {
      m = a;
      seen.resize(static_cast<std::size_t>(m), false);
    }
    seen[static_cast<std::size_t>(a) - 1] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<PackedWord> enumerate_packed(int n, int bound) {
  if (n < 0 || n > bound)
    throw ResourceLimitError("enumerate_packed degree " + std::to_string(n) +
                             " exceeds bound " + std::to_string(bound));
  std::vector<PackedWord> out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Prefix with d distinct letters and maximum m extends to a packed word
  // iff the m - d missing letters fit in the remaining positions.
  auto rec = [&](auto&& self, int pos, int m, int d) -> void {
    if (pos == n) {
      out.emplace_back(Word(cur));
      return;
    }
    for (int a = 1; a <= n; ++a) {
      int nm = std::max(m, a);
      int nd = d + (used[static_cast<std::size_t>(a)] ? 0 : 1);
      if (nm - nd > n - pos - 1) continue;
      bool fresh = !used[static_cast<std::size_t>(a)];
      used[static_cast<std::size_t>(a)] = true;
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, nm, nd);
      if (fresh) used[static_cast<std::size_t>(a)] = false;
    }
  };
  if (n > 0)
    rec(rec, 0, 0, 0);
  else
    out.emplace_back();
  return out;
}

Composition evaluation(const PackedWord& u) {
  std::vector<int> parts(static_cast<std::size_t>(u.max_letter()), 0);
  for (std::size_t i = 0; i < u.size(); ++i) ++parts[static_cast<std::size_t>(u[i]) - 1];
  return Composition(std::move(parts));
}

OrderedSetPartition to_osp(const PackedWord& u) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(u.max_letter()));
  for (std::size_t i = 0; i < u.size(); ++i)
    blocks[static_cast<std::size_t>(u[i]) - 1].push_back(static_cast<int>(i) + 1);
  return OrderedSetPartition(std::move(blocks));
}

PackedWord from_osp(const OrderedSetPartition& p) {
  std::vector<int> letters(p.ground_size(), 0);
  for (std::size_t j = 0; j < p.block_count(); ++j)
    for (int pos : p.blocks()[j]) letters[static_cast<std::size_t>(pos) - 1] = static_cast<int>(j) + 1;
  return PackedWord(Word(std::move(letters)));
}

bool is_parking(const Word& a) {
  if (a.empty()) throw EmptyWordError();
  std::vector<int> b(a.letters());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<ParkingWord> parking_fiber(const PackedWord& u) {
  if (u.empty()) return {ParkingWord()};
  const int n = static_cast<int>(u.size());
  const int k = u.max_letter();
  // pack(a) = u iff a = phi(u) for a strictly increasing phi on {1..k};
  // parking words of length n use letters <= n, so phi maps into {1..n}.
  std::vector<ParkingWord> out;
  std::vector<int> phi(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int j, int lo) -> void {
    if (j == k) {
      std::vector<int> a(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        a[i] = phi[static_cast<std::size_t>(u[i]) - 1];
      Word w(std::move(a));
      if (is_parking(w)) out.emplace_back(std::move(w));
      return;
    }
    for (int v = lo; v <= n - (k - 1 - j); ++v) {
      phi[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

ParkingWord detass(const PackedWord& u) {
  if (u.empty()) throw EmptyWordError();
  // Letter j goes to 1 + #positions holding smaller letters.
  std::vector<int> below(static_cast<std::size_t>(u.max_letter()) + 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) ++below[static_cast<std::size_t>(u[i])];
  std::vector<int> img(static_cast<std::size_t>(u.max_letter()) + 1, 0);
  int run = 0;
  for (int j = 1; j <= u.max_letter(); ++j) {
    img[static_cast<std::size_t>(j)] = 1 + run;
    run += below[static_cast<std::size_t>(j)];
  }
  std::vector<int> a(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) a[i] = img[static_cast<std::size_t>(u[i])];
  return ParkingWord(Word(std::move(a)));
}

}  // namespace dendrikit
