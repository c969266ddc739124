#include "dendrikit/sylvester.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace dendrikit {

std::vector<Word> sylv_neighbors(const Word& w) {
  if (w.empty()) throw EmptyWordError();
  std::vector<Word> out;
  const auto& v = w.letters();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    int lo = std::min(v[i], v[i + 1]), hi = std::max(v[i], v[i + 1]);
    if (lo == hi) continue;
    bool witness = false;
    for (std::size_t j = i + 2; j < v.size() && !witness; ++j)
      witness = lo <= v[j] && v[j] < hi;
    if (!witness) continue;
    std::vector<int> s(v);
    std::swap(s[i], s[i + 1]);
    out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SylvesterClass sylv_class(const Word& w, int bound) {
  if (w.empty()) throw EmptyWordError();
  if (static_cast<int>(w.size()) > bound)
    throw ResourceLimitError("sylv_class degree " + std::to_string(w.size()) +
                             " exceeds bound " + std::to_string(bound));
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& nb : sylv_neighbors(cur))
      if (seen.insert(nb).second) queue.push_back(std::move(nb));
  }
  SylvesterClass cls;
  cls.members.assign(seen.begin(), seen.end());
  cls.representative = cls.members.front();
  return cls;
}

std::size_t sylv_class_count(int n, int bound) {
  std::size_t count = 0;
  std::set<Word> assigned;
  for (const PackedWord& u : enumerate_packed(n, bound)) {
    if (assigned.count(u.word())) continue;
    ++count;
    SylvesterClass cls = sylv_class(u.word(), bound);
    for (const Word& m : cls.members) assigned.insert(m);
  }
  return count;
}

PackedWord sylv_representative(const PackedWord& u, int bound) {
  return PackedWord(sylv_class(u.word(), bound).representative);
}

Element<PackedWord> quotient_project(const Element<PackedWord>& x, int bound) {
  Element<PackedWord> out;
  for (const auto& [u, c] : x.terms())
    out.add_term(u.empty() ? u : sylv_representative(u, bound), c);
  return out;
}

}  // namespace dendrikit
