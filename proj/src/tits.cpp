#include "dendrikit/tits.hpp"

#include <algorithm>
#include <iterator>

namespace dendrikit {

PackedWord tits_product(const PackedWord& u, const PackedWord& v) {
  if (u.empty() || v.empty()) throw EmptyWordError();
  if (u.size() != v.size()) throw LengthMismatchError();
  const std::size_t n = u.size();
  std::vector<std::pair<int, int>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {u[i], v[i]};
  std::vector<std::pair<int, int>> ranks(pairs);
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(ranks.begin(), ranks.end(), pairs[i]);
    w[i] = static_cast<int>(it - ranks.begin()) + 1;
  }
  return PackedWord(Word(std::move(w)));
}

Element<PackedWord> tits_product_elt(const Element<PackedWord>& x,
                                     const Element<PackedWord>& y) {
  Element<PackedWord> out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) out.add_term(tits_product(u, v), cu * cv);
  return out;
}

OrderedSetPartition face_compose(const OrderedSetPartition& p,
                                 const OrderedSetPartition& q) {
  if (p.ground_size() != q.ground_size()) throw GroundSetMismatchError();
  std::vector<std::vector<int>> blocks;
  for (const auto& pi : p.blocks())
    for (const auto& qj : q.blocks()) {
      std::vector<int> inter;
      std::set_intersection(pi.begin(), pi.end(), qj.begin(), qj.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) blocks.push_back(std::move(inter));
    }
  return OrderedSetPartition(std::move(blocks));
}

const PackedWord& FaceProductTable::product(const PackedWord& u, const PackedWord& v) {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
    throw LengthMismatchError();
  auto it = memo_.find({u, v});
  if (it == memo_.end()) it = memo_.emplace(std::make_pair(u, v), tits_product(u, v)).first;
  return it->second;
}

}  // namespace dendrikit
