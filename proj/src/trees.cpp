#include "dendrikit/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace dendrikit {

PlaneTree::PlaneTree(std::vector<PlaneTree> children)
    : children_(std::make_shared<const std::vector<PlaneTree>>(std::move(children))) {
  if (children_->size() < 2)
    throw std::invalid_argument("internal nodes need at least two children");
}

const std::vector<PlaneTree>& PlaneTree::children() const {
  static const std::vector<PlaneTree> kNone;
  return children_ ? *children_ : kNone;
}

int PlaneTree::leaves() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const auto& c : *children_) total += c.leaves();
  return total;
}

std::string PlaneTree::str() const {
  if (is_leaf()) return "o";
  std::string out = "(";
  for (std::size_t i = 0; i < children_->size(); ++i) {
    if (i) out += ' ';
    out += (*children_)[i].str();
  }
  out += ')';
  return out;
}

bool operator==(const PlaneTree& a, const PlaneTree& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  if (a.children_ == b.children_) return true;
  return *a.children_ == *b.children_;
}

namespace {

PlaneTree parse_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
  if (text[pos] == 'o') {
    ++pos;
    return PlaneTree::leaf();
  }
  if (text[pos] != '(') throw ParseError(pos, "expected 'o' or '('");
  ++pos;
  std::vector<PlaneTree> children;
  while (true) {
    children.push_back(parse_at(text, pos));
    if (pos >= text.size()) throw ParseError(pos, "unbalanced '('");
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    if (text[pos] != ' ') throw ParseError(pos, "expected ' ' or ')'");
    ++pos;
  }
  if (children.size() < 2) throw ParseError(pos, "node needs at least two children");
  return PlaneTree(std::move(children));
}

}  // namespace

PlaneTree PlaneTree::parse(std::string_view text) {
  std::size_t pos = 0;
  PlaneTree t = parse_at(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing input");
  return t;
}

namespace {

PlaneTree tree_rec(const std::vector<int>& w, std::size_t lo, std::size_t hi) {
  if (lo == hi) return PlaneTree::leaf();
  int m = *std::max_element(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
  std::vector<PlaneTree> children;
  std::size_t start = lo;
  for (std::size_t i = lo; i < hi; ++i) {
    if (w[i] == m) {
      children.push_back(tree_rec(w, start, i));
      start = i + 1;
    }
  }
  children.push_back(tree_rec(w, start, hi));
  return PlaneTree(std::move(children));
}

}  // namespace

PlaneTree tree_of_word(const Word& w) {
  if (w.empty()) throw EmptyWordError();
  return tree_rec(w.letters(), 0, w.size());
}

std::vector<PlaneTree> enumerate_trees(int n, int bound) {
  if (n < 1 || n > bound)
    throw ResourceLimitError("enumerate_trees degree " + std::to_string(n) +
                             " outside [1, " + std::to_string(bound) + "]");
  // table[d] = all trees of degree d (d+1 leaves); degree 0 is a bare leaf.
  std::vector<std::vector<PlaneTree>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {PlaneTree::leaf()};
  for (int d = 1; d <= n; ++d) {
    std::vector<PlaneTree> level;
    // Children's leaf counts are >= 1 and sum to d+1; arity >= 2.
    std::vector<PlaneTree> acc;
    auto build = [&](auto&& self, int remaining_leaves) -> void {
      if (remaining_leaves == 0) {
        if (acc.size() >= 2) level.push_back(PlaneTree(acc));
        return;
      }
      for (int take = 1; take <= remaining_leaves; ++take) {
        if (take == remaining_leaves && acc.empty()) continue;  // arity 1
        for (const auto& sub : table[static_cast<std::size_t>(take) - 1]) {
          acc.push_back(sub);
          self(self, remaining_leaves - take);
          acc.pop_back();
        }
      }
    };
    build(build, d + 1);
    std::sort(level.begin(), level.end(),
              [](const PlaneTree& a, const PlaneTree& b) { return a.str() < b.str(); });
    table[static_cast<std::size_t>(d)] = std::move(level);
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace dendrikit
