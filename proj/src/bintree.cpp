#include "brho/bintree.hpp"

#include <cassert>
#include <cctype>

#include "brho/errors.hpp"

namespace brho {

BinTree::BinTree() = default;

BinTree BinTree::node(BinTree left, BinTree right) {
  const std::uint64_t n = left.leaves() + right.leaves();
  return BinTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), n}));
}

const BinTree& BinTree::left() const {
  assert(node_);
  return node_->left;
}

const BinTree& BinTree::right() const {
  assert(node_);
  return node_->right;
}

std::uint64_t BinTree::leaves() const noexcept { return node_ ? node_->leaves : 1; }

bool operator==(const BinTree& a, const BinTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf() || a.leaves() != b.leaves()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

std::vector<BinTree> spine_args(const BinTree& t) {
  std::vector<BinTree> args;
  const BinTree* cur = &t;
  while (!cur->is_leaf()) {
    args.push_back(cur->right());
    cur = &cur->left();
  }
  return {args.rbegin(), args.rend()};
}

BinTree from_spine(const std::vector<BinTree>& args) {
  BinTree acc;
  for (const BinTree& a : args) acc = BinTree::node(std::move(acc), a);
  return acc;
}

namespace {

void render(const BinTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'x';
    return;
  }
  out += '<';
  render(t.left(), out);
  out += ',';
  render(t.right(), out);
  out += '>';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BinTree parse() {
    BinTree t = tree();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing characters", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  BinTree tree() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("expected 'x' or '<'", pos_);
    if (text_[pos_] == 'x') {
      ++pos_;
      return BinTree::leaf();
    }
    if (text_[pos_] != '<') throw SyntaxError("expected 'x' or '<'", pos_);
    ++pos_;
    BinTree acc = tree();
    std::size_t parts = 1;
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        acc = BinTree::node(std::move(acc), tree());
        ++parts;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == '>') {
        if (parts < 2) throw SyntaxError("a node needs at least two components", pos_);
        ++pos_;
        return acc;
      }
      throw SyntaxError("expected ',' or '>'", pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BinTree& t) {
  std::string out;
  render(t, out);
  return out;
}

BinTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

bool is_eta_short(const BinTree& t) { return t.is_leaf() || !t.right().is_leaf(); }

BinTree eta_shorten(const BinTree& t) {
  const BinTree* cur = &t;
  while (!is_eta_short(*cur)) cur = &cur->left();
  return *cur;
}

std::vector<BinTree> all_trees(std::uint64_t leaves) {
  std::vector<std::vector<BinTree>> by_size(leaves + 1);
  if (leaves == 0) return {};
  by_size[1] = {BinTree::leaf()};
  for (std::uint64_t n = 2; n <= leaves; ++n) {
    for (std::uint64_t l = 1; l < n; ++l) {
      for (const BinTree& a : by_size[l]) {
        for (const BinTree& b : by_size[n - l]) by_size[n].push_back(BinTree::node(a, b));
      }
    }
  }
  return by_size[leaves];
}

}  // namespace brho
