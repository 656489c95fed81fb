#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace brho {

/// Unlabeled full binary tree: the shape of a beta-eta normal form in CL(B).
///
/// Leaves stand for the bound variables x1, x2, ... in left-to-right order;
/// a node <l, r> is the application of l to r.
class BinTree {
 public:
  /// A leaf.
  BinTree();

  static BinTree leaf() { return BinTree(); }
  static BinTree node(BinTree left, BinTree right);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const BinTree& left() const;
  const BinTree& right() const;

  std::uint64_t leaves() const noexcept;

  friend bool operator==(const BinTree& a, const BinTree& b);

 private:
  struct Node;
  explicit BinTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct BinTree::Node {
  BinTree left;
  BinTree right;
  std::uint64_t leaves;
};

/// Arguments of the head leaf: t = <...<<x, a1>, a2>..., ap> gives [a1..ap].
std::vector<BinTree> spine_args(const BinTree& t);
/// Inverse of spine_args.
BinTree from_spine(const std::vector<BinTree>& args);

/// Text form: `x` for a leaf, `<l,r>` for a node; `<a,b,c,...>` is accepted
/// on input as the left-nested `<<a,b>,c>...`.
std::string to_string(const BinTree& t);
/// Throws SyntaxError.
BinTree parse_tree(std::string_view text);

/// Drops trailing root-level leaf arguments (eta-reduction on the tree).
BinTree eta_shorten(const BinTree& t);
bool is_eta_short(const BinTree& t);

/// All trees with exactly `leaves` leaves (Catalan many).
std::vector<BinTree> all_trees(std::uint64_t leaves);

}  // namespace brho
