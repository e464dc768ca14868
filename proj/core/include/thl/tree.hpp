#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace thl {

/// Finite rooted binary planar tree.  Immutable value type with structural
/// sharing; a default-constructed Tree is a single leaf.
///
/// Text grammar:  TREE := "l" | "(" TREE TREE ")"
class Tree {
 public:
  Tree() = default;  // leaf

  static Tree leaf() { return Tree{}; }
  static Tree caret(Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  /// Children; only valid when !is_leaf().
  Tree left() const;
  Tree right() const;

  int leaf_count() const;
  int caret_count() const { return leaf_count() - 1; }
  int depth() const;

  std::string text() const;
  static Tree parse(std::string_view s);

  /// Addresses of all carets as left/right paths from the root, in
  /// depth-first, left-to-right order.  Root caret has address "", its left
  /// child caret (if any) "0", etc.
  std::vector<std::string> caret_paths() const;
  /// Rebuild a tree from a prefix-closed set of caret addresses.
  static Tree from_paths(const std::set<std::string>& paths);

  /// Subtree rooted at the given caret/leaf address; throws if absent.
  Tree subtree_at(std::string_view path) const;
  /// Replace the leaf with 1-based index `leaf_pos` by `replacement`.
  Tree graft_at_leaf(int leaf_pos, const Tree& replacement) const;
  /// 1-based leaf positions i such that leaves i and i+1 are siblings.
  std::vector<int> sibling_leaf_positions() const;
  /// Remove the caret whose children are the sibling leaves (i, i+1).
  Tree remove_caret_at(int leaf_pos) const;

  bool operator==(const Tree& o) const;
  bool operator!=(const Tree& o) const { return !(*this == o); }
  /// Total order: by leaf count, then lexicographic on text form.
  std::strong_ordering operator<=>(const Tree& o) const;

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    int leaves;
  };
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;  // nullptr <=> leaf
};

/// All trees with exactly `leaves` leaves, deterministically ordered
/// (grouped by left-subtree leaf count, recursively).
std::vector<Tree> all_trees(int leaves);

}  // namespace thl
