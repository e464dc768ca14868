#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thl/tree.hpp"

namespace thl {

/// Ordered sequence of binary planar trees.  A forest with m roots and n
/// leaves is a morphism m -> n in the category of forests; composition grows
/// the second argument's leaves by the first argument's trees.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {}

  /// Identity forest: `roots` bare leaves.
  static Forest identity(int roots);

  /// Build by applying caret insertions left-to-right in time order:
  /// insertion at 1-based position i replaces the i-th leaf of the current
  /// row by a caret.
  static Forest from_insertions(int roots, const std::vector<int>& positions);

  /// Canonical insertion list: carets enumerated depth-first, left-to-right.
  std::vector<int> insertion_list() const;

  int root_count() const { return int(trees_.size()); }
  int leaf_count() const;
  int caret_count() const { return leaf_count() - root_count(); }

  const std::vector<Tree>& trees() const { return trees_; }
  const Tree& tree(int i) const { return trees_.at(size_t(i)); }

  /// The root index (0-based) and local leaf offset for a global 1-based
  /// leaf position.
  std::pair<int, int> locate_leaf(int leaf_pos) const;

  /// Replace the 1-based leaf `leaf_pos` by a caret.
  Forest graft_caret_at_leaf(int leaf_pos) const;

  /// Trees joined by single spaces, e.g. "l ((ll)l) l".
  std::string text() const;
  static Forest parse(std::string_view s);

  bool operator==(const Forest& o) const { return trees_ == o.trees_; }
  bool operator!=(const Forest& o) const { return !(*this == o); }

 private:
  std::vector<Tree> trees_;
};

/// f after g: grafts f's trees onto g's leaves in order.  Requires
/// root_count(f) == leaf_count(g); result has g's roots and f's leaves.
Forest compose_forests(const Forest& f, const Forest& g);

/// Forest consisting of a single tree.
Forest forest_of(const Tree& t);

}  // namespace thl
