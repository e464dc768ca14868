#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thl/forest.hpp"
#include "thl/tree.hpp"

namespace thl {

/// Element of Thompson's group F as a tree pair (plus, minus) with equal leaf
/// counts.  The pair need not be reduced; reduce() brings it to the unique
/// reduced representative.
struct GroupElement {
  Tree plus;
  Tree minus;

  GroupElement() = default;
  GroupElement(Tree p, Tree m);

  int leaf_count() const { return plus.leaf_count(); }
  bool is_identity_rep() const { return plus == minus; }

  bool operator==(const GroupElement& o) const = default;
};

GroupElement identity_element();
GroupElement generator_x0();
GroupElement generator_x1();

/// Smallest forests (p, q) with p after s == q after t; the common tree's
/// carets are exactly the union of the two trees' caret addresses.
std::pair<Forest, Forest> common_refinement(const Tree& s, const Tree& t);

/// True iff no caret has sibling leaves (i, i+1) in both trees.
bool is_reduced(const GroupElement& g);

/// Remove common carets until reduced.  Idempotent.
GroupElement reduce(GroupElement g);

/// Group product; result is reduced.
GroupElement multiply(const GroupElement& a, const GroupElement& b);

/// Group product without the final reduction: the raw pair obtained from the
/// common refinement of a.minus and b.plus.  Useful as an unreduced
/// representative for representative-independence checks.
GroupElement multiply_unreduced(const GroupElement& a, const GroupElement& b);

GroupElement invert(const GroupElement& g);

/// Equality in the group: reduced pairs compare equal.
bool group_equal(const GroupElement& a, const GroupElement& b);

/// Attach an opposing caret to leaf `leaf_pos` of both trees, producing an
/// unreduced representative of the same group element.
GroupElement stabilize(const GroupElement& g, int leaf_pos);

/// Word in the generators: tokens "x0", "x1", optionally suffixed "^-1",
/// separated by whitespace.  The empty word is the identity.
struct GeneratorWord {
  /// (generator index 0/1, exponent +1/-1) in reading order.
  std::vector<std::pair<int, int>> letters;
};

GeneratorWord parse_word(std::string_view text);
GroupElement eval_word(const GeneratorWord& w);
GroupElement eval_word(std::string_view text);

/// All reduced tree pairs with leaf_count <= max_leaves, ordered by leaf
/// count then lexicographically on (plus, minus) text.  max_leaves <= 8.
std::vector<GroupElement> all_reduced_pairs(int max_leaves);

}  // namespace thl
