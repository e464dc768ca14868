#include "thl/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "thl/errors.hpp"

namespace thl {

GroupElement::GroupElement(Tree p, Tree m) : plus(std::move(p)), minus(std::move(m)) {
  if (plus.leaf_count() != minus.leaf_count())
    throw DimensionMismatch("tree pair must have equal leaf counts");
}

GroupElement identity_element() { return GroupElement{Tree::leaf(), Tree::leaf()}; }

GroupElement generator_x0() {
  return GroupElement{Tree::parse("((ll)l)"), Tree::parse("(l(ll))")};
}

GroupElement generator_x1() {
  return GroupElement{Tree::parse("(l((ll)l))"), Tree::parse("(l(l(ll)))")};
}

std::pair<Forest, Forest> common_refinement(const Tree& s, const Tree& t) {
  auto sp = s.caret_paths();
  auto tp = t.caret_paths();
  std::set<std::string> all(sp.begin(), sp.end());
  all.insert(tp.begin(), tp.end());
  Tree common = Tree::from_paths(all);

  // p's j-th tree is the part of the common tree hanging below s's j-th leaf.
  auto leaves_of = [](const Tree& tree) {
    std::vector<std::string> paths;
    // depth-first leaf addresses
    struct Rec {
      std::vector<std::string>& out;
      void operator()(const Tree& t, std::string& prefix) const {
        if (t.is_leaf()) {
          out.push_back(prefix);
          return;
        }
        prefix.push_back('0');
        (*this)(t.left(), prefix);
        prefix.back() = '1';
        (*this)(t.right(), prefix);
        prefix.pop_back();
      }
    } rec{paths};
    std::string prefix;
    rec(tree, prefix);
    return paths;
  };

  auto residue = [&](const Tree& base) {
    std::vector<Tree> trees;
    for (const std::string& addr : leaves_of(base)) trees.push_back(common.subtree_at(addr));
    return Forest{std::move(trees)};
  };
  return {residue(s), residue(t)};
}

bool is_reduced(const GroupElement& g) {
  auto a = g.plus.sibling_leaf_positions();
  auto b = g.minus.sibling_leaf_positions();
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

GroupElement reduce(GroupElement g) {
  for (;;) {
    auto a = g.plus.sibling_leaf_positions();
    auto b = g.minus.sibling_leaf_positions();
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (both.empty()) return g;
    g.plus = g.plus.remove_caret_at(both.front());
    g.minus = g.minus.remove_caret_at(both.front());
  }
}

GroupElement multiply_unreduced(const GroupElement& a, const GroupElement& b) {
  auto [p, q] = common_refinement(a.minus, b.plus);
  Tree plus = compose_forests(p, forest_of(a.plus)).tree(0);
  Tree minus = compose_forests(q, forest_of(b.minus)).tree(0);
  return GroupElement{std::move(plus), std::move(minus)};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  return reduce(multiply_unreduced(a, b));
}

GroupElement invert(const GroupElement& g) { return GroupElement{g.minus, g.plus}; }

bool group_equal(const GroupElement& a, const GroupElement& b) {
  return reduce(a) == reduce(b);
}

GroupElement stabilize(const GroupElement& g, int leaf_pos) {
  Tree c = Tree::caret(Tree::leaf(), Tree::leaf());
  return GroupElement{g.plus.graft_at_leaf(leaf_pos, c), g.minus.graft_at_leaf(leaf_pos, c)};
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      exp = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    int gen;
    if (tok == "x0")
      gen = 0;
    else if (tok == "x1")
      gen = 1;
    else
      throw ParseError("unknown word token '" + std::string(text.substr(i, j - i)) + "'", long(i));
    w.letters.emplace_back(gen, exp);
    i = j;
  }
  return w;
}

GroupElement eval_word(const GeneratorWord& w) {
  GroupElement acc = identity_element();
  for (auto [gen, exp] : w.letters) {
    GroupElement g = gen == 0 ? generator_x0() : generator_x1();
    if (exp < 0) g = invert(g);
    acc = multiply(acc, g);
  }
  return acc;
}

GroupElement eval_word(std::string_view text) { return eval_word(parse_word(text)); }

std::vector<GroupElement> all_reduced_pairs(int max_leaves) {
  if (max_leaves < 1 || max_leaves > 8)
    throw GuardExceeded("all_reduced_pairs supports 1..8 leaves");
  std::vector<GroupElement> out;
  for (int n = 1; n <= max_leaves; ++n) {
    auto trees = all_trees(n);
    std::sort(trees.begin(), trees.end(),
              [](const Tree& a, const Tree& b) { return a.text() < b.text(); });
    for (const Tree& p : trees)
      for (const Tree& m : trees) {
        GroupElement g{p, m};
        if (is_reduced(g)) out.push_back(std::move(g));
      }
  }
  return out;
}

}  // namespace thl
