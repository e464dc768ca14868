#include "thl/tree.hpp"

#include <algorithm>

#include "thl/errors.hpp"

namespace thl {

Tree Tree::caret(Tree left, Tree right) {
  auto n = std::make_shared<Node>();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Tree{std::move(n)};
}

Tree Tree::left() const {
  if (is_leaf()) throw InvariantViolation("leaf has no children");
  return Tree{node_->left};
}

Tree Tree::right() const {
  if (is_leaf()) throw InvariantViolation("leaf has no children");
  return Tree{node_->right};
}

int Tree::leaf_count() const { return node_ ? node_->leaves : 1; }

int Tree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

namespace {

void text_rec(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'l';
    return;
  }
  out += '(';
  text_rec(t.left(), out);
  text_rec(t.right(), out);
  out += ')';
}

Tree parse_rec(std::string_view s, size_t& i) {
  if (i >= s.size()) throw ParseError("unexpected end of tree text", long(i));
  if (s[i] == 'l') {
    ++i;
    return Tree::leaf();
  }
  if (s[i] != '(') throw ParseError("expected 'l' or '('", long(i));
  ++i;
  Tree l = parse_rec(s, i);
  Tree r = parse_rec(s, i);
  if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", long(i));
  ++i;
  return Tree::caret(std::move(l), std::move(r));
}

}  // namespace

std::string Tree::text() const {
  std::string out;
  out.reserve(size_t(3) * size_t(caret_count()) + 1);
  text_rec(*this, out);
  return out;
}

Tree Tree::parse(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  Tree t = parse_rec(s, i);
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  if (i != s.size()) throw ParseError("trailing characters after tree", long(i));
  return t;
}

namespace {

void paths_rec(const Tree& t, std::string& prefix, std::vector<std::string>& out) {
  if (t.is_leaf()) return;
  out.push_back(prefix);
  prefix.push_back('0');
  paths_rec(t.left(), prefix, out);
  prefix.back() = '1';
  paths_rec(t.right(), prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<std::string> Tree::caret_paths() const {
  std::vector<std::string> out;
  std::string prefix;
  paths_rec(*this, prefix, out);
  return out;
}

namespace {

Tree from_paths_rec(const std::set<std::string>& paths, std::string& prefix) {
  if (!paths.count(prefix)) return Tree::leaf();
  prefix.push_back('0');
  Tree l = from_paths_rec(paths, prefix);
  prefix.back() = '1';
  Tree r = from_paths_rec(paths, prefix);
  prefix.pop_back();
  return Tree::caret(std::move(l), std::move(r));
}

}  // namespace

Tree Tree::from_paths(const std::set<std::string>& paths) {
  std::string prefix;
  Tree t = from_paths_rec(paths, prefix);
  if (int(paths.size()) != t.caret_count())
    throw InvariantViolation("caret path set is not prefix-closed");
  return t;
}

Tree Tree::subtree_at(std::string_view path) const {
  Tree cur = *this;
  for (char c : path) {
    if (cur.is_leaf()) throw InvariantViolation("path runs past a leaf");
    cur = (c == '0') ? cur.left() : cur.right();
  }
  return cur;
}

Tree Tree::graft_at_leaf(int leaf_pos, const Tree& replacement) const {
  if (leaf_pos < 1 || leaf_pos > leaf_count())
    throw DimensionMismatch("leaf position out of range");
  if (is_leaf()) return replacement;
  int nl = left().leaf_count();
  if (leaf_pos <= nl) return caret(left().graft_at_leaf(leaf_pos, replacement), right());
  return caret(left(), right().graft_at_leaf(leaf_pos - nl, replacement));
}

namespace {

void siblings_rec(const Tree& t, int offset, std::vector<int>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.push_back(offset + 1);
    return;
  }
  siblings_rec(t.left(), offset, out);
  siblings_rec(t.right(), offset + t.left().leaf_count(), out);
}

}  // namespace

std::vector<int> Tree::sibling_leaf_positions() const {
  std::vector<int> out;
  siblings_rec(*this, 0, out);
  return out;
}

Tree Tree::remove_caret_at(int leaf_pos) const {
  if (is_leaf()) throw NotApplicable("no caret to remove");
  if (left().is_leaf() && right().is_leaf() && leaf_pos == 1) return leaf();
  int nl = left().leaf_count();
  if (leaf_pos + 1 <= nl) return caret(left().remove_caret_at(leaf_pos), right());
  if (leaf_pos > nl) return caret(left(), right().remove_caret_at(leaf_pos - nl));
  throw NotApplicable("leaves are not siblings at this position");
}

bool Tree::operator==(const Tree& o) const {
  if (node_ == o.node_) return true;
  if (is_leaf() || o.is_leaf()) return false;
  if (leaf_count() != o.leaf_count()) return false;
  return left() == o.left() && right() == o.right();
}

std::strong_ordering Tree::operator<=>(const Tree& o) const {
  if (auto c = leaf_count() <=> o.leaf_count(); c != 0) return c;
  return text() <=> o.text();
}

std::vector<Tree> all_trees(int leaves) {
  if (leaves < 1) throw DimensionMismatch("tree needs at least one leaf");
  if (leaves == 1) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int k = 1; k < leaves; ++k) {
    for (const Tree& l : all_trees(k))
      for (const Tree& r : all_trees(leaves - k)) out.push_back(Tree::caret(l, r));
  }
  return out;
}

}  // namespace thl
