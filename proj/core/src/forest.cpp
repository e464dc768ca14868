#include "thl/forest.hpp"

#include <numeric>

#include "thl/errors.hpp"

namespace thl {

Forest Forest::identity(int roots) {
  if (roots < 1) throw DimensionMismatch("forest needs at least one root");
  return Forest{std::vector<Tree>(size_t(roots))};
}

int Forest::leaf_count() const {
  int n = 0;
  for (const Tree& t : trees_) n += t.leaf_count();
  return n;
}

std::pair<int, int> Forest::locate_leaf(int leaf_pos) const {
  if (leaf_pos < 1 || leaf_pos > leaf_count())
    throw DimensionMismatch("leaf position out of range");
  int i = 0;
  while (leaf_pos > trees_[size_t(i)].leaf_count()) {
    leaf_pos -= trees_[size_t(i)].leaf_count();
    ++i;
  }
  return {i, leaf_pos};
}

Forest Forest::graft_caret_at_leaf(int leaf_pos) const {
  auto [i, local] = locate_leaf(leaf_pos);
  std::vector<Tree> trees = trees_;
  trees[size_t(i)] =
      trees[size_t(i)].graft_at_leaf(local, Tree::caret(Tree::leaf(), Tree::leaf()));
  return Forest{std::move(trees)};
}

Forest Forest::from_insertions(int roots, const std::vector<int>& positions) {
  Forest f = identity(roots);
  for (int p : positions) f = f.graft_caret_at_leaf(p);
  return f;
}

namespace {

void emit_insertions(const Tree& t, int base, std::vector<int>& out) {
  if (t.is_leaf()) return;
  out.push_back(base);
  emit_insertions(t.left(), base, out);
  emit_insertions(t.right(), base + t.left().leaf_count(), out);
}

}  // namespace

std::vector<int> Forest::insertion_list() const {
  std::vector<int> out;
  int base = 1;
  for (const Tree& t : trees_) {
    emit_insertions(t, base, out);
    base += t.leaf_count();
  }
  return out;
}

std::string Forest::text() const {
  std::string out;
  for (size_t i = 0; i < trees_.size(); ++i) {
    if (i) out += ' ';
    out += trees_[i].text();
  }
  return out;
}

Forest Forest::parse(std::string_view s) {
  std::vector<Tree> trees;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    size_t j = i;
    int depth = 0;
    do {
      if (j >= s.size()) throw ParseError("unbalanced forest text", long(j));
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    } while (depth > 0);
    trees.push_back(Tree::parse(s.substr(i, j - i)));
    i = j;
  }
  if (trees.empty()) throw ParseError("empty forest text");
  return Forest{std::move(trees)};
}

Forest compose_forests(const Forest& f, const Forest& g) {
  if (f.root_count() != g.leaf_count())
    throw DimensionMismatch("compose_forests: root count of f (" +
                            std::to_string(f.root_count()) + ") != leaf count of g (" +
                            std::to_string(g.leaf_count()) + ")");
  std::vector<Tree> out;
  out.reserve(size_t(g.root_count()));
  int next = 0;
  for (const Tree& gt : g.trees()) {
    Tree t = gt;
    // graft left-to-right; grafting at ascending leaf positions must account
    // for leaves added by earlier grafts, so walk positions in reverse
    int base = next;
    next += gt.leaf_count();
    for (int local = gt.leaf_count(); local >= 1; --local)
      t = t.graft_at_leaf(local, f.tree(base + local - 1));
    out.push_back(std::move(t));
  }
  return Forest{std::move(out)};
}

Forest forest_of(const Tree& t) { return Forest{std::vector<Tree>{t}}; }

}  // namespace thl
