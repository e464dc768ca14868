#include <doctest.h>

#include <set>

#include "thl/errors.hpp"
#include "thl/tree.hpp"

using namespace thl;

TEST_CASE("tree text round trip") {
  for (const char* s : {"l", "(ll)", "((ll)l)", "(l(ll))", "((ll)(ll))", "(l((ll)l))"}) {
    Tree t = Tree::parse(s);
    CHECK(t.text() == s);
  }
}

TEST_CASE("tree parse rejects malformed text") {
  CHECK_THROWS_AS(Tree::parse(""), ParseError);
  CHECK_THROWS_AS(Tree::parse("("), ParseError);
  CHECK_THROWS_AS(Tree::parse("(l)"), ParseError);
  CHECK_THROWS_AS(Tree::parse("(lll)"), ParseError);
  CHECK_THROWS_AS(Tree::parse("ll"), ParseError);
  CHECK_THROWS_AS(Tree::parse("(ll"), ParseError);
  CHECK_THROWS_AS(Tree::parse("x"), ParseError);
}

TEST_CASE("leaf and caret counts") {
  CHECK(Tree::leaf().leaf_count() == 1);
  CHECK(Tree::leaf().caret_count() == 0);
  Tree t = Tree::parse("((ll)(l(ll)))");
  CHECK(t.leaf_count() == 5);
  CHECK(t.caret_count() == 4);
  CHECK(t.depth() == 3);
}

TEST_CASE("caret paths in depth-first order and back") {
  Tree t = Tree::parse("((ll)(l(ll)))");
  auto paths = t.caret_paths();
  CHECK(paths == std::vector<std::string>{"", "0", "1", "11"});
  std::set<std::string> s(paths.begin(), paths.end());
  CHECK(Tree::from_paths(s) == t);
}

TEST_CASE("from_paths rejects non prefix-closed sets") {
  CHECK_THROWS_AS(Tree::from_paths({"0"}), InvariantViolation);
  CHECK_THROWS_AS(Tree::from_paths({"", "00"}), InvariantViolation);
}

TEST_CASE("grafting replaces the addressed leaf") {
  Tree t = Tree::parse("(l(ll))");
  Tree c = Tree::caret(Tree::leaf(), Tree::leaf());
  CHECK(t.graft_at_leaf(1, c).text() == "((ll)(ll))");
  CHECK(t.graft_at_leaf(2, c).text() == "(l((ll)l))");
  CHECK(t.graft_at_leaf(3, c).text() == "(l(l(ll)))");
  CHECK_THROWS_AS(t.graft_at_leaf(4, c), DimensionMismatch);
}

TEST_CASE("sibling leaf positions and caret removal") {
  Tree t = Tree::parse("((ll)(l(ll)))");
  CHECK(t.sibling_leaf_positions() == std::vector<int>{1, 4});
  CHECK(t.remove_caret_at(1).text() == "(l(l(ll)))");
  CHECK(t.remove_caret_at(4).text() == "((ll)(ll))");
  CHECK_THROWS_AS(t.remove_caret_at(2), NotApplicable);
}

TEST_CASE("tree enumeration has Catalan sizes") {
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(2).size() == 1);
  CHECK(all_trees(3).size() == 2);
  CHECK(all_trees(4).size() == 5);
  CHECK(all_trees(5).size() == 14);
  CHECK(all_trees(6).size() == 42);
  // all distinct
  auto ts = all_trees(6);
  std::set<std::string> texts;
  for (const auto& t : ts) texts.insert(t.text());
  CHECK(texts.size() == ts.size());
}
