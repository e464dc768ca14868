#include <doctest.h>

#include "thl/errors.hpp"
#include "thl/forest.hpp"

using namespace thl;

TEST_CASE("identity forest") {
  Forest f = Forest::identity(3);
  CHECK(f.root_count() == 3);
  CHECK(f.leaf_count() == 3);
  CHECK(f.caret_count() == 0);
  CHECK(f.text() == "l l l");
}

TEST_CASE("forest text round trip") {
  Forest f = Forest::parse("l ((ll)l) (ll)");
  CHECK(f.root_count() == 3);
  CHECK(f.leaf_count() == 6);
  CHECK(f.text() == "l ((ll)l) (ll)");
  CHECK_THROWS_AS(Forest::parse(""), ParseError);
  CHECK_THROWS_AS(Forest::parse("(l"), ParseError);
}

TEST_CASE("insertion lists round trip through the canonical order") {
  // the insertion form [1,1] on one root is the left comb with 3 leaves
  Forest f = Forest::from_insertions(1, {1, 1});
  CHECK(f.text() == "((ll)l)");
  CHECK(f.insertion_list() == std::vector<int>{1, 1});

  // a non-canonical schedule rebuilds the same forest whose canonical list
  // is then stable under another round trip
  Forest g = Forest::from_insertions(2, {2, 1, 3});
  Forest h = Forest::from_insertions(2, g.insertion_list());
  CHECK(g == h);
  CHECK(h.insertion_list() == g.insertion_list());
}

TEST_CASE("compose grows the root-side forest's leaves") {
  // g: 1 -> 2 (single caret), f: 2 -> 3 with trees (ll), l
  Forest g = Forest::parse("(ll)");
  Forest f = Forest::parse("(ll) l");
  Forest fg = compose_forests(f, g);
  CHECK(fg.root_count() == 1);
  CHECK(fg.leaf_count() == 3);
  CHECK(fg.text() == "((ll)l)");
  CHECK_THROWS_AS(compose_forests(g, g), DimensionMismatch);
}

TEST_CASE("composition is associative") {
  Forest a = Forest::parse("(ll) l (l(ll))");  // 3 -> 6
  Forest b = Forest::parse("l (ll)");          // 2 -> 3
  Forest c = Forest::parse("(ll)");            // 1 -> 2
  CHECK(compose_forests(a, compose_forests(b, c)) ==
        compose_forests(compose_forests(a, b), c));
}

TEST_CASE("locate leaf maps global to per-tree positions") {
  Forest f = Forest::parse("(ll) l (ll)");
  CHECK(f.locate_leaf(1) == std::pair<int, int>{0, 1});
  CHECK(f.locate_leaf(2) == std::pair<int, int>{0, 2});
  CHECK(f.locate_leaf(3) == std::pair<int, int>{1, 1});
  CHECK(f.locate_leaf(5) == std::pair<int, int>{2, 2});
  CHECK_THROWS_AS(f.locate_leaf(6), DimensionMismatch);
}
