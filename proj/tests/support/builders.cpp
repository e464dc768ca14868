#include "support/builders.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "thl/tangle_build.hpp"

namespace thl::testsupport {

Tangle identity_strands(const SignSeq& signs) {
  Tangle t;
  t.bottom = signs;
  t.top = signs;
  for (int i = 0; i < signs.size(); ++i) {
    if (signs.at(i + 1) == Sign::plus)
      t.arcs.push_back({End::at_bottom(i), End::at_top(i)});
    else
      t.arcs.push_back({End::at_top(i), End::at_bottom(i)});
  }
  return t;
}

Tangle braid_sigma1(bool left_over) {
  Tangle t;
  t.bottom = SignSeq::parse("++");
  t.top = SignSeq::parse("++");
  // the left strand runs through ports 3 -> 1, the right one through 0 -> 2
  t.crossings = {{!left_over}};
  t.arcs = {
      {End::at_bottom(0), End::port(0, 3)},
      {End::port(0, 1), End::at_top(1)},
      {End::at_bottom(1), End::port(0, 0)},
      {End::port(0, 2), End::at_top(0)},
  };
  return t;
}

Tangle hopf_positive() {
  Tangle t;
  t.crossings = {{false}, {false}};
  t.arcs = {
      {End::port(0, 1), End::port(1, 0)},
      {End::port(0, 2), End::port(1, 3)},
      {End::port(1, 1), End::port(0, 0)},
      {End::port(1, 2), End::port(0, 3)},
  };
  return t;
}

Tangle trefoil_right() {
  Tangle t;
  t.crossings = {{true}, {true}, {true}};
  t.arcs = {
      {End::port(0, 0), End::port(1, 3)},
      {End::port(0, 1), End::port(1, 2)},
      {End::port(1, 0), End::port(2, 3)},
      {End::port(1, 1), End::port(2, 2)},
      {End::port(2, 0), End::port(0, 3)},
      {End::port(2, 1), End::port(0, 2)},
  };
  return t;
}

Tangle closed_braid(int crossings, bool left_over) {
  Tangle column = braid_sigma1(left_over);
  for (int i = 1; i < crossings; ++i)
    column = stack(braid_sigma1(left_over), column);
  return close_tangle(column);
}

Tangle closed_word(const std::string& strands,
                   const std::vector<std::pair<int, bool>>& word) {
  Tangle t = identity_tangle(SignSeq::parse(strands));
  for (auto [pos, over] : word) t = conjugate_by_crossing(t, pos, over);
  return close_tangle(t);
}

Tangle random_braid_closure(std::mt19937& rng, int max_strands, int max_len) {
  const int strands = 2 + int(rng() % unsigned(max_strands - 1));
  const int len = 1 + int(rng() % unsigned(max_len));
  std::vector<std::pair<int, bool>> word;
  for (int i = 0; i < len; ++i)
    word.push_back({1 + int(rng() % unsigned(strands - 1)), rng() % 2 == 0});
  return closed_word(std::string(size_t(strands), '+'), word);
}

}  // namespace thl::testsupport
