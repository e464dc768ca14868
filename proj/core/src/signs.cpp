#include "thl/signs.hpp"

#include "thl/errors.hpp"

namespace thl {

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<Sign> v;
  v.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+')
      v.push_back(Sign::plus);
    else if (text[i] == '-')
      v.push_back(Sign::minus);
    else
      throw ParseError("sign sequence may contain only '+' and '-'", long(i));
  }
  return SignSeq{std::move(v)};
}

std::string SignSeq::text() const {
  std::string s;
  s.reserve(v_.size());
  for (Sign x : v_) s += sign_char(x);
  return s;
}

Sign SignSeq::at(int i1) const {
  if (i1 < 1 || i1 > size()) throw DimensionMismatch("sign index out of range");
  return v_[size_t(i1 - 1)];
}

bool SignSeq::is_nsign() const {
  if (v_.empty() || v_[0] != Sign::plus) return false;
  if (v_.size() >= 2 && v_[1] != Sign::minus) return false;
  return true;
}

SignSeq vacuum_sign() { return SignSeq{{Sign::plus}}; }

namespace {

void propagate_tree_rec(const Tree& t, Sign a, std::vector<Sign>& out) {
  if (t.is_leaf()) {
    out.push_back(a);
    return;
  }
  propagate_tree_rec(t.left(), a, out);
  propagate_tree_rec(t.right(), negate(a), out);
}

}  // namespace

SignSeq propagate(const Forest& f, const SignSeq& sigma) {
  if (sigma.size() != f.root_count())
    throw DimensionMismatch("propagate: sign length " + std::to_string(sigma.size()) +
                            " != root count " + std::to_string(f.root_count()));
  std::vector<Sign> out;
  out.reserve(size_t(f.leaf_count()));
  for (int i = 0; i < f.root_count(); ++i)
    propagate_tree_rec(f.tree(i), sigma.at(i + 1), out);
  return SignSeq{std::move(out)};
}

SignSeq propagate(const Tree& t, const SignSeq& sigma) {
  return propagate(forest_of(t), sigma);
}

SignSeq propagate_by_schedule(int roots, const std::vector<int>& insertions,
                              const SignSeq& sigma) {
  if (sigma.size() != roots) throw DimensionMismatch("schedule: sign length != root count");
  std::vector<Sign> row = sigma.signs();
  for (int p : insertions) {
    if (p < 1 || p > int(row.size()))
      throw DimensionMismatch("schedule: insertion position out of range");
    row.insert(row.begin() + p, negate(row[size_t(p - 1)]));
  }
  return SignSeq{std::move(row)};
}

bool check_functorial(const Forest& f, const Forest& g, const SignSeq& sigma) {
  return propagate(compose_forests(f, g), sigma) == propagate(f, propagate(g, sigma));
}

bool is_oriented(const GroupElement& g) {
  return propagate(g.plus, vacuum_sign()) == propagate(g.minus, vacuum_sign());
}

std::pair<SignSeq, SignSeq> leaf_signs(const GroupElement& g) {
  return {propagate(g.plus, vacuum_sign()), propagate(g.minus, vacuum_sign())};
}

std::vector<GroupElement> enumerate_oriented(int max_leaves) {
  std::vector<GroupElement> out;
  for (GroupElement& g : all_reduced_pairs(max_leaves))
    if (is_oriented(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace thl
