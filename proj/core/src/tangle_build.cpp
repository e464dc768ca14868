#include "thl/tangle_build.hpp"

#include <vector>

namespace thl {

SignSeq object_signs(const SignSeq& row) {
  if (row.size() == 0) throw DimensionMismatch("object signs of an empty row");
  SignSeq out;
  out.push_back(row.at(1));
  for (int i = 2; i <= row.size(); ++i) {
    out.push_back(negate(row.at(i)));
    out.push_back(row.at(i));
  }
  return out;
}

Tangle identity_tangle(const SignSeq& boundary) {
  Tangle t;
  t.bottom = boundary;
  t.top = boundary;
  for (int i = 0; i < boundary.size(); ++i) {
    if (boundary.at(i + 1) == Sign::plus)
      t.arcs.push_back({End::at_bottom(i), End::at_top(i)});
    else
      t.arcs.push_back({End::at_top(i), End::at_bottom(i)});
  }
  return t;
}

namespace {

// directed arc with the flow following the sign: "+" runs a -> b, "-" b -> a
void flow_arc(Tangle& t, Sign s, End a, End b) {
  if (s == Sign::plus)
    t.arcs.push_back({a, b});
  else
    t.arcs.push_back({b, a});
}

SignSeq insert_negated(const SignSeq& row, int i) {
  std::vector<Sign> v = row.signs();
  v.insert(v.begin() + i, negate(v[size_t(i - 1)]));
  return SignSeq{std::move(v)};
}

}  // namespace

Tangle caret_piece(const SignSeq& row, int i, Convention conv) {
  const int m = row.size();
  if (i < 1 || i > m) throw DimensionMismatch("caret position out of range");
  const Sign a = row.at(i);

  Tangle t;
  t.bottom = object_signs(row);
  t.top = object_signs(insert_negated(row, i));
  t.crossings = {{conv == Convention::mirrored}};

  for (int k = 1; k <= 2 * m - 1; ++k) {
    if (k == 2 * i - 1) continue;
    int kt = k <= 2 * i - 2 ? k : k + 2;
    flow_arc(t, t.bottom.at(k), End::at_bottom(k - 1), End::at_top(kt - 1));
  }
  // the strand through the crossing, and the new one turning back over it
  flow_arc(t, a, End::at_bottom(2 * i - 2), End::port(0, 0));
  flow_arc(t, a, End::port(0, 2), End::at_top(2 * i - 1));
  flow_arc(t, a, End::at_top(2 * i), End::port(0, 1));
  flow_arc(t, a, End::port(0, 3), End::at_top(2 * i - 2));
  return t;
}

Tangle phi_of_forest(const Forest& f, const SignSeq& sigma, Convention conv) {
  if (sigma.size() != f.root_count())
    throw DimensionMismatch("tangle functor: sign length != root count");
  SignSeq row = sigma;
  Tangle t = identity_tangle(object_signs(sigma));
  for (int p : f.insertion_list()) {
    t = stack(caret_piece(row, p, conv), t);
    row = insert_negated(row, p);
  }
  return t;
}

Tangle phi_of_tree(const Tree& tr, Convention conv) {
  return phi_of_forest(forest_of(tr), vacuum_sign(), conv);
}

Tangle build_link(const GroupElement& g, Convention conv) {
  SignSeq sp = propagate(g.plus, vacuum_sign());
  SignSeq sm = propagate(g.minus, vacuum_sign());
  if (sp != sm) {
    SignSeq op = object_signs(sp), om = object_signs(sm);
    int at = 1;
    while (at <= op.size() && op.at(at) == om.at(at)) ++at;
    throw NotOriented("leaf sign rows of the tree pair disagree", at);
  }
  return close_tangle(stack(star(phi_of_tree(g.minus, conv)), phi_of_tree(g.plus, conv)));
}

Tangle build_unoriented_link(const GroupElement& g, Convention conv) {
  Tangle lower = phi_of_tree(g.plus, conv);
  Tangle upper = star(phi_of_tree(g.minus, conv));
  lower.oriented = false;
  upper.oriented = false;
  return close_tangle(stack(upper, lower));
}

Tangle conjugate_by_crossing(const Tangle& t, int pos, bool left_strand_over) {
  const SignSeq& row = t.top;
  if (pos < 1 || pos >= row.size())
    throw DimensionMismatch("crossing position out of range");
  const Sign sl = row.at(pos), sr = row.at(pos + 1);

  Tangle piece;
  piece.bottom = row;
  {
    std::vector<Sign> v = row.signs();
    std::swap(v[size_t(pos - 1)], v[size_t(pos)]);
    piece.top = SignSeq{std::move(v)};
  }
  piece.crossings = {{!left_strand_over}};
  for (int k = 1; k <= row.size(); ++k) {
    if (k == pos || k == pos + 1) continue;
    flow_arc(piece, row.at(k), End::at_bottom(k - 1), End::at_top(k - 1));
  }
  flow_arc(piece, sl, End::at_bottom(pos - 1), End::port(0, 3));
  flow_arc(piece, sl, End::port(0, 1), End::at_top(pos));
  flow_arc(piece, sr, End::at_bottom(pos), End::port(0, 0));
  flow_arc(piece, sr, End::port(0, 2), End::at_top(pos - 1));
  return stack(piece, t);
}

Tangle matching_tangle(const SignSeq& sigma) {
  Tangle t;
  t.top = sigma;
  std::vector<int> open;
  for (int k = 1; k <= sigma.size(); ++k) {
    if (!open.empty() && sigma.at(open.back()) != sigma.at(k)) {
      int j = open.back();
      open.pop_back();
      int minus = sigma.at(j) == Sign::minus ? j : k;
      int plus = j + k - minus;
      t.arcs.push_back({End::at_top(minus - 1), End::at_top(plus - 1)});
    } else {
      open.push_back(k);
    }
  }
  if (!open.empty())
    throw NotApplicable("sign row has no crossingless matching");
  return t;
}

}  // namespace thl
