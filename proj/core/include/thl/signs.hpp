#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thl/forest.hpp"
#include "thl/thompson.hpp"

namespace thl {

enum class Sign : unsigned char { plus, minus };

inline Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Finite sequence over {+,-}; text form like "+-+-".
class SignSeq {
 public:
  SignSeq() = default;
  explicit SignSeq(std::vector<Sign> v) : v_(std::move(v)) {}

  static SignSeq parse(std::string_view text);
  std::string text() const;

  int size() const { return int(v_.size()); }
  Sign at(int i1) const;  ///< 1-based access
  const std::vector<Sign>& signs() const { return v_; }
  void push_back(Sign s) { v_.push_back(s); }

  /// An n-sign starts with + and, when n >= 2, continues with -.
  bool is_nsign() const;

  bool operator==(const SignSeq& o) const = default;

 private:
  std::vector<Sign> v_;
};

/// The 1-sign "(+)" that seeds every propagation.
SignSeq vacuum_sign();

/// Region-colour propagation through a forest: a caret applied at current
/// position i replaces the entry a at position i by the pair (a, not a).
/// Requires length(sigma) == root_count(f); the result has leaf_count(f)
/// entries and is independent of the order in which carets are inserted.
SignSeq propagate(const Forest& f, const SignSeq& sigma);
SignSeq propagate(const Tree& t, const SignSeq& sigma);

/// Replay an explicit insertion schedule (any valid temporal order); used to
/// cross-check the recursive propagation.
SignSeq propagate_by_schedule(int roots, const std::vector<int>& insertions,
                              const SignSeq& sigma);

/// propagate(f after g, sigma) == propagate(f, propagate(g, sigma)).
bool check_functorial(const Forest& f, const Forest& g, const SignSeq& sigma);

/// Membership in the oriented subgroup: both trees propagate the vacuum sign
/// to the same leaf sequence.  Well-defined on the group (invariant under
/// adding or removing opposing caret pairs).
bool is_oriented(const GroupElement& g);

/// Leaf sign sequences of the two trees from the vacuum sign, for reporting.
std::pair<SignSeq, SignSeq> leaf_signs(const GroupElement& g);

/// All reduced oriented elements with leaf_count <= max_leaves (<= 8),
/// ordered by leaf count then lexicographically on (plus, minus) text.
std::vector<GroupElement> enumerate_oriented(int max_leaves);

}  // namespace thl
