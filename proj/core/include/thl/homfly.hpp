#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>

#include "thl/laurent.hpp"
#include "thl/tangle.hpp"

namespace thl {

/// Greedy kink and poke removal until neither applies.  Preserves the skein
/// polynomial and usually shrinks the diagram a lot before the exponential
/// part of the work starts.
Tangle simplify_diagram(Tangle t);

/// Exact skein evaluator for closed oriented diagrams, normalised so an
/// unknot has polynomial 1 and a positive crossing satisfies
/// a P(+) - a^-1 P(-) = z P(0).  Connected pieces are memoised under their
/// canonical code, so repeated queries of related diagrams stay cheap.
class SkeinEngine {
 public:
  explicit SkeinEngine(bool use_memo = true) : use_memo_(use_memo) {}

  LaurentPoly polynomial(const Tangle& closed);

  std::size_t memo_size() const;
  /// Merge results saved by an earlier run; a missing file is not an error.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

 private:
  LaurentPoly connected(const Tangle& piece);
  LaurentPoly descend(Tangle t);

  bool use_memo_;
  mutable std::mutex mutex_;
  std::map<std::string, LaurentPoly> memo_;
};

/// One-shot convenience wrapper around a fresh engine.
LaurentPoly link_polynomial(const Tangle& closed);

}  // namespace thl
