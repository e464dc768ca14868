#pragma once

#include <complex>

#include "thl/laurent.hpp"

namespace thl {

/// Numerical specialisation of the skein variables at a root of unity:
/// with s = exp(i pi / r), a = s^{-2k} and z = s - 1/s.  At these values a
/// disjoint loop contributes the real factor `delta`.
struct EvalParams {
  int r = 0;
  int k = 0;
  std::complex<double> a;
  std::complex<double> z;
  double delta = 0.0;

  static EvalParams at(int r, int k);
};

std::complex<double> evaluate(const LaurentPoly& p, const EvalParams& prm);

/// Integer powers of a complex number, negative exponents included.
std::complex<double> cpow(std::complex<double> base, int e);

}  // namespace thl
